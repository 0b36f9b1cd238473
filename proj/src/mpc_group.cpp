#include "mpc/mpc_group.hpp"

#include <cmath>

namespace mpc {

namespace {

void require_same_space(const MpcElement& x, const MpcElement& y) {
    if (x.space != y.space) {
        throw SpaceMismatch("Mpc elements live on different symplectic spaces");
    }
}

} // namespace

MpcElement mpc_identity(const SymplecticSpace& sp) {
    return MpcElement{&sp, Mat::Identity(sp.dim(), sp.dim()), cplx(1.0, 0.0)};
}

double mpc_constraint_residual(const MpcElement& x) {
    SiegelPair p = cz_decompose(*x.space, x.g);
    return std::abs(std::abs(x.lambda * x.lambda * p.c.determinant()) - 1.0);
}

MpcElement mpc_make(const SymplecticSpace& sp, const Mat& g, cplx lambda) {
    MpcElement x{&sp, g, lambda};
    if (mpc_constraint_residual(x) > 1e-6) {
        throw Error("mpc_make: |lambda^2 Det_j C_g| != 1");
    }
    return x;
}

MpcElement mpc_multiply(const MpcElement& x, const MpcElement& y) {
    require_same_space(x, y);
    const SymplecticSpace& sp = *x.space;
    SiegelPair p1 = cz_decompose(sp, x.g);
    SiegelPair p2inv = cz_decompose(sp, Mat(y.g.inverse()));
    // The composite of the antilinear operators Z_{g1} and Z_{g2^{-1}} is
    // j-linear with complex matrix M_1 conj(M_2).
    CMat arg = CMat::Identity(sp.n(), sp.n()) - p1.z * p2inv.z.conjugate();
    cplx lambda = x.lambda * y.lambda * std::exp(-0.5 * holomorphic_logdet(arg, sp.tol()));
    return MpcElement{&sp, x.g * y.g, lambda};
}

MpcElement mpc_inverse(const MpcElement& x) {
    const SymplecticSpace& sp = *x.space;
    SiegelPair p = cz_decompose(sp, x.g);
    // Product formula at (g, g^{-1}): the cocycle argument is 1 - Z_g Z_g.
    CMat arg = CMat::Identity(sp.n(), sp.n()) - p.z * p.z.conjugate();
    cplx cocycle = std::exp(-0.5 * holomorphic_logdet(arg, sp.tol()));
    return MpcElement{&sp, x.g.inverse(), 1.0 / (x.lambda * cocycle)};
}

cplx eta(const MpcElement& x) {
    SiegelPair p = cz_decompose(*x.space, x.g);
    return x.lambda * x.lambda * p.c.determinant();
}

bool is_metaplectic(const MpcElement& x) {
    return std::abs(eta(x) - cplx(1.0, 0.0)) < 1e-6;
}

cplx berezin_kernel(const MpcElement& x, const CVec& z, const CVec& v) {
    const SymplecticSpace& sp = *x.space;
    if (z.size() != sp.n() || v.size() != sp.n()) {
        throw DimensionMismatch("berezin_kernel: argument dimension mismatch");
    }
    SiegelPair p = cz_decompose(sp, x.g);
    SiegelPair pinv = cz_decompose(sp, Mat(x.g.inverse()));
    // In the orthonormal complex basis <u, w>_j = u^T conj(w); for the
    // antilinear quadratic terms the conjugations land on the matrix or on
    // the argument respectively.
    CVec cz = p.c.inverse() * z;
    cplx t1 = 2.0 * cz.cwiseProduct(v.conjugate()).sum();
    cplx t2 = z.cwiseProduct(pinv.z.conjugate() * z).sum();
    cplx t3 = (p.z * v.conjugate()).cwiseProduct(v.conjugate()).sum();
    return x.lambda * std::exp((t1 - t2 - t3) / (4.0 * sp.hbar()));
}

MpcElement random_mpc(const SymplecticSpace& sp, std::mt19937_64& rng,
                      double bound) {
    Mat g = random_symplectic(sp, rng, bound);
    SiegelPair p = cz_decompose(sp, g);
    std::uniform_real_distribution<double> unif(0.0, 2.0 * M_PI);
    double theta = unif(rng);
    cplx lambda = std::polar(1.0 / std::sqrt(std::abs(p.c.determinant())), theta);
    return MpcElement{&sp, std::move(g), lambda};
}

} // namespace mpc
