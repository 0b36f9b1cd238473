#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mpc/mpc_group.hpp"

using namespace mpc;

namespace {

/// Gauss-Hermite nodes and weights for int e^{-s^2} f(s) ds, computed from
/// the Jacobi matrix of the Hermite recursion.
void gauss_hermite(int m, std::vector<double>& nodes, std::vector<double>& weights) {
    Mat jac = Mat::Zero(m, m);
    for (int i = 1; i < m; ++i) {
        jac(i, i - 1) = jac(i - 1, i) = std::sqrt(i / 2.0);
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(jac);
    nodes.resize(m);
    weights.resize(m);
    for (int i = 0; i < m; ++i) {
        nodes[i] = es.eigenvalues()(i);
        weights[i] = std::sqrt(M_PI) *
                     es.eigenvectors()(0, i) * es.eigenvectors()(0, i);
    }
}

/// Composition of two kernels in the holomorphic function model:
/// (K1 * K2)(z, v) = (1/pi) int K1(z, w) K2(w, v) e^{-|u|^2} dA(u) with
/// w = sqrt(2 hbar) u.
cplx compose_kernels(const SymplecticSpace& sp, const MpcElement& x,
                     const MpcElement& y, cplx z, cplx v, int m) {
    std::vector<double> s, w;
    gauss_hermite(m, s, w);
    cplx total(0.0, 0.0);
    double scale = std::sqrt(2.0 * sp.hbar());
    CVec zz(1), vv(1), mid(1);
    zz(0) = z;
    vv(0) = v;
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k < m; ++k) {
            mid(0) = scale * cplx(s[i], s[k]);
            total += w[i] * w[k] * berezin_kernel(x, zz, mid) *
                     berezin_kernel(y, mid, vv);
        }
    }
    return total / M_PI;
}

} // namespace

TEST_CASE("constraint and construction") {
    SymplecticSpace sp = SymplecticSpace::standard(2);
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        MpcElement x = random_mpc(sp, rng);
        CHECK(mpc_constraint_residual(x) < 1e-12);
        CHECK(std::abs(std::abs(eta(x)) - 1.0) < 1e-12);
        CHECK_THROWS_AS((void)mpc_make(sp, x.g, x.lambda * 1.5), Error);
    }
    MpcElement e = mpc_identity(sp);
    CHECK(std::abs(e.lambda - cplx(1.0, 0.0)) == doctest::Approx(0.0));
    CHECK(is_metaplectic(e));
}

TEST_CASE("group laws") {
    std::mt19937_64 rng(37);
    for (int n = 1; n <= 3; ++n) {
        SymplecticSpace sp = SymplecticSpace::standard(n);
        for (int trial = 0; trial < 30; ++trial) {
            MpcElement x = random_mpc(sp, rng);
            MpcElement y = random_mpc(sp, rng);
            MpcElement z = random_mpc(sp, rng);
            MpcElement lhs = mpc_multiply(mpc_multiply(x, y), z);
            MpcElement rhs = mpc_multiply(x, mpc_multiply(y, z));
            CHECK((lhs.g - rhs.g).norm() < 1e-9);
            CHECK(std::abs(lhs.lambda - rhs.lambda) < 1e-9);
            // eta is a character.
            CHECK(std::abs(eta(mpc_multiply(x, y)) - eta(x) * eta(y)) < 1e-10);
            // Two-sided inverse.
            MpcElement xi = mpc_inverse(x);
            MpcElement left = mpc_multiply(xi, x);
            MpcElement right = mpc_multiply(x, xi);
            CHECK((left.g - Mat::Identity(2 * n, 2 * n)).norm() < 1e-9);
            CHECK(std::abs(left.lambda - cplx(1.0, 0.0)) < 1e-9);
            CHECK(std::abs(right.lambda - cplx(1.0, 0.0)) < 1e-9);
            // The product of an element with constraint-preserving lambda
            // keeps the constraint.
            CHECK(mpc_constraint_residual(mpc_multiply(x, y)) < 1e-10);
        }
    }
}

TEST_CASE("metaplectic subgroup membership") {
    SymplecticSpace sp = SymplecticSpace::standard(1);
    std::mt19937_64 rng(41);
    MpcElement x = random_mpc(sp, rng);
    // Rescale lambda by a phase so that eta becomes exactly 1.
    cplx root = std::sqrt(eta(x));
    MpcElement fixed = mpc_make(sp, x.g, x.lambda / root);
    CHECK(is_metaplectic(fixed));
    MpcElement shifted = mpc_make(sp, x.g, fixed.lambda * std::polar(1.0, 0.3));
    CHECK_FALSE(is_metaplectic(shifted));
}

TEST_CASE("kernel at the identity is the reproducing kernel") {
    SymplecticSpace sp = SymplecticSpace::standard(1);
    MpcElement e = mpc_identity(sp);
    CVec z(1), v(1);
    z(0) = cplx(0.3, -0.2);
    v(0) = cplx(-0.1, 0.4);
    cplx expected = std::exp(z(0) * std::conj(v(0)) / (2.0 * sp.hbar()));
    CHECK(std::abs(berezin_kernel(e, z, v) - expected) < 1e-12);
}

TEST_CASE("kernel composition matches the product element") {
    SymplecticSpace sp = SymplecticSpace::standard(1);
    std::mt19937_64 rng(43);
    CVec z(1), v(1);
    z(0) = cplx(0.25, 0.1);
    v(0) = cplx(-0.3, 0.2);
    // Identity composed with itself reproduces itself (quadrature sanity).
    MpcElement e = mpc_identity(sp);
    cplx self = compose_kernels(sp, e, e, z(0), v(0), 40);
    CHECK(std::abs(self - berezin_kernel(e, z, v)) < 1e-8);
    for (int trial = 0; trial < 5; ++trial) {
        MpcElement x = random_mpc(sp, rng, 0.4);
        MpcElement y = random_mpc(sp, rng, 0.4);
        cplx direct = berezin_kernel(mpc_multiply(x, y), z, v);
        cplx integrated = compose_kernels(sp, x, y, z(0), v(0), 60);
        CHECK(std::abs(direct - integrated) < 1e-4 * std::max(1.0, std::abs(direct)));
    }
}
