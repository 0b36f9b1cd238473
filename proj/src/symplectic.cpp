#include "mpc/symplectic.hpp"

#include <cmath>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

namespace mpc {

namespace {

double relative_residual(const Mat& residual, const Mat& reference) {
    double scale = reference.norm();
    if (scale == 0.0) scale = 1.0;
    return residual.norm() / scale;
}

} // namespace

SymplecticSpace::SymplecticSpace(Mat omega, Mat j, double hbar, double tol)
    : n_(static_cast<int>(omega.rows()) / 2),
      hbar_(hbar),
      tol_(tol),
      omega_(std::move(omega)),
      j_(std::move(j)) {
    if (omega_.rows() != omega_.cols() || omega_.rows() % 2 != 0 ||
        omega_.rows() == 0 || j_.rows() != omega_.rows() ||
        j_.cols() != omega_.cols()) {
        throw DimensionMismatch("SymplecticSpace: omega and j must be equal even-sized square matrices");
    }
    if (hbar_ <= 0.0 || tol_ <= 0.0) {
        throw Error("SymplecticSpace: hbar and tol must be positive");
    }
    validate();
    build_basis();
}

void SymplecticSpace::validate() const {
    const int d = 2 * n_;
    if ((omega_ + omega_.transpose()).norm() > tol_ * std::max(1.0, omega_.norm())) {
        throw Error("SymplecticSpace: omega is not antisymmetric");
    }
    Eigen::FullPivLU<Mat> lu(omega_);
    if (!lu.isInvertible()) {
        throw Error("SymplecticSpace: omega is singular");
    }
    if ((j_ * j_ + Mat::Identity(d, d)).norm() > tol_ * d) {
        throw Error("SymplecticSpace: j*j != -I");
    }
    if ((j_.transpose() * omega_ * j_ - omega_).norm() >
        tol_ * std::max(1.0, omega_.norm())) {
        throw NonSymplectic("SymplecticSpace: j does not preserve omega");
    }
    // G_j(v,w) = Omega(v, jw) has matrix omega*j; it must be symmetric
    // positive definite for j to be a positive compatible structure.
    Mat g = omega_ * j_;
    if ((g - g.transpose()).norm() > tol_ * std::max(1.0, g.norm())) {
        throw Error("SymplecticSpace: G_j is not symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (g + g.transpose()));
    if (es.eigenvalues().minCoeff() <= 0.0) {
        throw Error("SymplecticSpace: G_j is not positive definite");
    }
}

void SymplecticSpace::build_basis() {
    const int d = 2 * n_;
    basis_ = Mat::Zero(d, n_);
    int found = 0;
    for (int cand = 0; cand < d && found < n_; ++cand) {
        Vec c = Vec::Zero(d);
        c(cand) = 1.0;
        // Project out the complex span of the basis vectors found so far:
        // span_R{b_a, j b_a}, using that each b_a is <.,.>_j-orthonormal.
        for (int a = 0; a < found; ++a) {
            Vec b = basis_.col(a);
            cplx coeff = herm(c, b);
            c -= coeff.real() * b + coeff.imag() * (j_ * b);
        }
        double norm2 = gj(c, c);
        if (norm2 > 1e-12) {
            basis_.col(found++) = c / std::sqrt(norm2);
        }
    }
    if (found < n_) {
        throw Error("SymplecticSpace: failed to build a complex basis");
    }
}

SymplecticSpace SymplecticSpace::standard(int n, double hbar, double tol) {
    if (n < 1) throw DimensionOutOfRange("standard space requires n >= 1");
    const int d = 2 * n;
    Mat omega = Mat::Zero(d, d);
    Mat j = Mat::Zero(d, d);
    for (int a = 0; a < n; ++a) {
        omega(a, n + a) = 1.0;
        omega(n + a, a) = -1.0;
        j(n + a, a) = 1.0;
        j(a, n + a) = -1.0;
    }
    return SymplecticSpace(std::move(omega), std::move(j), hbar, tol);
}

double SymplecticSpace::gj(const Vec& v, const Vec& w) const {
    if (v.size() != dim() || w.size() != dim()) {
        throw DimensionMismatch("gj: vector dimension mismatch");
    }
    return v.dot(omega_ * (j_ * w));
}

cplx SymplecticSpace::herm(const Vec& v, const Vec& w) const {
    if (v.size() != dim() || w.size() != dim()) {
        throw DimensionMismatch("herm: vector dimension mismatch");
    }
    double re = v.dot(omega_ * (j_ * w));
    double im = v.dot(omega_ * w);
    return cplx(re, -im);
}

CVec SymplecticSpace::to_complex(const Vec& v) const {
    if (v.size() != dim()) throw DimensionMismatch("to_complex: bad dimension");
    CVec z(n_);
    for (int a = 0; a < n_; ++a) z(a) = herm(v, basis_.col(a));
    return z;
}

Vec SymplecticSpace::to_real(const CVec& z) const {
    if (z.size() != n_) throw DimensionMismatch("to_real: bad dimension");
    Vec v = Vec::Zero(dim());
    for (int a = 0; a < n_; ++a) {
        v += z(a).real() * basis_.col(a) + z(a).imag() * (j_ * basis_.col(a));
    }
    return v;
}

CMat SymplecticSpace::complex_of_linear(const Mat& m) const {
    if (m.rows() != dim() || m.cols() != dim()) {
        throw DimensionMismatch("complex_of_linear: bad dimension");
    }
    if ((m * j_ - j_ * m).norm() > tol_ * std::max(1.0, m.norm())) {
        throw NotComplexLinear("complex_of_linear: operator does not commute with j");
    }
    CMat out(n_, n_);
    for (int b = 0; b < n_; ++b) {
        CVec col = to_complex(m * basis_.col(b));
        out.col(b) = col;
    }
    return out;
}

CMat SymplecticSpace::complex_of_antilinear(const Mat& m) const {
    if (m.rows() != dim() || m.cols() != dim()) {
        throw DimensionMismatch("complex_of_antilinear: bad dimension");
    }
    if ((m * j_ + j_ * m).norm() > tol_ * std::max(1.0, m.norm())) {
        throw NotComplexLinear("complex_of_antilinear: operator does not anticommute with j");
    }
    CMat out(n_, n_);
    for (int b = 0; b < n_; ++b) {
        out.col(b) = to_complex(m * basis_.col(b));
    }
    return out;
}

Mat SymplecticSpace::real_of_linear(const CMat& m) const {
    if (m.rows() != n_ || m.cols() != n_) {
        throw DimensionMismatch("real_of_linear: bad dimension");
    }
    const int d = dim();
    Mat out(d, d);
    for (int i = 0; i < d; ++i) {
        Vec e = Vec::Zero(d);
        e(i) = 1.0;
        out.col(i) = to_real(m * to_complex(e));
    }
    return out;
}

Mat SymplecticSpace::real_of_antilinear(const CMat& m) const {
    if (m.rows() != n_ || m.cols() != n_) {
        throw DimensionMismatch("real_of_antilinear: bad dimension");
    }
    const int d = dim();
    Mat out(d, d);
    for (int i = 0; i < d; ++i) {
        Vec e = Vec::Zero(d);
        e(i) = 1.0;
        out.col(i) = to_real(m * to_complex(e).conjugate());
    }
    return out;
}

bool SymplecticSpace::is_symplectic(const Mat& g) const {
    if (g.rows() != dim() || g.cols() != dim()) return false;
    Mat residual = g.transpose() * omega_ * g - omega_;
    double scale = std::max(1.0, g.norm() * g.norm()) * std::max(1.0, omega_.norm());
    return residual.norm() <= tol_ * scale;
}

void SymplecticSpace::require_symplectic(const Mat& g) const {
    if (!is_symplectic(g)) {
        std::ostringstream msg;
        msg << "matrix is not symplectic to tolerance " << tol_;
        throw NonSymplectic(msg.str());
    }
}

SiegelPair cz_decompose(const SymplecticSpace& sp, const Mat& g) {
    sp.require_symplectic(g);
    Mat c_real = 0.5 * (g - sp.j() * g * sp.j());
    Mat d_real = 0.5 * (g + sp.j() * g * sp.j());
    CMat c = sp.complex_of_linear(c_real);
    CMat d = sp.complex_of_antilinear(d_real);
    Eigen::FullPivLU<CMat> lu(c);
    if (!lu.isInvertible()) {
        throw NonSymplectic("cz_decompose: C_g is singular, input cannot be symplectic");
    }
    // Z = C^{-1} D as antilinear operators: v -> c^{-1} d conj(v).
    return SiegelPair{c, lu.solve(d)};
}

Mat cz_reassemble(const SymplecticSpace& sp, const SiegelPair& p) {
    Mat c = sp.real_of_linear(p.c);
    Mat z = sp.real_of_antilinear(p.z);
    return c * (Mat::Identity(sp.dim(), sp.dim()) + z);
}

cplx det_j(const SymplecticSpace& sp, const Mat& m) {
    return sp.complex_of_linear(m).determinant();
}

cplx holomorphic_logdet(const CMat& m, double tol) {
    Eigen::SelfAdjointEigenSolver<CMat> herm_part(0.5 * (m + m.adjoint()));
    (void)tol;
    if (herm_part.eigenvalues().minCoeff() <= 0.0) {
        throw NotInGLPlus("holomorphic_logdet: Hermitean part is not positive definite");
    }
    Eigen::ComplexEigenSolver<CMat> es(m);
    if (es.info() != Eigen::Success) {
        throw Error("holomorphic_logdet: eigenvalue computation failed");
    }
    cplx a = 0.0;
    for (int i = 0; i < m.rows(); ++i) a += std::log(es.eigenvalues()(i));
    return a;
}

cplx holomorphic_logdet(const SymplecticSpace& sp, const Mat& m) {
    return holomorphic_logdet(sp.complex_of_linear(m), sp.tol());
}

Mat random_sp_algebra(const SymplecticSpace& sp, std::mt19937_64& rng,
                      double bound) {
    const int d = sp.dim();
    std::normal_distribution<double> gauss(0.0, 1.0);
    Mat s(d, d);
    for (int i = 0; i < d; ++i) {
        s(i, i) = gauss(rng);
        for (int k = i + 1; k < d; ++k) {
            double v = gauss(rng);
            s(i, k) = v;
            s(k, i) = v;
        }
    }
    // xi is in sp(V, Omega) exactly when omega*xi is symmetric.
    Mat xi = sp.omega().inverse() * s;
    double norm = xi.operatorNorm();
    if (norm > bound) xi *= bound / norm;
    return xi;
}

Mat random_symplectic(const SymplecticSpace& sp, std::mt19937_64& rng,
                      double bound) {
    return random_sp_algebra(sp, rng, bound).exp();
}

} // namespace mpc
