#ifndef MPC_SYMPLECTIC_HPP
#define MPC_SYMPLECTIC_HPP

#include <complex>
#include <memory>
#include <random>

#include <Eigen/Dense>

#include "mpc/errors.hpp"

namespace mpc {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;

/// Real symplectic vector space (V, Omega) of dimension 2n together with a
/// positive compatible complex structure j.  A fixed j-holomorphic basis is
/// computed at construction; all complex-matrix views of operators refer to it.
class SymplecticSpace {
public:
    SymplecticSpace(Mat omega, Mat j, double hbar = 1.0, double tol = 1e-9);

    /// Standard model: Omega(e_a, e_{n+a}) = 1, j e_a = e_{n+a}.
    static SymplecticSpace standard(int n, double hbar = 1.0, double tol = 1e-9);

    int n() const { return n_; }
    int dim() const { return 2 * n_; }
    double hbar() const { return hbar_; }
    double tol() const { return tol_; }
    const Mat& omega() const { return omega_; }
    const Mat& j() const { return j_; }

    /// G_j(v,w) = Omega(v, jw); positive definite.
    double gj(const Vec& v, const Vec& w) const;

    /// <v,w>_j = G_j(v,w) - i Omega(v,w); linear in v, antilinear in w.
    cplx herm(const Vec& v, const Vec& w) const;

    /// Columns are the real vectors b_1..b_n of the fixed complex basis,
    /// orthonormal for <.,.>_j; {b_a, j b_a} is a real basis of V.
    const Mat& complex_basis() const { return basis_; }

    CVec to_complex(const Vec& v) const;
    Vec to_real(const CVec& z) const;

    /// Complex n x n matrix of a j-linear real operator.
    CMat complex_of_linear(const Mat& m) const;
    /// Complex n x n matrix M of a j-antilinear operator; action z -> M conj(z).
    CMat complex_of_antilinear(const Mat& m) const;
    Mat real_of_linear(const CMat& m) const;
    Mat real_of_antilinear(const CMat& m) const;

    bool is_symplectic(const Mat& g) const;
    void require_symplectic(const Mat& g) const;

private:
    int n_;
    double hbar_, tol_;
    Mat omega_, j_, basis_;
    void build_basis();
    void validate() const;
};

/// The (C_g, Z_g) coordinates of a symplectic map, stored as complex matrices
/// in the space's fixed basis.  c is j-linear; z is j-antilinear with action
/// v -> z * conj(v).
struct SiegelPair {
    CMat c;
    CMat z;
};

/// C_g = (g - jgj)/2, Z_g = C_g^{-1} D_g.  Throws NonSymplectic.
SiegelPair cz_decompose(const SymplecticSpace& sp, const Mat& g);

/// Reassemble the real operator C(1+Z).
Mat cz_reassemble(const SymplecticSpace& sp, const SiegelPair& p);

/// Determinant of a j-linear real operator as a complex transformation.
cplx det_j(const SymplecticSpace& sp, const Mat& m);

/// Holomorphic branch a with e^{a(m)} = Det_j m, a(I) = 0, on GL(V,j)_+.
/// Computed as the sum of principal logarithms of the complex eigenvalues;
/// the positive-definite real part keeps the spectrum in the open right
/// half-plane so the principal branch never crosses its cut.
cplx holomorphic_logdet(const SymplecticSpace& sp, const Mat& m);

/// Same branch for a complex matrix with positive definite Hermitean part.
cplx holomorphic_logdet(const CMat& m, double tol = 1e-9);

/// Random element of sp(V,Omega) with spectral norm <= bound.
Mat random_sp_algebra(const SymplecticSpace& sp, std::mt19937_64& rng,
                      double bound = 1.0);

/// exp of a random sp element; always exactly symplectic up to round-off.
Mat random_symplectic(const SymplecticSpace& sp, std::mt19937_64& rng,
                      double bound = 1.0);

} // namespace mpc

#endif
