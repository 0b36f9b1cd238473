#ifndef MPC_DIRAC_CPN_HPP
#define MPC_DIRAC_CPN_HPP

#include "mpc/fock.hpp"
#include "mpc/irrep.hpp"

namespace mpc {

/// One block of the spinor field decomposition on CP^n: the su(n+1) irrep
/// with highest weight (2r + b - k) eps_1 + r eps_2 + ... + r eps_{n-1}
/// + (r - b) eps_n occurs once in the sections twisted by the character of
/// index k, spread over the Fock levels l = b, ..., r.
struct SpinorBlockSpec {
    int n;
    int k;
    int r;
    int b;
};

Weight spinor_highest_weight(const SpinorBlockSpec& spec);

/// All blocks with r <= r_max.  For n >= 2 these are 0 <= b <= r with
/// r + b >= k; for n = 1 the family degenerates to b = max(0, k - r) with
/// 2r >= k.
std::vector<SpinorBlockSpec> enumerate_specs(int n, int k, int r_max);

/// dim Hom_K(V_lambda, S^l(C^n) (x) det-twist k), which is 0 or 1.
long long hom_dimension(int n, const Weight& lambda, int k, int l);

/// K-intertwiner V_lambda -> S^l in the degree-l monomial basis of the Fock
/// space, normalized to unit Frobenius norm with the largest entry real and
/// positive.  Throws OracleMismatch when the numerical nullspace dimension
/// of the equivariance system disagrees with hom_dimension.
CMatR solve_intertwiner(const FockTrunc& fock, const Irrep& rep, int k, int l);

/// The operators D' and D'' restricted to one irreducible block: in the
/// basis of the level intertwiners L_b, ..., L_r they are a single super-
/// and sub-diagonal, D' L_l = u_l L_{l+1} and D'' L_l = v_l L_{l-1}.
struct DiracModel {
    SpinorBlockSpec spec;
    Weight lambda;
    long long vdim;
    double hbar;
    std::vector<int> levels;
    std::vector<CMatR> intertwiners;
    Eigen::MatrixXcd d_prime;
    Eigen::MatrixXcd d_double_prime;
    /// Worst deviation of an image D' L_l or D'' L_l from the span of the
    /// neighbouring intertwiner, including the vanishing at the block ends.
    double offblock_residual;
};

DiracModel build_dirac_model(const SymplecticSpace& sp,
                             const SpinorBlockSpec& spec, int dim_cap = 5000);

/// D = D' + D'' and D_J = -i D' + i D'' on the block.
Eigen::MatrixXcd dirac_full(const DiracModel& model);
Eigen::MatrixXcd dirac_j(const DiracModel& model);

/// Closed-form eigenvalue of P = i [D_J, D] = 2 [D', D''] on level l:
/// (c_lambda + c_beta - 4 c_gamma) / hbar with beta = (2l + (n+1)/2) eps_1
/// + l eps_2 + ... + l eps_n and gamma = beta - ((2k + n + 1)/4) eps_1,
/// where c_lambda is the su(n+1) Casimir number and c_beta, c_gamma are
/// Casimir numbers of k = u(n).
double closed_form_p(int n, const Weight& lambda, int k, int l, double hbar);

struct LevelSpectrum {
    int l;
    double matrix_eigenvalue;
    double closed_form;
    double residual;
};

/// Diagonal of P on the block against the closed form, level by level.
std::vector<LevelSpectrum> p_operator_spectrum(const DiracModel& model);

struct KernelDims {
    int d_prime;
    int d_double_prime;
    int d;
    /// Smallest ratio sigma_above / (threshold * sigma_max) over the three
    /// rank decisions; values near 1 mean the cut is ambiguous.
    double gap;
};

/// Numerical kernel dimensions of D', D'' and D on the block via singular
/// values, rank cut at threshold * sigma_max.  Throws RankAmbiguous when a
/// singular value falls within a factor of 10 of the cut on either side.
KernelDims kernel_dims(const DiracModel& model, double threshold = 1e-7);

/// Kernel dimension of D by degreewise back-substitution through the
/// tridiagonal block structure, independent of the SVD route.
int kernel_of_d_recursion(const DiracModel& model, double tol = 1e-9);

} // namespace mpc

#endif
