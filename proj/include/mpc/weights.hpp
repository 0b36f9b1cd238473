#ifndef MPC_WEIGHTS_HPP
#define MPC_WEIGHTS_HPP

#include <map>
#include <vector>

#include <boost/rational.hpp>

#include "mpc/errors.hpp"

namespace mpc {

using Rational = boost::rational<long long>;

/// Weight of the maximal torus of su(n+1) written b_1 eps_1 + ... + b_n eps_n
/// with eps_{n+1} = -(eps_1 + ... + eps_n); exact rational coefficients.
struct Weight {
    std::vector<Rational> coeffs;

    int n() const { return static_cast<int>(coeffs.size()); }
    bool operator==(const Weight& o) const { return coeffs == o.coeffs; }
};

Weight weight_zero(int n);
Weight make_weight(std::vector<Rational> coeffs);
/// Convenience for integer coefficient lists.
Weight make_weight_int(const std::vector<long long>& coeffs);

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(const Rational& s, const Weight& a);

enum class Algebra { Full, SubalgebraK };

/// 2 rho of su(n+1): 2n eps_1 + 2(n-1) eps_2 + ... + 2 eps_n.
Weight rho2(int n);
/// 2 rho of k = u(n): (n-1) eps_1 + 2(n-1) eps_2 + 2(n-2) eps_3 + ... + 2 eps_n.
Weight rho2_k(int n);

/// Invariant pairing induced by B(X,Y) = -Tr(XY)/2 on the dual torus:
/// <kappa, kappa'> = -2 (sum_j k_j k'_j - (sum_j k_j)(sum_i k'_i)/(n+1)).
Rational pairing(const Weight& a, const Weight& b);

bool is_dominant(const Weight& w, Algebra which);

/// Casimir eigenvalue <hw, 2 rho + hw> with the rho of the chosen algebra.
Rational casimir_constant(const Weight& hw, Algebra which);

/// Weyl dimension of the su(n+1) irrep with dominant integral hw.
long long weyl_dim_su(const Weight& hw);
/// Dimension of the K = U(n) irrep with the given highest weight in
/// eps-coordinates.
long long weyl_dim_k(const Weight& k_weight);

struct BranchEntry {
    Weight k_weight;
    long long dim;
};

/// Multiplicity-free restriction of the su(n+1) irrep with highest weight hw
/// to K = U(n): all (k_1, ..., k_n) admitting an integer ktilde with
/// m_1 >= k_2 + ktilde >= m_2 >= ... >= m_n >= ktilde >= 0 and
/// k_1 = sum m_i - sum_{j >= 2} k_j - (n+1) ktilde.
std::vector<BranchEntry> branch_to_k(int n, const Weight& hw);

/// Highest weight (2l - k) eps_1 + l eps_2 + ... + l eps_n of the K-action
/// on S^l(C^n) twisted by the character with index k.
Weight slcn_ktype(int n, int l, int k);

/// Weight multiset (integer eps-coordinates -> multiplicity) of the K-irrep
/// with the given highest weight, counted via Gelfand-Tsetlin patterns of
/// the associated standard U(n) highest weight.
std::map<std::vector<long long>, long long> k_weight_multiset(const Weight& k_weight);

} // namespace mpc

#endif
