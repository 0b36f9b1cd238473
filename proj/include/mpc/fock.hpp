#ifndef MPC_FOCK_HPP
#define MPC_FOCK_HPP

#include <map>
#include <vector>

#include "mpc/mpc_group.hpp"

namespace mpc {

/// Holomorphic polynomials of degree <= max_degree in the n complex
/// coordinates of the space, with a deterministic graded-lexicographic
/// monomial basis.  Operators that raise the degree past the truncation
/// send the overflow to zero, so algebraic identities are only claimed on
/// the sub-degrees stated at each operation.
class FockTrunc {
public:
    FockTrunc(const SymplecticSpace& sp, int max_degree);

    const SymplecticSpace& space() const { return *space_; }
    int max_degree() const { return q_; }
    int dim() const { return static_cast<int>(monomials_.size()); }

    const std::vector<int>& exponent(int i) const { return monomials_[i]; }
    int degree(int i) const;
    /// Index of a monomial, or -1 when its degree exceeds the truncation.
    int index_of(const std::vector<int>& alpha) const;

    /// First basis index of degree l and the number of monomials of that
    /// degree, C(n + l - 1, l).
    int offset(int l) const { return offsets_[l]; }
    int block_dim(int l) const { return offsets_[l + 1] - offsets_[l]; }

    /// Squared norm alpha! (2 hbar)^{|alpha|} of the i-th monomial under the
    /// inner product that makes creation and annihilation mutually adjoint.
    double monomial_norm2(int i) const;

private:
    const SymplecticSpace* space_;
    int q_;
    std::vector<std::vector<int>> monomials_;
    std::map<std::vector<int>, int> lookup_;
    std::vector<int> offsets_;
};

struct FockOperator {
    CMat matrix;
    /// +1, -1 or 0 for operators homogeneous in the degree; kUnconstrained
    /// for mixtures.
    int degree_shift;
    static constexpr int kUnconstrained = 999;
};

/// (c(v) f)(z) = (1/2 hbar) <z, v>_j f(z); raises the degree by one.
FockOperator creation(const FockTrunc& fock, const Vec& v);

/// (a(v) f)(z) = (d_z f)(v); lowers the degree by one.
FockOperator annihilation(const FockTrunc& fock, const Vec& v);

/// cl(v) = c(v) - a(v), the symplectic Clifford action.
FockOperator clifford(const FockTrunc& fock, const Vec& v);

/// Quadratic Clifford element representing A in sp(V, Omega):
/// A is expanded over the spanning set (v_bar (x) w + w_bar (x) v) and each
/// term goes to -(i hbar / 2)(cl(v) cl(w) + cl(w) cl(v)).
FockOperator nu_embed(const FockTrunc& fock, const Mat& a);

/// Action of an element with unitary g: (U f)(z) = lambda f(g^{-1} z);
/// block-diagonal in the degree.
FockOperator muc_action(const FockTrunc& fock, const MpcElement& x);

/// Coherent state value e_v(z) = exp(<z, v>_j / 2 hbar) in complex coords.
cplx eval_coherent(const SymplecticSpace& sp, const CVec& v, const CVec& z);

} // namespace mpc

#endif
