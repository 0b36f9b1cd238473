#ifndef MPC_IRREP_HPP
#define MPC_IRREP_HPP

#include <Eigen/Dense>

#include "mpc/weights.hpp"

namespace mpc {

using CMatR = Eigen::MatrixXcd;

/// Explicit matrix model of the su(n+1) irrep with a given highest weight.
/// The basis is orthonormal for a unitary structure of the compact form, so
/// generator(a, b) is the adjoint of generator(b, a).  Diagonal generators
/// are the traceless combinations E_aa - (N / (n+1)) Id inherited from the
/// tensor-power construction with N boxes.
struct Irrep {
    int n;
    Weight highest_weight;
    int dim;
    std::vector<Weight> weights;  // exact weight of each basis vector

    /// pi(E_ab) for 0 <= a, b <= n.
    const CMatR& generator(int a, int b) const { return gens[a * (n + 1) + b]; }

    std::vector<CMatR> gens;
};

/// Generate the irrep inside the N-th tensor power of the defining
/// representation: the highest weight vector is a product of column
/// antisymmetrizers and the module is closed under the lowering operators
/// E_ab, a > b, with weight-by-weight orthonormalization.
Irrep build_irrep(int n, const Weight& hw, int dim_cap = 5000);

} // namespace mpc

#endif
