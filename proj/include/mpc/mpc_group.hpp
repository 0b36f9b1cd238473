#ifndef MPC_MPC_GROUP_HPP
#define MPC_MPC_GROUP_HPP

#include <random>

#include "mpc/symplectic.hpp"

namespace mpc {

/// Element of Mpc(V, Omega, j) in the (g, lambda) parametrization.  lambda is
/// the value of the associated kernel at the origin and satisfies
/// |lambda^2 Det_j C_g| = 1.
struct MpcElement {
    const SymplecticSpace* space;
    Mat g;
    cplx lambda;
};

MpcElement mpc_identity(const SymplecticSpace& sp);

/// Build an element from its parameters, checking the unimodularity
/// constraint |lambda^2 Det_j C_g| = 1.
MpcElement mpc_make(const SymplecticSpace& sp, const Mat& g, cplx lambda);

/// Residual |(|lambda^2 Det_j C_g|) - 1| of the defining constraint.
double mpc_constraint_residual(const MpcElement& x);

/// Product: g multiplies as matrices and
/// lambda_12 = lambda_1 lambda_2 exp(-a(1 - Z_{g1} Z_{g2^{-1}})/2).
MpcElement mpc_multiply(const MpcElement& x, const MpcElement& y);

MpcElement mpc_inverse(const MpcElement& x);

/// The canonical character eta(g, lambda) = lambda^2 Det_j C_g; unimodular
/// and multiplicative.
cplx eta(const MpcElement& x);

/// True when eta(x) = 1, i.e. x lies in the metaplectic subgroup Mp.
bool is_metaplectic(const MpcElement& x);

/// Pointwise value of the integral kernel of the unitary operator attached
/// to x, in the fixed complex coordinates:
/// U(z, v) = lambda exp((1/4 hbar)(2<C_g^{-1} z, v> - <z, Z_{g^{-1}} z> - <Z_g v, v>)).
cplx berezin_kernel(const MpcElement& x, const CVec& z, const CVec& v);

/// Random element covering the fibre: random symplectic g and a random
/// phase times the modulus forced by the constraint.
MpcElement random_mpc(const SymplecticSpace& sp, std::mt19937_64& rng,
                      double bound = 1.0);

} // namespace mpc

#endif
