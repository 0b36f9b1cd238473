#ifndef MPC_LIFTS_HPP
#define MPC_LIFTS_HPP

#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "mpc/mpc_group.hpp"

namespace mpc {

/// A compatible (possibly indefinite) complex structure jtilde commuting
/// with the space's j, together with orthonormal complex bases of the
/// eigenspace splitting V = V_+ (+) V_-, where V_- = { v : jtilde v = -j v }.
struct PseudoUnitaryStructure {
    const SymplecticSpace* space;
    Mat jtilde;
    Mat v_plus;   // 2n x p, <.,.>_j-orthonormal complex basis of V_+
    Mat v_minus;  // 2n x m, same for V_-
};

PseudoUnitaryStructure make_pseudo_unitary_structure(const SymplecticSpace& sp,
                                                     Mat jtilde);

/// A real Lagrangian subspace F given by a G_j-orthonormal basis; the
/// complement is jF.
struct LagrangianFrame {
    const SymplecticSpace* space;
    Mat f;  // 2n x n, columns orthonormalized at construction
};

LagrangianFrame make_lagrangian_frame(const SymplecticSpace& sp, const Mat& f_raw);

/// A complex Lagrangian in the mixed case 0 < dim D < n, described by the
/// isotropic subspace D = F cap V and the compatible complex structure the
/// Lagrangian induces on the symplectic quotient D^perp / D.  The quotient
/// is modelled on Q = (D + jD)^perp with its own SymplecticSpace instance.
struct ComplexLagrangianData {
    const SymplecticSpace* space;
    Mat d;  // 2n x m, G_j-orthonormal basis of D
    Mat q;  // 2n x 2n', G_j-orthonormal basis of Q
    std::shared_ptr<SymplecticSpace> reduced;  // (Q, Omega|_Q, j|_Q) in q-coords
    PseudoUnitaryStructure reduced_ps;         // jtilde' on the reduced space
};

/// jtilde_prime acts on V; only its restriction to Q is used and it must
/// preserve Q, commute with j there and be compatible with Omega.
ComplexLagrangianData make_complex_lagrangian(const SymplecticSpace& sp,
                                              const Mat& d_raw,
                                              const Mat& jtilde_prime);

/// Lift of the unitary group: g commuting with j goes to (g, 1).
MpcElement lift_unitary(const SymplecticSpace& sp, const Mat& g);

/// Lift of U(V, Omega, jtilde): lambda = Det_j(C_g restricted to V_-)^{-1}.
MpcElement lift_pseudo_unitary(const PseudoUnitaryStructure& ps, const Mat& g);

/// Lift of the stabilizer of a real Lagrangian F:
/// lambda = |Det A_g|^{-1/2} exp(-a_F((I + (A^T A)^{-1} - i S)/2)/2)
/// where A_g = g|_F and B_g = A_g S_g is the F-component of g j on F.
MpcElement lift_real_lagrangian(const LagrangianFrame& frame, const Mat& g);

/// Lift of the stabilizer of a complex Lagrangian in the mixed case:
/// lambda = [ |Det_D a(g)|^{1/2} Det_{j'}(C'^-_{b(g)}) delta_D(g) ]^{-1}.
MpcElement lift_complex_lagrangian(const ComplexLagrangianData& data, const Mat& g);

/// Residuals of the two lift conditions over a sample of group elements:
/// f1: f(g1 g2) = f(g1) f(g2) exp(-a(1 - Z_{g1} Z_{g2^{-1}})/2) over all pairs,
/// f2: |f(g)^2 Det_j C_g| = 1 over all samples.
struct LiftReport {
    double f1_residual;
    double f2_residual;
};

LiftReport verify_lift(const SymplecticSpace& sp, const std::vector<Mat>& samples,
                       const std::function<cplx(const Mat&)>& f);

/// Random elements of the respective subgroups, generated as exponentials
/// of random elements of the corresponding Lie subalgebra of sp(V, Omega).
Mat random_pseudo_unitary(const PseudoUnitaryStructure& ps, std::mt19937_64& rng,
                          double bound = 1.0);
Mat random_lagrangian_stabilizer(const LagrangianFrame& frame, std::mt19937_64& rng,
                                 double bound = 1.0);
Mat random_complex_lagrangian_stabilizer(const ComplexLagrangianData& data,
                                         std::mt19937_64& rng, double bound = 1.0);

} // namespace mpc

#endif
