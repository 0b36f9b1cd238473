#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "mpc/lifts.hpp"

using namespace mpc;

namespace {

Vec unit(int dim, int i) {
    Vec v = Vec::Zero(dim);
    v(i) = 1.0;
    return v;
}

/// Compatible complex structure of signature (1, 1) on the standard 4-dim
/// space: e1 -> f1, e2 -> -f2.
Mat signature_one_one() {
    Mat jt = Mat::Zero(4, 4);
    jt.col(0) = unit(4, 2);
    jt.col(1) = -unit(4, 3);
    jt.col(2) = -unit(4, 0);
    jt.col(3) = unit(4, 1);
    return jt;
}

} // namespace

TEST_CASE("unitary lift") {
    SymplecticSpace sp = SymplecticSpace::standard(2);
    std::mt19937_64 rng(53);
    std::vector<Mat> samples;
    for (int i = 0; i < 10; ++i) {
        Mat a = random_sp_algebra(sp, rng);
        Mat u = 0.5 * (a - sp.j() * a * sp.j());
        samples.push_back(Mat(u.exp()));
    }
    LiftReport rep = verify_lift(sp, samples, [&](const Mat& g) {
        return lift_unitary(sp, g).lambda;
    });
    CHECK(rep.f1_residual < 1e-9);
    CHECK(rep.f2_residual < 1e-12);
    Vec squeeze(4);
    squeeze << 2.0, 1.0, 0.5, 1.0;
    CHECK_THROWS_AS((void)lift_unitary(sp, Mat(squeeze.asDiagonal())), NotUnitary);
}

TEST_CASE("pseudo unitary lift of signature (1,1)") {
    SymplecticSpace sp = SymplecticSpace::standard(2);
    PseudoUnitaryStructure ps = make_pseudo_unitary_structure(sp, signature_one_one());
    CHECK(ps.v_plus.cols() == 1);
    CHECK(ps.v_minus.cols() == 1);
    std::mt19937_64 rng(59);
    std::vector<Mat> samples;
    for (int i = 0; i < 10; ++i) {
        Mat g = random_pseudo_unitary(ps, rng);
        CHECK((g * ps.jtilde - ps.jtilde * g).norm() < 1e-10);
        samples.push_back(g);
    }
    LiftReport rep = verify_lift(sp, samples, [&](const Mat& g) {
        return lift_pseudo_unitary(ps, g).lambda;
    });
    CHECK(rep.f1_residual < 1e-9);
    CHECK(rep.f2_residual < 1e-11);
    CHECK_THROWS_AS((void)make_pseudo_unitary_structure(sp, Mat::Identity(4, 4)),
                    NotPseudoUnitary);
}

TEST_CASE("real lagrangian lift") {
    SymplecticSpace sp = SymplecticSpace::standard(2);
    Mat f(4, 2);
    f.col(0) = unit(4, 0);
    f.col(1) = unit(4, 1);
    LagrangianFrame frame = make_lagrangian_frame(sp, f);
    std::mt19937_64 rng(61);
    std::vector<Mat> samples;
    for (int i = 0; i < 10; ++i) {
        samples.push_back(random_lagrangian_stabilizer(frame, rng));
    }
    LiftReport rep = verify_lift(sp, samples, [&](const Mat& g) {
        return lift_real_lagrangian(frame, g).lambda;
    });
    CHECK(rep.f1_residual < 1e-9);
    CHECK(rep.f2_residual < 1e-11);
    // A generic symplectic element does not stabilize F.
    CHECK_THROWS_AS((void)lift_real_lagrangian(frame, random_symplectic(sp, rng)),
                    NotStabilizing);
}

TEST_CASE("complex lagrangian lift in the mixed case") {
    SymplecticSpace sp = SymplecticSpace::standard(2);
    Mat d(4, 1);
    d.col(0) = unit(4, 1);
    ComplexLagrangianData data = make_complex_lagrangian(sp, d, Mat(-sp.j()));
    CHECK(data.reduced->n() == 1);
    std::mt19937_64 rng(67);
    std::vector<Mat> samples;
    for (int i = 0; i < 10; ++i) {
        samples.push_back(random_complex_lagrangian_stabilizer(data, rng));
    }
    LiftReport rep = verify_lift(sp, samples, [&](const Mat& g) {
        return lift_complex_lagrangian(data, g).lambda;
    });
    CHECK(rep.f1_residual < 1e-8);
    CHECK(rep.f2_residual < 1e-11);
    CHECK_THROWS_AS((void)lift_complex_lagrangian(data, random_symplectic(sp, rng)),
                    NotStabilizing);
    // D must be a proper isotropic subspace.
    CHECK_THROWS_AS((void)make_complex_lagrangian(sp, Mat::Identity(4, 4), Mat(-sp.j())),
                    DimensionOutOfRange);
}

TEST_CASE("corrupted lifts are rejected by the residuals") {
    SymplecticSpace sp = SymplecticSpace::standard(2);
    std::mt19937_64 rng(71);
    std::vector<Mat> samples;
    for (int i = 0; i < 6; ++i) {
        Mat a = random_sp_algebra(sp, rng);
        Mat u = 0.5 * (a - sp.j() * a * sp.j());
        samples.push_back(Mat(u.exp()));
    }
    LiftReport rep = verify_lift(sp, samples, [&](const Mat& g) {
        return lift_unitary(sp, g).lambda * 1.01;
    });
    CHECK(rep.f1_residual > 1e-3);
    CHECK(rep.f2_residual > 1e-3);
}
