#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpc/dirac_cpn.hpp"

using namespace mpc;

TEST_CASE("block enumeration") {
    auto specs = enumerate_specs(2, 1, 2);
    // r = 0: none (r + b >= 1 fails only for b = 0 ... b <= r = 0), r = 1:
    // b in {0, 1}, r = 2: b in {0, 1, 2}.
    REQUIRE(specs.size() == 5);
    for (const auto& s : specs) {
        CHECK(s.r + s.b >= s.k);
        CHECK(s.b <= s.r);
        CHECK(is_dominant(spinor_highest_weight(s), Algebra::Full));
    }
    auto line = enumerate_specs(1, 3, 4);
    REQUIRE(line.size() == 3);  // r = 2, 3, 4
    for (const auto& s : line) {
        CHECK(s.b == std::max(0, s.k - s.r));
    }
    CHECK_THROWS_AS((void)enumerate_specs(0, 0, 1), DimensionOutOfRange);
}

TEST_CASE("hom dimension against the branching rule") {
    // dim Hom_K(V_lambda, S^l) is the multiplicity of the K-type of S^l in
    // the restriction of V_lambda, which the branching rule computes
    // independently.
    for (int n : {1, 2}) {
        for (long long m1 = 0; m1 <= 4; ++m1) {
            for (long long m2 = 0; m2 <= (n == 1 ? 0 : m1); ++m2) {
                Weight hw = n == 1 ? make_weight_int({m1})
                                   : make_weight_int({m1, m2});
                auto branches = branch_to_k(n, hw);
                for (int k = 0; k <= 2; ++k) {
                    for (int l = 0; l <= 5; ++l) {
                        Weight target = slcn_ktype(n, l, k);
                        long long mult = 0;
                        for (const auto& entry : branches) {
                            if (entry.k_weight == target) ++mult;
                        }
                        CHECK(hom_dimension(n, hw, k, l) == mult);
                    }
                }
            }
        }
    }
}

TEST_CASE("intertwiner solver matches the counting and is equivariant") {
    SymplecticSpace sp = SymplecticSpace::standard(2);
    SpinorBlockSpec spec{2, 1, 2, 1};
    Weight hw = spinor_highest_weight(spec);
    Irrep rep = build_irrep(2, hw);
    FockTrunc fock(sp, 3);
    for (int l = 0; l <= 3; ++l) {
        CMatR L = solve_intertwiner(fock, rep, spec.k, l);
        const long long expected = hom_dimension(2, hw, spec.k, l);
        if (expected == 0) {
            CHECK(L.norm() == doctest::Approx(0.0));
            continue;
        }
        CHECK(L.norm() == doctest::Approx(1.0));
        // Direct equivariance check of the returned map.
        const int off = fock.offset(l);
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                CMatR pi_x = rep.generator(a + 1, b + 1);
                if (a == b) pi_x -= rep.generator(0, 0);
                CMatR rho_l = CMatR::Zero(fock.block_dim(l), fock.block_dim(l));
                for (int i = 0; i < fock.block_dim(l); ++i) {
                    std::vector<int> alpha = fock.exponent(off + i);
                    if (a == b) rho_l(i, i) += spec.k - l;
                    if (alpha[a] == 0) continue;
                    double c = alpha[a];
                    alpha[a] -= 1;
                    alpha[b] += 1;
                    rho_l(fock.index_of(alpha) - off, i) -= c;
                }
                CHECK((L * pi_x - rho_l * L).norm() < 1e-10);
            }
        }
    }
    // A highest weight outside the family has no intertwiners at any level.
    Irrep other = build_irrep(2, make_weight_int({1, 1}));
    for (int l = 0; l <= 2; ++l) {
        CHECK(solve_intertwiner(fock, other, 0, l).norm() ==
              doctest::Approx(0.0));
    }
}

TEST_CASE("block model spectra match the closed form") {
    for (int n : {1, 2}) {
        SymplecticSpace sp = SymplecticSpace::standard(n);
        for (const auto& spec : enumerate_specs(n, 1, 2)) {
            DiracModel model = build_dirac_model(sp, spec);
            CHECK(model.offblock_residual < 1e-10);
            CHECK(static_cast<int>(model.levels.size()) == spec.r - spec.b + 1);
            for (const auto& level : p_operator_spectrum(model)) {
                CHECK(level.residual < 1e-10);
            }
        }
    }
}

TEST_CASE("hbar scaling of the commutator spectrum") {
    SymplecticSpace sp = SymplecticSpace::standard(2, 0.5);
    SpinorBlockSpec spec{2, 0, 1, 0};
    DiracModel model = build_dirac_model(sp, spec);
    for (const auto& level : p_operator_spectrum(model)) {
        CHECK(level.residual < 1e-10);
        CHECK(level.closed_form ==
              doctest::Approx(2.0 * closed_form_p(2, model.lambda, 0, level.l, 1.0)));
    }
}

TEST_CASE("kernel structure") {
    for (int n : {1, 2}) {
        SymplecticSpace sp = SymplecticSpace::standard(n);
        for (int k = 0; k <= 1; ++k) {
            for (const auto& spec : enumerate_specs(n, k, 2)) {
                DiracModel model = build_dirac_model(sp, spec);
                KernelDims kd = kernel_dims(model);
                // D' annihilates exactly the top level, D'' the bottom one.
                CHECK(kd.d_prime == 1);
                CHECK(kd.d_double_prime == 1);
                int parity = (spec.r - spec.b) % 2 == 0 ? 1 : 0;
                CHECK(kd.d == parity);
                CHECK(kernel_of_d_recursion(model) == kd.d);
            }
        }
    }
}
