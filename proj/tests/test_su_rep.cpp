#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mpc/irrep.hpp"

using namespace mpc;

namespace {

/// Exact weight multiset of an irrep from its tracked basis weights.
std::map<std::vector<long long>, long long> weight_multiset(const Irrep& rep) {
    std::map<std::vector<long long>, long long> out;
    for (const Weight& w : rep.weights) {
        std::vector<long long> key;
        for (const Rational& c : w.coeffs) {
            REQUIRE(c.denominator() == 1);
            key.push_back(c.numerator());
        }
        out[key] += 1;
    }
    return out;
}

} // namespace

TEST_CASE("pairing and casimir numbers") {
    // su(2): <eps_1, eps_1> = -1 and the Casimir of the m-dim family is
    // -m(m+2).
    CHECK(pairing(make_weight_int({1}), make_weight_int({1})) == Rational(-1));
    for (long long m = 0; m <= 6; ++m) {
        CHECK(casimir_constant(make_weight_int({m}), Algebra::Full) ==
              Rational(-m * (m + 2)));
    }
    // The adjoint of su(3) has highest weight (2,1); its Casimir equals
    // <2 rho, 2 rho + 2 rho>/4 ... fixed value -12 under B = -Tr/2.
    CHECK(casimir_constant(make_weight_int({2, 1}), Algebra::Full) ==
          Rational(-12));
    CHECK_THROWS_AS((void)casimir_constant(make_weight_int({1, 2}), Algebra::Full),
                    NotDominant);
}

TEST_CASE("weyl dimensions") {
    CHECK(weyl_dim_su(make_weight_int({1, 0})) == 3);
    CHECK(weyl_dim_su(make_weight_int({1, 1})) == 3);
    CHECK(weyl_dim_su(make_weight_int({2, 1})) == 8);
    CHECK(weyl_dim_su(make_weight_int({4, 2})) == 27);
    CHECK(weyl_dim_su(make_weight_int({3})) == 4);
    CHECK(weyl_dim_su(make_weight_int({2, 0, 0})) == 10);
    // K = U(2) dimensions from eps-coordinates: (b1, b2) = (3, 1) maps to
    // the standard weight (-2, -3) of dimension 2.
    CHECK(weyl_dim_k(make_weight_int({3, 1})) == 2);
    CHECK(weyl_dim_k(make_weight_int({0, 2})) == 3);
}

TEST_CASE("branching is multiplicity free and fills the dimension") {
    for (auto mm : std::vector<std::vector<long long>>{
             {2, 1}, {4, 2}, {5, 0}, {3, 3}, {5, 5}}) {
        Weight hw = make_weight_int(mm);
        auto branches = branch_to_k(2, hw);
        long long total = 0;
        std::vector<std::vector<Rational>> seen;
        for (const auto& entry : branches) {
            CHECK(is_dominant(entry.k_weight, Algebra::SubalgebraK));
            CHECK(entry.dim == weyl_dim_k(entry.k_weight));
            total += entry.dim;
            for (const auto& other : seen) {
                CHECK_FALSE(other == entry.k_weight.coeffs);
            }
            seen.push_back(entry.k_weight.coeffs);
        }
        CHECK(total == weyl_dim_su(hw));
    }
    // n = 1: the torus weights of the m-dim family are m, m-2, ..., -m.
    auto branches = branch_to_k(1, make_weight_int({3}));
    REQUIRE(branches.size() == 4);
    std::vector<long long> got;
    for (const auto& entry : branches) {
        got.push_back(entry.k_weight.coeffs[0].numerator());
    }
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<long long>({-3, -1, 1, 3}));
}

TEST_CASE("matrix model satisfies the algebra relations") {
    for (auto mm : std::vector<std::vector<long long>>{{2, 0}, {2, 1}, {3, 1}}) {
        Weight hw = make_weight_int(mm);
        Irrep rep = build_irrep(2, hw);
        const int n = rep.n;
        CHECK(rep.dim == weyl_dim_su(hw));
        double worst = 0.0;
        for (int a = 0; a <= n; ++a) {
            for (int b = 0; b <= n; ++b) {
                CHECK((rep.generator(a, b).adjoint() - rep.generator(b, a))
                          .norm() < 1e-10);
                for (int c = 0; c <= n; ++c) {
                    for (int d = 0; d <= n; ++d) {
                        CMatR lhs = rep.generator(a, b) * rep.generator(c, d) -
                                    rep.generator(c, d) * rep.generator(a, b);
                        if (b == c) lhs -= rep.generator(a, d);
                        if (d == a) lhs += rep.generator(c, b);
                        worst = std::max(worst, lhs.norm());
                    }
                }
            }
        }
        CHECK(worst < 1e-10);
        // Diagonal generators are traceless combinations.
        CMatR sum = CMatR::Zero(rep.dim, rep.dim);
        for (int a = 0; a <= n; ++a) sum += rep.generator(a, a);
        CHECK(sum.norm() < 1e-10);
    }
}

TEST_CASE("matrix casimir agrees with the weight formula") {
    for (auto mm : std::vector<std::vector<long long>>{{1, 0}, {2, 1}, {4, 2}}) {
        Weight hw = make_weight_int(mm);
        Irrep rep = build_irrep(2, hw);
        const int n = rep.n;
        long long boxes = 0;
        for (const auto& c : hw.coeffs) boxes += c.numerator();
        const double shift = static_cast<double>(boxes) / (n + 1);
        CMatR id = CMatR::Identity(rep.dim, rep.dim);
        CMatR cas = CMatR::Zero(rep.dim, rep.dim);
        for (int a = 0; a <= n; ++a) {
            for (int b = 0; b <= n; ++b) {
                CMatR ga = rep.generator(a, b) + (a == b ? shift : 0.0) * id;
                CMatR gb = rep.generator(b, a) + (a == b ? shift : 0.0) * id;
                cas += ga * gb;
            }
        }
        cas -= static_cast<double>(boxes) * boxes / (n + 1) * id;
        cas *= -2.0;
        double formula =
            boost::rational_cast<double>(casimir_constant(hw, Algebra::Full));
        CHECK((cas - formula * id).norm() < 1e-9 * std::max(1.0, std::abs(formula)));
    }
}

TEST_CASE("character restriction oracle") {
    // The weight multiset of the irrep equals the union of the weight
    // multisets of its K-branches, computed by a completely independent
    // Gelfand-Tsetlin route.
    for (auto mm : std::vector<std::vector<long long>>{{2, 0}, {2, 1}, {3, 1}}) {
        Weight hw = make_weight_int(mm);
        Irrep rep = build_irrep(2, hw);
        auto direct = weight_multiset(rep);
        std::map<std::vector<long long>, long long> branched;
        for (const auto& entry : branch_to_k(2, hw)) {
            for (const auto& [wt, mult] : k_weight_multiset(entry.k_weight)) {
                branched[wt] += mult;
            }
        }
        CHECK(direct == branched);
    }
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS((void)build_irrep(2, make_weight_int({1, 2})), NotDominant);
    CHECK_THROWS_AS((void)build_irrep(2, make_weight_int({8, 0}), 40),
                    DimensionOverflow);
    Irrep trivial = build_irrep(2, weight_zero(2));
    CHECK(trivial.dim == 1);
    CHECK(trivial.generator(0, 1).norm() == doctest::Approx(0.0));
}
