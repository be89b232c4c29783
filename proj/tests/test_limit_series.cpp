#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "subcanonical/limit_series.hpp"

using namespace subc;

namespace {

// All ramification sequences of genus gc ending in gc-1 (subcanonical node data).
std::vector<RamificationSequence> all_subcanonical_alphas(int gc) {
    std::vector<RamificationSequence> out;
    std::vector<int> cur(static_cast<size_t>(gc));
    cur.back() = gc - 1;
    std::function<void(int)> rec = [&](int k) {
        if (k == gc - 1) {
            out.emplace_back(gc, cur);
            return;
        }
        const int lo = k == 0 ? 0 : cur[static_cast<size_t>(k - 1)];
        for (int v = lo; v <= gc - 1; ++v) {
            if (k == 0 && v != 0) break;
            cur[static_cast<size_t>(k)] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace

TEST_CASE("problem validation") {
    CHECK_NOTHROW(LimitSeriesProblem(5, RamificationSequence(4, {0, 0, 1, 3}), 8));
    CHECK_NOTHROW(LimitSeriesProblem(5, RamificationSequence(4, {0, 0, 1, 3}), 4));
    CHECK_THROWS_AS(LimitSeriesProblem(5, RamificationSequence(3, {0, 1, 2}), 8),
                    ValidationError);  // wrong genus
    CHECK_THROWS_AS(LimitSeriesProblem(5, RamificationSequence(4, {0, 0, 1, 2}), 8),
                    PreconditionError);  // node not subcanonical
    CHECK_THROWS_AS(LimitSeriesProblem(5, RamificationSequence(4, {0, 0, 1, 3}), 5),
                    PreconditionError);  // bad torsion order
}

TEST_CASE("C-aspect ramification at the node") {
    CHECK(c_aspect_ramification(RamificationSequence(4, {0, 0, 1, 3})) ==
          std::vector<int>{0, 1, 1, 2, 4});
    CHECK(c_aspect_ramification(RamificationSequence(3, {0, 1, 2})) ==
          std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("beta and gamma for the generic alpha") {
    // alpha_q = (0,...,0,g-2)
    for (int g = 4; g <= 10; ++g) {
        std::vector<int> alpha(static_cast<size_t>(g - 1), 0);
        alpha.back() = g - 2;
        const RamificationSequence alpha_q(g - 1, alpha);

        const LimitSeriesProblem full(g, alpha_q, 2 * g - 2);
        std::vector<int> expect_gamma(static_cast<size_t>(g), 0);
        expect_gamma.back() = g - 1;
        const auto gamma_full = gamma_at_marked_point(full);
        CHECK(gamma_full.gamma == expect_gamma);
        CHECK_FALSE(gamma_full.exceptional_index.has_value());

        const LimitSeriesProblem half(g, alpha_q, g - 1);
        auto expect_half = expect_gamma;
        expect_half[static_cast<size_t>(g - 2)] = 1;
        const auto gamma_half = gamma_at_marked_point(half);
        CHECK(gamma_half.gamma == expect_half);
        REQUIRE(gamma_half.exceptional_index.has_value());
        CHECK(*gamma_half.exceptional_index == g - 3);

        const auto beta = beta_at_node(full);
        CHECK(beta.front() == 0);
        CHECK(beta.back() == g - 1);
        for (int j = 1; j <= g - 2; ++j)
            CHECK(beta[static_cast<size_t>(j)] == g - 2 - alpha_q[g - 2 - j]);
    }
}

TEST_CASE("constructed aspects pass the crude-limit and eh_star checks") {
    for (int g = 4; g <= 9; ++g) {
        for (const auto& alpha_q : all_subcanonical_alphas(g - 1)) {
            for (const int order : {2 * g - 2, g - 1}) {
                const LimitSeriesProblem p(g, alpha_q, order);
                const auto aspect = aspect_for_problem(p);
                CHECK(aspect.r == g - 1);
                CHECK(aspect.d_deg == 2 * g - 2);
                const auto verdict =
                    check_crude_limit(g, aspect.at_p, TorsionClass{order}, alpha_q);
                CHECK(verdict.pass);
                CHECK(verdict.violations.empty());
                CHECK(eh_star(aspect.at_q, aspect.at_p, g));
            }
        }
    }
}

TEST_CASE("crude-limit violations are reported") {
    const RamificationSequence alpha_q(4, {0, 0, 1, 3});
    // gamma too large at an interior index for the full-torsion inequality
    const auto v1 = check_crude_limit(5, {0, 2, 2, 2, 4}, TorsionClass{8}, alpha_q);
    CHECK_FALSE(v1.pass);
    CHECK_FALSE(v1.violations.empty());
    // non-dividing torsion order
    const auto v2 = check_crude_limit(5, {0, 0, 0, 1, 4}, TorsionClass{3}, alpha_q);
    CHECK_FALSE(v2.pass);
    // gamma_0 nonzero is invalid data, caught as a verdict via the front check
    const auto v3 = check_crude_limit(5, {1, 2, 3, 3, 4}, TorsionClass{8}, alpha_q);
    CHECK_FALSE(v3.pass);
}

TEST_CASE("divisor relation on the elliptic component") {
    CHECK(divisor_relation_holds(0, 8, 5, TorsionClass{8}));
    CHECK(divisor_relation_holds(4, 4, 5, TorsionClass{4}));
    CHECK_FALSE(divisor_relation_holds(1, 8, 5, TorsionClass{8}));   // degree mismatch
    CHECK_FALSE(divisor_relation_holds(4, 4, 5, TorsionClass{8}));   // torsion does not divide
    CHECK_THROWS_AS(divisor_relation_holds(-1, 8, 5, TorsionClass{8}), ValidationError);
}

TEST_CASE("adjusted Brill-Noether number and expected dimensions") {
    // canonical series: rho((g, g-1, 2g-2), alpha = 0) = 0
    for (int g = 3; g <= 12; ++g) {
        CHECK(rho_adjusted(g, g - 1, 2 * g - 2,
                           std::vector<int>(static_cast<size_t>(g), 0)) == 0);
        std::vector<int> gamma(static_cast<size_t>(g), 0);
        gamma.back() = g - 1;
        CHECK(rho_adjusted(g, g - 1, 2 * g - 2, gamma) == -(g - 1));
        const auto dims = expected_dimensions(g);
        CHECK(dims.dim_G_lower == 2 * g - 1);
        CHECK(dims.dim_D == 2 * g - 2);
        CHECK(dims.dim_B == 3 * g - 2);
    }
    CHECK_THROWS_AS(rho_adjusted(5, 2, 6, {0, 0}), ValidationError);
    CHECK_THROWS_AS(expected_dimensions(2), PreconditionError);
}

TEST_CASE("compact-type parity combination") {
    CHECK(combine_theta_parity({Parity::odd, Parity::odd}) == Parity::even);
    CHECK(combine_theta_parity({Parity::odd, Parity::even}) == Parity::odd);
    CHECK(combine_theta_parity({Parity::even, Parity::even}) == Parity::even);
    CHECK(combine_theta_parity({Parity::odd}) == Parity::odd);
    CHECK_THROWS_AS(combine_theta_parity({}), ValidationError);
}
