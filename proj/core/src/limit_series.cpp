#include "subcanonical/limit_series.hpp"

#include "subcanonical/detail/text.hpp"

namespace subc {

namespace {

void require_length(const std::vector<int>& seq, int g, const char* what) {
    if (static_cast<int>(seq.size()) != g)
        throw ValidationError(detail::cat(what, ": expected ", g, " entries, got ", seq.size()));
}

bool subcanonical_alpha(const RamificationSequence& alpha_q) {
    const int gc = alpha_q.genus();
    return gc >= 1 && alpha_q.values().back() == gc - 1;
}

}  // namespace

LimitSeriesProblem::LimitSeriesProblem(int total_genus, RamificationSequence alpha_q,
                                       int torsion_order)
    : total_genus_(total_genus), alpha_q_(std::move(alpha_q)), torsion_order_(torsion_order) {
    if (total_genus_ < 3) throw ValidationError("limit series problem: need total genus >= 3");
    if (alpha_q_.genus() != total_genus_ - 1)
        throw ValidationError(detail::cat("limit series problem: alpha_q has genus ",
                                          alpha_q_.genus(), ", expected g-1 = ",
                                          total_genus_ - 1));
    if (!subcanonical_alpha(alpha_q_))
        throw PreconditionError(detail::cat(
            "limit series problem: the node must be subcanonical on C (alpha_",
            total_genus_ - 2, " = g-2 = ", total_genus_ - 2, ")"));
    if (torsion_order_ != 2 * total_genus_ - 2 && torsion_order_ != total_genus_ - 1)
        throw PreconditionError(detail::cat(
            "limit series problem: torsion order must be 2g-2 = ", 2 * total_genus_ - 2,
            " or g-1 = ", total_genus_ - 1, ", got ", torsion_order_));
}

std::vector<int> c_aspect_ramification(const RamificationSequence& alpha_kc_q) {
    const int g = alpha_kc_q.genus() + 1;
    std::vector<int> out(static_cast<size_t>(g));
    out[0] = 0;
    for (int i = 1; i < g; ++i) out[static_cast<size_t>(i)] = alpha_kc_q[i - 1] + 1;
    return out;
}

std::vector<int> beta_at_node(const LimitSeriesProblem& p) {
    const int g = p.total_genus();
    const auto& alpha = p.alpha_q();
    std::vector<int> beta(static_cast<size_t>(g));
    beta[0] = 0;
    beta[static_cast<size_t>(g - 1)] = g - 1;
    for (int j = 1; j <= g - 2; ++j)
        beta[static_cast<size_t>(j)] = g - 2 - alpha[g - 2 - j];
    return beta;
}

GammaResult gamma_at_marked_point(const LimitSeriesProblem& p) {
    const int g = p.total_genus();
    const auto& alpha = p.alpha_q();

    GammaResult result;
    result.gamma.resize(static_cast<size_t>(g));
    result.gamma[0] = 0;
    result.gamma[static_cast<size_t>(g - 1)] = g - 1;
    for (int i = 0; i <= g - 3; ++i) result.gamma[static_cast<size_t>(i + 1)] = alpha[i];

    if (p.torsion_order() == g - 1) {
        for (int i = 0; i <= g - 3; ++i) {
            if (alpha[i] != g - 3 - i) continue;
            if (i != g - 3 && alpha[i + 1] <= alpha[i]) continue;
            if (result.exceptional_index)
                throw InternalError("gamma_at_marked_point: multiple exceptional indices");
            result.exceptional_index = i;
            result.gamma[static_cast<size_t>(i + 1)] = alpha[i] + 1;
        }
    }
    return result;
}

AspectRamification aspect_for_problem(const LimitSeriesProblem& p) {
    const int g = p.total_genus();
    auto gamma = gamma_at_marked_point(p);
    return AspectRamification{.r = g - 1,
                              .d_deg = 2 * g - 2,
                              .at_q = beta_at_node(p),
                              .at_p = std::move(gamma.gamma)};
}

CrudeLimitVerdict check_crude_limit(int g, const std::vector<int>& gamma_p,
                                    TorsionClass torsion, const RamificationSequence& alpha_q) {
    if (g < 3) throw ValidationError("check_crude_limit: need g >= 3");
    require_length(gamma_p, g, "check_crude_limit: gamma");
    if (gamma_p.back() != g - 1)
        throw ValidationError("check_crude_limit: gamma must end with g-1");
    if (alpha_q.genus() != g - 1)
        throw ValidationError("check_crude_limit: alpha_q must have genus g-1");
    if (torsion.order < 1) throw ValidationError("check_crude_limit: torsion order must be positive");

    CrudeLimitVerdict verdict;
    auto fail = [&](std::string msg) { verdict.violations.push_back(std::move(msg)); };

    if ((2 * g - 2) % torsion.order != 0)
        fail(detail::cat("torsion order ", torsion.order, " does not divide 2g-2 = ",
                         2 * g - 2));
    if (!subcanonical_alpha(alpha_q))
        fail("node is not a subcanonical point of C");
    if (gamma_p.front() != 0)
        fail("gamma_0 must be 0");

    if (torsion.order == 2 * g - 2) {
        for (int i = 1; i <= g - 2; ++i)
            if (alpha_q[i - 1] < gamma_p[static_cast<size_t>(i)])
                fail(detail::cat("inequality fails at i = ", i, ": alpha_", i - 1, " = ",
                                 alpha_q[i - 1], " < gamma_", i, " = ",
                                 gamma_p[static_cast<size_t>(i)]));
    } else if (torsion.order == g - 1) {
        int exceptions = 0;
        for (int i = 1; i <= g - 2; ++i) {
            const int gi = gamma_p[static_cast<size_t>(i)];
            if (alpha_q[i - 1] >= gi) continue;
            ++exceptions;
            if (gi + i != g - 1 || alpha_q[i - 1] != gi - 1)
                fail(detail::cat("exception at i = ", i,
                                 " does not satisfy a_i = g-1 with alpha_", i - 1, " = gamma_",
                                 i, "-1"));
        }
        if (exceptions > 1)
            fail(detail::cat(exceptions, " exceptional indices, at most one allowed"));
    }

    verdict.pass = verdict.violations.empty();
    return verdict;
}

bool eh_star(const std::vector<int>& beta, const std::vector<int>& gamma, int g) {
    require_length(beta, g, "eh_star: beta");
    require_length(gamma, g, "eh_star: gamma");
    for (int j = 0; j < g; ++j) {
        const int s = beta[static_cast<size_t>(g - 1 - j)] + gamma[static_cast<size_t>(j)];
        if (s < g - 2 || s > g - 1) return false;
    }
    return true;
}

bool divisor_relation_holds(int b, int c, int g, TorsionClass torsion) {
    if (b < 0 || c < 0) throw ValidationError("divisor_relation_holds: need b, c >= 0");
    if (torsion.order < 1)
        throw ValidationError("divisor_relation_holds: torsion order must be positive");
    return b + c == 2 * g - 2 && c % torsion.order == 0;
}

long long rho_adjusted(int g, int r, int d_deg, const std::vector<int>& alpha) {
    if (static_cast<int>(alpha.size()) != r + 1)
        throw ValidationError(detail::cat("rho_adjusted: alpha must have r+1 = ", r + 1,
                                          " entries"));
    long long rho = static_cast<long long>(r + 1) * (d_deg - r) - static_cast<long long>(r) * g;
    for (int a : alpha) rho -= a;
    return rho;
}

ExpectedDimensions expected_dimensions(int g) {
    if (g < 3) throw PreconditionError("expected_dimensions: need g >= 3");
    return ExpectedDimensions{.dim_G_lower = 2 * g - 1, .dim_D = 2 * g - 2, .dim_B = 3 * g - 2};
}

Parity combine_theta_parity(const std::vector<Parity>& parities) {
    if (parities.empty())
        throw ValidationError("combine_theta_parity: need at least one component parity");
    int odd = 0;
    for (Parity p : parities)
        if (p == Parity::odd) ++odd;
    return odd % 2 == 0 ? Parity::even : Parity::odd;
}

}  // namespace subc
