#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subcanonical/sequences.hpp"

namespace subc {

/// Order of the divisor class p-q in Pic^0 of the elliptic component.
struct TorsionClass {
    int order = 1;
};

/// Data of a limit canonical series on a two-component curve C u E of total
/// genus g: C has genus g-1 with a subcanonical node q (alpha_q ends in g-2)
/// and the marked point p on E has p-q of the given torsion order.
class LimitSeriesProblem {
public:
    LimitSeriesProblem(int total_genus, RamificationSequence alpha_q, int torsion_order);

    int total_genus() const { return total_genus_; }
    const RamificationSequence& alpha_q() const { return alpha_q_; }
    int torsion_order() const { return torsion_order_; }

private:
    int total_genus_;
    RamificationSequence alpha_q_;
    int torsion_order_;  // 2g-2 or g-1
};

/// Ramification data of one aspect of a g^{g-1}_{2g-2}: sequences at the node
/// and at the marked point, entries bounded by d_deg - r.
struct AspectRamification {
    int r = 0;
    int d_deg = 0;
    std::vector<int> at_q;
    std::vector<int> at_p;
};

/// Ramification of the C-aspect at the node: out[0] = 0 and
/// out[i] = alpha_{i-1} + 1.
std::vector<int> c_aspect_ramification(const RamificationSequence& alpha_kc_q);

/// Ramification forced on the E-aspect at the node:
/// beta_0 = 0, beta_{g-1} = g-1, beta_j = g-2 - alpha_{g-2-j}.
std::vector<int> beta_at_node(const LimitSeriesProblem& p);

struct GammaResult {
    std::vector<int> gamma;
    std::optional<int> exceptional_index;
};

/// Ramification of the E-aspect at the marked point: gamma_{i+1} = alpha_i,
/// except that when p-q has order g-1 the unique index with
/// alpha_i = g-3-i (and i = g-3 or alpha_{i+1} > alpha_i) is raised by one.
GammaResult gamma_at_marked_point(const LimitSeriesProblem& p);

/// E-aspect ramification pair (beta, gamma) for the problem.
AspectRamification aspect_for_problem(const LimitSeriesProblem& p);

struct CrudeLimitVerdict {
    bool pass = false;
    std::vector<std::string> violations;
};

/// Checks the necessary conditions for a crude limit series with the given
/// E-aspect ramification at p: torsion divides 2g-2, alpha_q subcanonical,
/// gamma_0 = 0, and the inequality family appropriate to the torsion order.
CrudeLimitVerdict check_crude_limit(int g, const std::vector<int>& gamma_p,
                                    TorsionClass torsion, const RamificationSequence& alpha_q);

/// Two-sided bound g-1 >= beta_{g-1-j} + gamma_j >= g-2 for all j.
bool eh_star(const std::vector<int>& beta, const std::vector<int>& gamma, int g);

/// Whether b q + c p ~ (2g-2) q on E: degrees must match and the torsion
/// order must divide c.
bool divisor_relation_holds(int b, int c, int g, TorsionClass torsion);

/// Brill-Noether number adjusted by imposed ramification:
/// (r+1)(d-r) - r g - sum(alpha).
long long rho_adjusted(int g, int r, int d_deg, const std::vector<int>& alpha);

struct ExpectedDimensions {
    int dim_G_lower = 0;  // 2g-1
    int dim_D = 0;        // 2g-2
    int dim_B = 0;        // 3g-2
};

ExpectedDimensions expected_dimensions(int g);

/// Parity of a compact-type theta characteristic from its component parities.
Parity combine_theta_parity(const std::vector<Parity>& parities);

}  // namespace subc
