#include "subcanonical/semigroups.hpp"

#include <algorithm>

namespace subc {

bool NumericalSemigroup::contains(int n) const {
    if (n < 0) return false;
    if (n > bound()) return true;
    return member_[static_cast<size_t>(n)];
}

std::vector<int> NumericalSemigroup::gaps() const {
    std::vector<int> out;
    for (int n = 1; n <= bound(); ++n)
        if (!member_[static_cast<size_t>(n)]) out.push_back(n);
    return out;
}

FromGapsResult from_gaps(const GapSet& gaps) {
    const int g = gaps.genus();
    const int bound = 2 * g + 1;
    std::vector<bool> member(static_cast<size_t>(bound) + 1, true);
    for (int n : gaps.gaps()) member[static_cast<size_t>(n)] = false;

    // Gaps live below 2g-1, so only sums up to there can fail closure.
    const int frob_bound = 2 * g - 1;
    for (int x = 1; x <= frob_bound; ++x) {
        if (!member[static_cast<size_t>(x)]) continue;
        for (int y = x; x + y <= frob_bound; ++y) {
            if (!member[static_cast<size_t>(y)]) continue;
            if (!member[static_cast<size_t>(x + y)])
                return ClosureViolation{.x = x, .y = y, .sum = x + y};
        }
    }
    return NumericalSemigroup(g, std::move(member));
}

bool is_symmetric(const NumericalSemigroup& s) {
    const int f = 2 * s.genus() - 1;
    for (int x = 0; x <= f; ++x)
        if (s.contains(x) == s.contains(f - x)) return false;
    return true;
}

int frobenius(const NumericalSemigroup& s) {
    auto gs = s.gaps();
    return gs.empty() ? -1 : gs.back();
}

AdmissibilityVerdict check_ramification_admissible(const RamificationSequence& r) {
    auto gaps = gaps_from_vanishing(vanishing_from_ramification(r));
    auto result = from_gaps(gaps);
    if (auto* violation = std::get_if<ClosureViolation>(&result))
        return AdmissibilityVerdict{.admissible = false, .violation = *violation};
    return AdmissibilityVerdict{.admissible = true};
}

}  // namespace subc
