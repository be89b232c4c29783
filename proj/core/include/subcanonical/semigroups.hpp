#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "subcanonical/sequences.hpp"

namespace subc {

/// Witness that a would-be non-gap set is not additively closed:
/// x and y are members but their sum is a gap.
struct ClosureViolation {
    int x = 0;
    int y = 0;
    int sum = 0;

    friend bool operator==(const ClosureViolation&, const ClosureViolation&) = default;
};

/// A numerical semigroup of a given genus, held as a dense membership table
/// over 0..2g+1.  Every integer above 2g-1 is a member.
class NumericalSemigroup {
public:
    int genus() const { return genus_; }
    int bound() const { return static_cast<int>(member_.size()) - 1; }

    bool contains(int n) const;
    std::vector<int> gaps() const;

private:
    NumericalSemigroup(int genus, std::vector<bool> member)
        : genus_(genus), member_(std::move(member)) {}

    friend std::variant<NumericalSemigroup, ClosureViolation> from_gaps(const GapSet&);

    int genus_;
    std::vector<bool> member_;
};

using FromGapsResult = std::variant<NumericalSemigroup, ClosureViolation>;

/// Builds the semigroup whose gap set is exactly `gaps`, or reports the
/// lexicographically smallest (x, y) witnessing a closure failure.
FromGapsResult from_gaps(const GapSet& gaps);

/// True iff x is a member exactly when 2g-1-x is not, for 0 <= x <= 2g-1.
bool is_symmetric(const NumericalSemigroup& s);

/// Largest gap; -1 for the trivial semigroup.
int frobenius(const NumericalSemigroup& s);

struct AdmissibilityVerdict {
    bool admissible = false;
    std::optional<ClosureViolation> violation;
};

/// Converts r to its gap set and checks the semigroup condition.
AdmissibilityVerdict check_ramification_admissible(const RamificationSequence& r);

}  // namespace subc
