#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subcanonical/errors.hpp"

namespace subc {

enum class Parity { odd, even };
enum class Component { hyperelliptic, odd, even, unclassified };

std::string to_string(Parity p);
std::string to_string(Component c);
Parity parity_from_string(const std::string& s);

/// Orders of vanishing 0 = a_0 < a_1 < ... < a_{g-1} <= 2g-2 of the
/// holomorphic differentials at a point of a genus-g curve.  Genus 0 is
/// permitted (empty sequence) so that a rational base curve can be described.
class VanishingSequence {
public:
    VanishingSequence(int genus, std::vector<int> values);

    int genus() const { return genus_; }
    const std::vector<int>& values() const { return values_; }
    int operator[](int k) const { return values_[static_cast<size_t>(k)]; }

    bool contains(int n) const;

    friend bool operator==(const VanishingSequence&, const VanishingSequence&) = default;

private:
    int genus_;
    std::vector<int> values_;
};

/// alpha_k = a_k - k; nondecreasing, alpha_0 = 0, alpha_{g-1} <= g-1.
class RamificationSequence {
public:
    RamificationSequence(int genus, std::vector<int> values);

    int genus() const { return genus_; }
    const std::vector<int>& values() const { return values_; }
    int operator[](int k) const { return values_[static_cast<size_t>(k)]; }

    friend bool operator==(const RamificationSequence&, const RamificationSequence&) = default;

private:
    int genus_;
    std::vector<int> values_;
};

/// The g Weierstrass gaps at a point, stored sorted.  1 is always a gap and
/// every gap is at most 2g-1.
class GapSet {
public:
    GapSet(int genus, std::vector<int> gaps);

    int genus() const { return genus_; }
    const std::vector<int>& gaps() const { return gaps_; }
    bool contains(int n) const;

    friend bool operator==(const GapSet&, const GapSet&) = default;

private:
    int genus_;
    std::vector<int> gaps_;  // sorted ascending
};

RamificationSequence ramification_from_vanishing(const VanishingSequence& v);
VanishingSequence vanishing_from_ramification(const RamificationSequence& r);
GapSet gaps_from_vanishing(const VanishingSequence& v);
VanishingSequence vanishing_from_gaps(const GapSet& s);

int weight(const RamificationSequence& r);

/// Number of vanishing orders >= g-1; its parity classifies the theta
/// characteristic O((g-1)p).  Requires a subcanonical sequence.
int theta_h0(const VanishingSequence& v);

bool is_subcanonical(const VanishingSequence& v);

/// Hyperelliptic iff v = (0,2,...,2g-2); otherwise odd/even by theta parity.
/// Returns unclassified for g < 4, where the component taxonomy is not stated.
Component classify_component(const VanishingSequence& v);

/// All encodings and invariants of one point, computed together.
struct PointProfile {
    int genus;
    VanishingSequence vanishing;
    RamificationSequence ramification;
    GapSet gaps;
    int weight = 0;
    std::optional<int> theta_h0;   // defined only for subcanonical points
    std::optional<Parity> parity;  // likewise
    bool subcanonical = false;
    Component component = Component::unclassified;
};

PointProfile build_profile(const VanishingSequence& v);

}  // namespace subc
