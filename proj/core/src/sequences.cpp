#include "subcanonical/sequences.hpp"

#include <algorithm>
#include "subcanonical/detail/text.hpp"

namespace subc {

std::string to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

std::string to_string(Component c) {
    switch (c) {
        case Component::hyperelliptic: return "hyperelliptic";
        case Component::odd: return "odd";
        case Component::even: return "even";
        case Component::unclassified: return "unclassified";
    }
    return "unclassified";
}

Parity parity_from_string(const std::string& s) {
    if (s == "odd") return Parity::odd;
    if (s == "even") return Parity::even;
    throw ValidationError(detail::cat("unknown parity '", s, "'"));
}

VanishingSequence::VanishingSequence(int genus, std::vector<int> values)
    : genus_(genus), values_(std::move(values)) {
    if (genus_ < 0)
        throw ValidationError("vanishing sequence: genus must be nonnegative");
    if (static_cast<int>(values_.size()) != genus_)
        throw ValidationError(detail::cat("vanishing sequence: expected ", genus_,
                                          " entries for genus ", genus_, ", got ",
                                          values_.size()));
    if (genus_ == 0) return;
    if (values_.front() != 0)
        throw ValidationError("vanishing sequence: first entry must be 0");
    for (int k = 1; k < genus_; ++k)
        if (values_[k] <= values_[k - 1])
            throw ValidationError(
                detail::cat("vanishing sequence: entries must be strictly increasing (a_", k,
                            " = ", values_[k], " <= a_", k - 1, " = ", values_[k - 1], ")"));
    if (values_.back() > 2 * genus_ - 2)
        throw ValidationError(detail::cat("vanishing sequence: last entry ", values_.back(),
                                          " exceeds 2g-2 = ", 2 * genus_ - 2));
}

bool VanishingSequence::contains(int n) const {
    return std::binary_search(values_.begin(), values_.end(), n);
}

RamificationSequence::RamificationSequence(int genus, std::vector<int> values)
    : genus_(genus), values_(std::move(values)) {
    if (genus_ < 0)
        throw ValidationError("ramification sequence: genus must be nonnegative");
    if (static_cast<int>(values_.size()) != genus_)
        throw ValidationError(detail::cat("ramification sequence: expected ", genus_,
                                          " entries for genus ", genus_, ", got ",
                                          values_.size()));
    if (genus_ == 0) return;
    if (values_.front() != 0)
        throw ValidationError("ramification sequence: first entry must be 0");
    for (int k = 1; k < genus_; ++k)
        if (values_[k] < values_[k - 1])
            throw ValidationError("ramification sequence: entries must be nondecreasing");
    if (values_.back() > genus_ - 1)
        throw ValidationError(detail::cat("ramification sequence: last entry ", values_.back(),
                                          " exceeds g-1 = ", genus_ - 1));
}

GapSet::GapSet(int genus, std::vector<int> gaps) : genus_(genus), gaps_(std::move(gaps)) {
    if (genus_ < 0) throw ValidationError("gap set: genus must be nonnegative");
    std::sort(gaps_.begin(), gaps_.end());
    if (static_cast<int>(gaps_.size()) != genus_)
        throw ValidationError(detail::cat("gap set: expected ", genus_, " gaps for genus ",
                                          genus_, ", got ", gaps_.size()));
    if (std::adjacent_find(gaps_.begin(), gaps_.end()) != gaps_.end())
        throw ValidationError("gap set: gaps must be distinct");
    if (genus_ == 0) return;
    if (gaps_.front() < 1) throw ValidationError("gap set: gaps must be positive");
    if (gaps_.front() != 1) throw ValidationError("gap set: 1 must be a gap");
    if (gaps_.back() > 2 * genus_ - 1)
        throw ValidationError(detail::cat("gap set: gap ", gaps_.back(), " exceeds 2g-1 = ",
                                          2 * genus_ - 1));
}

bool GapSet::contains(int n) const {
    return std::binary_search(gaps_.begin(), gaps_.end(), n);
}

RamificationSequence ramification_from_vanishing(const VanishingSequence& v) {
    std::vector<int> out(v.values());
    for (int k = 0; k < v.genus(); ++k) out[k] -= k;
    return RamificationSequence(v.genus(), std::move(out));
}

VanishingSequence vanishing_from_ramification(const RamificationSequence& r) {
    std::vector<int> out(r.values());
    for (int k = 0; k < r.genus(); ++k) out[k] += k;
    return VanishingSequence(r.genus(), std::move(out));
}

GapSet gaps_from_vanishing(const VanishingSequence& v) {
    std::vector<int> out(v.values());
    for (int& x : out) x += 1;
    return GapSet(v.genus(), std::move(out));
}

VanishingSequence vanishing_from_gaps(const GapSet& s) {
    std::vector<int> out(s.gaps());
    for (int& x : out) x -= 1;
    return VanishingSequence(s.genus(), std::move(out));
}

int weight(const RamificationSequence& r) {
    int w = 0;
    for (int x : r.values()) w += x;
    return w;
}

bool is_subcanonical(const VanishingSequence& v) {
    if (v.genus() < 1) return false;
    return v.values().back() == 2 * v.genus() - 2;
}

int theta_h0(const VanishingSequence& v) {
    if (!is_subcanonical(v))
        throw PreconditionError("theta_h0: point is not subcanonical, O((g-1)p) is not a "
                                "theta characteristic");
    const int g = v.genus();
    int count = 0;
    for (int a : v.values())
        if (a >= g - 1) ++count;
    return count;
}

Component classify_component(const VanishingSequence& v) {
    if (!is_subcanonical(v))
        throw PreconditionError("classify_component: point is not subcanonical");
    const int g = v.genus();
    if (g < 4) return Component::unclassified;
    bool hyp = true;
    for (int k = 0; k < g; ++k)
        if (v[k] != 2 * k) {
            hyp = false;
            break;
        }
    if (hyp) return Component::hyperelliptic;
    return theta_h0(v) % 2 == 1 ? Component::odd : Component::even;
}

PointProfile build_profile(const VanishingSequence& v) {
    PointProfile p{
        .genus = v.genus(),
        .vanishing = v,
        .ramification = ramification_from_vanishing(v),
        .gaps = gaps_from_vanishing(v),
    };
    p.weight = weight(p.ramification);
    p.subcanonical = is_subcanonical(v);
    if (p.subcanonical) {
        p.theta_h0 = theta_h0(v);
        p.parity = *p.theta_h0 % 2 == 1 ? Parity::odd : Parity::even;
        p.component = classify_component(v);
    }
    return p;
}

}  // namespace subc
