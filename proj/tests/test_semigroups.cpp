#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "subcanonical/semigroups.hpp"

using namespace subc;

namespace {

// Independent oracle: double loop over all member pairs up to the bound.
bool naive_closed(const GapSet& gaps) {
    const int g = gaps.genus();
    const int bound = 2 * g - 1;
    auto member = [&](int n) { return n >= 0 && !gaps.contains(n); };
    for (int x = 1; x <= bound; ++x)
        for (int y = x; x + y <= bound; ++y)
            if (member(x) && member(y) && !member(x + y)) return false;
    return true;
}

}  // namespace

TEST_CASE("from_gaps accepts genuine gap sets") {
    const auto r = from_gaps(GapSet(4, {1, 3, 5, 7}));
    REQUIRE(std::holds_alternative<NumericalSemigroup>(r));
    const auto& s = std::get<NumericalSemigroup>(r);
    CHECK(s.genus() == 4);
    CHECK(s.contains(0));
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(7));
    CHECK(s.contains(8));
    CHECK(s.contains(9));  // above the Frobenius number
    CHECK(s.gaps() == std::vector<int>{1, 3, 5, 7});
}

TEST_CASE("from_gaps reports the lexicographically smallest witness") {
    const auto r = from_gaps(GapSet(4, {1, 2, 5, 7}));
    REQUIRE(std::holds_alternative<ClosureViolation>(r));
    CHECK(std::get<ClosureViolation>(r) == ClosureViolation{3, 4, 7});

    const auto r2 = from_gaps(GapSet(5, {1, 2, 3, 8, 9}));
    REQUIRE(std::holds_alternative<ClosureViolation>(r2));
    CHECK(std::get<ClosureViolation>(r2) == ClosureViolation{4, 4, 8});
}

TEST_CASE("from_gaps agrees with the naive closure oracle") {
    // All subsets of {2..9} of size 3 joined with the forced gap 1 give every
    // candidate gap set of genus 4 with gaps below 2g = 8... use bound 2g-1 = 7.
    for (int a = 2; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b)
            for (int c = b + 1; c <= 7; ++c) {
                GapSet gaps(4, {1, a, b, c});
                const bool ours = std::holds_alternative<NumericalSemigroup>(from_gaps(gaps));
                CHECK(ours == naive_closed(gaps));
            }
}

TEST_CASE("symmetry and Frobenius number") {
    const auto hyper = from_gaps(GapSet(4, {1, 3, 5, 7}));
    const auto& s = std::get<NumericalSemigroup>(hyper);
    CHECK(is_symmetric(s));
    CHECK(frobenius(s) == 7);

    // gaps {1,2,3,4}: Frobenius 4 < 2g-1 = 7, not symmetric
    const auto r = from_gaps(GapSet(4, {1, 2, 3, 4}));
    REQUIRE(std::holds_alternative<NumericalSemigroup>(r));
    const auto& t = std::get<NumericalSemigroup>(r);
    CHECK_FALSE(is_symmetric(t));
    CHECK(frobenius(t) == 4);

    const auto trivial = from_gaps(GapSet(0, {}));
    const auto& u = std::get<NumericalSemigroup>(trivial);
    CHECK(frobenius(u) == -1);
}

TEST_CASE("ramification admissibility") {
    // hyperelliptic ramification is admissible
    const auto good = check_ramification_admissible(RamificationSequence(4, {0, 1, 2, 3}));
    CHECK(good.admissible);
    CHECK_FALSE(good.violation.has_value());

    // alpha = (0,...,0,1,g-2) fails with a concrete witness
    const auto bad = check_ramification_admissible(RamificationSequence(5, {0, 0, 0, 1, 3}));
    CHECK_FALSE(bad.admissible);
    REQUIRE(bad.violation.has_value());
    const auto w = *bad.violation;
    CHECK(w.x + w.y == w.sum);
    // the witness must actually be two members summing to a gap
    const GapSet gaps = gaps_from_vanishing(
        vanishing_from_ramification(RamificationSequence(5, {0, 0, 0, 1, 3})));
    CHECK_FALSE(gaps.contains(w.x));
    CHECK_FALSE(gaps.contains(w.y));
    CHECK(gaps.contains(w.sum));
}
