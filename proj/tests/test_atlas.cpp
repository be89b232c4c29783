#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "subcanonical/atlas.hpp"
#include "subcanonical/semigroups.hpp"

using namespace subc;

namespace {

// Independent oracle: filter all g-subsets of {1,...,2g-1} containing 1 and
// 2g-1 by the closure check.
std::vector<std::vector<int>> naive_symmetric_gap_sets(int g) {
    std::vector<std::vector<int>> out;
    std::vector<int> pool;
    for (int n = 2; n <= 2 * g - 2; ++n) pool.push_back(n);
    std::vector<int> chosen;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (chosen.size() == static_cast<size_t>(g - 2)) {
            std::vector<int> gaps = {1};
            gaps.insert(gaps.end(), chosen.begin(), chosen.end());
            gaps.push_back(2 * g - 1);
            GapSet gap_set(g, gaps);
            const auto r = from_gaps(gap_set);
            if (!std::holds_alternative<NumericalSemigroup>(r)) return;
            if (!is_symmetric(std::get<NumericalSemigroup>(r))) return;
            out.push_back(gap_set.gaps());
            return;
        }
        if (idx >= pool.size()) return;
        rec(idx + 1);
        chosen.push_back(pool[idx]);
        rec(idx + 1);
        chosen.pop_back();
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("enumeration counts for small genus") {
    CHECK(enumerate_candidates(2).size() == 1);
    CHECK(enumerate_candidates(3).size() == 2);
    CHECK(enumerate_candidates(4).size() == 3);
    CHECK(enumerate_candidates(5).size() == 3);
    CHECK(enumerate_candidates(6).size() == 6);
    CHECK_THROWS_AS(enumerate_candidates(1), PreconditionError);
    CHECK_THROWS_AS(enumerate_candidates(26), PreconditionError);
}

TEST_CASE("enumeration equals the naive subset-filter oracle") {
    for (int g = 2; g <= 10; ++g) {
        const auto fast = enumerate_candidates(g);
        std::vector<std::vector<int>> fast_gaps;
        for (const auto& v : fast) fast_gaps.push_back(gaps_from_vanishing(v).gaps());
        std::sort(fast_gaps.begin(), fast_gaps.end());
        CHECK(fast_gaps == naive_symmetric_gap_sets(g));
    }
}

TEST_CASE("enumeration is deterministic and sorted") {
    const auto a = enumerate_candidates(8);
    const auto b = enumerate_candidates(8);
    CHECK(a == b);
    CHECK(std::is_sorted(a.begin(), a.end(),
                         [](const VanishingSequence& x, const VanishingSequence& y) {
                             return x.values() < y.values();
                         }));
    for (const auto& v : a) {
        CHECK(v.genus() == 8);
        CHECK(is_subcanonical(v));
    }
}

TEST_CASE("stored table parses and verifies") {
    const auto& table = ReferenceTable::builtin();
    CHECK(table.rows().size() == 14);
    CHECK(table.max_genus() == 6);
    CHECK(table.rows_for(2).size() == 1);
    CHECK(table.rows_for(3).size() == 2);
    CHECK(table.rows_for(4).size() == 3);
    CHECK(table.rows_for(5).size() == 3);
    CHECK(table.rows_for(6).size() == 5);

    for (int g = 2; g <= 5; ++g) {
        const auto report = verify_reference_table(g);
        CHECK(report.extras.empty());
        CHECK(report.missing.empty());
        CHECK(report.rows.size() == table.rows_for(g).size());
    }
}

TEST_CASE("genus 6 has exactly one extra beyond the stored table") {
    const auto report = verify_reference_table(6);
    CHECK(report.missing.empty());
    REQUIRE(report.extras.size() == 1);
    const auto& extra = report.extras.front();
    CHECK(gaps_from_vanishing(extra.vanishing).gaps() ==
          std::vector<int>{1, 2, 4, 5, 8, 11});
    CHECK(extra.ramification.values() == std::vector<int>{0, 0, 1, 1, 3, 5});
    CHECK(extra.provenance == "derived");
    CHECK_FALSE(extra.in_table);
}

TEST_CASE("table parser rejects malformed rows") {
    CHECK_THROWS_AS(ReferenceTable::parse_text("2 | 0,2 | 0,1 | odd | 1 | 1 | note"),
                    ValidationError);  // 7 fields
    CHECK_THROWS_AS(ReferenceTable::parse_text(
                        "4 | 0,1,2,3 | 0,0,0,0 | odd | 0 | - | note | published"),
                    ValidationError);  // not subcanonical
    CHECK_THROWS_AS(ReferenceTable::load_file("/nonexistent/table.txt"), ValidationError);
    // comments and blank lines are skipped; '-' codim is allowed
    const auto t = ReferenceTable::parse_text(
        "# comment\n\n2 | 0,2 | 0,1 | odd | 1 | - | note | published\n");
    CHECK(t.rows().size() == 1);
    CHECK_FALSE(t.rows().front().codim_claim.has_value());
}

TEST_CASE("table integrity failures raise InternalError") {
    const auto bad = ReferenceTable::parse_text(
        "2 | 0,2 | 0,1 | even | 1 | 1 | wrong parity | published");
    CHECK_THROWS_AS(verify_reference_table(2, bad), InternalError);
}

TEST_CASE("stratification report") {
    const auto report = stratification_report(5);
    CHECK(report.genus == 5);
    CHECK(report.dim_moduli_pointed == 13);
    REQUIRE(report.strata.size() == 3);
    for (const auto& s : report.strata) {
        CHECK(s.codim_bound == s.weight);
        REQUIRE(s.table_codim.has_value());
        CHECK(*s.table_codim == 4);
        REQUIRE(s.component_dim.has_value());
        CHECK(*s.component_dim == 9);
        CHECK(*s.component_codim == 4);
    }
    // genus beyond the stored table still enumerates, with no codim claims
    const auto far = stratification_report(8);
    for (const auto& s : far.strata) CHECK_FALSE(s.table_codim.has_value());
}
