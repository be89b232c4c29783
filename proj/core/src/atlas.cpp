#include "subcanonical/atlas.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "subcanonical/detail/text.hpp"
#include "subcanonical/semigroups.hpp"

namespace subc {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) parts.push_back(trim(part));
    return parts;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (const auto& tok : split(s, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

// Membership search state for the symmetric-semigroup enumeration.  With the
// symmetry pairing member(x) <=> gap(2g-1-x) fixed, only x = 2..g-1 are free
// decisions; a symmetric assignment automatically has exactly g gaps.
struct Dfs {
    int g;
    int frob;  // 2g-1
    std::vector<int> state;  // -1 undecided, 0 gap, 1 member
    std::vector<VanishingSequence>* out;

    bool sum_hits_gap(int x) const {
        // x just became a member: any decided member partner summing to a
        // decided gap kills the branch.
        for (int m = 0; m <= frob - x; ++m) {
            if (state[static_cast<size_t>(m)] != 1 || m == 0) continue;
            if (state[static_cast<size_t>(x + m)] == 0) return true;
        }
        return false;
    }

    bool gap_is_reachable(int y) const {
        // y just became a gap: a pair of decided members summing to y kills
        // the branch.
        for (int a = 1; 2 * a <= y; ++a) {
            if (state[static_cast<size_t>(a)] != 1) continue;
            if (state[static_cast<size_t>(y - a)] == 1) return true;
        }
        return false;
    }

    void emit() {
        std::vector<int> gaps;
        for (int n = 1; n <= frob; ++n)
            if (state[static_cast<size_t>(n)] == 0) gaps.push_back(n);
        GapSet gap_set(g, std::move(gaps));
        if (!std::holds_alternative<NumericalSemigroup>(from_gaps(gap_set))) return;
        out->push_back(vanishing_from_gaps(gap_set));
    }

    void search(int x) {
        if (x > g - 1) {
            emit();
            return;
        }
        const int mirror = frob - x;
        // x member, mirror gap
        state[static_cast<size_t>(x)] = 1;
        state[static_cast<size_t>(mirror)] = 0;
        if (!sum_hits_gap(x) && !gap_is_reachable(mirror)) search(x + 1);
        // x gap, mirror member
        state[static_cast<size_t>(x)] = 0;
        state[static_cast<size_t>(mirror)] = 1;
        if (!gap_is_reachable(x) && !sum_hits_gap(mirror)) search(x + 1);
        state[static_cast<size_t>(x)] = -1;
        state[static_cast<size_t>(mirror)] = -1;
    }
};

AtlasRow row_from_vanishing(int g, const VanishingSequence& v) {
    AtlasRow row{.genus = g,
                 .vanishing = v,
                 .ramification = ramification_from_vanishing(v),
                 .provenance = "derived"};
    row.parity = theta_h0(v) % 2 == 1 ? Parity::odd : Parity::even;
    row.weight = weight(row.ramification);
    return row;
}

}  // namespace

std::vector<VanishingSequence> enumerate_candidates(int g) {
    if (g < 2 || g > 25)
        throw PreconditionError(detail::cat("enumerate_candidates: genus ", g, " outside 2..25"));
    const int frob = 2 * g - 1;
    Dfs dfs{.g = g, .frob = frob, .state = std::vector<int>(static_cast<size_t>(frob) + 1, -1),
            .out = nullptr};
    std::vector<VanishingSequence> out;
    dfs.out = &out;
    dfs.state[0] = 1;
    dfs.state[1] = 0;
    dfs.state[static_cast<size_t>(frob)] = 0;
    dfs.state[static_cast<size_t>(frob - 1)] = 1;  // mirror of the gap at 1
    dfs.search(2);
    std::sort(out.begin(), out.end(), [](const VanishingSequence& a, const VanishingSequence& b) {
        return a.values() < b.values();
    });
    return out;
}

ReferenceTable ReferenceTable::parse(std::istream& in) {
    ReferenceTable table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const auto fields = split(stripped, '|');
        if (fields.size() != 8)
            throw ValidationError(detail::cat("reference table line ", lineno,
                                              ": expected 8 fields, got ", fields.size()));
        const int genus = std::stoi(fields[0]);
        VanishingSequence v(genus, parse_ints(fields[1]));
        RamificationSequence r(genus, parse_ints(fields[2]));
        if (!is_subcanonical(v))
            throw ValidationError(detail::cat("reference table line ", lineno,
                                              ": vanishing sequence is not subcanonical"));
        AtlasRow row{.genus = genus,
                     .vanishing = std::move(v),
                     .ramification = std::move(r),
                     .parity = parity_from_string(fields[3]),
                     .weight = std::stoi(fields[4]),
                     .in_table = true,
                     .realization_note = fields[6],
                     .provenance = fields[7]};
        if (fields[5] != "-") row.codim_claim = std::stoi(fields[5]);
        table.rows_.push_back(std::move(row));
    }
    return table;
}

ReferenceTable ReferenceTable::parse_text(const std::string& text) {
    std::istringstream ss(text);
    return parse(ss);
}

ReferenceTable ReferenceTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError(detail::cat("cannot open table file '", path, "'"));
    return parse(in);
}

const ReferenceTable& ReferenceTable::builtin() {
    static const ReferenceTable table = parse_text(detail::builtin_table_text());
    return table;
}

std::vector<AtlasRow> ReferenceTable::rows_for(int genus) const {
    std::vector<AtlasRow> out;
    for (const auto& row : rows_)
        if (row.genus == genus) out.push_back(row);
    std::sort(out.begin(), out.end(), [](const AtlasRow& a, const AtlasRow& b) {
        return a.vanishing.values() < b.vanishing.values();
    });
    return out;
}

int ReferenceTable::max_genus() const {
    int m = 0;
    for (const auto& row : rows_) m = std::max(m, row.genus);
    return m;
}

EnumerationReport verify_reference_table(int g, const ReferenceTable& table) {
    if (g < 2 || g > table.max_genus())
        throw PreconditionError(detail::cat("verify_reference_table: genus ", g,
                                            " outside 2..", table.max_genus()));

    const auto stored = table.rows_for(g);
    for (const auto& row : stored) {
        const auto recomputed_ram = ramification_from_vanishing(row.vanishing);
        const auto recomputed_parity = theta_h0(row.vanishing) % 2 == 1 ? Parity::odd : Parity::even;
        const int recomputed_weight = weight(recomputed_ram);
        if (recomputed_ram != row.ramification || recomputed_parity != row.parity ||
            recomputed_weight != row.weight)
            throw InternalError(detail::cat("reference table integrity failure at genus ", g,
                                            ": recomputed invariants disagree with stored row"));
    }

    EnumerationReport report{.genus = g};
    for (const auto& v : enumerate_candidates(g)) {
        auto match = std::find_if(stored.begin(), stored.end(), [&](const AtlasRow& row) {
            return row.vanishing == v;
        });
        if (match != stored.end()) {
            report.rows.push_back(*match);
        } else {
            auto row = row_from_vanishing(g, v);
            report.rows.push_back(row);
            report.extras.push_back(std::move(row));
        }
    }
    for (const auto& row : stored) {
        auto found = std::find_if(report.rows.begin(), report.rows.end(), [&](const AtlasRow& r) {
            return r.vanishing == row.vanishing;
        });
        if (found == report.rows.end()) report.missing.push_back(row);
    }
    return report;
}

StratificationReport stratification_report(int g, const ReferenceTable& table) {
    if (g < 2 || g > 25)
        throw PreconditionError(detail::cat("stratification_report: genus ", g, " outside 2..25"));

    const auto stored = g <= table.max_genus() ? table.rows_for(g) : std::vector<AtlasRow>{};
    StratificationReport report{.genus = g, .dim_moduli_pointed = 3 * g - 2};
    for (const auto& v : enumerate_candidates(g)) {
        StratumInfo info{.vanishing = v, .ramification = ramification_from_vanishing(v)};
        info.weight = weight(info.ramification);
        info.codim_bound = info.weight;
        info.component = classify_component(v);
        auto match = std::find_if(stored.begin(), stored.end(), [&](const AtlasRow& row) {
            return row.vanishing == v;
        });
        if (match != stored.end()) info.table_codim = match->codim_claim;
        if (info.component != Component::unclassified) {
            info.component_dim = 2 * g - 1;
            info.component_codim = g - 1;
        }
        report.strata.push_back(std::move(info));
    }
    return report;
}

}  // namespace subc
