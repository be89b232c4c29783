#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "subcanonical/sequences.hpp"

namespace subc {

/// One classified subcanonical gap sequence, possibly joined against the
/// stored reference table for small genus.
struct AtlasRow {
    int genus = 0;
    VanishingSequence vanishing;
    RamificationSequence ramification;
    Parity parity = Parity::odd;
    int weight = 0;
    std::optional<int> codim_claim;  // stored datum, never recomputed
    bool in_table = false;
    std::string realization_note;
    std::string provenance;
};

/// The stored classification table for small genus, one row per line:
/// genus | vanishing | ramification | parity | weight | codim | note | provenance
class ReferenceTable {
public:
    static ReferenceTable parse(std::istream& in);
    static ReferenceTable parse_text(const std::string& text);
    static ReferenceTable load_file(const std::string& path);
    static const ReferenceTable& builtin();

    const std::vector<AtlasRow>& rows() const { return rows_; }
    std::vector<AtlasRow> rows_for(int genus) const;
    int max_genus() const;

private:
    std::vector<AtlasRow> rows_;
};

/// Exactly the gap sets of symmetric numerical semigroups of genus g, as
/// vanishing sequences in lexicographic order.  Depth-first search over
/// membership decisions with incremental closure pruning; 2 <= g <= 25.
std::vector<VanishingSequence> enumerate_candidates(int g);

struct EnumerationReport {
    int genus = 0;
    std::vector<AtlasRow> rows;     // enumerated, joined against the table
    std::vector<AtlasRow> extras;   // admissible but absent from the table
    std::vector<AtlasRow> missing;  // table rows the enumeration did not find
};

/// Joins enumeration output against the stored table, recomputing parity and
/// weight.  A recomputed value disagreeing with a stored one is a data
/// integrity failure and throws InternalError.
EnumerationReport verify_reference_table(int g, const ReferenceTable& table = ReferenceTable::builtin());

struct StratumInfo {
    VanishingSequence vanishing;
    RamificationSequence ramification;
    int weight = 0;
    int codim_bound = 0;  // = weight
    Component component = Component::unclassified;
    std::optional<int> table_codim;
    std::optional<int> component_dim;    // 2g-1 for classified components
    std::optional<int> component_codim;  // g-1 within the moduli of pointed curves
};

struct StratificationReport {
    int genus = 0;
    int dim_moduli_pointed = 0;  // 3g-2
    std::vector<StratumInfo> strata;
};

StratificationReport stratification_report(int g, const ReferenceTable& table = ReferenceTable::builtin());

namespace detail {
const char* builtin_table_text();
}

}  // namespace subc
