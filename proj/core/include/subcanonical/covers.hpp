#pragma once

#include <string>

#include "subcanonical/sequences.hpp"

namespace subc {

/// A d-sheeted cyclic cover of a genus-h base, totally ramified over a marked
/// point whose vanishing sequence on the base is given.  ell is the degree of
/// the defining line bundle; the covering curve has genus
/// g = d(d-1)/2 * ell + d(h-1) + 1.
class CoverSpec {
public:
    CoverSpec(int sheets, int base_genus, int ell, VanishingSequence base_vanishing);

    int sheets() const { return sheets_; }
    int base_genus() const { return base_genus_; }
    int ell() const { return ell_; }
    const VanishingSequence& base_vanishing() const { return base_vanishing_; }
    int total_genus() const;

private:
    int sheets_;
    int base_genus_;
    int ell_;
    VanishingSequence base_vanishing_;
};

struct CoverResult {
    int total_genus;
    VanishingSequence vanishing;
    PointProfile profile;
};

/// Solves 2g-2 = d(2h-2) + (d-1) deg D for g.
int rh_genus(int d, int h, int deg_D);

/// Vanishing sequence at the branch point of a double cover of a genus-h
/// base with the given vanishing sequence at the image point.  Requires
/// g >= 3h: 2m+1 appears iff m appears downstairs; 2m appears iff g-2-m is
/// not a vanishing order downstairs and 0 <= m <= g-1.
CoverResult double_cover_vanishing(int g, const VanishingSequence& base_vanishing);

/// Vanishing sequence at the totally ramified point of a d-cyclic cover:
/// dm+i appears iff 0 <= m <= (d-1-i) ell - 2, or m - (d-1-i) ell is a
/// vanishing order at the image point.  The image point must itself be
/// subcanonical on the base when h >= 2.
CoverResult cyclic_cover_vanishing(const CoverSpec& spec);

enum class NamedConstruction {
    hyperelliptic,            // g >= 2, rational base
    bielliptic,               // g >= 3, elliptic base
    genus2_base_general,      // g >= 6, genus-2 base, general image point
    genus2_base_weierstrass,  // g >= 6, genus-2 base, Weierstrass image point
    max_base_general,         // g >= 6, base of genus floor(g/3), general point
};

std::string to_string(NamedConstruction name);
NamedConstruction named_construction_from_string(const std::string& s);

/// Dispatches to double_cover_vanishing with the construction's base data.
CoverResult named_construction(NamedConstruction name, int g);

}  // namespace subc
