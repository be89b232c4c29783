#include "subcanonical/covers.hpp"

#include "subcanonical/detail/text.hpp"

#include <algorithm>
#include <numeric>

namespace subc {

namespace {

CoverResult finish(int g, std::vector<int> orders) {
    std::sort(orders.begin(), orders.end());
    if (static_cast<int>(orders.size()) != g || orders.front() != 0 ||
        orders.back() != 2 * g - 2)
        throw InternalError(detail::cat("cover construction produced ", orders.size(),
                                        " orders instead of a subcanonical sequence of length ",
                                        g));
    VanishingSequence v(g, std::move(orders));
    return CoverResult{.total_genus = g, .vanishing = v, .profile = build_profile(v)};
}

void require_subcanonical_base(const VanishingSequence& base) {
    if (base.genus() >= 2 && !is_subcanonical(base))
        throw PreconditionError(
            "cyclic cover: the image point must be subcanonical on the base curve");
}

}  // namespace

CoverSpec::CoverSpec(int sheets, int base_genus, int ell, VanishingSequence base_vanishing)
    : sheets_(sheets), base_genus_(base_genus), ell_(ell),
      base_vanishing_(std::move(base_vanishing)) {
    if (sheets_ < 2) throw ValidationError("cover spec: need at least 2 sheets");
    if (base_genus_ < 0) throw ValidationError("cover spec: base genus must be nonnegative");
    if (ell_ < 1) throw ValidationError("cover spec: ell must be positive");
    if (base_vanishing_.genus() != base_genus_)
        throw ValidationError(detail::cat("cover spec: base vanishing sequence has genus ",
                                          base_vanishing_.genus(), ", expected ", base_genus_));
    if (sheets_ * ell_ < 2 * base_genus_ + 1)
        throw PreconditionError(detail::cat("cover spec: ell = ", ell_,
                                            " is below the bound (2h+1)/d = ",
                                            2 * base_genus_ + 1, "/", sheets_));
    require_subcanonical_base(base_vanishing_);
    if (total_genus() < 2)
        throw PreconditionError(detail::cat("cover spec: total genus ", total_genus(),
                                            " is below 2"));
}

int CoverSpec::total_genus() const {
    return sheets_ * (sheets_ - 1) / 2 * ell_ + sheets_ * (base_genus_ - 1) + 1;
}

int rh_genus(int d, int h, int deg_D) {
    if (d < 2) throw ValidationError("rh_genus: need d >= 2");
    if (h < 0) throw ValidationError("rh_genus: need h >= 0");
    if (deg_D < 0) throw ValidationError("rh_genus: need deg D >= 0");
    if (deg_D % d != 0)
        throw ValidationError(detail::cat("rh_genus: deg D = ", deg_D,
                                          " is not divisible by d = ", d));
    const int rhs = d * (2 * h - 2) + (d - 1) * deg_D;  // = 2g-2
    if (rhs % 2 != 0)
        throw ValidationError("rh_genus: genus is not integral for these data");
    return (rhs + 2) / 2;
}

CoverResult double_cover_vanishing(int g, const VanishingSequence& base_vanishing) {
    const int h = base_vanishing.genus();
    if (g < 2) throw PreconditionError("double cover: need g >= 2");
    if (g < 3 * h)
        throw PreconditionError(detail::cat("double cover: need g >= 3h (", g, " < ", 3 * h, ")"));

    std::vector<int> orders;
    for (int m = 0; 2 * m + 1 <= 2 * g - 2; ++m)
        if (base_vanishing.contains(m)) orders.push_back(2 * m + 1);
    for (int m = 0; m <= g - 1; ++m)
        if (!base_vanishing.contains(g - 2 - m)) orders.push_back(2 * m);
    return finish(g, std::move(orders));
}

CoverResult cyclic_cover_vanishing(const CoverSpec& spec) {
    const int d = spec.sheets();
    const int ell = spec.ell();
    const int g = spec.total_genus();
    const auto& base = spec.base_vanishing();

    std::vector<int> orders;
    for (int i = 0; i < d; ++i) {
        const int shift = (d - 1 - i) * ell;
        for (int m = 0; d * m + i <= 2 * g - 2; ++m) {
            if (m <= shift - 2 || base.contains(m - shift)) orders.push_back(d * m + i);
        }
    }
    return finish(g, std::move(orders));
}

std::string to_string(NamedConstruction name) {
    switch (name) {
        case NamedConstruction::hyperelliptic: return "hyperelliptic";
        case NamedConstruction::bielliptic: return "bielliptic";
        case NamedConstruction::genus2_base_general: return "genus2_base_general";
        case NamedConstruction::genus2_base_weierstrass: return "genus2_base_weierstrass";
        case NamedConstruction::max_base_general: return "max_base_general";
    }
    throw InternalError("unknown named construction");
}

NamedConstruction named_construction_from_string(const std::string& s) {
    if (s == "hyperelliptic") return NamedConstruction::hyperelliptic;
    if (s == "bielliptic") return NamedConstruction::bielliptic;
    if (s == "genus2_base_general") return NamedConstruction::genus2_base_general;
    if (s == "genus2_base_weierstrass") return NamedConstruction::genus2_base_weierstrass;
    if (s == "max_base_general") return NamedConstruction::max_base_general;
    throw ValidationError(detail::cat("unknown construction name '", s, "'"));
}

CoverResult named_construction(NamedConstruction name, int g) {
    auto require = [&](int min_g) {
        if (g < min_g)
            throw PreconditionError(detail::cat("construction '", to_string(name),
                                                "' needs genus >= ", min_g, ", got ", g));
    };
    switch (name) {
        case NamedConstruction::hyperelliptic:
            require(2);
            return double_cover_vanishing(g, VanishingSequence(0, {}));
        case NamedConstruction::bielliptic:
            require(3);
            return double_cover_vanishing(g, VanishingSequence(1, {0}));
        case NamedConstruction::genus2_base_general:
            require(6);
            return double_cover_vanishing(g, VanishingSequence(2, {0, 1}));
        case NamedConstruction::genus2_base_weierstrass:
            require(6);
            return double_cover_vanishing(g, VanishingSequence(2, {0, 2}));
        case NamedConstruction::max_base_general: {
            require(6);
            const int h = g / 3;
            std::vector<int> generic(static_cast<size_t>(h));
            std::iota(generic.begin(), generic.end(), 0);
            return double_cover_vanishing(g, VanishingSequence(h, std::move(generic)));
        }
    }
    throw InternalError("unknown named construction");
}

}  // namespace subc
