#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>

#include "subcanonical/atlas.hpp"
#include "subcanonical/detail/text.hpp"
#include "subcanonical/covers.hpp"
#include "subcanonical/errors.hpp"
#include "subcanonical/limit_series.hpp"
#include "subcanonical/semigroups.hpp"
#include "subcanonical/sequences.hpp"

namespace subc::cli {

namespace {

using nlohmann::json;

enum class Format { json, csv, md };

std::vector<int> parse_int_list(const std::string& s) {
    if (s == "none") return {};
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoi(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ValidationError(detail::cat("'", s, "' is not an integer list"));
        }
    }
    if (out.empty()) throw ValidationError(detail::cat("'", s, "' is not an integer list"));
    return out;
}

std::string scalar_to_string(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto& item : v) {
            if (!s.empty()) s += ' ';
            s += scalar_to_string(item);
        }
        return s;
    }
    return v.dump();
}

void emit_rows(const std::vector<json>& rows, Format format, std::ostream& out) {
    if (format == Format::json) {
        out << json(rows).dump(2) << "\n";
        return;
    }
    if (rows.empty()) return;
    std::vector<std::string> keys;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it)
        keys.push_back(it.key());
    if (format == Format::csv) {
        for (size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
        out << "\n";
        for (const auto& row : rows) {
            for (size_t i = 0; i < keys.size(); ++i)
                out << (i ? "," : "") << scalar_to_string(row.value(keys[i], json()));
            out << "\n";
        }
    } else {
        out << "|";
        for (const auto& k : keys) out << " " << k << " |";
        out << "\n|";
        for (size_t i = 0; i < keys.size(); ++i) out << " --- |";
        out << "\n";
        for (const auto& row : rows) {
            out << "|";
            for (const auto& k : keys) out << " " << scalar_to_string(row.value(k, json())) << " |";
            out << "\n";
        }
    }
}

void emit_doc(const json& doc, Format format, std::ostream& out) {
    if (format == Format::json) {
        out << doc.dump(2) << "\n";
        return;
    }
    if (format == Format::csv) {
        std::string header, values;
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            if (!header.empty()) {
                header += ',';
                values += ',';
            }
            header += it.key();
            values += scalar_to_string(it.value());
        }
        out << header << "\n" << values << "\n";
    } else {
        out << "| field | value |\n| --- | --- |\n";
        for (auto it = doc.begin(); it != doc.end(); ++it)
            out << "| " << it.key() << " | " << scalar_to_string(it.value()) << " |\n";
    }
}

json profile_doc(const PointProfile& p) {
    json doc;
    doc["genus"] = p.genus;
    doc["vanishing"] = p.vanishing.values();
    doc["ramification"] = p.ramification.values();
    doc["gaps"] = p.gaps.gaps();
    doc["weight"] = p.weight;
    doc["theta_h0"] = p.theta_h0 ? json(*p.theta_h0) : json();
    doc["parity"] = p.parity ? json(to_string(*p.parity)) : json();
    doc["subcanonical"] = p.subcanonical;
    doc["component"] = to_string(p.component);
    return doc;
}

json table_row_doc(const AtlasRow& row) {
    json doc;
    doc["genus"] = row.genus;
    doc["vanishing"] = row.vanishing.values();
    doc["ramification"] = row.ramification.values();
    doc["parity"] = to_string(row.parity);
    doc["weight"] = row.weight;
    doc["codim"] = row.codim_claim ? json(*row.codim_claim) : json();
    doc["in_table"] = row.in_table;
    doc["realization"] = row.realization_note;
    doc["provenance"] = row.provenance;
    return doc;
}

struct Options {
    std::string format = "json";
    std::string table_file;

    Format parsed_format() const {
        if (format == "json") return Format::json;
        if (format == "csv") return Format::csv;
        if (format == "md") return Format::md;
        throw ValidationError(detail::cat("unknown format '", format, "'"));
    }

    ReferenceTable table() const {
        if (table_file.empty()) return ReferenceTable::builtin();
        return ReferenceTable::load_file(table_file);
    }
};

void run_table(const Options& opts, int genus, std::ostream& out) {
    const auto table = opts.table();
    const auto rows = table.rows_for(genus);
    if (rows.empty())
        throw ValidationError(detail::cat("no stored table rows for genus ", genus));
    std::vector<json> docs;
    for (const auto& row : rows) docs.push_back(table_row_doc(row));
    emit_rows(docs, opts.parsed_format(), out);
}

void run_enumerate(const Options& opts, int genus, bool compare, std::ostream& out,
                   std::ostream& err) {
    const Format format = opts.parsed_format();
    if (!compare) {
        std::vector<json> docs;
        for (const auto& v : enumerate_candidates(genus)) {
            auto doc = profile_doc(build_profile(v));
            doc.erase("gaps");
            doc.erase("subcanonical");
            doc.erase("theta_h0");
            docs.push_back(std::move(doc));
        }
        emit_rows(docs, format, out);
        return;
    }
    const auto report = verify_reference_table(genus, opts.table());
    if (format == Format::json) {
        json doc;
        doc["genus"] = report.genus;
        doc["rows"] = json::array();
        for (const auto& row : report.rows) doc["rows"].push_back(table_row_doc(row));
        doc["extras"] = json::array();
        for (const auto& row : report.extras) doc["extras"].push_back(table_row_doc(row));
        doc["missing"] = json::array();
        for (const auto& row : report.missing) doc["missing"].push_back(table_row_doc(row));
        out << doc.dump(2) << "\n";
    } else {
        std::vector<json> docs;
        for (const auto& row : report.rows) docs.push_back(table_row_doc(row));
        emit_rows(docs, format, out);
        if (!report.missing.empty())
            err << report.missing.size() << " stored row(s) not found by enumeration\n";
    }
}

void run_check(const Options& opts, const std::string& gaps, const std::string& vanishing,
               const std::string& ramification, std::ostream& out) {
    const int given = (!gaps.empty()) + (!vanishing.empty()) + (!ramification.empty());
    if (given != 1)
        throw ValidationError("check: give exactly one of --gaps, --vanishing, --ramification");

    VanishingSequence v(0, {});
    if (!gaps.empty()) {
        auto values = parse_int_list(gaps);
        const int g = static_cast<int>(values.size());
        v = vanishing_from_gaps(GapSet(g, std::move(values)));
    } else if (!vanishing.empty()) {
        auto values = parse_int_list(vanishing);
        const int g = static_cast<int>(values.size());
        v = VanishingSequence(g, std::move(values));
    } else {
        auto values = parse_int_list(ramification);
        const int g = static_cast<int>(values.size());
        v = vanishing_from_ramification(RamificationSequence(g, std::move(values)));
    }

    auto doc = profile_doc(build_profile(v));
    const auto verdict = check_ramification_admissible(ramification_from_vanishing(v));
    doc["admissible"] = verdict.admissible;
    if (verdict.violation) {
        doc["violation"] = {{"x", verdict.violation->x},
                            {"y", verdict.violation->y},
                            {"sum", verdict.violation->sum}};
    } else {
        doc["violation"] = json();
    }
    emit_doc(doc, opts.parsed_format(), out);
}

VanishingSequence parse_base(const std::string& base_vanishing, int base_genus) {
    std::vector<int> values =
        base_vanishing == "none" ? std::vector<int>{} : parse_int_list(base_vanishing);
    if (static_cast<int>(values.size()) != base_genus)
        throw ValidationError(detail::cat("base vanishing sequence has ", values.size(),
                                          " entries, expected base genus ", base_genus));
    return VanishingSequence(base_genus, std::move(values));
}

void emit_cover(const Options& opts, const CoverResult& result, json extra, std::ostream& out) {
    auto doc = profile_doc(result.profile);
    for (auto it = extra.begin(); it != extra.end(); ++it) doc[it.key()] = it.value();
    emit_doc(doc, opts.parsed_format(), out);
}

void run_limit(const Options& opts, int genus, const std::string& alpha_q_str,
               const std::string& torsion, std::ostream& out) {
    auto alpha_values = parse_int_list(alpha_q_str);
    const int alpha_genus = static_cast<int>(alpha_values.size());
    RamificationSequence alpha_q(alpha_genus, std::move(alpha_values));
    int order = 0;
    if (torsion == "full")
        order = 2 * genus - 2;
    else if (torsion == "half")
        order = genus - 1;
    else
        throw ValidationError(detail::cat("torsion must be 'full' or 'half', got '", torsion, "'"));

    LimitSeriesProblem problem(genus, alpha_q, order);
    const auto beta = beta_at_node(problem);
    const auto gamma = gamma_at_marked_point(problem);
    const auto verdict = check_crude_limit(genus, gamma.gamma, TorsionClass{order}, alpha_q);
    const auto dims = expected_dimensions(genus);

    json doc;
    doc["genus"] = genus;
    doc["alpha_q"] = alpha_q.values();
    doc["torsion_order"] = order;
    doc["c_aspect"] = c_aspect_ramification(alpha_q);
    doc["beta"] = beta;
    doc["gamma"] = gamma.gamma;
    doc["exceptional_index"] =
        gamma.exceptional_index ? json(*gamma.exceptional_index) : json();
    doc["eh_star"] = eh_star(beta, gamma.gamma, genus);
    doc["crude_limit_pass"] = verdict.pass;
    doc["crude_limit_violations"] = verdict.violations;
    doc["rho"] = rho_adjusted(genus, genus - 1, 2 * genus - 2, gamma.gamma);
    doc["dim_G_lower"] = dims.dim_G_lower;
    doc["dim_D"] = dims.dim_D;
    doc["dim_B"] = dims.dim_B;
    emit_doc(doc, opts.parsed_format(), out);
}

void run_rho(const Options& opts, int genus, int r, int degree, const std::string& alpha_str,
             std::ostream& out) {
    std::vector<int> alpha =
        alpha_str.empty() ? std::vector<int>(static_cast<size_t>(r) + 1, 0)
                          : parse_int_list(alpha_str);
    json doc;
    doc["genus"] = genus;
    doc["r"] = r;
    doc["degree"] = degree;
    doc["alpha"] = alpha;
    doc["rho"] = rho_adjusted(genus, r, degree, alpha);
    if (genus >= 3) {
        const auto dims = expected_dimensions(genus);
        doc["dim_G_lower"] = dims.dim_G_lower;
        doc["dim_D"] = dims.dim_D;
        doc["dim_B"] = dims.dim_B;
    }
    emit_doc(doc, opts.parsed_format(), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discrete invariants of subcanonical curve points"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    app.add_option("--format", opts.format, "Output format: json, csv or md")
        ->default_val("json");
    app.add_option("--table-file", opts.table_file,
                   "Path to an alternate stored classification table");

    int genus = 0;

    auto* table_cmd = app.add_subcommand("table", "Print stored classification rows for a genus");
    table_cmd->add_option("--genus", genus, "Curve genus")->required();

    bool compare = false;
    auto* enum_cmd =
        app.add_subcommand("enumerate", "Enumerate admissible subcanonical gap sequences");
    enum_cmd->add_option("--genus", genus, "Curve genus")->required();
    enum_cmd->add_flag("--compare-paper", compare,
                       "Join the enumeration against the stored table");

    std::string gaps_arg, vanishing_arg, ramification_arg;
    auto* check_cmd = app.add_subcommand("check", "Profile a point and check the semigroup condition");
    check_cmd->add_option("--gaps", gaps_arg, "Comma-separated gap set");
    check_cmd->add_option("--vanishing", vanishing_arg, "Comma-separated vanishing sequence");
    check_cmd->add_option("--ramification", ramification_arg,
                          "Comma-separated ramification sequence");

    auto* cover_cmd = app.add_subcommand("cover", "Vanishing sequences from cyclic covers");
    cover_cmd->require_subcommand(1);
    int base_genus = 0, sheets = 0, ell = 0;
    std::string base_vanishing = "none", cover_name;

    auto* double_cmd = cover_cmd->add_subcommand("double", "Branch point of a double cover");
    double_cmd->add_option("--genus", genus, "Total genus")->required();
    double_cmd->add_option("--base-genus", base_genus, "Base curve genus")->required();
    double_cmd->add_option("--base-vanishing", base_vanishing,
                           "Base vanishing sequence, or 'none'");

    auto* cyclic_cmd = cover_cmd->add_subcommand("cyclic", "Totally ramified point of a d-cyclic cover");
    cyclic_cmd->add_option("--sheets", sheets, "Number of sheets d")->required();
    cyclic_cmd->add_option("--ell", ell, "Degree of the defining line bundle")->required();
    cyclic_cmd->add_option("--base-genus", base_genus, "Base curve genus")->required();
    cyclic_cmd->add_option("--base-vanishing", base_vanishing,
                           "Base vanishing sequence, or 'none'");

    auto* named_cmd = cover_cmd->add_subcommand("named", "A named cover construction");
    named_cmd->add_option("--name", cover_name, "Construction name")->required();
    named_cmd->add_option("--genus", genus, "Total genus")->required();

    std::string alpha_q_arg, torsion_arg = "full";
    auto* limit_cmd = app.add_subcommand("limit", "Two-component limit series calculus");
    limit_cmd->add_option("--genus", genus, "Total genus")->required();
    limit_cmd->add_option("--alpha-q", alpha_q_arg, "Ramification at the node on C")->required();
    limit_cmd->add_option("--torsion", torsion_arg, "Torsion of p-q: 'full' (2g-2) or 'half' (g-1)");

    int r_arg = 0, degree_arg = 0;
    std::string alpha_arg;
    auto* rho_cmd = app.add_subcommand("rho", "Adjusted Brill-Noether number");
    rho_cmd->add_option("--genus", genus, "Curve genus")->required();
    rho_cmd->add_option("--r", r_arg, "Series dimension")->required();
    rho_cmd->add_option("--degree", degree_arg, "Series degree")->required();
    rho_cmd->add_option("--alpha", alpha_arg, "Imposed ramification sequence (default all zero)");

    std::vector<const char*> argv;
    argv.push_back("subc");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (table_cmd->parsed()) {
            run_table(opts, genus, out);
        } else if (enum_cmd->parsed()) {
            run_enumerate(opts, genus, compare, out, err);
        } else if (check_cmd->parsed()) {
            run_check(opts, gaps_arg, vanishing_arg, ramification_arg, out);
        } else if (cover_cmd->parsed()) {
            if (double_cmd->parsed()) {
                auto result = double_cover_vanishing(genus, parse_base(base_vanishing, base_genus));
                emit_cover(opts, result,
                           {{"construction", "double"}, {"base_genus", base_genus}}, out);
            } else if (cyclic_cmd->parsed()) {
                CoverSpec spec(sheets, base_genus, ell, parse_base(base_vanishing, base_genus));
                auto result = cyclic_cover_vanishing(spec);
                emit_cover(opts, result,
                           {{"construction", "cyclic"},
                            {"sheets", sheets},
                            {"ell", ell},
                            {"base_genus", base_genus}},
                           out);
            } else {
                auto name = named_construction_from_string(cover_name);
                auto result = named_construction(name, genus);
                emit_cover(opts, result, {{"construction", cover_name}}, out);
            }
        } else if (limit_cmd->parsed()) {
            run_limit(opts, genus, alpha_q_arg, torsion_arg, out);
        } else if (rho_cmd->parsed()) {
            run_rho(opts, genus, r_arg, degree_arg, alpha_arg, out);
        }
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace subc::cli
