#pragma once

/**
 * @file cli.hpp
 * @brief The `wonder` command line: dispatch, reports, exit codes.
 *
 * Exit codes: 0 success, 1 usage error, 2 invalid datum (schema, shape or
 * validation failure), 3 inconsistency detected by an engine.
 */

#include <openssl/evp.h>

#include "CLI11.hpp"

#include <iomanip>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "wonder/catalog.hpp"
#include "wonder/clgroup.hpp"
#include "wonder/coxcomb.hpp"
#include "wonder/datum.hpp"
#include "wonder/divclass.hpp"

namespace wonder::cli {

using json_io::json;

enum ExitCode : int { kOk = 0, kUsage = 1, kInvalidDatum = 2, kInconsistent = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidDatum : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Report {
    std::string command;
    std::string input_digest;
    json payload = json::object();
    std::vector<std::string> warnings;
    std::string text;  // human-readable rendering
    int exit_code = kOk;
};

inline std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream os;
    for (unsigned int k = 0; k < len; ++k) os << std::hex << std::setw(2) << std::setfill('0') << int(md[k]);
    return os.str();
}

inline json to_json(const Report& r) {
    json j;
    j["command"] = r.command;
    j["input_digest"] = r.input_digest;
    j["payload"] = r.payload;
    j["warnings"] = r.warnings;
    return j;
}

namespace detail {

inline std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
    std::string s;
    for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? sep : "") + xs[k];
    return s;
}

inline std::string names_of(const std::vector<std::size_t>& idx, const std::vector<std::string>& names) {
    std::vector<std::string> s;
    for (auto i : idx) s.push_back(names.at(i));
    return "{" + join(s) + "}";
}

inline json name_list(const std::vector<std::size_t>& idx, const std::vector<std::string>& names) {
    json a = json::array();
    for (auto i : idx) a.push_back(names.at(i));
    return a;
}

inline std::vector<std::string> color_names(const SphericalDatum& d) {
    std::vector<std::string> s;
    for (const auto& c : d.colors) s.push_back(c.name);
    return s;
}

inline Int parse_int(const std::string& s) {
    static const std::regex re("[+-]?[0-9]+");
    if (!std::regex_match(s, re)) throw UsageError("not an integer: '" + s + "'");
    return Int(s[0] == '+' ? s.substr(1) : s);
}

inline DivisorClass parse_class(const SphericalDatum& d, const std::vector<std::string>& xs) {
    if (xs.size() != d.num_colors())
        throw UsageError("class vector needs " + std::to_string(d.num_colors()) + " integers (colors " +
                         join(color_names(d)) + "), got " + std::to_string(xs.size()));
    IntVec v;
    for (const auto& x : xs) v.push_back(parse_int(x));
    return DivisorClass(std::move(v));
}

/// Load and validate; any failure becomes InvalidDatum.
inline SphericalDatum load_valid(const std::string& path) {
    SphericalDatum d;
    try {
        d = load(path);
    } catch (const SchemaError& e) {
        throw InvalidDatum(std::string("schema error: ") + e.what());
    }
    const auto rep = validate(d);
    if (!rep.passed()) {
        std::string msg = "datum '" + d.name + "' fails validation:";
        for (const auto& c : rep.checks)
            if (!c.passed) msg += " [" + c.name + ": " + c.detail + "]";
        throw InvalidDatum(msg);
    }
    return d;
}

inline Report start(const std::string& command, const SphericalDatum& d) {
    Report r;
    r.command = command;
    r.input_digest = sha256_hex(serialize(d));
    return r;
}

inline Report start(const std::string& command, const json& args) {
    Report r;
    r.command = command;
    r.input_digest = sha256_hex(json_io::dump(args, -1));
    return r;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

inline Report cmd_validate(const std::string& path) {
    SphericalDatum d;
    try {
        d = load(path);
    } catch (const SchemaError& e) {
        throw InvalidDatum(std::string("schema error: ") + e.what());
    }
    Report r = detail::start("validate", d);
    const auto rep = validate(d);
    json checks = json::array();
    std::ostringstream t;
    t << "datum: " << d.name << "\n";
    for (const auto& c : rep.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        t << (c.passed ? "  ok    " : "  FAIL  ") << c.name << ": " << c.detail << "\n";
    }
    t << (rep.passed() ? "valid\n" : "invalid\n");
    r.payload = {{"name", d.name}, {"checks", checks}, {"passed", rep.passed()}};
    r.text = t.str();
    r.exit_code = rep.passed() ? kOk : kInvalidDatum;
    return r;
}

inline Report cmd_group(const std::string& type, const std::string& out_path) {
    SphericalDatum d;
    try {
        d = group_compactification(type);
    } catch (const DescriptorError& e) {
        throw UsageError(std::string("--type: ") + e.what());
    }
    Report r = detail::start("group", d);
    if (!out_path.empty()) save(d, out_path);
    r.payload = {{"type", d.ambient.spec()}, {"datum", to_json(d)}};
    if (!out_path.empty()) r.payload["out"] = out_path;
    std::ostringstream t;
    t << d.name << ": " << d.rank << " spherical roots, " << d.num_colors() << " colors";
    if (!out_path.empty()) t << ", written to " << out_path;
    t << "\n";
    if (out_path.empty()) t << serialize(d);
    r.text = t.str();
    return r;
}

inline Report cmd_report(const std::string& path) {
    const SphericalDatum d = detail::load_valid(path);
    Report r = detail::start("report", d);
    const auto cn = detail::color_names(d);
    std::ostringstream t;
    t << "datum: " << d.name << "\ncolors: " << detail::join(cn) << "\n\nboundary classes:\n";
    json bcs = json::array();
    for (std::size_t i = 0; i < d.rank; ++i) {
        const auto c = boundary_class(d, i);
        const bool fixed = is_fixed(d, i);
        bcs.push_back({{"name", d.boundary_names[i]}, {"class", json_io::from_vec(c.coeffs)}, {"fixed", fixed}});
        t << "  [" << d.boundary_names[i] << "] = " << to_string(c.coeffs) << (fixed ? "  fixed" : "  not fixed") << "\n";
    }
    t << "\nnef cone generators:\n";
    json nefs = json::array();
    const IntMat ng = nef_generators(d);
    for (std::size_t k = 0; k < ng.size(); ++k) {
        nefs.push_back({{"color", cn[k]}, {"class", json_io::from_vec(ng[k])}});
        t << "  [" << cn[k] << "] = " << to_string(ng[k]) << "\n";
    }
    t << "\nextremal rays of the effective cone:\n";
    json rays = json::array();
    bool schubert = false;
    for (const auto& ray : eff_extremal_rays(d)) {
        schubert = schubert || ray.kind == RayKind::SchubertPullback;
        rays.push_back({{"direction", json_io::from_vec(ray.direction)},
                        {"kind", to_string(ray.kind)},
                        {"boundary", detail::name_list(ray.boundary, d.boundary_names)},
                        {"colors", detail::name_list(ray.colors, cn)}});
        t << "  " << to_string(ray.direction) << "  " << to_string(ray.kind);
        if (!ray.boundary.empty()) t << " " << detail::names_of(ray.boundary, d.boundary_names);
        if (!ray.colors.empty()) t << " " << detail::names_of(ray.colors, cn);
        t << "\n";
    }
    if (schubert)
        r.warnings.push_back("SchubertPullback rays are classified from the cone alone; the morphism to G/P is not constructed");
    r.payload = {{"colors", cn}, {"boundary_classes", bcs}, {"nef_generators", nefs}, {"eff_extremal_rays", rays}};
    r.text = t.str();
    return r;
}

inline Report cmd_sections(const std::string& path, const std::vector<std::string>& cls) {
    const SphericalDatum d = detail::load_valid(path);
    const DivisorClass c = detail::parse_class(d, cls);
    Report r = detail::start("sections", d);
    const auto dec = decompose_sections(d, c);
    json sm = json::array();
    std::ostringstream t;
    t << "class " << to_string(c.coeffs) << " in colors (" << detail::join(detail::color_names(d)) << ")\n";
    if (dec.empty()) t << "no sections: empty decomposition\n";
    for (const auto& s : dec.summands) {
        Int dim = weyl_dim(d.ambient, s.highest_weight);
        if (d.module_dim_mode == ModuleDimMode::squared) dim *= dim;
        sm.push_back({{"highest_weight", json_io::from_vec(s.highest_weight.coords)},
                      {"multiplicity", json_io::from_int(s.multiplicity)},
                      {"dim", json_io::from_int(dim)}});
        t << "  " << (d.module_dim_mode == ModuleDimMode::squared ? "End V" : "V") << to_string(s.highest_weight.coords)
          << "  multiplicity " << s.multiplicity << "  dim " << dim << "\n";
    }
    t << "total dimension " << dec.total_dim << "\n";
    r.payload = {{"class", json_io::from_vec(c.coeffs)},
                 {"module_dim_mode", to_string(d.module_dim_mode)},
                 {"summands", sm},
                 {"total_dim", json_io::from_int(dec.total_dim)}};
    r.text = t.str();
    return r;
}

inline Report cmd_effective(const std::string& path, const std::vector<std::string>& cls) {
    const SphericalDatum d = detail::load_valid(path);
    const DivisorClass c = detail::parse_class(d, cls);
    Report r = detail::start("effective", d);
    const bool eff = is_effective(d, c);
    r.payload = {{"class", json_io::from_vec(c.coeffs)}, {"effective", eff}, {"nef", is_nef(c)}, {"ample", is_ample(c)}};
    r.text = to_string(c.coeffs) + (eff ? " effective" : " not effective") + (is_ample(c) ? ", ample" : is_nef(c) ? ", nef" : "") + "\n";
    return r;
}

inline Report cmd_orbits(const std::string& path) {
    const SphericalDatum d = detail::load_valid(path);
    Report r = detail::start("orbits", d);
    const auto cn = detail::color_names(d);
    const auto p = orbit_poset(d);
    json labels = json::array(), order = json::array();
    std::ostringstream t;
    t << p.labels.size() << " orbits\n";
    for (std::size_t k = 0; k < p.labels.size(); ++k) {
        const auto& l = p.labels[k];
        labels.push_back({{"colors", detail::name_list(l.colors, cn)},
                          {"boundary", detail::name_list(l.boundary, d.boundary_names)},
                          {"q_image", detail::name_list(p.q_image[k], d.boundary_names)}});
        t << "  #" << k << "  (" << detail::names_of(l.colors, cn) << ", " << detail::names_of(l.boundary, d.boundary_names)
          << ")  q-image " << detail::names_of(p.q_image[k], d.boundary_names) << "\n";
    }
    t << "closure order:\n";
    for (const auto& [a, b] : p.closure_order) {
        order.push_back({a, b});
        t << "  #" << a << " < #" << b << "\n";
    }
    r.payload = {{"count", p.labels.size()}, {"labels", labels}, {"closure_order", order}};
    r.text = t.str();
    return r;
}

inline json presentation_json(const ClassGroupResult& g) {
    return {{"free_rank", g.presentation.free_rank},
            {"invariant_factors", json_io::from_vec(g.presentation.invariant_factors)},
            {"generators", g.generator_names},
            {"generator_images", json_io::from_mat(g.presentation.generator_images)},
            {"relation_matrix", json_io::from_mat(g.relation_matrix)}};
}

inline std::string presentation_text(const AbelianPresentation& p) {
    std::vector<std::string> parts;
    if (p.free_rank > 0) parts.push_back(p.free_rank == 1 ? "Z" : "Z^" + std::to_string(p.free_rank));
    for (const auto& f : p.invariant_factors) parts.push_back("Z/" + f.str());
    return parts.empty() ? "0" : detail::join(parts, " + ");
}

inline Report cmd_classgroup(const std::string& path) {
    const SphericalDatum d = detail::load_valid(path);
    Report r = detail::start("classgroup", d);
    const bool general = d.class_datum.has_value();
    const ClassDatum cd = general ? *d.class_datum : export_class_datum(d);
    if (!general) r.warnings.push_back("no class_datum block; using the wonderful lattice spanned by the spherical roots");
    const auto eq = class_group_equivariant(cd);
    const auto pl = class_group_plain(cd);
    r.payload = {{"source", general ? "class_datum" : "wonderful"},
                 {"equivariant", presentation_json(eq)},
                 {"plain", presentation_json(pl)}};
    r.text = "Cl^G(X) = " + presentation_text(eq.presentation) + "\nCl(X)   = " + presentation_text(pl.presentation) + "\n";
    return r;
}

inline Report cmd_tensorA(std::size_t n, std::size_t i, std::size_t j) {
    Report r = detail::start("tensorA", json{{"n", n}, {"i", i}, {"j", j}});
    std::vector<Weight> ws;
    try {
        ws = tensor_fundamental_typeA(n, i, j);
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
    const RootSystem rs = build_root_system("A" + std::to_string(n - 1));
    json sm = json::array();
    Int total = 0;
    std::ostringstream t;
    t << "V(omega_" << i << ") x V(omega_" << j << ") for SL" << n << ":\n";
    for (const auto& w : ws) {
        const Int dim = weyl_dim(rs, w);
        total += dim;
        sm.push_back({{"highest_weight", json_io::from_vec(w.coords)}, {"dim", json_io::from_int(dim)}});
        t << "  V" << to_string(w.coords) << "  dim " << dim << "\n";
    }
    const Int lhs = weyl_dim(rs, Weight(fundamental_typeA(n, i))) * weyl_dim(rs, Weight(fundamental_typeA(n, j)));
    t << "dimension check: " << lhs << " = " << total << (lhs == total ? "" : "  MISMATCH") << "\n";
    if (lhs != total) r.exit_code = kInconsistent;
    r.payload = {{"n", n}, {"i", i}, {"j", j}, {"summands", sm}, {"product_dim", json_io::from_int(lhs)}, {"sum_dim", json_io::from_int(total)}};
    r.text = t.str();
    return r;
}

inline Report cmd_relationsA(std::size_t n, std::size_t i, std::size_t j) {
    Report r = detail::start("relationsA", json{{"n", n}, {"i", i}, {"j", j}});
    std::vector<RelationDatum> rel;
    try {
        rel = relation_data_typeA(n, i, j);
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
    json a = json::array();
    std::ostringstream t;
    t << "s_" << i << " s_" << j << " components for SL" << n << ":\n";
    for (const auto& x : rel) {
        a.push_back({{"lambda", json_io::from_vec(x.lambda.coords)}, {"exponents", json_io::from_vec(x.exponents)}});
        t << "  lambda " << to_string(x.lambda.coords) << "  exponents " << to_string(x.exponents) << "\n";
    }
    r.payload = {{"n", n}, {"i", i}, {"j", j}, {"relations", a}};
    r.text = t.str();
    return r;
}

inline Report cmd_autreport(const std::string& path) {
    const SphericalDatum d = detail::load_valid(path);
    if (!is_group_compactification(d)) throw InvalidDatum("autreport: datum is not a group compactification");
    Report r = detail::start("autreport", d);
    const auto a = aut_report(d);
    r.payload = {{"isolated_nodes", a.isolated_nodes},
                 {"residual_type", a.residual_type},
                 {"identity_component", a.identity_component},
                 {"component_generators", a.generators},
                 {"residual_diagram_automorphisms", a.residual_diagram_automorphisms}};
    std::ostringstream t;
    t << "identity component: " << a.identity_component << "\n";
    t << "isolated nodes: " << a.isolated_nodes << "\n";
    if (!a.residual_type.empty()) t << "residual type: " << a.residual_type << "\n";
    t << "component group generators:" << (a.generators.empty() ? " none" : "") << "\n";
    for (const auto& g : a.generators) t << "  " << g << "\n";
    r.text = t.str();
    return r;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Divisor classes, effective cones, Cox rings and class groups of wonderful varieties", "wonder"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the canonical JSON report");

    std::string path, type, out_path;
    std::vector<std::string> cls;
    std::size_t n = 0, i = 0, j = 0;

    auto with_path = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help)->fallthrough();
        s->add_option("datum", path, "datum JSON file")->required();
        return s;
    };
    auto* validate_cmd = with_path("validate", "check a datum");
    auto* group_cmd = app.add_subcommand("group", "build the datum of a group compactification")->fallthrough();
    group_cmd->add_option("--type", type, "type spec, e.g. B2 or A1xG2")->required();
    group_cmd->add_option("--out", out_path, "write the datum here");
    auto* report_cmd = with_path("report", "boundary classes, nef and effective cones");
    auto* sections_cmd = with_path("sections", "decompose the sections of a class");
    sections_cmd->add_option("class", cls, "coefficients in the color basis");
    auto* effective_cmd = with_path("effective", "is a class effective?");
    effective_cmd->add_option("class", cls, "coefficients in the color basis");
    auto* orbits_cmd = with_path("orbits", "orbits of the spectrum of the Cox ring");
    auto* classgroup_cmd = with_path("classgroup", "equivariant and plain class groups");
    auto* autreport_cmd = with_path("autreport", "automorphisms of a group compactification");
    auto add_nij = [&](CLI::App* s) {
        s->add_option("n", n, "SL_n")->required();
        s->add_option("i", i)->required();
        s->add_option("j", j)->required();
    };
    auto* tensor_cmd = app.add_subcommand("tensorA", "V(omega_i) x V(omega_j) for SL_n")->fallthrough();
    add_nij(tensor_cmd);
    auto* relations_cmd = app.add_subcommand("relationsA", "exponents of the relations of s_i s_j for SL_n")->fallthrough();
    add_nij(relations_cmd);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
        return kUsage;
    }

    try {
        Report r;
        if (*validate_cmd) r = cmd_validate(path);
        else if (*group_cmd) r = cmd_group(type, out_path);
        else if (*report_cmd) r = cmd_report(path);
        else if (*sections_cmd) r = cmd_sections(path, cls);
        else if (*effective_cmd) r = cmd_effective(path, cls);
        else if (*orbits_cmd) r = cmd_orbits(path);
        else if (*classgroup_cmd) r = cmd_classgroup(path);
        else if (*autreport_cmd) r = cmd_autreport(path);
        else if (*tensor_cmd) r = cmd_tensorA(n, i, j);
        else r = cmd_relationsA(n, i, j);
        if (as_json)
            out << json_io::dump(to_json(r)) << "\n";
        else {
            out << r.text;
            for (const auto& w : r.warnings) out << "warning: " << w << "\n";
        }
        return r.exit_code;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidDatum& e) {
        err << "invalid datum: " << e.what() << "\n";
        return kInvalidDatum;
    } catch (const RecessionError& e) {
        err << "invalid datum: " << e.what() << "\n";
        return kInvalidDatum;
    } catch (const InconsistencyError& e) {
        err << "inconsistency: " << e.what() << "\n";
        return kInconsistent;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInconsistent;
    }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
    return run(args, out, err);
}

} // namespace wonder::cli
