#pragma once

/**
 * @file datum.hpp
 * @brief The spherical datum of a wonderful variety: spherical roots, colors
 *        with their weights and pairings, plus an optional class datum for
 *        general spherical varieties.
 *
 * Sign convention: rho(v_D)(gamma_i) = <D, gamma_i> and v_i(gamma_j) = -delta_ij.
 * With it, [X_i] = sum_D <D, gamma_i> [D] and the pull-back exponents of the
 * identity map are the identity matrix.
 */

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wonder/arith.hpp"
#include "wonder/errors.hpp"
#include "wonder/intlin.hpp"
#include "wonder/json_io.hpp"
#include "wonder/rootsys.hpp"

namespace wonder {

struct Color {
    std::string name;
    Weight omega;
    IntVec pairing;  // (<D, gamma_1>, ..., <D, gamma_r>)

    friend bool operator==(const Color&, const Color&) = default;
};

/// How section modules are measured: V(lambda) ("simple") or End(V(lambda))
/// ("squared", used for group compactifications).
enum class ModuleDimMode { simple, squared };

inline std::string to_string(ModuleDimMode m) { return m == ModuleDimMode::simple ? "simple" : "squared"; }

/// Lattice data of a general spherical variety, evaluated on a basis
/// lambda_1..lambda_d of its weight lattice.
struct ClassDatum {
    std::size_t lattice_rank = 0;
    IntMat boundary_valuations;  // n rows of length d: v_i(lambda_k)
    IntMat color_valuations;     // |D| rows of length d: rho(v_D)(lambda_k)
    IntMat central_restriction;  // d rows of length c: lambda_k restricted to C
    std::size_t central_rank = 0;

    std::size_t num_boundary() const noexcept { return boundary_valuations.size(); }
    std::size_t num_colors() const noexcept { return color_valuations.size(); }

    friend bool operator==(const ClassDatum&, const ClassDatum&) = default;
};

inline void check_shape(const ClassDatum& cd) {
    const std::size_t d = cd.lattice_rank;
    for (const auto& v : cd.boundary_valuations)
        if (v.size() != d) throw DimensionError("class datum: boundary valuation of length != lattice_rank");
    for (const auto& v : cd.color_valuations)
        if (v.size() != d) throw DimensionError("class datum: color valuation of length != lattice_rank");
    if (cd.central_restriction.size() != d && !(cd.central_restriction.empty() && cd.central_rank == 0))
        throw DimensionError("class datum: central_restriction needs one row per lattice basis vector");
    for (const auto& v : cd.central_restriction)
        if (v.size() != cd.central_rank) throw DimensionError("class datum: ragged central_restriction");
}

struct SphericalDatum {
    std::string name;
    RootSystem ambient;
    std::size_t rank = 0;
    std::vector<Weight> spherical_roots;
    std::vector<Color> colors;
    ModuleDimMode module_dim_mode = ModuleDimMode::simple;
    std::vector<std::string> boundary_names;
    std::optional<ClassDatum> class_datum;

    std::size_t num_colors() const noexcept { return colors.size(); }
    const Int& pairing(std::size_t color, std::size_t i) const { return colors.at(color).pairing.at(i); }

    friend bool operator==(const SphericalDatum&, const SphericalDatum&) = default;
};

/// Throws DimensionError when field lengths disagree with each other.
inline void check_shape(const SphericalDatum& d) {
    const std::size_t n = d.ambient.rank(), r = d.rank;
    if (d.spherical_roots.size() != r) throw DimensionError("datum: expected " + std::to_string(r) + " spherical roots");
    for (std::size_t i = 0; i < r; ++i)
        if (d.spherical_roots[i].size() != n)
            throw DimensionError("datum: spherical root " + std::to_string(i + 1) + " has wrong length");
    if (d.boundary_names.size() != r) throw DimensionError("datum: expected " + std::to_string(r) + " boundary names");
    std::set<std::string> names;
    for (const auto& c : d.colors) {
        if (c.omega.size() != n) throw DimensionError("datum: color " + c.name + " has omega of wrong length");
        if (c.pairing.size() != r) throw DimensionError("datum: color " + c.name + " has pairing of wrong length");
        if (!names.insert(c.name).second) throw DimensionError("datum: duplicate color name " + c.name);
    }
    if (d.class_datum) check_shape(*d.class_datum);
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    }
    const ValidationCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

inline ValidationReport validate(const SphericalDatum& d) {
    ValidationReport rep;
    try {
        check_shape(d);
        rep.checks.push_back({"shape", true, "field lengths consistent"});
    } catch (const DimensionError& e) {
        rep.checks.push_back({"shape", false, e.what()});
        return rep;
    }
    const std::size_t r = d.rank, n = d.ambient.rank();

    {
        std::string bad;
        for (std::size_t i = 0; i < r; ++i) {
            IntVec sum = zeros(n);
            for (const auto& c : d.colors)
                for (std::size_t k = 0; k < n; ++k) sum[k] += c.pairing[i] * c.omega[k];
            if (sum != d.spherical_roots[i].coords) {
                if (!bad.empty()) bad += "; ";
                bad += d.boundary_names[i] + ": sum " + to_string(sum) + " != gamma " +
                       to_string(d.spherical_roots[i].coords);
            }
        }
        rep.checks.push_back({"weights_identity", bad.empty(),
                              bad.empty() ? "sum_D <D,gamma_i> omega_D = gamma_i for all i" : bad});
    }
    {
        IntMat g;
        for (const auto& w : d.spherical_roots) g.push_back(w.coords);
        const std::size_t rk = g.empty() ? 0 : rank(g);
        rep.checks.push_back({"independence", rk == r,
                              "rank of spherical roots " + std::to_string(rk) + " of " + std::to_string(r)});
    }
    {
        std::string bad;
        for (const auto& c : d.colors)
            if (!is_dominant(d.ambient, c.omega)) bad += (bad.empty() ? "" : ", ") + c.name;
        rep.checks.push_back({"dominance", bad.empty(), bad.empty() ? "all omega_D dominant" : "not dominant: " + bad});
    }
    {
        // -v_i lies in Cone(rho(v_D)); in gamma-evaluation coordinates -v_i = e_i.
        std::string bad;
        if (r > 0) {
            IntMat rows;
            for (const auto& c : d.colors)
                if (!is_zero(c.pairing)) rows.push_back(c.pairing);
            const ConeZ cone(r, rows);
            for (std::size_t i = 0; i < r; ++i)
                if (!cone_contains(cone, unit(r, i))) bad += (bad.empty() ? "" : ", ") + d.boundary_names[i];
        }
        rep.checks.push_back({"valuation_cone", bad.empty(),
                              bad.empty() ? "-V contained in Cone(rho(v_D))" : "-v_i outside Cone(rho(v_D)) for " + bad});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

/// Wonderful compactification of the adjoint group of the given type, stored
/// in one copy of the weight lattice.
inline SphericalDatum group_compactification(const RootSystem& rs) {
    SphericalDatum d;
    d.name = "compactification of Ad(" + rs.spec() + ")";
    d.ambient = rs;
    d.rank = rs.rank();
    const IntMat& a = rs.cartan();
    for (std::size_t i = 0; i < d.rank; ++i) {
        d.spherical_roots.push_back(simple_root_weight_coords(rs, i));
        d.boundary_names.push_back("X" + std::to_string(i + 1));
    }
    for (std::size_t j = 0; j < d.rank; ++j) {
        Color c;
        c.name = "D" + std::to_string(j + 1);
        c.omega = Weight(unit(d.rank, j));
        for (std::size_t i = 0; i < d.rank; ++i) c.pairing.push_back(a[i][j]);  // <alpha_i, alpha_j^vee>
        d.colors.push_back(std::move(c));
    }
    d.module_dim_mode = ModuleDimMode::squared;
    return d;
}

inline SphericalDatum group_compactification(std::string_view spec) {
    return group_compactification(build_root_system(spec));
}

/// True iff `d` is (up to names) the output of group_compactification.
inline bool is_group_compactification(const SphericalDatum& d) {
    SphericalDatum ref = group_compactification(d.ambient);
    if (d.rank != ref.rank || d.num_colors() != ref.num_colors() || d.module_dim_mode != ref.module_dim_mode) return false;
    if (d.spherical_roots != ref.spherical_roots) return false;
    for (std::size_t j = 0; j < d.num_colors(); ++j)
        if (d.colors[j].omega != ref.colors[j].omega || d.colors[j].pairing != ref.colors[j].pairing) return false;
    return true;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace detail {

using json_io::json;

inline void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed) ok = ok || it.key() == k;
        if (!ok) throw SchemaError(path.empty() ? it.key() : path + "." + it.key(), "unknown key");
    }
}

inline const json& require(const json& obj, const char* key, const std::string& path) {
    if (!obj.contains(key)) throw SchemaError(path.empty() ? key : path + "." + key, "missing required field");
    return obj.at(key);
}

inline std::string require_string(const json& obj, const char* key, const std::string& path) {
    const json& v = require(obj, key, path);
    if (!v.is_string()) throw SchemaError(path.empty() ? key : path + "." + key, "expected a string");
    return v.get<std::string>();
}

inline std::size_t to_size(const json& j, const std::string& path) {
    Int v = json_io::to_int(j, path);
    if (v < 0 || v > 1'000'000) throw SchemaError(path, "expected a small non-negative integer");
    return static_cast<std::size_t>(v);
}

} // namespace detail

inline json_io::json to_json(const ClassDatum& cd) {
    json_io::json j;
    j["lattice_rank"] = cd.lattice_rank;
    j["boundary_valuations"] = json_io::from_mat(cd.boundary_valuations);
    j["color_valuations"] = json_io::from_mat(cd.color_valuations);
    j["central_restriction"] = json_io::from_mat(cd.central_restriction);
    return j;
}

inline json_io::json to_json(const SphericalDatum& d) {
    json_io::json j;
    j["name"] = d.name;
    j["ambient"] = d.ambient.spec();
    j["rank"] = d.rank;
    j["spherical_roots"] = json_io::json::array();
    for (const auto& g : d.spherical_roots) j["spherical_roots"].push_back(json_io::from_vec(g.coords));
    j["colors"] = json_io::json::array();
    for (const auto& c : d.colors)
        j["colors"].push_back({{"name", c.name}, {"omega", json_io::from_vec(c.omega.coords)}, {"pairing", json_io::from_vec(c.pairing)}});
    j["module_dim_mode"] = to_string(d.module_dim_mode);
    j["boundary_names"] = d.boundary_names;
    if (d.class_datum) j["class_datum"] = to_json(*d.class_datum);
    return j;
}

inline ClassDatum class_datum_from_json(const json_io::json& j, const std::string& path) {
    using namespace detail;
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    reject_unknown(j, {"lattice_rank", "boundary_valuations", "color_valuations", "central_restriction"}, path);
    ClassDatum cd;
    cd.lattice_rank = to_size(require(j, "lattice_rank", path), path + ".lattice_rank");
    cd.boundary_valuations = json_io::to_mat(require(j, "boundary_valuations", path), path + ".boundary_valuations");
    cd.color_valuations = json_io::to_mat(require(j, "color_valuations", path), path + ".color_valuations");
    cd.central_restriction = json_io::to_mat(require(j, "central_restriction", path), path + ".central_restriction");
    cd.central_rank = cols_of(cd.central_restriction);
    try {
        check_shape(cd);
    } catch (const DimensionError& e) {
        throw SchemaError(path, e.what());
    }
    return cd;
}

inline SphericalDatum from_json(const json_io::json& j) {
    using namespace detail;
    if (!j.is_object()) throw SchemaError("", "datum must be a JSON object");
    reject_unknown(j, {"name", "ambient", "rank", "spherical_roots", "colors", "module_dim_mode", "boundary_names", "class_datum"}, "");
    SphericalDatum d;
    d.name = require_string(j, "name", "");
    try {
        d.ambient = build_root_system(require_string(j, "ambient", ""));
    } catch (const DescriptorError& e) {
        throw SchemaError("ambient", e.what());
    }
    d.rank = to_size(require(j, "rank", ""), "rank");
    const json& roots = require(j, "spherical_roots", "");
    if (!roots.is_array()) throw SchemaError("spherical_roots", "expected an array");
    for (std::size_t i = 0; i < roots.size(); ++i)
        d.spherical_roots.emplace_back(json_io::to_vec(roots[i], "spherical_roots[" + std::to_string(i) + "]"));
    const json& colors = require(j, "colors", "");
    if (!colors.is_array()) throw SchemaError("colors", "expected an array");
    for (std::size_t i = 0; i < colors.size(); ++i) {
        std::string path = "colors[" + std::to_string(i) + "]";
        const json& c = colors[i];
        if (!c.is_object()) throw SchemaError(path, "expected an object");
        if (c.contains("name") && c["name"].is_string()) path += "(" + c["name"].get<std::string>() + ")";
        reject_unknown(c, {"name", "omega", "pairing"}, path);
        Color col;
        col.name = require_string(c, "name", path);
        col.omega = Weight(json_io::to_vec(require(c, "omega", path), path + ".omega"));
        col.pairing = json_io::to_vec(require(c, "pairing", path), path + ".pairing");
        d.colors.push_back(std::move(col));
    }
    const std::string mode = require_string(j, "module_dim_mode", "");
    if (mode == "simple")
        d.module_dim_mode = ModuleDimMode::simple;
    else if (mode == "squared")
        d.module_dim_mode = ModuleDimMode::squared;
    else
        throw SchemaError("module_dim_mode", "expected \"simple\" or \"squared\", got \"" + mode + "\"");
    const json& names = require(j, "boundary_names", "");
    if (!names.is_array()) throw SchemaError("boundary_names", "expected an array of strings");
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!names[i].is_string()) throw SchemaError("boundary_names[" + std::to_string(i) + "]", "expected a string");
        d.boundary_names.push_back(names[i].get<std::string>());
    }
    if (j.contains("class_datum")) d.class_datum = class_datum_from_json(j["class_datum"], "class_datum");
    try {
        check_shape(d);
    } catch (const DimensionError& e) {
        throw SchemaError("", e.what());
    }
    return d;
}

inline SphericalDatum parse_datum(const std::string& text) { return from_json(json_io::parse(text)); }

inline std::string serialize(const SphericalDatum& d) { return json_io::dump(to_json(d)) + "\n"; }

inline SphericalDatum load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("", "cannot open datum file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_datum(ss.str());
}

inline void save(const SphericalDatum& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write datum file '" + path + "'");
    out << serialize(d);
    if (!out) throw std::runtime_error("error writing datum file '" + path + "'");
}

} // namespace wonder
