#pragma once

/**
 * @file divclass.hpp
 * @brief Picard lattice of a wonderful variety in the color basis: boundary
 *        classes, nef/ample/effective tests, extremal rays of the effective
 *        cone, section modules, and the automorphism report of a group
 *        compactification.
 *
 * Boundary and color indices are 0-based throughout.
 */

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wonder/datum.hpp"

namespace wonder {

struct DivisorClass {
    IntVec coeffs;  // indexed by the colors of the datum

    DivisorClass() = default;
    explicit DivisorClass(IntVec c) : coeffs(std::move(c)) {}
    std::size_t size() const noexcept { return coeffs.size(); }

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

inline void check_class(const SphericalDatum& d, const DivisorClass& c) {
    if (c.size() != d.num_colors())
        throw DimensionError("divisor class has " + std::to_string(c.size()) + " coordinates, datum has " +
                             std::to_string(d.num_colors()) + " colors");
}

inline void check_boundary_index(const SphericalDatum& d, std::size_t i) {
    if (i >= d.rank) throw std::out_of_range("boundary index " + std::to_string(i + 1) + " out of range");
}

/// [X_i] = sum_D <D, gamma_i> [D].
inline DivisorClass boundary_class(const SphericalDatum& d, std::size_t i) {
    check_boundary_index(d, i);
    IntVec c;
    for (const auto& col : d.colors) c.push_back(col.pairing[i]);
    return DivisorClass(std::move(c));
}

inline IntMat boundary_classes(const SphericalDatum& d) {
    IntMat m;
    for (std::size_t i = 0; i < d.rank; ++i) m.push_back(boundary_class(d, i).coeffs);
    return m;
}

inline bool is_nef(const DivisorClass& c) {
    return std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Int& x) { return x >= 0; });
}

inline bool is_ample(const DivisorClass& c) {
    return std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Int& x) { return x > 0; });
}

/// X_i is fixed iff some color pairs negatively with gamma_i.
inline bool is_fixed(const SphericalDatum& d, std::size_t i) {
    check_boundary_index(d, i);
    return std::any_of(d.colors.begin(), d.colors.end(), [&](const Color& c) { return c.pairing[i] < 0; });
}

/// The nef cone is the positive orthant; its generators are the color classes.
inline IntMat nef_generators(const SphericalDatum& d) { return identity(d.num_colors()); }

// ---------------------------------------------------------------------------
// Sections
// ---------------------------------------------------------------------------

struct SectionSummand {
    Weight highest_weight;
    Int multiplicity;

    friend bool operator==(const SectionSummand&, const SectionSummand&) = default;
};

struct SectionDecomposition {
    std::vector<SectionSummand> summands;  // sorted by highest weight
    Int total_dim = 0;

    bool empty() const noexcept { return summands.empty(); }
};

/// Monomials prod s_D^{a_D} prod s_i^{b_i} of degree c, i.e. non-negative
/// integer (a, b) with a_D + sum_i b_i <D, gamma_i> = c_D. Columns: a then b.
inline IntMat section_monomials(const SphericalDatum& d, const DivisorClass& c) {
    check_class(d, c);
    const std::size_t nd = d.num_colors(), r = d.rank;
    IntMat A(nd, zeros(nd + r));
    for (std::size_t D = 0; D < nd; ++D) {
        A[D][D] = 1;
        for (std::size_t i = 0; i < r; ++i) A[D][nd + i] = d.colors[D].pairing[i];
    }
    try {
        return enumerate_nonneg_integer_solutions(A, c.coeffs, nd + r);
    } catch (const RecessionError& e) {
        throw RecessionError(std::string("invalid datum: ") + e.what());
    }
}

inline SectionDecomposition decompose_sections(const SphericalDatum& d, const DivisorClass& c) {
    const std::size_t nd = d.num_colors(), n = d.ambient.rank();
    std::map<Weight, Int> mult;
    for (const auto& sol : section_monomials(d, c)) {
        IntVec lambda = zeros(n);
        for (std::size_t D = 0; D < nd; ++D)
            for (std::size_t k = 0; k < n; ++k) lambda[k] += sol[D] * d.colors[D].omega[k];
        mult[Weight(std::move(lambda))] += 1;
    }
    SectionDecomposition out;
    for (auto& [w, m] : mult) {
        Int dim = weyl_dim(d.ambient, w);
        if (d.module_dim_mode == ModuleDimMode::squared) dim *= dim;
        out.total_dim += m * dim;
        out.summands.push_back({w, m});
    }
    return out;
}

namespace detail {

/// Integer program b >= 0, sum_i b_i [X_i] <= c for the datum's pairing,
/// cached by pairing matrix so repeated queries skip the elimination.
inline std::shared_ptr<const NonnegIntegerProgram> effectivity_program(const SphericalDatum& d) {
    IntMat A(d.num_colors(), zeros(d.rank));
    for (std::size_t D = 0; D < d.num_colors(); ++D)
        for (std::size_t i = 0; i < d.rank; ++i) A[D][i] = d.colors[D].pairing[i];
    static std::mutex mu;
    static std::map<IntMat, std::shared_ptr<const NonnegIntegerProgram>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(A);
    if (it != cache.end()) return it->second;
    if (cache.size() >= 64) cache.clear();
    auto prog = std::make_shared<const NonnegIntegerProgram>(A, d.rank);
    cache.emplace(std::move(A), prog);
    return prog;
}

} // namespace detail

/// Some monomial has degree c iff b >= 0 exists with sum_i b_i [X_i] <= c.
inline bool is_effective(const SphericalDatum& d, const DivisorClass& c) {
    check_class(d, c);
    try {
        return detail::effectivity_program(d)->find(c.coeffs).has_value();
    } catch (const RecessionError& e) {
        throw RecessionError(std::string("invalid datum: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Effective cone
// ---------------------------------------------------------------------------

enum class RayKind { FixedBoundary, SchubertPullback, MixedRankOne };

inline std::string to_string(RayKind k) {
    switch (k) {
    case RayKind::FixedBoundary: return "FixedBoundary";
    case RayKind::SchubertPullback: return "SchubertPullback";
    case RayKind::MixedRankOne: return "MixedRankOne";
    }
    return "?";
}

struct ExtremalRay {
    IntVec direction;
    RayKind kind = RayKind::SchubertPullback;
    std::vector<std::size_t> boundary;  // boundary divisors whose class lies on the ray
    std::vector<std::size_t> colors;    // colors whose class lies on the ray

    friend bool operator==(const ExtremalRay&, const ExtremalRay&) = default;
};

/// Extremal rays of Cone({[D]} u {[X_i]}), each classified by the divisors
/// lying on it. A boundary-only ray through a non-fixed divisor contradicts
/// the theory and raises InconsistencyError.
inline std::vector<ExtremalRay> eff_extremal_rays(const SphericalDatum& d) {
    const std::size_t nd = d.num_colors();
    IntMat gens = identity(nd);
    const IntMat bc = boundary_classes(d);
    for (const auto& b : bc)
        if (!is_zero(b)) gens.push_back(b);
    std::vector<ExtremalRay> out;
    if (gens.empty()) return out;
    for (auto& dir : extremal_rays(ConeZ(nd, gens))) {
        ExtremalRay ray;
        ray.direction = std::move(dir);
        for (std::size_t i = 0; i < bc.size(); ++i)
            if (same_direction(bc[i], ray.direction)) ray.boundary.push_back(i);
        for (std::size_t D = 0; D < nd; ++D)
            if (same_direction(unit(nd, D), ray.direction)) ray.colors.push_back(D);
        if (!ray.boundary.empty() && !ray.colors.empty())
            ray.kind = RayKind::MixedRankOne;
        else if (!ray.boundary.empty()) {
            ray.kind = RayKind::FixedBoundary;
            for (auto i : ray.boundary)
                if (!is_fixed(d, i))
                    throw InconsistencyError("extremal ray " + to_string(ray.direction) + " is spanned by boundary divisor " +
                                             d.boundary_names[i] + " alone, but that divisor is not fixed");
        } else
            ray.kind = RayKind::SchubertPullback;
        out.push_back(std::move(ray));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Automorphisms of a group compactification
// ---------------------------------------------------------------------------

struct AutReport {
    std::size_t isolated_nodes = 0;      // A1 factors
    std::string residual_type;           // G', empty if none
    std::string identity_component;
    std::vector<std::string> generators;  // of the component group
    std::size_t residual_diagram_automorphisms = 1;
};

namespace detail {

using Perm = std::vector<std::size_t>;

inline Perm compose(const Perm& a, const Perm& b) {  // a after b
    Perm r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

inline std::set<Perm> generated_group(const std::vector<Perm>& gens, std::size_t n) {
    Perm id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = i;
    std::set<Perm> group{id};
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& p : frontier)
            for (const auto& g : gens) {
                Perm q = compose(g, p);
                if (group.insert(q).second) next.push_back(std::move(q));
            }
        frontier = std::move(next);
    }
    return group;
}

} // namespace detail

inline AutReport aut_report(const SphericalDatum& d) {
    if (!is_group_compactification(d))
        throw std::invalid_argument("aut report: datum is not a group compactification");
    const RootSystem& rs = d.ambient;
    AutReport rep;
    std::vector<Factor> residual;
    std::vector<std::size_t> residual_nodes;  // ambient node of each G' node
    for (std::size_t k = 0; k < rs.factors().size(); ++k) {
        const Factor& f = rs.factors()[k];
        if (f.type == 'A' && f.rank == 1) {
            ++rep.isolated_nodes;
            continue;
        }
        residual.push_back(f);
        for (int t = 0; t < f.rank; ++t) residual_nodes.push_back(rs.offset(k) + static_cast<std::size_t>(t));
    }

    std::vector<std::string> parts;
    if (rep.isolated_nodes == 1)
        parts.push_back("PSL4");
    else if (rep.isolated_nodes > 1)
        parts.push_back("(PSL4)^" + std::to_string(rep.isolated_nodes));
    if (!residual.empty()) {
        rep.residual_type = RootSystem(residual).spec();
        parts.push_back("Ad(" + rep.residual_type + ")");
        parts.push_back("Ad(" + rep.residual_type + ")");
    }
    for (std::size_t p = 0; p < parts.size(); ++p) rep.identity_component += (p ? " × " : "") + parts[p];

    for (std::size_t k = 1; k < rep.isolated_nodes; ++k)
        rep.generators.push_back("swap A1 factors " + std::to_string(k) + " and " + std::to_string(k + 1));
    if (!residual.empty()) {
        rep.generators.push_back("flip the two factors of Ad(" + rep.residual_type + ") × Ad(" + rep.residual_type + ")");
        const auto autos = diagram_automorphisms(RootSystem(residual));
        rep.residual_diagram_automorphisms = autos.size();
        std::vector<detail::Perm> chosen;
        std::size_t reached = 1;
        for (const auto& p : autos) {
            if (reached == autos.size()) break;
            if (detail::generated_group(chosen, p.size()).count(p)) continue;
            chosen.push_back(p);
            reached = detail::generated_group(chosen, p.size()).size();
            std::string s = "diagram automorphism of " + rep.residual_type + ":";
            for (std::size_t i = 0; i < p.size(); ++i)
                if (p[i] != i) s += " " + std::to_string(residual_nodes[i] + 1) + "->" + std::to_string(residual_nodes[p[i]] + 1);
            rep.generators.push_back(std::move(s));
        }
    }
    return rep;
}

} // namespace wonder
