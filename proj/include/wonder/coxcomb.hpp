#pragma once

/**
 * @file coxcomb.hpp
 * @brief Combinatorics of the total coordinate ring R(X): degrees of the
 *        canonical sections, orbits of Spec R(X), the order <=_X, pull-back
 *        exponents, and the type-A relation data of products of sections.
 */

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "wonder/clgroup.hpp"
#include "wonder/divclass.hpp"

namespace wonder {

struct GeneratorDegrees {
    IntMat color_degrees;     // deg s_D = e_D
    IntMat boundary_degrees;  // deg s_i = sum_D <D, gamma_i> e_D
};

inline GeneratorDegrees generator_degrees(const SphericalDatum& d) {
    return {identity(d.num_colors()), boundary_classes(d)};
}

// ---------------------------------------------------------------------------
// Orbits
// ---------------------------------------------------------------------------

struct OrbitLabel {
    std::vector<std::size_t> colors;    // E, sorted
    std::vector<std::size_t> boundary;  // I, sorted

    friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
    friend auto operator<=>(const OrbitLabel&, const OrbitLabel&) = default;
};

struct OrbitPoset {
    std::vector<OrbitLabel> labels;
    /// (a, b) with labels[a] strictly below labels[b] in the closure order.
    std::vector<std::pair<std::size_t, std::size_t>> closure_order;
    /// Coordinates of A^r vanishing on the image of each orbit closure.
    std::vector<std::vector<std::size_t>> q_image;
};

/// (E, I) labels an orbit iff there are x_D >= 1 (D in E) with
/// sum_{D in E} x_D <D, gamma_i> <= 0 for every i outside I.
inline bool is_orbit_label(const SphericalDatum& d, const OrbitLabel& l) {
    const std::size_t nd = d.num_colors();
    for (auto D : l.colors)
        if (D >= nd) throw std::out_of_range("orbit label: color index out of range");
    for (auto i : l.boundary) check_boundary_index(d, i);
    if (l.colors.empty()) return true;
    IntMat rows;
    for (std::size_t i = 0; i < d.rank; ++i) {
        if (std::find(l.boundary.begin(), l.boundary.end(), i) != l.boundary.end()) continue;
        IntVec row = zeros(nd);
        for (auto D : l.colors) row[D] = d.colors[D].pairing[i];
        rows.push_back(std::move(row));
    }
    return strict_feasible(rows, l.colors, nd);
}

inline bool is_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline OrbitPoset orbit_poset(const SphericalDatum& d) {
    const std::size_t nd = d.num_colors(), r = d.rank;
    if (nd > 20 || r > 20) throw std::invalid_argument("orbit_poset: too many colors or boundary divisors");
    auto subset = [](std::size_t mask, std::size_t n) {
        std::vector<std::size_t> s;
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1) s.push_back(k);
        return s;
    };
    OrbitPoset p;
    for (std::size_t e = 0; e < (std::size_t{1} << nd); ++e)
        for (std::size_t i = 0; i < (std::size_t{1} << r); ++i) {
            OrbitLabel l{subset(e, nd), subset(i, r)};
            if (is_orbit_label(d, l)) p.labels.push_back(std::move(l));
        }
    std::sort(p.labels.begin(), p.labels.end(), [](const OrbitLabel& a, const OrbitLabel& b) {
        const std::size_t sa = a.colors.size() + a.boundary.size(), sb = b.colors.size() + b.boundary.size();
        return sa != sb ? sa < sb : a < b;
    });
    for (std::size_t a = 0; a < p.labels.size(); ++a) {
        p.q_image.push_back(p.labels[a].boundary);
        for (std::size_t b = 0; b < p.labels.size(); ++b)
            if (a != b && is_subset(p.labels[a].colors, p.labels[b].colors) &&
                is_subset(p.labels[a].boundary, p.labels[b].boundary))
                p.closure_order.emplace_back(a, b);
    }
    return p;
}

/// lambda <=_X mu iff mu - lambda is a non-negative integral combination of
/// the spherical roots.
inline bool leq_X(const SphericalDatum& d, const Weight& lambda, const Weight& mu) {
    check_weight(d.ambient, lambda);
    check_weight(d.ambient, mu);
    IntMat g;
    for (const auto& w : d.spherical_roots) g.push_back(w.coords);
    const IntVec diff = sub(mu.coords, lambda.coords);
    if (g.empty()) return is_zero(diff);
    auto c = solve_combination(g, diff);
    if (!c) return false;
    return std::all_of(c->begin(), c->end(), [](const Rat& q) { return is_integral(q) && q >= 0; });
}

/// E[j][i] = -v_j(gamma_i): phi^*(s_i) = prod_j s_j^{E[j][i]}.
inline IntMat pullback_exponents(const IntMat& boundary_valuations, std::size_t r) {
    IntMat e;
    for (const auto& v : boundary_valuations) {
        if (v.size() != r) throw DimensionError("pullback_exponents: valuation of wrong length");
        e.push_back(scale(-1, v));
    }
    return e;
}

/// Pull-back exponents of the identity of a wonderful variety.
inline IntMat self_pullback_exponents(const SphericalDatum& d) {
    return pullback_exponents(export_class_datum(d).boundary_valuations, d.rank);
}

// ---------------------------------------------------------------------------
// Type A: V(omega_i) (x) V(omega_j) for SL_n
// ---------------------------------------------------------------------------

inline void check_typeA_args(std::size_t n, std::size_t i, std::size_t j) {
    if (n < 2 || i < 1 || i > j || j > n - 1)
        throw std::out_of_range("type A: need 1 <= i <= j <= n-1, got n=" + std::to_string(n) + " i=" +
                                std::to_string(i) + " j=" + std::to_string(j));
}

/// omega_k in A_{n-1}, with omega_0 = omega_n = 0.
inline IntVec fundamental_typeA(std::size_t n, std::size_t k) {
    IntVec w = zeros(n - 1);
    if (k >= 1 && k <= n - 1) w[k - 1] = 1;
    return w;
}

/// Highest weights omega_{i'} + omega_{j'} of V(omega_i) (x) V(omega_j) with
/// 0 <= i' <= i <= j <= j' <= n and i' + j' = i + j, Cartan component first.
inline std::vector<Weight> tensor_fundamental_typeA(std::size_t n, std::size_t i, std::size_t j) {
    check_typeA_args(n, i, j);
    std::vector<Weight> out;
    for (std::size_t t = 0; t <= std::min(i, n - j); ++t)
        out.emplace_back(add(fundamental_typeA(n, i - t), fundamental_typeA(n, j + t)));
    return out;
}

struct RelationDatum {
    Weight lambda;
    IntVec exponents;  // omega_i + omega_j - lambda = sum_k n_k alpha_k
};

inline std::vector<RelationDatum> relation_data_typeA(std::size_t n, std::size_t i, std::size_t j) {
    const RootSystem rs = build_root_system("A" + std::to_string(n - 1));
    const IntVec top = add(fundamental_typeA(n, i), fundamental_typeA(n, j));
    std::vector<RelationDatum> out;
    for (auto& lambda : tensor_fundamental_typeA(n, i, j)) {
        auto e = decompose_in_simple_roots(rs, Weight(sub(top, lambda.coords)));
        if (!e)
            throw InconsistencyError("relation data: omega_i + omega_j - " + to_string(lambda.coords) +
                                     " is not a non-negative integral combination of simple roots");
        out.push_back({std::move(lambda), std::move(*e)});
    }
    return out;
}

struct RootMonoidWitness {
    std::size_t k;  // spherical root gamma_k = alpha_k (1-based)
    std::size_t i, j;
    Weight lambda;
    Int multiple;  // omega_i + omega_j - lambda = multiple * alpha_k
};

/// For each simple root alpha_k of SL_n, a product s_{D_i} s_{D_j} whose
/// V(lambda)-component differs from the Cartan component by a positive
/// multiple of alpha_k. The witness (k, k, 2 omega_k - alpha_k) is tried first.
inline std::vector<RootMonoidWitness> root_monoid_check(const SphericalDatum& d) {
    const auto& f = d.ambient.factors();
    if (f.size() != 1 || f.front().type != 'A' || !is_group_compactification(d))
        throw std::invalid_argument("root monoid check: need the group compactification of a simple type-A group");
    const std::size_t n = static_cast<std::size_t>(f.front().rank) + 1;
    auto witness_for = [&](std::size_t k, std::size_t i, std::size_t j) -> std::optional<RootMonoidWitness> {
        for (const auto& rel : relation_data_typeA(n, i, j)) {
            bool ok = rel.exponents[k - 1] > 0;
            for (std::size_t t = 0; t < rel.exponents.size() && ok; ++t)
                if (t != k - 1 && rel.exponents[t] != 0) ok = false;
            if (ok) return RootMonoidWitness{k, i, j, rel.lambda, rel.exponents[k - 1]};
        }
        return std::nullopt;
    };
    std::vector<RootMonoidWitness> out;
    for (std::size_t k = 1; k <= n - 1; ++k) {
        auto w = witness_for(k, k, k);
        for (std::size_t i = 1; !w && i <= n - 1; ++i)
            for (std::size_t j = i; !w && j <= n - 1; ++j) w = witness_for(k, i, j);
        if (!w) throw InconsistencyError("root monoid check: no witness for alpha_" + std::to_string(k));
        out.push_back(std::move(*w));
    }
    return out;
}

} // namespace wonder
