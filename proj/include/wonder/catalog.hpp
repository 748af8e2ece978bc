#pragma once

/**
 * @file catalog.hpp
 * @brief Built-in data: group compactifications of all small types, the
 *        SL3 incidence variety, the toric surface P1 x P1 and the standard
 *        embeddings of SO(2n).
 */

#include <string>
#include <vector>

#include "wonder/clgroup.hpp"
#include "wonder/datum.hpp"

namespace wonder {

/// Irreducible types of rank <= max_rank, one name per isomorphism class.
inline std::vector<std::string> irreducible_types(std::size_t max_rank) {
    std::vector<std::string> out;
    for (std::size_t r = 1; r <= max_rank; ++r) {
        const std::string n = std::to_string(r);
        out.push_back("A" + n);
        if (r >= 2) out.push_back("B" + n);
        if (r >= 3) out.push_back("C" + n);  // C2 = B2
        if (r >= 4) out.push_back("D" + n);  // D3 = A3
        if (r == 2) out.push_back("G2");
        if (r == 4) out.push_back("F4");
        if (r >= 6 && r <= 8) out.push_back("E" + n);
    }
    return out;
}

/// Every semisimple type (products of irreducible factors, unordered) of
/// total rank <= max_rank, as type specs like "A1xB2".
inline std::vector<std::string> builtin_group_types(std::size_t max_rank) {
    const auto irr = irreducible_types(max_rank);
    std::vector<std::size_t> ranks;
    for (const auto& t : irr) ranks.push_back(parse_type_spec(t).front().rank);
    std::vector<std::string> out;
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t from, std::size_t left) -> void {
        if (!pick.empty()) {
            std::string s;
            for (std::size_t k = 0; k < pick.size(); ++k) s += (k ? "x" : "") + irr[pick[k]];
            out.push_back(s);
        }
        for (std::size_t t = from; t < irr.size(); ++t) {
            if (ranks[t] > left) continue;
            pick.push_back(t);
            self(self, t, left - ranks[t]);
            pick.pop_back();
        }
    };
    rec(rec, 0, max_rank);
    return out;
}

/// The subvariety of P2 x P2 x P2* x P2* cut out by p1 in d1, p2 in d1,
/// p2 in d2. Colors are the pull-backs of the B-stable lines; X1 is the
/// locus p1 = p2 and X2 the locus d1 = d2.
inline SphericalDatum sl3_incidence() {
    SphericalDatum d;
    d.name = "SL3 incidence variety";
    d.ambient = build_root_system("A2");
    d.rank = 2;
    d.spherical_roots = {Weight(int_vec({2, -1})), Weight(int_vec({-1, 2}))};
    d.colors = {
        {"p1", Weight(int_vec({1, 0})), int_vec({1, 0})},
        {"p2", Weight(int_vec({1, 0})), int_vec({1, -1})},
        {"d1", Weight(int_vec({0, 1})), int_vec({-1, 1})},
        {"d2", Weight(int_vec({0, 1})), int_vec({0, 1})},
    };
    d.module_dim_mode = ModuleDimMode::simple;
    d.boundary_names = {"X1", "X2"};
    return d;
}

/// Every built-in wonderful datum: group compactifications of total rank
/// <= max_rank followed by the SL3 incidence variety.
inline std::vector<SphericalDatum> builtin_data(std::size_t max_rank) {
    std::vector<SphericalDatum> out;
    for (const auto& t : builtin_group_types(max_rank)) out.push_back(group_compactification(t));
    if (max_rank >= 2) out.push_back(sl3_incidence());
    return out;
}

/// P1 x P1 as a toric variety under its two-dimensional torus: rays +-e1, +-e2.
inline ClassDatum toric_p1xp1(bool with_center = true) {
    ClassDatum cd;
    cd.lattice_rank = 2;
    cd.boundary_valuations = int_mat({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    cd.central_rank = with_center ? 2 : 0;
    cd.central_restriction = with_center ? identity(2) : IntMat(2, IntVec{});
    return cd;
}

/// Standard (wonderful-closure) embedding of SO(2n) on Lambda = Z^n with
/// basis eps_1..eps_n. Boundary valuations are the primitive generators of
/// the rays through minus the fundamental coweights; the colors are the
/// simple coroots.
inline ClassDatum so2n_standard_embedding(std::size_t n) {
    if (n < 2) throw DescriptorError("so2n_standard_embedding: need n >= 2");
    ClassDatum cd;
    cd.lattice_rank = n;
    for (std::size_t i = 1; i <= n; ++i) {
        IntVec v = zeros(n);
        const std::size_t span = i <= n - 2 ? i : n;
        for (std::size_t k = 0; k < span; ++k) v[k] = -1;
        if (i == n - 1) v[n - 1] = 1;
        cd.boundary_valuations.push_back(std::move(v));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        IntVec c = zeros(n);
        c[i] = 1;
        c[i + 1] = -1;
        cd.color_valuations.push_back(std::move(c));
    }
    IntVec last = zeros(n);
    last[n - 2] = 1;
    last[n - 1] = 1;
    cd.color_valuations.push_back(std::move(last));
    cd.central_rank = 0;
    cd.central_restriction.assign(n, IntVec{});
    return cd;
}

} // namespace wonder
