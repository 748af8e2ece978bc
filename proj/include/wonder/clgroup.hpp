#pragma once

/**
 * @file clgroup.hpp
 * @brief Equivariant and plain divisor class groups from generators
 *        [X_1..X_n], [D], chi_1..chi_c and one relation per basis vector
 *        lambda_k of the weight lattice:
 *
 *            sum_i v_i(lambda_k) [X_i] + sum_D rho(v_D)(lambda_k) [D] - lambda_k|_C = 0.
 */

#include <string>
#include <vector>

#include "wonder/datum.hpp"

namespace wonder {

struct ClassGroupResult {
    AbelianPresentation presentation;
    IntMat relation_matrix;  // lattice_rank rows, n + |D| + c columns
    std::vector<std::string> generator_names;
};

namespace detail {

inline ClassGroupResult class_group(const ClassDatum& cd, bool with_center) {
    check_shape(cd);
    const std::size_t n = cd.num_boundary(), nd = cd.num_colors(), c = with_center ? cd.central_rank : 0;
    const std::size_t ngens = n + nd + c;
    ClassGroupResult res;
    for (std::size_t i = 0; i < n; ++i) res.generator_names.push_back("X" + std::to_string(i + 1));
    for (std::size_t D = 0; D < nd; ++D) res.generator_names.push_back("D" + std::to_string(D + 1));
    for (std::size_t t = 0; t < c; ++t) res.generator_names.push_back("chi" + std::to_string(t + 1));
    for (std::size_t k = 0; k < cd.lattice_rank; ++k) {
        IntVec row;
        row.reserve(ngens);
        for (std::size_t i = 0; i < n; ++i) row.push_back(cd.boundary_valuations[i][k]);
        for (std::size_t D = 0; D < nd; ++D) row.push_back(cd.color_valuations[D][k]);
        for (std::size_t t = 0; t < c; ++t) row.push_back(-cd.central_restriction[k][t]);
        res.relation_matrix.push_back(std::move(row));
    }
    res.presentation = cokernel(res.relation_matrix, ngens);
    const std::size_t rk = res.relation_matrix.empty() ? 0 : rank(res.relation_matrix);
    if (res.presentation.free_rank + rk != ngens)
        throw InconsistencyError("class group: free rank " + std::to_string(res.presentation.free_rank) +
                                 " does not match generators minus relation rank");
    return res;
}

} // namespace detail

/// Cl^G(X): generators [X_i], [D] and a basis of the character group of C.
inline ClassGroupResult class_group_equivariant(const ClassDatum& cd) { return detail::class_group(cd, true); }

/// Cl(X): the same relations with zero right-hand side.
inline ClassGroupResult class_group_plain(const ClassDatum& cd) { return detail::class_group(cd, false); }

/// Class datum of a wonderful variety on the basis gamma_1..gamma_r:
/// v_i(gamma_j) = -delta_ij, rho(v_D)(gamma_j) = <D, gamma_j>, no center.
inline ClassDatum export_class_datum(const SphericalDatum& d) {
    ClassDatum cd;
    cd.lattice_rank = d.rank;
    for (std::size_t i = 0; i < d.rank; ++i) cd.boundary_valuations.push_back(scale(-1, unit(d.rank, i)));
    for (const auto& c : d.colors) cd.color_valuations.push_back(c.pairing);
    cd.central_rank = 0;
    cd.central_restriction.assign(d.rank, IntVec{});
    return cd;
}

} // namespace wonder
