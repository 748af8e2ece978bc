#pragma once

/**
 * @file arith.hpp
 * @brief Exact integer / rational vectors and matrices.
 *
 * Everything in the library is computed over arbitrary-precision integers
 * (boost::multiprecision::cpp_int) or rationals (cpp_rational). Matrices are
 * row-major vectors of rows; an empty matrix has no rows and its column count
 * is carried separately where it matters.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wonder/errors.hpp"

namespace wonder {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline IntVec int_vec(std::initializer_list<long long> xs) {
    IntVec v;
    v.reserve(xs.size());
    for (long long x : xs) v.emplace_back(x);
    return v;
}

inline IntMat int_mat(std::initializer_list<std::initializer_list<long long>> rows) {
    IntMat m;
    for (const auto& r : rows) m.push_back(int_vec(r));
    return m;
}

inline IntVec zeros(std::size_t n) { return IntVec(n, Int(0)); }

inline IntVec unit(std::size_t n, std::size_t i) {
    IntVec v = zeros(n);
    v.at(i) = 1;
    return v;
}

inline IntMat identity(std::size_t n) {
    IntMat m(n, zeros(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline bool is_zero(std::span<const Int> v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

inline Int dot(std::span<const Int> a, std::span<const Int> b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVec add(std::span<const Int> a, std::span<const Int> b) {
    if (a.size() != b.size()) throw DimensionError("add: length mismatch");
    IntVec r(a.begin(), a.end());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline IntVec sub(std::span<const Int> a, std::span<const Int> b) {
    if (a.size() != b.size()) throw DimensionError("sub: length mismatch");
    IntVec r(a.begin(), a.end());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline IntVec scale(const Int& k, std::span<const Int> a) {
    IntVec r(a.begin(), a.end());
    for (auto& x : r) x *= k;
    return r;
}

inline Int gcd_of(std::span<const Int> v) {
    Int g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    return boost::multiprecision::abs(g);
}

/// Divide by the gcd of the entries; orientation is kept.
inline IntVec primitive(std::span<const Int> v) {
    IntVec r(v.begin(), v.end());
    Int g = gcd_of(v);
    if (g > 1)
        for (auto& x : r) x /= g;
    return r;
}

/// True iff `a` and `b` are positive multiples of each other (both non-zero).
inline bool same_direction(std::span<const Int> a, std::span<const Int> b) {
    if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
    return primitive(a) == primitive(b);
}

inline std::size_t cols_of(const IntMat& m, std::size_t fallback = 0) {
    return m.empty() ? fallback : m.front().size();
}

inline IntMat transpose(const IntMat& m, std::size_t ncols = 0) {
    const std::size_t rows = m.size(), cols = cols_of(m, ncols);
    IntMat t(cols, zeros(rows));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return t;
}

inline IntMat matmul(const IntMat& a, const IntMat& b) {
    const std::size_t n = a.size(), k = b.size(), m = cols_of(b);
    IntMat r(n, zeros(m));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw DimensionError("matmul: inner dimension mismatch");
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    }
    return r;
}

/// Row vector times matrix.
inline IntVec vecmul(std::span<const Int> v, const IntMat& m, std::size_t ncols = 0) {
    if (v.size() != m.size()) throw DimensionError("vecmul: length mismatch");
    IntVec r = zeros(cols_of(m, ncols));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) r[j] += v[i] * m[i][j];
    return r;
}

/// Determinant by fraction-free (Bareiss) elimination.
inline Int determinant(IntMat m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DimensionError("determinant: matrix not square");
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline RatMat to_rat(const IntMat& m) {
    RatMat r;
    r.reserve(m.size());
    for (const auto& row : m) r.emplace_back(row.begin(), row.end());
    return r;
}

/// Reduced row echelon form in place; returns the pivot column of each
/// non-zero row, in order.
inline std::vector<std::size_t> rref(RatMat& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[row], m[p]);
        const Rat inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rat f = m[i][col];
            for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(const IntMat& m) {
    RatMat r = to_rat(m);
    return rref(r, cols_of(m)).size();
}

/// Solve x * rows = target for a row vector x (i.e. target is a rational
/// combination of the given rows). Returns the unique solution when the rows
/// are independent and target lies in their span; nullopt if target is not in
/// the span. Throws if the rows are dependent.
inline std::optional<RatVec> solve_combination(const IntMat& rows, std::span<const Int> target) {
    const std::size_t k = rows.size(), d = target.size();
    for (const auto& r : rows)
        if (r.size() != d) throw DimensionError("solve_combination: length mismatch");
    // augmented system: columns are the rows, one equation per coordinate.
    RatMat aug(d, RatVec(k + 1));
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t j = 0; j < k; ++j) aug[c][j] = Rat(rows[j][c]);
        aug[c][k] = Rat(target[c]);
    }
    auto piv = rref(aug, k + 1);
    if (!piv.empty() && piv.back() == k) return std::nullopt;
    if (piv.size() != k) throw DimensionError("solve_combination: rows are linearly dependent");
    RatVec x(k);
    for (std::size_t i = 0; i < k; ++i) x[piv[i]] = aug[i][k];
    return x;
}

inline bool is_integral(const Rat& q) { return boost::multiprecision::denominator(q) == 1; }

inline Int floor_rat(const Rat& q) {
    Int n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
    Int f = n / d;
    if (n % d != 0 && n < 0) f -= 1;
    return f;
}

inline Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

inline std::string to_string(std::span<const Int> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

} // namespace wonder
