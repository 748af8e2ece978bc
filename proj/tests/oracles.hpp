#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the engines it is meant to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "wonder/arith.hpp"
#include "wonder/datum.hpp"

namespace oracle {

using wonder::Int;
using wonder::IntMat;
using wonder::IntVec;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(0x5eed1234u);
    return g;
}

inline long long uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long long t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

/// Positive-root counts per irreducible type.
inline std::size_t positive_root_count(char type, int n) {
    switch (type) {
    case 'A': return static_cast<std::size_t>(n * (n + 1) / 2);
    case 'B':
    case 'C': return static_cast<std::size_t>(n * n);
    case 'D': return static_cast<std::size_t>(n * (n - 1));
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
    }
    return 0;
}

/// Dimension of the Lie algebra of each simple type.
inline long long lie_algebra_dim(char type, int n) {
    switch (type) {
    case 'A': return n * (n + 2);
    case 'B':
    case 'C': return n * (2 * n + 1);
    case 'D': return n * (2 * n - 1);
    case 'E': return n == 6 ? 78 : n == 7 ? 133 : 248;
    case 'F': return 52;
    case 'G': return 14;
    }
    return 0;
}

/// dim V(lambda) for SL_{m+1} from the partition form of lambda:
/// prod_{i<j} (l_i - l_j + j - i) / (j - i).
inline Int sl_dim(const IntVec& fundamental_coords) {
    const std::size_t m = fundamental_coords.size();
    std::vector<Int> part(m + 1, 0);
    for (std::size_t k = m; k-- > 0;) part[k] = part[k + 1] + fundamental_coords[k];
    Int num = 1, den = 1;
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j) {
            num *= part[i] - part[j] + Int(j - i);
            den *= Int(j - i);
        }
    return num / den;
}

/// -w_0 as a node permutation: reflect rho to the antidominant chamber while
/// recording the word, apply that word to each omega_j and negate.
inline std::vector<std::size_t> minus_w0(const IntMat& cartan) {
    const std::size_t n = cartan.size();
    auto reflect = [&](IntVec w, std::size_t i) {  // s_i(w) = w - w_i alpha_i
        const Int c = w[i];
        for (std::size_t k = 0; k < n; ++k) w[k] -= c * cartan[i][k];
        return w;
    };
    IntVec rho(n, Int(1));
    std::vector<std::size_t> word;
    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t i = 0; i < n; ++i)
            if (rho[i] > 0) {
                rho = reflect(rho, i);
                word.push_back(i);
                moved = true;
                break;
            }
    }
    std::vector<std::size_t> sigma(n);
    for (std::size_t j = 0; j < n; ++j) {
        IntVec w = wonder::unit(n, j);
        for (auto it = word.rbegin(); it != word.rend(); ++it) w = reflect(w, *it);
        for (std::size_t k = 0; k < n; ++k)
            if (-w[k] == 1) sigma[j] = k;
    }
    return sigma;
}

/// gcd of all k x k minors (Laplace expansion; tiny matrices only).
inline Int det_small(const IntMat& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int s = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        IntMat minor;
        for (std::size_t r = 1; r < n; ++r) {
            IntVec row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        const Int t = m[0][c] * det_small(minor);
        s += (c % 2 ? -t : t);
    }
    return s;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t t = from; t < n; ++t) {
        cur.push_back(t);
        subsets(n, k, t + 1, cur, out);
        cur.pop_back();
    }
}

inline Int determinantal_divisor(const IntMat& m, std::size_t k) {
    const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    Int g = 0;
    for (const auto& r : rs)
        for (const auto& c : cs) {
            IntMat sub;
            for (auto i : r) {
                IntVec row;
                for (auto j : c) row.push_back(m[i][j]);
                sub.push_back(row);
            }
            g = boost::multiprecision::gcd(g, det_small(sub));
        }
    return boost::multiprecision::abs(g);
}

/// Invariant factors (including 1s) from determinantal divisors d_k / d_{k-1}.
inline IntVec invariant_factors(const IntMat& m) {
    IntVec out;
    Int prev = 1;
    const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        const Int d = determinantal_divisor(m, k);
        if (d == 0) break;
        out.push_back(d / prev);
        prev = d;
    }
    return out;
}

/// Effective classes in the box [-k, k]^n: mark every sum_i b_i X_i with
/// 0 <= b_i <= bound[i], then close upwards inside the box. Entry order is
/// that of box_index.
inline std::vector<char> effective_box(const IntMat& boundary, std::size_t n, long long k,
                                       const std::vector<long long>& bound) {
    const long long side = 2 * k + 1;
    std::size_t cells = 1;
    for (std::size_t j = 0; j < n; ++j) cells *= static_cast<std::size_t>(side);
    std::vector<char> eff(cells, 0);
    std::vector<std::vector<long long>> rows;
    for (const auto& r : boundary) {
        rows.emplace_back();
        for (const auto& x : r) rows.back().push_back(static_cast<long long>(x));
    }
    std::vector<long long> s(n, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == rows.size()) {
            std::size_t idx = 0;
            for (std::size_t j = n; j-- > 0;) {
                if (s[j] > k) return;
                idx = idx * side + static_cast<std::size_t>(std::max(s[j], -k) + k);
            }
            eff[idx] = 1;
            return;
        }
        for (long long b = 0; b <= bound[i]; ++b) {
            self(self, i + 1);
            for (std::size_t j = 0; j < n; ++j) s[j] += rows[i][j];
        }
        for (std::size_t j = 0; j < n; ++j) s[j] -= (bound[i] + 1) * rows[i][j];
    };
    rec(rec, 0);
    std::size_t stride = 1;
    for (std::size_t j = 0; j < n; ++j, stride *= side)
        for (std::size_t idx = 0; idx < cells; ++idx)
            if ((idx / stride) % side != 0 && eff[idx - stride]) eff[idx] = 1;
    return eff;
}

inline std::size_t box_index(const IntVec& c, long long k) {
    std::size_t idx = 0;
    for (std::size_t j = c.size(); j-- > 0;) idx = idx * (2 * k + 1) + static_cast<std::size_t>(static_cast<long long>(c[j]) + k);
    return idx;
}

/// Bound on the boundary exponents b in c = a + sum b_i [X_i], a >= 0, never
/// below 10:
/// for group data b = (c - a) C^{-1} <= c^+ C^{-1} because C^{-1} >= 0.
/// For other data, fall back to a hand-derived bound.
inline std::vector<long long> effectivity_exponent_bound(const wonder::SphericalDatum& d, const IntVec& c) {
    std::vector<long long> bound(d.rank, 10);
    if (!wonder::is_group_compactification(d)) {
        // SL3 incidence: [X1] + [X2] = (1, 0, 0, 1), so b_1 <= c_p1 and b_2 <= c_d2
        bound[0] = std::max<long long>(10, static_cast<long long>(c[0]));
        bound[1] = std::max<long long>(10, static_cast<long long>(c[3]));
        return bound;
    }
    const IntMat& cartan = d.ambient.cartan();
    const wonder::RatMat inv = [&] {
        wonder::RatMat aug = wonder::to_rat(cartan);
        const std::size_t n = cartan.size();
        for (std::size_t i = 0; i < n; ++i) {
            aug[i].resize(2 * n, wonder::Rat(0));
            aug[i][n + i] = 1;
        }
        wonder::rref(aug, n);
        wonder::RatMat out(n, wonder::RatVec(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
        return out;
    }();
    for (std::size_t i = 0; i < d.rank; ++i) {
        wonder::Rat s = 0;
        for (std::size_t k = 0; k < c.size(); ++k)
            if (c[k] > 0) s += wonder::Rat(c[k]) * inv[k][i];
        bound[i] = std::max<long long>(10, static_cast<long long>(wonder::floor_rat(s)));
    }
    return bound;
}

} // namespace oracle
