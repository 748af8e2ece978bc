#pragma once

/**
 * @file intlin.hpp
 * @brief Exact integer linear algebra and polyhedral primitives.
 *
 *  - Smith normal form with unimodular transforms, cokernels of integer maps.
 *  - Extremal rays of a pointed cone (double description on the dual cone).
 *  - Rational feasibility and variable projection by Fourier-Motzkin
 *    elimination (equalities are substituted away first, Chernikov's rule
 *    bounds the growth).
 *  - Enumeration of the non-negative integer points of a bounded
 *    {x >= 0 : A x = b}.
 */

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "wonder/arith.hpp"
#include "wonder/errors.hpp"

namespace wonder {

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

struct SmithForm {
    /// Non-zero diagonal entries of left * M * right, each dividing the next.
    IntVec invariant_factors;
    IntMat diagonal;  // left * M * right
    IntMat left;      // rows x rows, unimodular
    IntMat right;     // cols x cols, unimodular
};

/// `cols` is only consulted when M has no rows.
inline SmithForm smith_normal_form(const IntMat& M, std::size_t cols = 0) {
    const std::size_t m = M.size(), n = cols_of(M, cols);
    for (const auto& row : M)
        if (row.size() != n) throw DimensionError("smith_normal_form: ragged matrix");
    IntMat a = M, L = identity(m), R = identity(n);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        std::swap(L[i], L[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : R) std::swap(row[i], row[j]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& k) {  // row dst += k row src
        for (std::size_t j = 0; j < n; ++j) a[dst][j] += k * a[src][j];
        for (std::size_t j = 0; j < m; ++j) L[dst][j] += k * L[src][j];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& k) {
        for (std::size_t i = 0; i < m; ++i) a[i][dst] += k * a[i][src];
        for (std::size_t i = 0; i < n; ++i) R[i][dst] += k * R[i][src];
    };

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        // smallest non-zero entry of the trailing block becomes the pivot
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (a[i][j] != 0 && (!best || abs(a[i][j]) < abs(a[best->first][best->second]))) best = {i, j};
        if (!best) break;
        swap_rows(t, best->first);
        swap_cols(t, best->second);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                add_row(i, t, -(a[i][t] / a[t][t]));
                if (a[i][t] != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                add_col(j, t, -(a[t][j] / a[t][t]));
                if (a[t][j] != 0) dirty = true;
            }
            if (dirty) {
                // a remainder smaller than the pivot survived; move it into place
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (a[i][t] != 0 && abs(a[i][t]) < abs(a[bi][bj])) bi = i, bj = t;
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a[t][j] != 0 && abs(a[t][j]) < abs(a[bi][bj])) bi = t, bj = j;
                swap_rows(t, bi);
                swap_cols(t, bj);
                continue;
            }
            // divisibility of the trailing block
            std::optional<std::size_t> bad;
            for (std::size_t i = t + 1; i < m && !bad; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (!bad) break;
            add_row(t, *bad, Int(1));
        }
        if (a[t][t] < 0) {
            for (auto& x : a[t]) x = -x;
            for (auto& x : L[t]) x = -x;
        }
    }

    SmithForm out;
    for (std::size_t t = 0; t < std::min(m, n); ++t)
        if (a[t][t] != 0) out.invariant_factors.push_back(a[t][t]);
    out.diagonal = std::move(a);
    out.left = std::move(L);
    out.right = std::move(R);
    return out;
}

// ---------------------------------------------------------------------------
// Finitely generated abelian groups
// ---------------------------------------------------------------------------

struct AbelianPresentation {
    std::size_t free_rank = 0;
    /// Invariant factors > 1, each dividing the next.
    IntVec invariant_factors;
    /// One row per original generator: free coordinates first, then the
    /// residues modulo each invariant factor.
    IntMat generator_images;

    friend bool operator==(const AbelianPresentation&, const AbelianPresentation&) = default;
};

/// Z^d modulo the row space of `relations`.
inline AbelianPresentation cokernel(const IntMat& relations, std::size_t d) {
    for (const auto& row : relations)
        if (row.size() != d) throw DimensionError("cokernel: relation of wrong length");
    const SmithForm snf = smith_normal_form(relations, d);
    std::vector<std::size_t> free_cols, tors_cols;
    for (std::size_t k = 0; k < d; ++k) {
        const Int s = k < relations.size() ? snf.diagonal[k][k] : Int(0);
        if (s == 0)
            free_cols.push_back(k);
        else if (s > 1)
            tors_cols.push_back(k);
    }
    AbelianPresentation p;
    p.free_rank = free_cols.size();
    for (auto k : tors_cols) p.invariant_factors.push_back(snf.diagonal[k][k]);
    // new coordinates are y = x * right
    for (std::size_t i = 0; i < d; ++i) {
        IntVec img;
        for (auto k : free_cols) img.push_back(snf.right[i][k]);
        for (auto k : tors_cols) {
            const Int& s = snf.diagonal[k][k];
            Int r = snf.right[i][k] % s;
            if (r < 0) r += s;
            img.push_back(r);
        }
        p.generator_images.push_back(std::move(img));
    }
    return p;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin
// ---------------------------------------------------------------------------

/// A system of rational linear constraints over n variables.
class LinearSystem {
public:
    explicit LinearSystem(std::size_t nvars) : n_(nvars) {}

    std::size_t size() const noexcept { return n_; }

    void add_le(RatVec a, Rat b) { push(les_, std::move(a), std::move(b)); }
    void add_ge(RatVec a, Rat b) {
        for (auto& x : a) x = -x;
        push(les_, std::move(a), -b);
    }
    void add_eq(RatVec a, Rat b) { push(eqs_, std::move(a), std::move(b)); }
    void add_nonneg() {
        for (std::size_t j = 0; j < n_; ++j) {
            RatVec a(n_, Rat(0));
            a[j] = -1;
            add_le(std::move(a), Rat(0));
        }
    }

    const std::vector<std::pair<RatVec, Rat>>& inequalities() const noexcept { return les_; }
    const std::vector<std::pair<RatVec, Rat>>& equalities() const noexcept { return eqs_; }

private:
    void push(std::vector<std::pair<RatVec, Rat>>& dst, RatVec a, Rat b) {
        if (a.size() != n_) throw DimensionError("LinearSystem: constraint of wrong length");
        dst.emplace_back(std::move(a), std::move(b));
    }

    std::size_t n_;
    std::vector<std::pair<RatVec, Rat>> eqs_, les_;
};

/// Closed interval; missing ends are unbounded.
struct Interval {
    std::optional<Rat> lo, hi;
};

namespace detail {

struct Row {
    RatVec a;  // a . x <= b
    Rat b;
    boost::dynamic_bitset<> origin;
};

// Scale so that the first non-zero coefficient has absolute value 1.
inline void normalize(Row& r) {
    for (const auto& x : r.a) {
        if (x == 0) continue;
        const Rat s = 1 / abs(x);
        for (auto& y : r.a) y *= s;
        r.b *= s;
        return;
    }
}

/// Eliminate every variable not flagged in `keep`. Returns the surviving rows,
/// which only involve kept variables, or nullopt if the system is infeasible.
inline std::optional<std::vector<Row>> eliminate(const LinearSystem& sys, const std::vector<bool>& keep) {
    const std::size_t n = sys.size();
    auto kept = [&](std::size_t j) { return j < keep.size() && keep[j]; };
    std::vector<std::pair<RatVec, Rat>> eqs = sys.equalities();
    std::vector<Row> rows;
    const std::size_t m0 = sys.inequalities().size();
    const std::size_t width = m0 + 2 * eqs.size();
    for (std::size_t i = 0; i < m0; ++i) {
        Row r{sys.inequalities()[i].first, sys.inequalities()[i].second, boost::dynamic_bitset<>(width)};
        r.origin.set(i);
        rows.push_back(std::move(r));
    }
    std::size_t extra = m0;

    // substitute equalities away
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        const auto [a, b] = eqs[e];
        std::size_t p = n;
        for (std::size_t j = 0; j < n; ++j)
            if (!kept(j) && a[j] != 0) {
                p = j;
                break;
            }
        if (p == n) {
            if (std::any_of(a.begin(), a.end(), [](const Rat& x) { return x != 0; })) {
                Row up{a, b, boost::dynamic_bitset<>(width)};
                Row down = up;
                for (auto& x : down.a) x = -x;
                down.b = -b;
                up.origin.set(extra++);
                down.origin.set(extra++);
                rows.push_back(std::move(up));
                rows.push_back(std::move(down));
            } else if (b != 0) {
                return std::nullopt;
            }
            continue;
        }
        auto substitute = [&](RatVec& c, Rat& rhs) {
            if (c[p] == 0) return;
            const Rat f = c[p] / a[p];
            for (std::size_t j = 0; j < n; ++j) c[j] -= f * a[j];
            rhs -= f * b;
        };
        for (std::size_t e2 = e + 1; e2 < eqs.size(); ++e2) substitute(eqs[e2].first, eqs[e2].second);
        for (auto& r : rows) substitute(r.a, r.b);
    }

    // Drop rows dominated by a parallel row that is at least as tight and
    // has no more origins; keeping the smaller origin set is what lets the
    // Chernikov test below discard combinations safely.
    auto prune = [](std::vector<Row>& rs) -> bool {
        std::map<RatVec, std::vector<std::size_t>> parallel;
        std::vector<Row> out;
        for (auto& r : rs) {
            normalize(r);
            bool zero = std::all_of(r.a.begin(), r.a.end(), [](const Rat& x) { return x == 0; });
            if (zero) {
                if (r.b < 0) return false;
                continue;
            }
            auto& same = parallel[r.a];
            bool dominated = false;
            for (auto k : same)
                if (out[k].b <= r.b && out[k].origin.is_subset_of(r.origin)) {
                    dominated = true;
                    break;
                }
            if (dominated) continue;
            same.push_back(out.size());
            out.push_back(std::move(r));
        }
        rs = std::move(out);
        return true;
    };
    if (!prune(rows)) return std::nullopt;

    std::vector<bool> gone(n, false);
    for (std::size_t j = 0; j < n; ++j) gone[j] = kept(j);  // never eliminated
    std::size_t eliminated = 0;
    for (;;) {
        // cheapest remaining variable that still occurs
        std::size_t var = n, cost = std::numeric_limits<std::size_t>::max();
        for (std::size_t j = 0; j < n; ++j) {
            if (gone[j]) continue;
            std::size_t pos = 0, neg = 0;
            for (const auto& r : rows) {
                if (r.a[j] > 0) ++pos;
                if (r.a[j] < 0) ++neg;
            }
            if (pos + neg == 0) {
                gone[j] = true;
                continue;
            }
            std::size_t c = pos * neg;
            if (c < cost || (c == cost && j < var)) cost = c, var = j;
        }
        if (var == n) break;
        gone[var] = true;
        ++eliminated;
        std::vector<Row> pos, neg, next;
        for (auto& r : rows) {
            if (r.a[var] > 0)
                pos.push_back(std::move(r));
            else if (r.a[var] < 0)
                neg.push_back(std::move(r));
            else
                next.push_back(std::move(r));
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                boost::dynamic_bitset<> origin = p.origin | q.origin;
                if (origin.count() > eliminated + 1) continue;  // Chernikov
                const Rat fp = 1 / p.a[var], fq = -1 / q.a[var];
                Row r{RatVec(n), p.b * fp + q.b * fq, std::move(origin)};
                for (std::size_t j = 0; j < n; ++j) r.a[j] = p.a[j] * fp + q.a[j] * fq;
                r.a[var] = 0;
                next.push_back(std::move(r));
            }
        rows = std::move(next);
        if (!prune(rows)) return std::nullopt;
    }
    return rows;
}

inline std::optional<std::vector<Row>> eliminate_all_but(const LinearSystem& sys, std::size_t keep) {
    std::vector<bool> k(sys.size(), false);
    if (keep < k.size()) k[keep] = true;
    return eliminate(sys, k);
}

} // namespace detail

inline bool feasible(const LinearSystem& sys) {
    return detail::eliminate_all_but(sys, std::numeric_limits<std::size_t>::max()).has_value();
}

/// Exact range of variable `var` over the feasible set; nullopt if empty.
inline std::optional<Interval> project(const LinearSystem& sys, std::size_t var) {
    if (var >= sys.size()) throw std::out_of_range("project: variable index out of range");
    auto rows = detail::eliminate_all_but(sys, var);
    if (!rows) return std::nullopt;
    Interval iv;
    for (const auto& r : *rows) {
        const Rat& c = r.a[var];
        const Rat v = r.b / c;
        if (c > 0) {
            if (!iv.hi || v < *iv.hi) iv.hi = v;
        } else if (c < 0) {
            if (!iv.lo || v > *iv.lo) iv.lo = v;
        }
    }
    if (iv.lo && iv.hi && *iv.lo > *iv.hi) return std::nullopt;
    return iv;
}

// ---------------------------------------------------------------------------
// Cones
// ---------------------------------------------------------------------------

/// Cone generated by non-zero integer vectors of a common dimension.
class ConeZ {
public:
    explicit ConeZ(std::size_t dim) : dim_(dim) {}
    ConeZ(std::size_t dim, IntMat generators) : dim_(dim), gens_(std::move(generators)) {
        for (const auto& g : gens_) {
            if (g.size() != dim_) throw DimensionError("ConeZ: generator of wrong length");
            if (is_zero(g)) throw DimensionError("ConeZ: zero generator");
        }
    }
    explicit ConeZ(const IntMat& generators) : ConeZ(cols_of(generators), generators) {
        if (gens_.empty()) throw DimensionError("ConeZ: dimension of an empty generator list is unknown");
    }

    std::size_t dim() const noexcept { return dim_; }
    const IntMat& generators() const noexcept { return gens_; }

private:
    std::size_t dim_;
    IntMat gens_;
};

inline bool cone_contains(const ConeZ& c, std::span<const Int> v) {
    if (v.size() != c.dim()) throw DimensionError("cone_contains: vector of wrong length");
    if (is_zero(v)) return true;
    const std::size_t k = c.generators().size();
    if (k == 0) return false;
    LinearSystem sys(k);
    sys.add_nonneg();
    for (std::size_t coord = 0; coord < c.dim(); ++coord) {
        RatVec row(k);
        for (std::size_t g = 0; g < k; ++g) row[g] = Rat(c.generators()[g][coord]);
        sys.add_eq(std::move(row), Rat(v[coord]));
    }
    return feasible(sys);
}

/// Generators of the dual cone {y : g . y >= 0 for all generators g}, as a
/// lineality basis plus extreme rays modulo lineality (double description).
struct DualCone {
    IntMat lineality;
    IntMat rays;
};

inline DualCone dual_cone(const ConeZ& c) {
    const std::size_t d = c.dim();
    const IntMat& G = c.generators();
    const std::size_t m = G.size();
    struct Ray {
        IntVec v;
        boost::dynamic_bitset<> zero;  // constraints processed so far that vanish on v
    };
    IntMat lin = identity(d);
    std::vector<Ray> rays;

    for (std::size_t k = 0; k < m; ++k) {
        const IntVec& a = G[k];
        std::optional<std::size_t> piv;
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (dot(a, lin[i]) != 0) {
                piv = i;
                break;
            }
        if (piv) {
            IntVec l0 = lin[*piv];
            Int s = dot(a, l0);
            if (s < 0) {
                l0 = scale(Int(-1), l0);
                s = -s;
            }
            IntMat next_lin;
            for (std::size_t i = 0; i < lin.size(); ++i) {
                if (i == *piv) continue;
                next_lin.push_back(primitive(sub(scale(s, lin[i]), scale(dot(a, lin[i]), l0))));
            }
            for (auto& r : rays) {
                r.v = primitive(sub(scale(s, r.v), scale(dot(a, r.v), l0)));
                r.zero.resize(m);
                r.zero.set(k);
            }
            Ray fresh{primitive(l0), boost::dynamic_bitset<>(m)};
            for (std::size_t j = 0; j < k; ++j) fresh.zero.set(j);
            rays.push_back(std::move(fresh));
            lin = std::move(next_lin);
            continue;
        }
        std::vector<std::size_t> pos, neg;
        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            rays[i].zero.resize(m);
            const Int s = dot(a, rays[i].v);
            if (s > 0)
                pos.push_back(i);
            else if (s < 0)
                neg.push_back(i);
        }
        for (auto ip : pos) {
            for (auto iq : neg) {
                const Ray& p = rays[ip];
                const Ray& q = rays[iq];
                const boost::dynamic_bitset<> common = p.zero & q.zero;
                bool adjacent = true;
                for (std::size_t i = 0; i < rays.size() && adjacent; ++i)
                    if (i != ip && i != iq && common.is_subset_of(rays[i].zero)) adjacent = false;
                if (!adjacent) continue;
                const Int sp = dot(a, p.v), sq = dot(a, q.v);
                Ray r{primitive(sub(scale(sp, q.v), scale(sq, p.v))), common};
                r.zero.set(k);
                next.push_back(std::move(r));
            }
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            const Int s = dot(a, rays[i].v);
            if (s < 0) continue;
            Ray r = rays[i];
            if (s == 0) r.zero.set(k);
            next.push_back(std::move(r));
        }
        rays = std::move(next);
    }
    DualCone out;
    out.lineality = std::move(lin);
    for (auto& r : rays) out.rays.push_back(std::move(r.v));
    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
}

/// True iff the cone contains no line.
inline bool is_pointed(const ConeZ& c) {
    if (c.generators().empty()) return true;
    const DualCone dual = dual_cone(c);
    IntMat all = dual.lineality;
    all.insert(all.end(), dual.rays.begin(), dual.rays.end());
    return rank(all) == c.dim();
}

/// Primitive generators of the extremal rays, sorted lexicographically.
/// Throws PointednessError if the cone contains a line.
inline IntMat extremal_rays(const ConeZ& c) {
    const std::size_t d = c.dim();
    std::set<IntVec> candidates;
    for (const auto& g : c.generators()) candidates.insert(primitive(g));
    if (candidates.empty()) return {};
    const DualCone dual = dual_cone(c);
    {
        IntMat all = dual.lineality;
        all.insert(all.end(), dual.rays.begin(), dual.rays.end());
        if (rank(all) != d) throw PointednessError("extremal_rays: cone contains a line");
    }
    IntMat out;
    for (const auto& g : candidates) {
        IntMat tight = dual.lineality;
        for (const auto& r : dual.rays)
            if (dot(r, g) == 0) tight.push_back(r);
        if (rank(tight) + 1 == d) out.push_back(g);
    }
    return out;  // std::set iteration order is already lexicographic
}

// ---------------------------------------------------------------------------
// Strict feasibility and lattice points
// ---------------------------------------------------------------------------

/// Is there a rational x with x_j >= 1 for j in `strict`, x_j = 0 otherwise,
/// and A x <= 0 row-wise?
inline bool strict_feasible(const RatMat& A, const std::vector<std::size_t>& strict, std::size_t nvars) {
    for (const auto& row : A)
        if (row.size() != nvars) throw DimensionError("strict_feasible: row of wrong length");
    for (auto j : strict)
        if (j >= nvars) throw std::out_of_range("strict_feasible: variable index out of range");
    const std::size_t k = strict.size();
    LinearSystem sys(k);
    for (std::size_t t = 0; t < k; ++t) {
        RatVec e(k, Rat(0));
        e[t] = 1;
        sys.add_ge(std::move(e), Rat(1));
    }
    for (const auto& row : A) {
        RatVec r(k);
        for (std::size_t t = 0; t < k; ++t) r[t] = row[strict[t]];
        sys.add_le(std::move(r), Rat(0));
    }
    return feasible(sys);
}

inline bool strict_feasible(const IntMat& A, const std::vector<std::size_t>& strict, std::size_t nvars) {
    return strict_feasible(to_rat(A), strict, nvars);
}

/// All x in Z^n, x >= 0, with A x = b, sorted lexicographically. Throws
/// RecessionError when {x >= 0 : A x = 0} is not {0}.
inline IntMat enumerate_nonneg_integer_solutions(const IntMat& A, const IntVec& b, std::size_t nvars) {
    const std::size_t m = A.size();
    if (b.size() != m) throw DimensionError("enumerate: right-hand side has wrong length");
    for (const auto& row : A)
        if (row.size() != nvars) throw DimensionError("enumerate: row of wrong length");
    if (nvars == 0) {
        if (is_zero(b)) return {IntVec{}};
        return {};
    }
    {
        LinearSystem rec(nvars);
        rec.add_nonneg();
        for (const auto& row : A) rec.add_eq(RatVec(row.begin(), row.end()), Rat(0));
        rec.add_eq(RatVec(nvars, Rat(1)), Rat(1));
        if (feasible(rec)) throw RecessionError("enumerate: solution set is unbounded");
    }
    LinearSystem sys(nvars);
    sys.add_nonneg();
    for (std::size_t i = 0; i < m; ++i) sys.add_eq(RatVec(A[i].begin(), A[i].end()), Rat(b[i]));

    IntVec hi(nvars);
    for (std::size_t j = 0; j < nvars; ++j) {
        auto iv = project(sys, j);
        if (!iv) return {};
        hi[j] = floor_rat(*iv->hi);  // bounded, so hi exists
        if (hi[j] < 0) return {};
    }

    // x_pivot = rhs - sum_free coeff * x_free
    RatMat aug(m, RatVec(nvars + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < nvars; ++j) aug[i][j] = Rat(A[i][j]);
        aug[i][nvars] = Rat(b[i]);
    }
    const auto piv = rref(aug, nvars + 1);
    if (!piv.empty() && piv.back() == nvars) return {};
    std::vector<bool> is_pivot(nvars, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::size_t> free_vars;
    for (std::size_t j = 0; j < nvars; ++j)
        if (!is_pivot[j]) free_vars.push_back(j);

    IntMat out;
    IntVec x = zeros(nvars);
    auto emit = [&]() {
        for (std::size_t r = 0; r < piv.size(); ++r) {
            Rat v = aug[r][nvars];
            for (auto f : free_vars) v -= aug[r][f] * Rat(x[f]);
            if (!is_integral(v) || v < 0) return;
            Int iv = boost::multiprecision::numerator(v);
            if (iv > hi[piv[r]]) return;
            x[piv[r]] = iv;
        }
        out.push_back(x);
    };
    auto rec = [&](auto&& self, std::size_t t) -> void {
        if (t == free_vars.size()) {
            emit();
            return;
        }
        const std::size_t f = free_vars[t];
        for (Int v = 0; v <= hi[f]; ++v) {
            x[f] = v;
            self(self, t + 1);
        }
        x[f] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// The integer points {x in Z^n : x >= 0, A x <= b} for a fixed A and any
/// right-hand side b. The projections onto x_0..x_t are eliminated once with
/// b kept symbolic, so each query is a depth-first search over exact integer
/// bounds with no further elimination.
class NonnegIntegerProgram {
public:
    NonnegIntegerProgram(const IntMat& A, std::size_t nvars) : A_(A), n_(nvars) {
        for (const auto& row : A_)
            if (row.size() != n_) throw DimensionError("integer program: row of wrong length");
        const std::size_t m = A_.size(), w = n_ + m;
        // variables (x, b); rows A x - b <= 0 and -x <= 0
        LinearSystem sys(w);
        for (std::size_t i = 0; i < m; ++i) {
            RatVec r(w, Rat(0));
            for (std::size_t j = 0; j < n_; ++j) r[j] = A_[i][j];
            r[n_ + i] = -1;
            sys.add_le(std::move(r), Rat(0));
        }
        for (std::size_t j = 0; j < n_; ++j) {
            RatVec r(w, Rat(0));
            r[j] = -1;
            sys.add_le(std::move(r), Rat(0));
        }
        // levels_[t] describes the projection onto x_0..x_{t-1} and b
        levels_.resize(n_ + 1);
        std::vector<detail::Row> rows;
        for (const auto& [a, rhs] : sys.inequalities()) rows.push_back({a, rhs, {}});
        for (std::size_t t = n_ + 1; t-- > 0;) {
            std::vector<bool> keep(w, false);
            for (std::size_t j = 0; j < t; ++j) keep[j] = true;
            for (std::size_t i = 0; i < m; ++i) keep[n_ + i] = true;
            LinearSystem level(w);
            for (const auto& r : rows) level.add_le(r.a, r.b);
            rows = *detail::eliminate(level, keep);  // homogeneous, so never empty
            for (const auto& r : rows) levels_[t].push_back(integral_row(r.a));
        }
    }

    std::size_t size() const noexcept { return n_; }

    /// Lexicographically first point for right-hand side b. Throws
    /// RecessionError when a coordinate it has to branch on is unbounded.
    std::optional<IntVec> find(const IntVec& b) const {
        if (b.size() != A_.size()) throw DimensionError("integer program: right-hand side has wrong length");
        for (const auto& row : levels_[0])
            if (eval(row, b, IntVec{}, 0) < 0) return std::nullopt;
        IntVec x;
        x.reserve(n_);
        if (search(b, x)) return x;
        return std::nullopt;
    }

private:
    static Int floor_div(const Int& a, const Int& b) {  // b > 0
        Int q = a / b;
        if (a % b != 0 && a < 0) q -= 1;
        return q;
    }

    static IntVec integral_row(const RatVec& a) {
        Int l = 1;
        for (const auto& q : a) l = boost::multiprecision::lcm(l, Int(boost::multiprecision::denominator(q)));
        IntVec out;
        for (const auto& q : a) out.push_back(boost::multiprecision::numerator(q) * (l / boost::multiprecision::denominator(q)));
        return out;
    }

    // -(row . (x_0..x_{t-1}, 0.., b)): the slack with x_t left out
    Int eval(const IntVec& row, const IntVec& b, const IntVec& x, std::size_t t) const {
        Int s = 0;
        for (std::size_t j = 0; j < t; ++j) s -= row[j] * x[j];
        for (std::size_t i = 0; i < b.size(); ++i) s -= row[n_ + i] * b[i];
        return s;
    }

    bool search(const IntVec& b, IntVec& x) const {
        const std::size_t t = x.size();
        if (t == n_) return true;
        // rows of level t+1 bound x_t given x_0..x_{t-1}: c x_t <= slack
        std::optional<Int> lo, hi;
        for (const auto& row : levels_[t + 1]) {
            const Int& c = row[t];
            if (c == 0) continue;
            const Int slack = eval(row, b, x, t);
            if (c > 0) {
                const Int v = floor_div(slack, c);
                if (!hi || v < *hi) hi = v;
            } else {
                const Int v = -floor_div(slack, -c);  // ceil(slack / c)
                if (!lo || v > *lo) lo = v;
            }
        }
        if (!hi) throw RecessionError("integer program: variable " + std::to_string(t) + " is unbounded");
        for (Int v = lo ? *lo : Int(0); v <= *hi; ++v) {
            x.push_back(v);
            if (search(b, x)) return true;
            x.pop_back();
        }
        return false;
    }

    IntMat A_;
    std::size_t n_;
    std::vector<IntMat> levels_;
};

/// Lexicographically first x in Z^n, x >= 0, with A x <= b.
inline std::optional<IntVec> find_nonneg_integer_point(const IntMat& A, const IntVec& b, std::size_t nvars) {
    return NonnegIntegerProgram(A, nvars).find(b);
}

} // namespace wonder
