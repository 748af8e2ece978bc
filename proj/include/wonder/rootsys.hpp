#pragma once

/**
 * @file rootsys.hpp
 * @brief Root systems of types A-G and their products, weights in the
 *        fundamental-weight basis, Weyl dimensions.
 *
 * Cartan convention: cartan[i][j] = <alpha_i, alpha_j^vee> (row = root,
 * column = coroot). With this convention row i of the Cartan matrix is the
 * simple root alpha_i written in fundamental-weight coordinates. Nodes follow
 * Bourbaki numbering inside each factor; factors are concatenated in the
 * order they were given.
 */

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wonder/arith.hpp"
#include "wonder/errors.hpp"

namespace wonder {

/// A weight, in fundamental-weight coordinates of its ambient root system.
struct Weight {
    IntVec coords;

    Weight() = default;
    explicit Weight(IntVec c) : coords(std::move(c)) {}

    std::size_t size() const noexcept { return coords.size(); }
    const Int& operator[](std::size_t i) const { return coords[i]; }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }
};

struct Factor {
    char type = 'A';  // upper case A-G
    int rank = 1;

    friend bool operator==(const Factor&, const Factor&) = default;
};

namespace detail {

inline void check_admissible(const Factor& f) {
    const int n = f.rank;
    bool ok = false;
    switch (f.type) {
        case 'A': ok = n >= 1; break;
        case 'B': ok = n >= 2; break;
        case 'C': ok = n >= 2; break;
        case 'D': ok = n >= 3; break;
        case 'E': ok = n >= 6 && n <= 8; break;
        case 'F': ok = n == 4; break;
        case 'G': ok = n == 2; break;
        default:
            throw DescriptorError(std::string("unknown root system type '") + f.type + "'");
    }
    if (!ok)
        throw DescriptorError(std::string("inadmissible rank ") + std::to_string(n) + " for type " + f.type);
}

inline IntMat factor_cartan(const Factor& f) {
    const std::size_t n = static_cast<std::size_t>(f.rank);
    IntMat a(n, zeros(n));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](std::size_t i, std::size_t j, int ij = -1, int ji = -1) {
        a[i][j] = ij;
        a[j][i] = ji;
    };
    switch (f.type) {
        case 'A':
            for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'B':  // alpha_n short
            for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 2, n - 1, -2, -1);
            break;
        case 'C':  // alpha_n long
            for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 2, n - 1, -1, -2);
            break;
        case 'D':
            for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case 'E':  // 1-3-4-5-...-n with 2 attached to 4
            link(0, 2);
            for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
            link(1, 3);
            break;
        case 'F':  // alpha_3, alpha_4 short
            link(0, 1);
            link(1, 2, -2, -1);
            link(2, 3);
            break;
        case 'G':  // alpha_1 short, alpha_2 long
            link(0, 1, -1, -3);
            break;
    }
    return a;
}

} // namespace detail

/// Parse "A3", "b2xG2", ... into factors. Throws DescriptorError.
inline std::vector<Factor> parse_type_spec(std::string_view spec) {
    std::vector<Factor> out;
    std::size_t pos = 0;
    if (spec.empty()) throw DescriptorError("empty root system descriptor");
    while (pos <= spec.size()) {
        std::size_t end = pos;
        while (end < spec.size() && spec[end] != 'x' && spec[end] != 'X') ++end;
        std::string_view tok = spec.substr(pos, end - pos);
        if (tok.size() < 2) throw DescriptorError("malformed factor '" + std::string(tok) + "' in '" + std::string(spec) + "'");
        Factor f;
        f.type = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
        int r = 0;
        for (char c : tok.substr(1)) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw DescriptorError("malformed rank in factor '" + std::string(tok) + "'");
            r = r * 10 + (c - '0');
            if (r > 1000) throw DescriptorError("rank too large in '" + std::string(tok) + "'");
        }
        f.rank = r;
        detail::check_admissible(f);
        out.push_back(f);
        if (end == spec.size()) break;
        pos = end + 1;
    }
    return out;
}

class RootSystem {
public:
    RootSystem() = default;

    explicit RootSystem(std::vector<Factor> factors) : factors_(std::move(factors)) {
        if (factors_.empty()) throw DescriptorError("root system needs at least one factor");
        for (const auto& f : factors_) {
            detail::check_admissible(f);
            offsets_.push_back(rank_);
            rank_ += static_cast<std::size_t>(f.rank);
        }
        cartan_.assign(rank_, zeros(rank_));
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            const IntMat block = detail::factor_cartan(factors_[k]);
            for (std::size_t i = 0; i < block.size(); ++i)
                for (std::size_t j = 0; j < block.size(); ++j) cartan_[offsets_[k] + i][offsets_[k] + j] = block[i][j];
        }
        compute_lengths();
        compute_positive_roots();
    }

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    std::size_t rank() const noexcept { return rank_; }
    const IntMat& cartan() const noexcept { return cartan_; }
    /// Positive roots in the simple-root basis, sorted lexicographically.
    const IntMat& positive_roots() const noexcept { return positive_roots_; }
    /// Offset of factor k's first node in the concatenated numbering.
    std::size_t offset(std::size_t k) const { return offsets_.at(k); }
    std::size_t factor_of(std::size_t node) const {
        for (std::size_t k = factors_.size(); k-- > 0;)
            if (node >= offsets_[k]) return k;
        return 0;
    }
    /// (alpha_i, alpha_i) up to a positive factor per irreducible component.
    const IntVec& root_lengths() const noexcept { return lengths_; }

    /// Canonical descriptor, e.g. "B2xG2".
    std::string spec() const {
        std::string s;
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            if (k) s += "x";
            s += factors_[k].type;
            s += std::to_string(factors_[k].rank);
        }
        return s;
    }

    friend bool operator==(const RootSystem& a, const RootSystem& b) { return a.factors_ == b.factors_; }

private:
    void compute_lengths() {
        // cartan[i][j] * d_j = cartan[j][i] * d_i with d_i = (alpha_i, alpha_i) / 2
        std::vector<Rat> d(rank_, Rat(0));
        for (std::size_t start = 0; start < rank_; ++start) {
            if (d[start] != 0) continue;
            d[start] = 1;
            std::vector<std::size_t> comp{start};
            std::queue<std::size_t> q;
            q.push(start);
            while (!q.empty()) {
                std::size_t i = q.front();
                q.pop();
                for (std::size_t j = 0; j < rank_; ++j) {
                    if (i == j || cartan_[i][j] == 0 || d[j] != 0) continue;
                    d[j] = d[i] * Rat(cartan_[j][i]) / Rat(cartan_[i][j]);
                    comp.push_back(j);
                    q.push(j);
                }
            }
            Int l = 1;
            for (auto i : comp) {
                Int den = boost::multiprecision::denominator(d[i]);
                l = l / boost::multiprecision::gcd(l, den) * den;
            }
            for (auto i : comp) d[i] *= Rat(l);
        }
        lengths_.resize(rank_);
        for (std::size_t i = 0; i < rank_; ++i) lengths_[i] = boost::multiprecision::numerator(d[i]);
    }

    void compute_positive_roots() {
        std::set<IntVec> seen;
        std::queue<IntVec> q;
        for (std::size_t i = 0; i < rank_; ++i) {
            seen.insert(unit(rank_, i));
            q.push(unit(rank_, i));
        }
        while (!q.empty()) {
            IntVec beta = q.front();
            q.pop();
            for (std::size_t j = 0; j < rank_; ++j) {
                Int pairing = 0;
                for (std::size_t i = 0; i < rank_; ++i) pairing += beta[i] * cartan_[i][j];
                if (pairing == 0) continue;
                IntVec img = beta;
                img[j] -= pairing;
                if (img[j] < 0) continue;  // only alpha_j itself maps to a negative root
                if (seen.insert(img).second) q.push(img);
            }
        }
        positive_roots_.assign(seen.begin(), seen.end());
    }

    std::vector<Factor> factors_;
    std::vector<std::size_t> offsets_;
    std::size_t rank_ = 0;
    IntMat cartan_;
    IntVec lengths_;
    IntMat positive_roots_;
};

inline RootSystem build_root_system(std::string_view spec) { return RootSystem(parse_type_spec(spec)); }

/// Standard number of positive roots of an irreducible factor.
inline std::size_t expected_positive_root_count(const Factor& f) {
    const std::size_t n = static_cast<std::size_t>(f.rank);
    switch (f.type) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
        case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
        case 'F': return 24;
        case 'G': return 6;
    }
    return 0;
}

/// Cartan matrix of the dual root system.
inline IntMat dual_cartan(const RootSystem& rs) { return transpose(rs.cartan()); }

inline void check_weight(const RootSystem& rs, const Weight& w) {
    if (w.size() != rs.rank())
        throw DimensionError("weight of length " + std::to_string(w.size()) + " in root system of rank " +
                             std::to_string(rs.rank()));
}

inline bool is_dominant(const RootSystem& rs, const Weight& w) {
    check_weight(rs, w);
    return std::all_of(w.coords.begin(), w.coords.end(), [](const Int& x) { return x >= 0; });
}

/// Dimension of the simple module with highest weight `w`:
/// prod over positive roots of <w + rho, beta^vee> / <rho, beta^vee>.
inline Int weyl_dim(const RootSystem& rs, const Weight& w) {
    if (!is_dominant(rs, w)) throw NotDominantError("weyl_dim: weight " + to_string(w.coords) + " is not dominant");
    const auto& len = rs.root_lengths();
    Int num = 1, den = 1;
    for (const auto& beta : rs.positive_roots()) {
        // <lambda, beta^vee> = sum_i lambda_i c_i d_i / d_beta; d_beta cancels in the ratio.
        Int a = 0, b = 0;
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            if (beta[i] == 0) continue;
            a += (w[i] + 1) * beta[i] * len[i];
            b += beta[i] * len[i];
        }
        num *= a;
        den *= b;
    }
    return num / den;
}

/// alpha_i in fundamental-weight coordinates (row i of the Cartan matrix).
inline Weight simple_root_weight_coords(const RootSystem& rs, std::size_t i) {
    if (i >= rs.rank()) throw std::out_of_range("simple root index " + std::to_string(i) + " out of range");
    return Weight(rs.cartan()[i]);
}

/// Coefficients x with w = sum_i x_i alpha_i, returned only when they are
/// non-negative integers.
inline std::optional<IntVec> decompose_in_simple_roots(const RootSystem& rs, const Weight& w) {
    check_weight(rs, w);
    auto x = solve_combination(rs.cartan(), w.coords);
    if (!x) return std::nullopt;
    IntVec out;
    for (const auto& q : *x) {
        if (!is_integral(q) || q < 0) return std::nullopt;
        out.push_back(boost::multiprecision::numerator(q));
    }
    return out;
}

/// The permutation sigma of the nodes induced by -w_0, so that
/// V(lambda)^* = V(lambda permuted by sigma).
inline std::vector<std::size_t> diagram_involution(const RootSystem& rs) {
    std::vector<std::size_t> sigma(rs.rank());
    for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = i;
    for (std::size_t k = 0; k < rs.factors().size(); ++k) {
        const Factor& f = rs.factors()[k];
        const std::size_t o = rs.offset(k), n = static_cast<std::size_t>(f.rank);
        if (f.type == 'A') {
            for (std::size_t i = 0; i < n; ++i) sigma[o + i] = o + n - 1 - i;
        } else if (f.type == 'D' && n % 2 == 1) {
            std::swap(sigma[o + n - 2], sigma[o + n - 1]);
        } else if (f.type == 'E' && n == 6) {
            const std::size_t e6[6] = {5, 1, 4, 3, 2, 0};
            for (std::size_t i = 0; i < 6; ++i) sigma[o + i] = o + e6[i];
        }
    }
    return sigma;
}

/// All permutations sigma of the nodes with cartan[sigma i][sigma j] = cartan[i][j]
/// (automorphisms of the Dynkin diagram, factor swaps included), identity first,
/// the rest in lexicographic order.
inline std::vector<std::vector<std::size_t>> diagram_automorphisms(const RootSystem& rs) {
    const std::size_t n = rs.rank();
    const IntMat& a = rs.cartan();
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> sigma(n);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            out.push_back(sigma);
            return;
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = a[c][sigma[j]] == a[i][j] && a[sigma[j]][c] == a[j][i];
            if (!ok) continue;
            // degree check keeps the search small on long chains
            std::size_t deg_i = 0, deg_c = 0;
            for (std::size_t j = 0; j < n; ++j) {
                deg_i += a[i][j] != 0;
                deg_c += a[c][j] != 0;
            }
            if (deg_i != deg_c) continue;
            used[c] = true;
            sigma[i] = c;
            self(self, i + 1);
            used[c] = false;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace wonder
