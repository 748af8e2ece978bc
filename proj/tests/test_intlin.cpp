#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wonder/intlin.hpp"

using namespace wonder;

namespace {

IntMat random_matrix(std::size_t rows, std::size_t cols, long long lo, long long hi) {
    IntMat m(rows, IntVec(cols));
    for (auto& r : m)
        for (auto& x : r) x = oracle::uniform(lo, hi);
    return m;
}

/// Random generators inside the open half-space w.x > 0, so the cone is pointed.
IntMat random_pointed_generators(std::size_t dim, std::size_t count) {
    IntVec w;
    for (std::size_t k = 0; k < dim; ++k) w.emplace_back(oracle::uniform(-3, 3));
    if (is_zero(w)) w[0] = 1;
    IntMat gens;
    while (gens.size() < count) {
        IntVec g;
        for (std::size_t k = 0; k < dim; ++k) g.emplace_back(oracle::uniform(-4, 4));
        if (dot(w, g) > 0) gens.push_back(g);
    }
    return gens;
}

} // namespace

TEST(SmithNormalForm, Examples) {
    EXPECT_EQ(smith_normal_form(int_mat({{2}})).invariant_factors, int_vec({2}));
    EXPECT_EQ(smith_normal_form(int_mat({{1, 0}, {1, 2}})).invariant_factors, int_vec({1, 2}));
    EXPECT_TRUE(smith_normal_form(int_mat({{0, 0, 0}, {0, 0, 0}})).invariant_factors.empty());
    EXPECT_EQ(smith_normal_form(int_mat({{2, 0}, {0, 3}})).invariant_factors, int_vec({1, 6}));
    EXPECT_TRUE(smith_normal_form(IntMat{}, 3).invariant_factors.empty());
}

TEST(SmithNormalForm, TransformsAreUnimodularAndExact) {
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t rows = oracle::uniform(1, 5), cols = oracle::uniform(1, 5);
        const IntMat m = random_matrix(rows, cols, -6, 6);
        const SmithForm s = smith_normal_form(m);
        EXPECT_EQ(matmul(matmul(s.left, m), s.right), s.diagonal);
        EXPECT_EQ(boost::multiprecision::abs(determinant(s.left)), 1);
        EXPECT_EQ(boost::multiprecision::abs(determinant(s.right)), 1);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j) {
                    EXPECT_EQ(s.diagonal[i][j], 0);
                }
        for (std::size_t k = 1; k < s.invariant_factors.size(); ++k)
            EXPECT_EQ(s.invariant_factors[k] % s.invariant_factors[k - 1], 0);
        // determinantal divisors give the same factors
        EXPECT_EQ(s.invariant_factors, oracle::invariant_factors(m));
        IntMat perm = m;
        std::shuffle(perm.begin(), perm.end(), oracle::rng());
        EXPECT_EQ(smith_normal_form(perm).invariant_factors, s.invariant_factors);
    }
}

TEST(Cokernel, Examples) {
    auto p = cokernel(int_mat({{1, 0}}), 2);
    EXPECT_EQ(p.free_rank, 1u);
    EXPECT_TRUE(p.invariant_factors.empty());
    p = cokernel(int_mat({{2}}), 1);
    EXPECT_EQ(p.free_rank, 0u);
    EXPECT_EQ(p.invariant_factors, int_vec({2}));
    p = cokernel(int_mat({{2, 0}, {0, 3}}), 2);
    EXPECT_EQ(p.free_rank, 0u);
    EXPECT_EQ(p.invariant_factors, int_vec({6}));
    EXPECT_EQ(p.generator_images.size(), 2u);
}

TEST(Cokernel, ImagesKillRelations) {
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = oracle::uniform(1, 5), rows = oracle::uniform(0, 4);
        const IntMat rel = random_matrix(rows, d, -5, 5);
        const auto p = cokernel(rel, d);
        ASSERT_EQ(p.generator_images.size(), d);
        for (const auto& r : rel) {
            const IntVec img = vecmul(r, p.generator_images, p.free_rank + p.invariant_factors.size());
            for (std::size_t k = 0; k < p.free_rank; ++k) EXPECT_EQ(img[k], 0);
            for (std::size_t t = 0; t < p.invariant_factors.size(); ++t)
                EXPECT_EQ(img[p.free_rank + t] % p.invariant_factors[t], 0);
        }
        EXPECT_EQ(p.free_rank + (rel.empty() ? 0 : rank(rel)), d);
    }
}

TEST(ExtremalRays, Examples) {
    EXPECT_EQ(extremal_rays(ConeZ(int_mat({{1, 0}, {0, 1}, {2, -2}, {-1, 2}}))), int_mat({{-1, 2}, {1, -1}}));
    EXPECT_EQ(extremal_rays(ConeZ(int_mat({{1, 0}, {0, 1}}))), int_mat({{0, 1}, {1, 0}}));
    EXPECT_EQ(extremal_rays(ConeZ(int_mat({{1, 0}, {1, 1}, {1, 2}}))), int_mat({{1, 0}, {1, 2}}));
    EXPECT_THROW(extremal_rays(ConeZ(int_mat({{1, 0}, {-1, 0}}))), PointednessError);
    EXPECT_THROW(extremal_rays(ConeZ(int_mat({{1, 0}, {0, 1}, {-1, -1}}))), PointednessError);
    EXPECT_THROW(ConeZ(int_mat({{0, 0}})), DimensionError);
    EXPECT_THROW(ConeZ(2, int_mat({{1, 0, 0}})), DimensionError);
}

TEST(ExtremalRays, MinimalGeneratingSubset) {
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t dim = oracle::uniform(2, 4), count = oracle::uniform(1, 7);
        const IntMat gens = random_pointed_generators(dim, count);
        const IntMat rays = extremal_rays(ConeZ(dim, gens));
        std::set<IntVec> inputs;
        for (const auto& g : gens) inputs.insert(primitive(g));
        for (const auto& r : rays) EXPECT_TRUE(inputs.count(r));
        const ConeZ out(dim, rays);
        for (const auto& g : gens) EXPECT_TRUE(cone_contains(out, g));
        for (std::size_t k = 0; k < rays.size(); ++k) {
            IntMat others = rays;
            others.erase(others.begin() + static_cast<long>(k));
            EXPECT_FALSE(cone_contains(ConeZ(dim, others), rays[k]));
        }
        EXPECT_TRUE(std::is_sorted(rays.begin(), rays.end()));
    }
}

TEST(ConeContains, Examples) {
    EXPECT_TRUE(cone_contains(ConeZ(int_mat({{2, -2}, {-1, 2}})), int_vec({1, 0})));
    EXPECT_FALSE(cone_contains(ConeZ(int_mat({{1, 0}})), int_vec({0, 1})));
    EXPECT_TRUE(cone_contains(ConeZ(int_mat({{1, 0}})), int_vec({0, 0})));
    EXPECT_THROW(cone_contains(ConeZ(int_mat({{1, 0}})), int_vec({1})), DimensionError);
}

TEST(StrictFeasible, Examples) {
    EXPECT_FALSE(strict_feasible(int_mat({{2}}), {0}, 1));
    EXPECT_TRUE(strict_feasible(int_mat({{-1}}), {0}, 1));
    EXPECT_TRUE(strict_feasible(IntMat{}, {0}, 1));
    EXPECT_TRUE(strict_feasible(int_mat({{2, -1}}), {0, 1}, 2));
    EXPECT_FALSE(strict_feasible(int_mat({{2, -1}}), {0}, 2));
}

TEST(StrictFeasible, ColumnScalingInvariance) {
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = oracle::uniform(1, 4), m = oracle::uniform(0, 4);
        const IntMat a = random_matrix(m, n, -3, 3);
        std::vector<std::size_t> strict;
        for (std::size_t j = 0; j < n; ++j)
            if (oracle::uniform(0, 1)) strict.push_back(j);
        RatMat scaled = to_rat(a);
        for (std::size_t j = 0; j < n; ++j) {
            const Rat s(oracle::uniform(1, 5), oracle::uniform(1, 5));
            for (auto& row : scaled) row[j] *= s;
        }
        EXPECT_EQ(strict_feasible(a, strict, n), strict_feasible(scaled, strict, n));
    }
}

TEST(Enumerate, Examples) {
    EXPECT_EQ(enumerate_nonneg_integer_solutions(int_mat({{1, 2}}), int_vec({2}), 2), int_mat({{0, 1}, {2, 0}}));
    EXPECT_EQ(enumerate_nonneg_integer_solutions(int_mat({{1, 2}}), int_vec({0}), 2), int_mat({{0, 0}}));
    EXPECT_THROW(enumerate_nonneg_integer_solutions(int_mat({{1, -1}}), int_vec({1}), 2), RecessionError);
    EXPECT_TRUE(enumerate_nonneg_integer_solutions(int_mat({{2, 4}}), int_vec({3}), 2).empty());
}

TEST(Enumerate, AgreesWithBoxSearch) {
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = oracle::uniform(1, 5), m = oracle::uniform(1, 3);
        IntMat a = random_matrix(m, n, -2, 3);
        for (auto& x : a[0]) x = oracle::uniform(1, 3);  // bounded: positive first row
        IntVec b;
        for (std::size_t i = 0; i < m; ++i) b.emplace_back(oracle::uniform(-2, 6));
        b[0] = oracle::uniform(0, 6);
        // x_j <= b_0 / a_0j bounds every coordinate
        IntMat brute;
        IntVec x = zeros(n);
        auto rec = [&](auto&& self, std::size_t j) -> void {
            if (j == n) {
                if (vecmul(x, transpose(a), m) == b) brute.push_back(x);
                return;
            }
            for (Int v = 0; v * a[0][j] <= b[0]; ++v) {
                x[j] = v;
                self(self, j + 1);
            }
            x[j] = 0;
        };
        rec(rec, 0);
        EXPECT_EQ(enumerate_nonneg_integer_solutions(a, b, n), brute);
    }
}

TEST(FourierMotzkin, ProjectionInterval) {
    LinearSystem sys(2);
    sys.add_nonneg();
    sys.add_le({Rat(1), Rat(1)}, Rat(4));
    sys.add_ge({Rat(1), Rat(-1)}, Rat(1));
    const auto iv = project(sys, 0);
    ASSERT_TRUE(iv);
    EXPECT_EQ(*iv->lo, Rat(1));
    EXPECT_EQ(*iv->hi, Rat(4));
    const auto iy = project(sys, 1);
    EXPECT_EQ(*iy->lo, Rat(0));
    EXPECT_EQ(*iy->hi, Rat(3, 2));
    sys.add_ge({Rat(0), Rat(1)}, Rat(2));
    EXPECT_FALSE(feasible(sys));
}

TEST(IntegerProgram, Examples) {
    // x + 2y <= 3, y <= 1
    const NonnegIntegerProgram p(int_mat({{1, 2}, {0, 1}}), 2);
    EXPECT_EQ(p.find(int_vec({3, 1})), int_vec({0, 0}));
    EXPECT_EQ(p.find(int_vec({-1, 1})), std::nullopt);
    // 2x >= 1 and 2x <= 1 has a rational point only
    EXPECT_EQ(find_nonneg_integer_point(int_mat({{-2}, {2}}), int_vec({-1, 1}), 1), std::nullopt);
    EXPECT_EQ(find_nonneg_integer_point(int_mat({{-2}, {2}}), int_vec({-2, 3}), 1), int_vec({1}));
    EXPECT_THROW(find_nonneg_integer_point(int_mat({{-1}}), int_vec({-1}), 1), RecessionError);
    EXPECT_EQ(find_nonneg_integer_point(IntMat{}, IntVec{}, 0), IntVec{});
}

TEST(IntegerProgram, AgreesWithBoxSearch) {
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = oracle::uniform(1, 3), m = oracle::uniform(1, 4);
        IntMat a = random_matrix(m, n, -3, 3);
        a.push_back(IntVec(n, Int(1)));  // x_1 + ... + x_n <= 6 keeps the set bounded
        IntVec b;
        for (std::size_t i = 0; i < m; ++i) b.emplace_back(oracle::uniform(-4, 6));
        b.emplace_back(6);
        const NonnegIntegerProgram p(a, n);
        std::optional<IntVec> first;
        IntVec x = zeros(n);
        for (;;) {
            bool ok = true;
            for (std::size_t i = 0; i <= m && ok; ++i) ok = dot(a[i], x) <= b[i];
            if (ok) {
                first = x;
                break;
            }
            // lexicographic order: the last coordinate moves fastest
            std::size_t j = n;
            while (j-- > 0 && x[j] == 6) x[j] = 0;
            if (j == std::size_t(-1)) break;
            ++x[j];
        }
        EXPECT_EQ(p.find(b), first);
    }
}
