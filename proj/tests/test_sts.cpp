#include "doctest.h"

#include "stratavol/sts.hpp"

#include <algorithm>
#include <numeric>

using namespace stratavol::sts;
using stratavol::exact::factorial;

namespace {

std::uint64_t divisor_sum(int m) {
    std::uint64_t s = 0;
    for (int d = 1; d <= m; ++d) {
        if (m % d == 0) s += static_cast<std::uint64_t>(d);
    }
    return s;
}

// Number of labeled pairs (sigma_h, sigma_v) on N squares lying in H(2g-2).
std::uint64_t labeled_pairs(int g, int N) {
    std::vector<int> h(N);
    std::iota(h.begin(), h.end(), 0);
    std::uint64_t count = 0;
    do {
        std::vector<int> v(N);
        std::iota(v.begin(), v.end(), 0);
        do {
            if (in_minimal_stratum(SquareTiledSurface(h, v), g)) ++count;
        } while (std::next_permutation(v.begin(), v.end()));
    } while (std::next_permutation(h.begin(), h.end()));
    return count;
}

}  // namespace

TEST_CASE("torus enumeration") {
    CHECK(enumerate_sts(1, 1).size() == 1);
    CHECK(enumerate_sts(1, 2).size() == 3);
    CHECK(enumerate_sts(1, 3).size() == 4);
    for (int N = 1; N <= 8; ++N) {
        CHECK(enumerate_sts(1, N).size() == divisor_sum(N));
        // Square-tiled tori are normal covers: the centralizer acts simply transitively.
        for (const auto& cls : enumerate_sts(1, N)) CHECK(cls.automorphisms == N);
    }
    CHECK_THROWS_AS(enumerate_sts(1, 9), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_sts(0, 3), std::invalid_argument);
}

TEST_CASE("minimal stratum needs at least 2g - 1 squares") {
    CHECK(enumerate_sts(2, 1).empty());
    CHECK(enumerate_sts(2, 2).empty());
    CHECK(!enumerate_sts(2, 3).empty());
    CHECK(enumerate_sts(3, 4).empty());
    CHECK(!enumerate_sts(3, 5).empty());
}

TEST_CASE("zero profiles") {
    CHECK(zero_profile(SquareTiledSurface({0}, {0})) == std::vector<int>{0});
    CHECK(zero_profile(SquareTiledSurface({1, 2, 0}, {1, 0, 2})) == std::vector<int>{2});
    CHECK_THROWS_AS(zero_profile(SquareTiledSurface({0, 1}, {0, 1})), std::invalid_argument);
    CHECK(zero_profile(SquareTiledSurface({1, 0}, {0, 1})) == std::vector<int>{0});
    CHECK_THROWS_AS(SquareTiledSurface({0, 0}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SquareTiledSurface({0}, {0, 1}), std::invalid_argument);

    for (int g = 1; g <= 3; ++g) {
        for (int N = 1; N <= 6; ++N) {
            for (const auto& cls : enumerate_sts(g, N)) {
                CHECK(zero_profile(cls.surface) == std::vector<int>{2 * g - 2});
            }
        }
    }
}

TEST_CASE("cylinder decompositions") {
    const auto one_row = cylinder_decomposition(SquareTiledSurface({1, 0}, {1, 0}));
    CHECK(one_row.cylinders == std::vector<Cylinder>{{2, 1}});

    const auto stacked = cylinder_decomposition(SquareTiledSurface({0, 1}, {1, 0}));
    CHECK(stacked.cylinders == std::vector<Cylinder>{{1, 2}});

    const auto l_shape = cylinder_decomposition(SquareTiledSurface({1, 2, 0}, {1, 0, 2}));
    CHECK(l_shape.cylinders == std::vector<Cylinder>{{3, 1}});

    // Row {0,1} on top of row {2}: two cylinders.
    const auto two = cylinder_decomposition(SquareTiledSurface({1, 0, 2}, {2, 1, 0}));
    CHECK(two.cylinders.size() == 2);
    CHECK(two.area() == 3);

    for (int g = 1; g <= 3; ++g) {
        for (int N = 1; N <= 7; ++N) {
            for (const auto& cls : enumerate_sts(g, N)) {
                const auto d = cylinder_decomposition(cls.surface);
                CHECK(d.area() == N);
                CHECK(!d.cylinders.empty());
                CHECK(static_cast<int>(d.cylinders.size()) <= g);
            }
        }
    }
}

TEST_CASE("class counts satisfy Burnside against labeled pairs") {
    for (int g = 1; g <= 3; ++g) {
        for (int N = 1; N <= 6; ++N) {
            Rational total = 0;
            for (const auto& cls : enumerate_sts(g, N)) total += Rational(factorial(N)) / Rational(cls.automorphisms);
            CHECK(total == Rational(Integer(static_cast<unsigned long>(labeled_pairs(g, N)))));
        }
    }
}

TEST_CASE("census") {
    const auto c2 = census(1, 2);
    std::uint64_t cumulative = 0;
    for (const auto& [key, entry] : c2) {
        CHECK(key.second == 1);
        cumulative += entry.count;
    }
    CHECK(cumulative == 4);

    const auto c3 = census(1, 3);
    cumulative = 0;
    for (const auto& [key, entry] : c3) cumulative += entry.count;
    CHECK(cumulative == 8);

    // Regression fixture for genus 2, frozen from the enumeration.
    const auto g2 = census(2, 4);
    CHECK(g2.at({3, 1}).count == 1);
    CHECK(g2.at({3, 2}).count == 2);
    CHECK(g2.at({4, 1}).count == 4);
    CHECK(g2.at({4, 2}).count == 5);
    CHECK(g2.size() == 4);
}

TEST_CASE("cylinder counting formula") {
    CHECK(verify_cylinder_formula(1, 8));
    CHECK(verify_cylinder_formula(2, 6));
    CHECK(verify_cylinder_formula(3, 6));

    const auto rows = cylinder_formula_table(2, 4);
    CHECK(rows.size() == 8);
    for (const auto& r : rows) CHECK(Rational(static_cast<std::int64_t>(r.census_count)) == r.formula);
}
