#include "doctest.h"

#include "stratavol/pnum.hpp"
#include "stratavol/ribbon.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace stratavol::ribbon;
using stratavol::exact::Integer;
using stratavol::exact::factorial;

namespace {

struct Labeled {
    std::vector<int> sb, sw, bl, wl;
    auto key() const { return std::tie(sb, sw, bl, wl); }
    bool operator<(const Labeled& o) const { return key() < o.key(); }
    bool operator==(const Labeled& o) const { return key() == o.key(); }
};

Labeled conjugate(const Labeled& x, const std::vector<int>& tau) {
    const int n = static_cast<int>(tau.size());
    Labeled y{std::vector<int>(n), std::vector<int>(n), std::vector<int>(n), std::vector<int>(n)};
    for (int e = 0; e < n; ++e) {
        y.sb[tau[e]] = tau[x.sb[e]];
        y.sw[tau[e]] = tau[x.sw[e]];
        y.bl[tau[e]] = x.bl[e];
        y.wl[tau[e]] = x.wl[e];
    }
    return y;
}

std::vector<std::vector<int>> all_perms(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<int> cycle_labels_of(const std::vector<int>& sigma, const std::vector<int>& label_of_cycle) {
    std::vector<int> id(sigma.size(), -1);
    int c = 0;
    for (std::size_t s = 0; s < sigma.size(); ++s) {
        if (id[s] >= 0) continue;
        for (int x = static_cast<int>(s); id[x] < 0; x = sigma[x]) id[x] = c;
        ++c;
    }
    std::vector<int> out(sigma.size());
    for (std::size_t e = 0; e < sigma.size(); ++e) out[e] = label_of_cycle[id[e]];
    return out;
}

int cycles(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    int c = 0;
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        ++c;
        for (int x = static_cast<int>(s); !seen[x]; x = p[x]) seen[x] = 1;
    }
    return c;
}

bool connected(const std::vector<int>& sb, const std::vector<int>& sw) {
    std::vector<char> seen(sb.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : {sb[x], sw[x]}) {
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

// Exhaustive oracle: all labeled rotation systems on E edges, classes under
// full conjugation, automorphisms counted directly. Returns sorted aut list.
std::vector<int> brute_force_classes(int g, int k, int l) {
    const int edges = k + l - 1 + 2 * g;
    const auto perms = all_perms(edges);
    std::set<Labeled> seen;
    std::vector<int> auts;
    for (const auto& sb : perms) {
        if (cycles(sb) != k) continue;
        for (const auto& sw : perms) {
            if (cycles(sw) != l) continue;
            std::vector<int> bl_cycle(k), wl_cycle(l);
            std::iota(bl_cycle.begin(), bl_cycle.end(), 0);
            do {
                std::iota(wl_cycle.begin(), wl_cycle.end(), 0);
                do {
                    Labeled x{sb, sw, cycle_labels_of(sb, bl_cycle), cycle_labels_of(sw, wl_cycle)};
                    if (seen.count(x) || !connected(sb, sw)) continue;
                    const RibbonGraph graph(x.sb, x.sw, x.bl, x.wl);
                    if (graph.face_count() != 1) continue;
                    int aut = 0;
                    for (const auto& tau : perms) {
                        const Labeled y = conjugate(x, tau);
                        seen.insert(y);
                        if (y == x) ++aut;
                    }
                    auts.push_back(aut);
                } while (std::next_permutation(wl_cycle.begin(), wl_cycle.end()));
            } while (std::next_permutation(bl_cycle.begin(), bl_cycle.end()));
        }
    }
    std::sort(auts.begin(), auts.end());
    return auts;
}

// Direct enumeration of weight vectors.
std::uint64_t brute_metrics(const RibbonGraph& graph, const std::vector<std::int64_t>& L, const std::vector<std::int64_t>& Lp) {
    const int edges = graph.edge_count();
    const std::int64_t cap = std::max(*std::max_element(L.begin(), L.end()), *std::max_element(Lp.begin(), Lp.end()));
    std::vector<std::int64_t> w(edges, 1);
    std::uint64_t count = 0;
    std::function<void(int)> rec = [&](int e) {
        if (e == edges) {
            std::vector<std::int64_t> b(L.size(), 0), wh(Lp.size(), 0);
            for (int i = 0; i < edges; ++i) {
                b[graph.black_of_edge()[i]] += w[i];
                wh[graph.white_of_edge()[i]] += w[i];
            }
            if (b == L && wh == Lp) ++count;
            return;
        }
        for (std::int64_t x = 1; x <= cap; ++x) {
            w[e] = x;
            rec(e + 1);
        }
    };
    rec(0);
    return count;
}

PerimeterPair pp(const std::vector<std::int64_t>& b, const std::vector<std::int64_t>& w) {
    return PerimeterPair::of_integers(b, w);
}

}  // namespace

TEST_CASE("enumeration examples") {
    const auto& single = enumerate_graphs(0, 1, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].automorphisms == 1);

    const auto& paths = enumerate_graphs(0, 2, 2);
    CHECK(paths.size() == 4);
    for (const auto& c : paths) CHECK(c.automorphisms == 1);

    const auto& torus = enumerate_graphs(1, 1, 1);
    REQUIRE(torus.size() == 1);
    CHECK(torus[0].automorphisms == 3);
    CHECK(torus[0].graph.genus() == 1);

    CHECK_THROWS_AS(enumerate_graphs(2, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_graphs(0, 0, 1), std::invalid_argument);
}

TEST_CASE("enumerated graphs satisfy the structural invariants") {
    for (int g = 0; g <= 2; ++g) {
        for (int k = 1; k <= 4; ++k) {
            for (int l = 1; l <= 4; ++l) {
                if (k + l - 1 + 2 * g > 7) continue;
                for (const auto& c : enumerate_graphs(g, k, l)) {
                    const auto& graph = c.graph;
                    CHECK(graph.face_count() == 1);
                    CHECK(graph.genus() == g);
                    CHECK(graph.black_count() == k);
                    CHECK(graph.white_count() == l);
                    const auto rot = graph.rotation();
                    const auto pair = graph.pairing();
                    for (std::size_t d = 0; d < pair.size(); ++d) {
                        CHECK(pair[pair[d]] == static_cast<int>(d));
                        CHECK((pair[d] % 2) != static_cast<int>(d % 2));  // bipartite
                        CHECK((rot[d] % 2) == static_cast<int>(d % 2));
                    }
                    CHECK(c.automorphisms >= 1);
                    CHECK(graph.edge_count() % c.automorphisms == 0);
                }
            }
        }
    }
}

TEST_CASE("enumeration agrees with exhaustive conjugation classes") {
    const std::vector<std::tuple<int, int, int>> cases{{0, 1, 1}, {0, 1, 2}, {0, 2, 2}, {0, 2, 3}, {0, 1, 4},
                                                      {1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {0, 3, 3}};
    for (const auto& [g, k, l] : cases) {
        CAPTURE(g);
        CAPTURE(k);
        CAPTURE(l);
        std::vector<int> auts;
        for (const auto& c : enumerate_graphs(g, k, l)) auts.push_back(c.automorphisms);
        std::sort(auts.begin(), auts.end());
        CHECK(auts == brute_force_classes(g, k, l));
    }
}

TEST_CASE("mass formula: classes weighted by 1/|Aut| count labeled one-face systems over E!") {
    // Labeled systems = pairs (sigma_b, sigma_w) with the right cycle counts,
    // one face, times k! l! labelings.
    for (const auto& [g, k, l] : std::vector<std::tuple<int, int, int>>{{0, 2, 3}, {1, 2, 2}, {1, 1, 3}, {2, 1, 1}}) {
        const int edges = k + l - 1 + 2 * g;
        const auto perms = all_perms(edges);
        std::uint64_t systems = 0;
        for (const auto& sb : perms) {
            if (cycles(sb) != k) continue;
            for (const auto& sw : perms) {
                if (cycles(sw) != l || !connected(sb, sw)) continue;
                std::vector<int> face(edges);
                for (int e = 0; e < edges; ++e) face[e] = sb[sw[e]];
                if (cycles(face) == 1) ++systems;
            }
        }
        Rational mass = 0;
        for (const auto& c : enumerate_graphs(g, k, l)) mass += Rational(1, c.automorphisms);
        const Integer labelings = factorial(k) * factorial(l);
        CHECK(mass == Rational(Integer(labelings * systems)) / Rational(factorial(edges)));
    }
}

TEST_CASE("metric counts") {
    const auto& tree = enumerate_graphs(0, 1, 1)[0].graph;
    CHECK(count_metrics(tree, pp({5}, {5})) == 1);
    CHECK(count_metrics(tree, pp({0}, {0})) == 0);
    CHECK(count_metrics(tree, pp({5}, {4})) == 0);

    const auto& torus = enumerate_graphs(1, 1, 1)[0].graph;
    for (std::int64_t L = 1; L <= 12; ++L) {
        CHECK(count_metrics(torus, pp({L}, {L})) == static_cast<std::uint64_t>((L - 1) * (L - 2) / 2));
    }
    CHECK_THROWS_AS(count_metrics(torus, pp({1, 1}, {2})), std::invalid_argument);

    SUBCASE("agrees with direct enumeration of weights") {
        std::mt19937_64 rng(5);
        for (const auto& [g, k, l] : std::vector<std::tuple<int, int, int>>{{1, 1, 2}, {1, 2, 2}, {0, 2, 3}, {2, 1, 1}, {1, 2, 1}}) {
            for (const auto& c : enumerate_graphs(g, k, l)) {
                for (int trial = 0; trial < 3; ++trial) {
                    std::uniform_int_distribution<std::int64_t> d(1, 6);
                    std::vector<std::int64_t> L(k), Lp(l);
                    for (auto& x : L) x = d(rng);
                    for (auto& x : Lp) x = d(rng);
                    // Force balance on the last white vertex when possible.
                    const std::int64_t diff = std::accumulate(L.begin(), L.end(), std::int64_t{0}) -
                                              std::accumulate(Lp.begin(), Lp.end() - 1, std::int64_t{0});
                    if (trial < 2 && diff >= 1) Lp.back() = diff;
                    CHECK(count_metrics(c.graph, pp(L, Lp)) == brute_metrics(c.graph, L, Lp));
                }
            }
        }
    }
}

TEST_CASE("counting function values") {
    for (std::int64_t L = 1; L <= 5; ++L) CHECK(counting_function(0, 1, 1, pp({L}, {L})) == Rational(1));
    CHECK(counting_function(1, 1, 1, pp({4}, {4})) == Rational(1));
    CHECK(counting_function(0, 2, 2, pp({5, 1}, {4, 2})) == Rational(2));
    CHECK(counting_function(0, 2, 2, pp({5, 1}, {4, 3})) == Rational(0));
}

TEST_CASE("tree weights") {
    const auto& tree = enumerate_graphs(0, 1, 1)[0].graph;
    CHECK(tree_weights(tree, pp({7}, {7})) == std::vector<Rational>{Rational(7)});
    CHECK_THROWS_AS(tree_weights(tree, pp({7}, {6})), std::invalid_argument);

    // Path b2 - w2 - b1 - w1 as edges (b2,w2), (b1,w2), (b1,w1); labels are 0-based.
    const RibbonGraph path({0, 2, 1}, {1, 0, 2}, {1, 0, 0}, {1, 1, 0});
    CHECK(path.genus() == 0);
    CHECK(tree_weights(path, pp({5, 1}, {4, 2})) == std::vector<Rational>{Rational(1), Rational(1), Rational(4)});

    const auto& torus = enumerate_graphs(1, 1, 1)[0].graph;
    CHECK_THROWS_AS(tree_weights(torus, pp({3}, {3})), std::invalid_argument);

    SUBCASE("weights reproduce the perimeters") {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<int> d(-20, 20);
        for (const auto& c : enumerate_graphs(0, 3, 3)) {
            PerimeterPair p;
            for (int i = 0; i < 3; ++i) p.black.emplace_back(d(rng), 3);
            for (int j = 0; j < 2; ++j) p.white.emplace_back(d(rng), 2);
            p.white.push_back(p.black[0] + p.black[1] + p.black[2] - p.white[0] - p.white[1]);
            const auto w = tree_weights(c.graph, p);
            std::vector<Rational> b(3, Rational(0)), wh(3, Rational(0));
            for (int e = 0; e < c.graph.edge_count(); ++e) {
                b[c.graph.black_of_edge()[e]] += w[e];
                wh[c.graph.white_of_edge()[e]] += w[e];
            }
            CHECK(b == p.black);
            CHECK(wh == p.white);
        }
    }
}

TEST_CASE("positive trees") {
    for (std::int64_t L = 1; L <= 4; ++L) CHECK(count_positive_trees(1, 1, pp({L}, {L})) == 1);
    CHECK(count_positive_trees(2, 2, pp({5, 1}, {4, 2})) == 2);
    CHECK(count_positive_trees(2, 2, pp({5, 1}, {5, 1})) == 1);
    CHECK(count_positive_trees(2, 2, pp({5, 1}, {5, 2})) == 0);

    SUBCASE("generic points give (k+l-2)!") {
        for (int k = 1; k <= 3; ++k) {
            for (int l = 1; l <= 3; ++l) {
                for (std::uint64_t seed = 0; seed < 3; ++seed) {
                    const auto p = wall_sample_point(Wall::full(k, l), seed);
                    CHECK(count_positive_trees(k, l, p) == static_cast<std::uint64_t>(factorial(k + l - 2).get_ui()));
                }
            }
        }
    }
    SUBCASE("positive-tree counts agree with the genus-0 counting function") {
        const auto p = pp({3, 4}, {2, 5});
        CHECK(Rational(static_cast<std::int64_t>(count_positive_trees(2, 2, p))) == counting_function(0, 2, 2, p));
    }
}

TEST_CASE("walls and sample points") {
    const Wall v2 = Wall::diagonal(2);
    CHECK(v2.in_open_cell(pp({5, 1}, {5, 1})));
    CHECK(!v2.in_open_cell(pp({3, 3}, {3, 3})));
    CHECK(!v2.in_open_cell(pp({4, 2}, {5, 1})));
    CHECK(v2.implies({0b01, 0b01}));
    CHECK(v2.implies({0b10, 0b10}));
    CHECK(!v2.implies({0b01, 0b10}));

    const auto p = wall_sample_point(v2, 42);
    CHECK(v2.in_open_cell(p));
    CHECK(p == wall_sample_point(v2, 42));

    const auto q = wall_sample_point(Wall::full(1, 1), 3);
    CHECK(q.black == q.white);
    CHECK(q.positive());

    // L_1 = L'_1 together with L_1 + L_2 = L'_1 forces L_2 = 0.
    const Wall degenerate(2, 1, {EdgeForm{0b01, 0b1}});
    CHECK_THROWS_AS(wall_sample_point(degenerate, 0), std::runtime_error);

    CHECK_THROWS_AS(Wall(2, 2, {EdgeForm{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Wall::partition({1, 1}, {2}), std::invalid_argument);

    SUBCASE("samples from several seeds land in open cells of the partition wall") {
        const Wall w = Wall::partition({2, 1}, {1, 2});
        for (std::uint64_t seed = 0; seed < 10; ++seed) CHECK(w.in_open_cell(wall_sample_point(w, seed)));
    }
}

TEST_CASE("positive-tree oracle agrees with the p-numbers") {
    CHECK(p0_oracle({1, 1}, {1, 1}) == 1);
    CHECK(p0_oracle({2}, {2}) == 2);
    CHECK(p0_oracle({2, 1}, {1, 1}) == 4);
    CHECK_THROWS_AS(p0_oracle({5}, {1}), std::invalid_argument);

    for (const auto& [b, w] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
             {{1, 1, 1}, {1, 1, 1}}, {{2, 1}, {1, 2}}, {{1, 2}, {2, 1}}, {{3}, {2}}}) {
        CHECK(p0_oracle(b, w) == stratavol::pnum::p_bw_value(b, w).get_ui());
    }
}

TEST_CASE("ray polynomials") {
    const auto constant = fit_ray_polynomial(0, 1, 1, pp({1}, {1}), 3);
    CHECK(constant == stratavol::exact::UPoly(1));

    // (c-1)(c-2)/6.
    const auto torus = fit_ray_polynomial(1, 1, 1, pp({1}, {1}), 8);
    CHECK(torus.degree() == 2);
    CHECK(torus.coeff(2) == Rational(1, 6));
    CHECK(torus.coeff(1) == Rational(-1, 2));
    CHECK(torus.coeff(0) == Rational(1, 3));

    CHECK_THROWS_AS(fit_ray_polynomial(1, 1, 1, pp({1}, {1}), 3), std::invalid_argument);

    SUBCASE("leading coefficient on the diagonal wall matches the volume polynomial") {
        const auto p = pp({5, 1}, {5, 1});
        const auto poly = fit_ray_polynomial(1, 2, 2, p, 6);
        CHECK(poly.degree() == 2);
        const auto top = stratavol::pnum::pgvn_polynomial(1, 2);
        CHECK(poly.coeff(2) == top.evaluate({Rational(5), Rational(1)}));
    }
}
