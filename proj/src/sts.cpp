#include "stratavol/sts.hpp"

#include "stratavol/pnum.hpp"
#include "stratavol/ribbon.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace stratavol::sts {

namespace {

bool is_permutation_of_range(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

std::vector<int> inverse(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
    return inv;
}

std::vector<std::vector<int>> cycles_of(const std::vector<int>& p) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        out.emplace_back();
        for (int x = static_cast<int>(s); !seen[x]; x = p[x]) {
            seen[x] = 1;
            out.back().push_back(x);
        }
    }
    return out;
}

std::size_t lehmer_rank(const std::vector<int>& p) {
    std::size_t rank = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < p.size(); ++j) smaller += p[j] < p[i] ? 1 : 0;
        rank = rank * (p.size() - i) + smaller;
    }
    return rank;
}

void require_connected(const SquareTiledSurface& s) {
    if (!s.connected()) throw std::invalid_argument("square-tiled surface is not connected");
}

// Representative permutation for a cycle type: consecutive blocks.
std::vector<int> permutation_of_type(const std::vector<int>& type) {
    std::vector<int> p;
    int start = 0;
    for (int len : type) {
        for (int i = 0; i < len; ++i) p.push_back(start + (i + 1) % len);
        start += len;
    }
    return p;
}

}  // namespace

SquareTiledSurface::SquareTiledSurface(std::vector<int> sigma_h, std::vector<int> sigma_v)
    : sigma_h_(std::move(sigma_h)), sigma_v_(std::move(sigma_v)) {
    if (sigma_h_.empty() || sigma_h_.size() != sigma_v_.size()) {
        throw std::invalid_argument("SquareTiledSurface: permutations must be nonempty and of equal size");
    }
    if (!is_permutation_of_range(sigma_h_) || !is_permutation_of_range(sigma_v_)) {
        throw std::invalid_argument("SquareTiledSurface: not a permutation of 0..N-1");
    }
}

bool SquareTiledSurface::connected() const {
    std::vector<char> seen(sigma_h_.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : {sigma_h_[x], sigma_v_[x]}) {
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == sigma_h_.size();
}

std::vector<int> SquareTiledSurface::vertex_permutation() const {
    // Left, down, right, up: sigma_v sigma_h sigma_v^{-1} sigma_h^{-1}.
    const auto hinv = inverse(sigma_h_);
    const auto vinv = inverse(sigma_v_);
    std::vector<int> next(sigma_h_.size());
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = sigma_v_[sigma_h_[vinv[hinv[i]]]];
    return next;
}

int CylinderDecomposition::area() const {
    int a = 0;
    for (const auto& c : cylinders) a += c.circumference * c.height;
    return a;
}

std::vector<int> zero_profile(const SquareTiledSurface& s) {
    require_connected(s);
    std::vector<int> profile;
    for (const auto& cycle : cycles_of(s.vertex_permutation())) {
        if (cycle.size() > 1) profile.push_back(static_cast<int>(cycle.size()) - 1);
    }
    if (profile.empty()) profile.push_back(0);
    std::sort(profile.begin(), profile.end(), std::greater<>());
    return profile;
}

bool in_minimal_stratum(const SquareTiledSurface& s, int g) {
    if (g < 1 || !s.connected()) return false;
    const auto vertex_cycles = cycles_of(s.vertex_permutation());
    int nontrivial = 0;
    std::size_t length = 0;
    for (const auto& c : vertex_cycles) {
        if (c.size() > 1) {
            ++nontrivial;
            length = c.size();
        }
    }
    const bool member = g == 1 ? nontrivial == 0 : nontrivial == 1 && length == static_cast<std::size_t>(2 * g - 1);
    if (member) {
        // Euler: V - 2N + N = 2 - 2g.
        const int v = static_cast<int>(vertex_cycles.size());
        if (v - s.squares() != 2 - 2 * g) throw std::logic_error("in_minimal_stratum: Euler characteristic mismatch");
    }
    return member;
}

CylinderDecomposition cylinder_decomposition(const SquareTiledSurface& s) {
    require_connected(s);
    const int n = s.squares();
    const auto vertex = s.vertex_permutation();
    std::vector<char> singular(n, 0);
    bool any = false;
    for (const auto& cycle : cycles_of(vertex)) {
        if (cycle.size() < 2) continue;
        any = true;
        for (int x : cycle) singular[x] = 1;
    }
    if (!any) singular[0] = 1;

    const auto rows = cycles_of(s.sigma_h());
    std::vector<int> row_of(n);
    std::vector<char> singular_bottom(rows.size(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int x : rows[r]) {
            row_of[x] = static_cast<int>(r);
            if (singular[x]) singular_bottom[r] = 1;
        }
    }

    CylinderDecomposition out;
    std::vector<char> used(rows.size(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!singular_bottom[r]) continue;
        int height = 0;
        int row = static_cast<int>(r);
        do {
            used[row] = 1;
            ++height;
            row = row_of[s.sigma_v()[rows[row][0]]];
        } while (!singular_bottom[row]);
        out.cylinders.push_back({static_cast<int>(rows[r].size()), height});
    }
    if (out.area() != n || std::find(used.begin(), used.end(), 0) != used.end()) {
        throw std::logic_error("cylinder_decomposition: rows do not tile the surface");
    }
    return out;
}

// ---------------------------------------------------------------- enumeration

namespace {

std::vector<SurfaceClass> enumerate_uncached(int g, int N) {
    std::vector<std::vector<int>> all;
    {
        std::vector<int> p(N);
        std::iota(p.begin(), p.end(), 0);
        do all.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }

    std::vector<SurfaceClass> out;
    for (const auto& type : pnum::partitions(N, 1)) {
        const auto h = permutation_of_type(type);
        std::vector<const std::vector<int>*> centralizer;
        for (const auto& tau : all) {
            bool commutes = true;
            for (int i = 0; i < N && commutes; ++i) commutes = tau[h[i]] == h[tau[i]];
            if (commutes) centralizer.push_back(&tau);
        }

        std::vector<char> visited(all.size(), 0);
        for (std::size_t vi = 0; vi < all.size(); ++vi) {
            if (visited[vi]) continue;
            const SquareTiledSurface surface(h, all[vi]);
            if (!in_minimal_stratum(surface, g)) continue;
            // Orbit of sigma_v under conjugation by the centralizer of sigma_h.
            std::size_t orbit = 0;
            std::vector<int> conj(N);
            for (const auto* tau : centralizer) {
                for (int i = 0; i < N; ++i) conj[(*tau)[i]] = (*tau)[all[vi][i]];
                const std::size_t rank = lehmer_rank(conj);
                if (!visited[rank]) {
                    visited[rank] = 1;
                    ++orbit;
                }
            }
            out.push_back({surface, static_cast<int>(centralizer.size() / orbit)});
        }
    }
    return out;
}

}  // namespace

const std::vector<SurfaceClass>& enumerate_sts(int g, int N) {
    if (g < 1) throw std::invalid_argument("enumerate_sts: g must be positive");
    if (N < 1 || N > kMaxSquares) {
        throw std::invalid_argument("enumerate_sts: N must be in 1.." + std::to_string(kMaxSquares));
    }
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::vector<SurfaceClass>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find({g, N});
    if (it == cache.end()) it = cache.emplace(std::make_pair(g, N), enumerate_uncached(g, N)).first;
    return it->second;
}

std::map<std::pair<int, int>, CensusEntry> census(int g, int N_max) {
    if (N_max < 1 || N_max > kMaxSquares) {
        throw std::invalid_argument("census: N_max must be in 1.." + std::to_string(kMaxSquares));
    }
    std::map<std::pair<int, int>, CensusEntry> out;
    for (int N = 1; N <= N_max; ++N) {
        for (const auto& cls : enumerate_sts(g, N)) {
            const int n = static_cast<int>(cylinder_decomposition(cls.surface).cylinders.size());
            if (n > g) throw std::logic_error("census: more cylinders than the genus");
            auto& entry = out[{N, n}];
            ++entry.count;
            entry.weighted_count += Rational(1, cls.automorphisms);
        }
    }
    return out;
}

std::vector<CylinderFormulaRow> cylinder_formula_table(int g, int N_max) {
    const auto counts = census(g, N_max);
    std::vector<CylinderFormulaRow> rows;
    for (int n = 1; n <= g; ++n) {
        // Weight of each lattice point: L_1...L_n P^{g-n}_{n,n}(L; L), memoized by L.
        std::map<std::vector<int>, Rational> weight_memo;
        auto weight = [&](const std::vector<int>& L) {
            auto it = weight_memo.find(L);
            if (it != weight_memo.end()) return it->second;
            std::vector<std::int64_t> wide(L.begin(), L.end());
            Rational w = ribbon::counting_function(g - n, n, n, ribbon::PerimeterPair::of_integers(wide, wide));
            for (int x : L) w *= Rational(x);
            return weight_memo.emplace(L, w).first->second;
        };
        // by_area[m]: sum of weights over (h, L) with sum h_i L_i == m.
        std::vector<Rational> by_area(N_max + 1, Rational(0));
        std::vector<int> L(n);
        std::function<void(int, int)> rec = [&](int i, int area) {
            if (i == n) {
                by_area[area] += weight(L);
                return;
            }
            for (int h = 1; area + h <= N_max; ++h) {
                for (int len = 1; area + h * len <= N_max; ++len) {
                    L[i] = len;
                    rec(i + 1, area + h * len);
                }
            }
        };
        rec(0, 0);

        const Rational inv_fact = Rational(1) / Rational(exact::factorial(n));
        Rational formula = 0;
        std::uint64_t count = 0;
        Rational weighted = 0;
        for (int N = 1; N <= N_max; ++N) {
            formula += by_area[N] * inv_fact;
            if (auto it = counts.find({N, n}); it != counts.end()) {
                count += it->second.count;
                weighted += it->second.weighted_count;
            }
            rows.push_back({n, N, count, weighted, formula});
        }
    }
    return rows;
}

bool verify_cylinder_formula(int g, int N_max) {
    for (const auto& row : cylinder_formula_table(g, N_max)) {
        if (Rational(Integer(static_cast<unsigned long>(row.census_count))) != row.formula) return false;
    }
    return true;
}

}  // namespace stratavol::sts
