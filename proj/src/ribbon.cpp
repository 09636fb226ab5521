#include "stratavol/ribbon.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>

namespace stratavol::ribbon {

using exact::Integer;
using exact::UPoly;

namespace {

bool is_permutation_of_range(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

// Cycle index of every point, and the number of cycles.
std::pair<std::vector<int>, int> cycle_ids(const std::vector<int>& p) {
    std::vector<int> id(p.size(), -1);
    int count = 0;
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (id[s] >= 0) continue;
        for (int x = static_cast<int>(s); id[x] < 0; x = p[x]) id[x] = count;
        ++count;
    }
    return {id, count};
}

int cycle_count(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    int count = 0;
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        ++count;
        for (int x = static_cast<int>(s); !seen[x]; x = p[x]) seen[x] = 1;
    }
    return count;
}

// Checks that labels are constant on cycles and biject cycles onto 0..count-1.
int validate_labels(const std::vector<int>& sigma, const std::vector<int>& label, const char* color) {
    const auto [id, count] = cycle_ids(sigma);
    std::vector<int> label_of_cycle(count, -1);
    std::vector<int> cycle_of_label(count, -1);
    for (std::size_t e = 0; e < sigma.size(); ++e) {
        const int lab = label[e];
        if (lab < 0 || lab >= count) {
            throw std::invalid_argument(std::string("RibbonGraph: ") + color + " label out of range");
        }
        if (label_of_cycle[id[e]] < 0) label_of_cycle[id[e]] = lab;
        if (label_of_cycle[id[e]] != lab) {
            throw std::invalid_argument(std::string("RibbonGraph: ") + color + " label varies around a vertex");
        }
        if (cycle_of_label[lab] < 0) cycle_of_label[lab] = id[e];
        if (cycle_of_label[lab] != id[e]) {
            throw std::invalid_argument(std::string("RibbonGraph: ") + color + " label used by two vertices");
        }
    }
    return count;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::int64_t> integer_entries(const std::vector<Rational>& v) {
    std::vector<std::int64_t> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!x.is_integer()) throw std::invalid_argument("perimeters must be integers, got " + x.str());
        const Integer z = x.to_integer();
        if (!z.fits_slong_p()) throw std::invalid_argument("perimeter out of range: " + x.str());
        out.push_back(z.get_si());
    }
    return out;
}

void check_sizes(const RibbonGraph& graph, const PerimeterPair& p) {
    if (static_cast<int>(p.black.size()) != graph.black_count() ||
        static_cast<int>(p.white.size()) != graph.white_count()) {
        throw std::invalid_argument("perimeter tuple sizes do not match the graph");
    }
}

}  // namespace

// ---------------------------------------------------------------- RibbonGraph

RibbonGraph::RibbonGraph(std::vector<int> sigma_b, std::vector<int> sigma_w, std::vector<int> black_of_edge,
                         std::vector<int> white_of_edge)
    : sigma_b_(std::move(sigma_b)),
      sigma_w_(std::move(sigma_w)),
      black_of_edge_(std::move(black_of_edge)),
      white_of_edge_(std::move(white_of_edge)) {
    const std::size_t e = sigma_b_.size();
    if (e == 0) throw std::invalid_argument("RibbonGraph: no edges");
    if (sigma_w_.size() != e || black_of_edge_.size() != e || white_of_edge_.size() != e) {
        throw std::invalid_argument("RibbonGraph: inconsistent sizes");
    }
    if (!is_permutation_of_range(sigma_b_) || !is_permutation_of_range(sigma_w_)) {
        throw std::invalid_argument("RibbonGraph: vertex rotations must be permutations of the edges");
    }
    black_count_ = validate_labels(sigma_b_, black_of_edge_, "black");
    white_count_ = validate_labels(sigma_w_, white_of_edge_, "white");

    UnionFind uf(static_cast<int>(e));
    for (std::size_t i = 0; i < e; ++i) {
        uf.unite(static_cast<int>(i), sigma_b_[i]);
        uf.unite(static_cast<int>(i), sigma_w_[i]);
    }
    for (std::size_t i = 0; i < e; ++i) {
        if (uf.find(static_cast<int>(i)) != uf.find(0)) throw std::invalid_argument("RibbonGraph: not connected");
    }

    const auto rot = rotation();
    const auto pair = pairing();
    std::vector<int> face(2 * e);
    for (std::size_t d = 0; d < 2 * e; ++d) face[d] = rot[pair[d]];
    face_count_ = cycle_count(face);
    const int twice_genus = 2 - black_count_ - white_count_ + static_cast<int>(e) - face_count_;
    if (twice_genus < 0 || twice_genus % 2 != 0) throw std::logic_error("RibbonGraph: Euler characteristic is inconsistent");
    genus_ = twice_genus / 2;
}

std::vector<int> RibbonGraph::rotation() const {
    std::vector<int> rot(2 * sigma_b_.size());
    for (std::size_t e = 0; e < sigma_b_.size(); ++e) {
        rot[2 * e] = 2 * sigma_b_[e];
        rot[2 * e + 1] = 2 * sigma_w_[e] + 1;
    }
    return rot;
}

std::vector<int> RibbonGraph::pairing() const {
    std::vector<int> pair(2 * sigma_b_.size());
    for (std::size_t d = 0; d < pair.size(); ++d) pair[d] = static_cast<int>(d ^ 1U);
    return pair;
}

// -------------------------------------------------------------- PerimeterPair

PerimeterPair PerimeterPair::of_integers(const std::vector<std::int64_t>& black, const std::vector<std::int64_t>& white) {
    PerimeterPair p;
    for (auto x : black) p.black.emplace_back(x);
    for (auto x : white) p.white.emplace_back(x);
    return p;
}

bool PerimeterPair::balanced() const {
    Rational sum = 0;
    for (const auto& x : black) sum += x;
    for (const auto& x : white) sum -= x;
    return sum.is_zero();
}

bool PerimeterPair::positive() const {
    auto pos = [](const Rational& x) { return x.sign() > 0; };
    return std::all_of(black.begin(), black.end(), pos) && std::all_of(white.begin(), white.end(), pos);
}

PerimeterPair PerimeterPair::scaled(const Rational& c) const {
    PerimeterPair out = *this;
    for (auto& x : out.black) x *= c;
    for (auto& x : out.white) x *= c;
    return out;
}

// ----------------------------------------------------------------- enumeration

namespace {

// Classes are found with the face permutation fixed to e -> e+1 (mod E):
// sigma_w = c o sigma_b^{-1}. Relabelings preserving c are its powers, so
// classes are orbits of the rotation action on (sigma_b, labels).
using Encoding = std::vector<std::int8_t>;

Encoding rotate(const Encoding& enc, int edges, int r) {
    Encoding out(enc.size());
    for (int x = 0; x < edges; ++x) {
        const int src = (x - r + edges) % edges;
        out[x] = static_cast<std::int8_t>((enc[src] + r) % edges);
        out[edges + x] = enc[edges + src];
        out[2 * edges + x] = enc[2 * edges + src];
    }
    return out;
}

Encoding canonical(const Encoding& enc, int edges) {
    Encoding best = enc;
    for (int r = 1; r < edges; ++r) best = std::min(best, rotate(enc, edges, r));
    return best;
}

std::vector<GraphClass> enumerate_uncached(int g, int k, int l) {
    const int edges = k + l - 1 + 2 * g;
    std::vector<int> sigma_b(edges);
    std::iota(sigma_b.begin(), sigma_b.end(), 0);
    std::vector<int> sigma_w(edges);
    std::vector<int> inverse(edges);
    std::map<Encoding, int> classes;

    do {
        if (cycle_count(sigma_b) != k) continue;
        for (int e = 0; e < edges; ++e) inverse[sigma_b[e]] = e;
        for (int x = 0; x < edges; ++x) sigma_w[x] = (inverse[x] + 1) % edges;
        if (cycle_count(sigma_w) != l) continue;

        const auto [black_cycle, kb] = cycle_ids(sigma_b);
        const auto [white_cycle, lw] = cycle_ids(sigma_w);
        std::vector<int> black_label(kb);
        std::iota(black_label.begin(), black_label.end(), 0);
        do {
            std::vector<int> white_label(lw);
            std::iota(white_label.begin(), white_label.end(), 0);
            do {
                Encoding enc(3 * edges);
                for (int e = 0; e < edges; ++e) {
                    enc[e] = static_cast<std::int8_t>(sigma_b[e]);
                    enc[edges + e] = static_cast<std::int8_t>(black_label[black_cycle[e]]);
                    enc[2 * edges + e] = static_cast<std::int8_t>(white_label[white_cycle[e]]);
                }
                classes.emplace(canonical(enc, edges), 0);
            } while (std::next_permutation(white_label.begin(), white_label.end()));
        } while (std::next_permutation(black_label.begin(), black_label.end()));
    } while (std::next_permutation(sigma_b.begin(), sigma_b.end()));

    std::vector<GraphClass> out;
    out.reserve(classes.size());
    for (const auto& [enc, unused] : classes) {
        int aut = 0;
        for (int r = 0; r < edges; ++r) aut += rotate(enc, edges, r) == enc ? 1 : 0;
        std::vector<int> sb(edges), sw(edges), inv(edges), bl(edges), wl(edges);
        for (int e = 0; e < edges; ++e) {
            sb[e] = enc[e];
            bl[e] = enc[edges + e];
            wl[e] = enc[2 * edges + e];
        }
        for (int e = 0; e < edges; ++e) inv[sb[e]] = e;
        for (int x = 0; x < edges; ++x) sw[x] = (inv[x] + 1) % edges;
        RibbonGraph graph(std::move(sb), std::move(sw), std::move(bl), std::move(wl));
        if (graph.face_count() != 1 || graph.genus() != g) throw std::logic_error("enumerate_graphs: bad representative");
        out.push_back({std::move(graph), aut});
    }
    return out;
}

}  // namespace

const std::vector<GraphClass>& enumerate_graphs(int g, int k, int l) {
    if (g < 0 || k < 1 || l < 1) throw std::invalid_argument("enumerate_graphs: need g >= 0, k >= 1, l >= 1");
    const int edges = k + l - 1 + 2 * g;
    if (edges > kMaxEdges) {
        throw std::invalid_argument("enumerate_graphs: " + std::to_string(edges) + " edges exceeds the limit of " +
                                    std::to_string(kMaxEdges));
    }
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int>, std::vector<GraphClass>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find({g, k, l});
    if (it == cache.end()) it = cache.emplace(std::make_tuple(g, k, l), enumerate_uncached(g, k, l)).first;
    return it->second;
}

// ------------------------------------------------------------------- metrics

std::uint64_t count_metrics(const RibbonGraph& graph, const PerimeterPair& p) {
    check_sizes(graph, p);
    const auto black = integer_entries(p.black);
    const auto white = integer_entries(p.white);
    if (!p.balanced()) return 0;

    const int k = graph.black_count();
    const int n_vertices = k + graph.white_count();
    const int edges = graph.edge_count();
    std::vector<std::int64_t> residual(n_vertices);
    for (int i = 0; i < k; ++i) residual[i] = black[i];
    for (int j = 0; j < graph.white_count(); ++j) residual[k + j] = white[j];
    if (std::any_of(residual.begin(), residual.end(), [](std::int64_t x) { return x <= 0; })) return 0;

    std::vector<int> end_b(edges), end_w(edges);
    for (int e = 0; e < edges; ++e) {
        end_b[e] = graph.black_of_edge()[e];
        end_w[e] = k + graph.white_of_edge()[e];
    }

    // Spanning tree by union-find in edge order.
    UnionFind uf(n_vertices);
    std::vector<char> in_tree(edges, 0);
    std::vector<int> tree_degree(n_vertices, 0);
    std::vector<int> free_edges;
    for (int e = 0; e < edges; ++e) {
        if (uf.find(end_b[e]) != uf.find(end_w[e])) {
            uf.unite(end_b[e], end_w[e]);
            in_tree[e] = 1;
            ++tree_degree[end_b[e]];
            ++tree_degree[end_w[e]];
        } else {
            free_edges.push_back(e);
        }
    }

    // Leaf-stripping order: (leaf vertex, its edge, other endpoint).
    struct Step {
        int vertex, other;
    };
    std::vector<Step> order;
    {
        std::vector<int> degree = tree_degree;
        std::vector<char> edge_used(edges, 0);
        for (int step = 0; step + 1 < n_vertices; ++step) {
            int leaf = -1;
            for (int v = 0; v < n_vertices && leaf < 0; ++v) {
                if (degree[v] == 1) leaf = v;
            }
            for (int e = 0; e < edges; ++e) {
                if (!in_tree[e] || edge_used[e] || (end_b[e] != leaf && end_w[e] != leaf)) continue;
                const int other = end_b[e] == leaf ? end_w[e] : end_b[e];
                edge_used[e] = 1;
                --degree[leaf];
                --degree[other];
                order.push_back({leaf, other});
                break;
            }
        }
    }
    const int root = [&] {
        std::vector<char> stripped(n_vertices, 0);
        for (const auto& s : order) stripped[s.vertex] = 1;
        return static_cast<int>(std::find(stripped.begin(), stripped.end(), 0) - stripped.begin());
    }();

    std::uint64_t count = 0;
    std::vector<std::int64_t> scratch(n_vertices);
    auto finish = [&] {
        scratch = residual;
        for (const auto& s : order) {
            const std::int64_t w = scratch[s.vertex];
            if (w <= 0) return;
            scratch[s.other] -= w;
        }
        if (scratch[root] == 0) ++count;
    };
    // Each vertex keeps at least one unit per incident tree edge.
    auto recurse = [&](auto&& self, std::size_t idx) -> void {
        if (idx == free_edges.size()) {
            finish();
            return;
        }
        const int e = free_edges[idx];
        const int b = end_b[e];
        const int w = end_w[e];
        const std::int64_t bound = std::min(residual[b] - tree_degree[b], residual[w] - tree_degree[w]);
        for (std::int64_t x = 1; x <= bound; ++x) {
            residual[b] -= x;
            residual[w] -= x;
            self(self, idx + 1);
            residual[b] += x;
            residual[w] += x;
        }
    };
    recurse(recurse, 0);
    return count;
}

Rational counting_function(int g, int k, int l, const PerimeterPair& p) {
    if (static_cast<int>(p.black.size()) != k || static_cast<int>(p.white.size()) != l) {
        throw std::invalid_argument("counting_function: perimeter tuple sizes do not match (k, l)");
    }
    Rational total = 0;
    for (const auto& cls : enumerate_graphs(g, k, l)) {
        const auto n = count_metrics(cls.graph, p);
        if (n != 0) total += Rational(Integer(static_cast<unsigned long>(n))) / Rational(cls.automorphisms);
    }
    return total;
}

std::vector<Rational> tree_weights(const RibbonGraph& tree, const PerimeterPair& p) {
    check_sizes(tree, p);
    const int k = tree.black_count();
    const int n_vertices = k + tree.white_count();
    const int edges = tree.edge_count();
    if (edges != n_vertices - 1) throw std::invalid_argument("tree_weights: graph is not a tree");
    if (!p.balanced()) throw std::invalid_argument("tree_weights: perimeters are not balanced");

    std::vector<Rational> weights;
    weights.reserve(edges);
    for (int cut = 0; cut < edges; ++cut) {
        // Component of the black endpoint once `cut` is removed.
        UnionFind uf(n_vertices);
        for (int e = 0; e < edges; ++e) {
            if (e != cut) uf.unite(tree.black_of_edge()[e], k + tree.white_of_edge()[e]);
        }
        const int root = uf.find(tree.black_of_edge()[cut]);
        Rational w = 0;
        for (int i = 0; i < k; ++i) {
            if (uf.find(i) == root) w += p.black[i];
        }
        for (int j = 0; j < tree.white_count(); ++j) {
            if (uf.find(k + j) == root) w -= p.white[j];
        }
        weights.push_back(w);
    }
    return weights;
}

std::uint64_t count_positive_trees(int k, int l, const PerimeterPair& p) {
    if (static_cast<int>(p.black.size()) != k || static_cast<int>(p.white.size()) != l) {
        throw std::invalid_argument("count_positive_trees: perimeter tuple sizes do not match (k, l)");
    }
    if (!p.balanced()) return 0;
    std::uint64_t count = 0;
    for (const auto& cls : enumerate_graphs(0, k, l)) {
        const auto w = tree_weights(cls.graph, p);
        if (std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.sign() > 0; })) ++count;
    }
    return count;
}

// ---------------------------------------------------------------------- walls

Rational EdgeForm::evaluate(const PerimeterPair& p) const {
    Rational v = 0;
    for (std::size_t i = 0; i < p.black.size(); ++i) {
        if (black_mask >> i & 1U) v += p.black[i];
    }
    for (std::size_t j = 0; j < p.white.size(); ++j) {
        if (white_mask >> j & 1U) v -= p.white[j];
    }
    return v;
}

std::vector<EdgeForm> all_edge_forms(int k, int l) {
    if (k < 1 || l < 1 || k + l > 20) throw std::invalid_argument("all_edge_forms: unsupported (k, l)");
    const std::uint32_t full_b = (1U << k) - 1;
    const std::uint32_t full_w = (1U << l) - 1;
    std::vector<EdgeForm> out;
    for (std::uint32_t i = 0; i <= full_b; ++i) {
        for (std::uint32_t j = 0; j <= full_w; ++j) {
            if ((i == 0 && j == 0) || (i == full_b && j == full_w)) continue;
            out.push_back({i, j});
        }
    }
    return out;
}

namespace {

std::vector<Rational> form_vector(const EdgeForm& f, int k, int l) {
    std::vector<Rational> v(k + l, Rational(0));
    for (int i = 0; i < k; ++i) {
        if (f.black_mask >> i & 1U) v[i] = 1;
    }
    for (int j = 0; j < l; ++j) {
        if (f.white_mask >> j & 1U) v[k + j] = -1;
    }
    return v;
}

// Reduces v against a row-reduced basis; zero result means v is in the span.
bool in_span(std::vector<Rational> v, const std::vector<std::vector<Rational>>& rref, const std::vector<int>& pivots) {
    for (std::size_t r = 0; r < rref.size(); ++r) {
        const Rational factor = v[pivots[r]];
        if (factor.is_zero()) continue;
        for (std::size_t c = 0; c < v.size(); ++c) v[c] -= factor * rref[r][c];
    }
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

}  // namespace

Wall::Wall(int k, int l, std::vector<EdgeForm> equations) : k_(k), l_(l), equations_(std::move(equations)) {
    if (k < 1 || l < 1 || k + l > 20) throw std::invalid_argument("Wall: unsupported (k, l)");
    const std::uint32_t full_b = (1U << k) - 1;
    const std::uint32_t full_w = (1U << l) - 1;
    std::vector<std::vector<Rational>> rows;
    for (const auto& f : equations_) {
        if ((f.black_mask & ~full_b) != 0 || (f.white_mask & ~full_w) != 0) {
            throw std::invalid_argument("Wall: form refers to a missing vertex");
        }
        if ((f.black_mask == 0 && f.white_mask == 0) || (f.black_mask == full_b && f.white_mask == full_w)) {
            throw std::invalid_argument("Wall: trivial form");
        }
        rows.push_back(form_vector(f, k, l));
    }
    rows.push_back(form_vector({full_b, full_w}, k, l));

    const int cols = k + l;
    int row = 0;
    for (int col = 0; col < cols && row < static_cast<int>(rows.size()); ++col) {
        int sel = -1;
        for (int r = row; r < static_cast<int>(rows.size()); ++r) {
            if (!rows[r][col].is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(rows[row], rows[sel]);
        const Rational inv = Rational(1) / rows[row][col];
        for (auto& x : rows[row]) x *= inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == row || rows[r][col].is_zero()) continue;
            const Rational factor = rows[r][col];
            for (int c = 0; c < cols; ++c) rows[r][c] -= factor * rows[row][c];
        }
        pivots_.push_back(col);
        ++row;
    }
    rows.resize(row);
    rref_ = std::move(rows);
}

Wall Wall::full(int k, int l) { return Wall(k, l, {}); }

Wall Wall::partition(const std::vector<int>& black_blocks, const std::vector<int>& white_blocks) {
    if (black_blocks.empty() || black_blocks.size() != white_blocks.size()) {
        throw std::invalid_argument("Wall::partition: block lists must be nonempty and of equal length");
    }
    int k = 0;
    int l = 0;
    std::vector<EdgeForm> equations;
    for (std::size_t i = 0; i < black_blocks.size(); ++i) {
        if (black_blocks[i] < 1 || white_blocks[i] < 1) throw std::invalid_argument("Wall::partition: empty block");
        EdgeForm f;
        for (int x = 0; x < black_blocks[i]; ++x) f.black_mask |= 1U << (k + x);
        for (int x = 0; x < white_blocks[i]; ++x) f.white_mask |= 1U << (l + x);
        k += black_blocks[i];
        l += white_blocks[i];
        // The last block's equation is implied by balance.
        if (i + 1 < black_blocks.size()) equations.push_back(f);
    }
    return Wall(k, l, std::move(equations));
}

Wall Wall::diagonal(int n) {
    if (n < 1) throw std::invalid_argument("Wall::diagonal: n must be positive");
    return partition(std::vector<int>(n, 1), std::vector<int>(n, 1));
}

bool Wall::implies(const EdgeForm& form) const { return in_span(form_vector(form, k_, l_), rref_, pivots_); }

bool Wall::contains(const PerimeterPair& p) const {
    if (static_cast<int>(p.black.size()) != k_ || static_cast<int>(p.white.size()) != l_) return false;
    if (!p.balanced()) return false;
    return std::all_of(equations_.begin(), equations_.end(), [&](const EdgeForm& f) { return f.evaluate(p).is_zero(); });
}

bool Wall::in_open_cell(const PerimeterPair& p) const {
    if (!contains(p) || !p.positive()) return false;
    for (const auto& f : all_edge_forms(k_, l_)) {
        if (f.evaluate(p).is_zero() && !implies(f)) return false;
    }
    return true;
}

std::vector<int> cell_signature(int k, int l, const PerimeterPair& p) {
    std::vector<int> sig;
    for (const auto& f : all_edge_forms(k, l)) sig.push_back(f.evaluate(p).sign());
    return sig;
}

PerimeterPair wall_sample_point(const Wall& wall, std::uint64_t seed) {
    const int k = wall.k_;
    const int l = wall.l_;
    const int cols = k + l;
    for (int c = 0; c < cols; ++c) {
        EdgeForm unit = c < k ? EdgeForm{1U << c, 0} : EdgeForm{0, 1U << (c - k)};
        if (wall.implies(unit)) throw std::runtime_error("wall_sample_point: the wall forces a coordinate to vanish");
    }
    std::vector<EdgeForm> open_forms;
    for (const auto& f : all_edge_forms(k, l)) {
        if (!wall.implies(f)) open_forms.push_back(f);
    }
    std::vector<char> is_pivot(cols, 0);
    for (int c : wall.pivots_) is_pivot[c] = 1;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(1, 1000000);
    constexpr int kAttempts = 1000;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<Rational> x(cols, Rational(0));
        for (int c = 0; c < cols; ++c) {
            if (!is_pivot[c]) x[c] = Rational(dist(rng));
        }
        for (std::size_t r = 0; r < wall.rref_.size(); ++r) {
            Rational v = 0;
            for (int c = 0; c < cols; ++c) {
                if (!is_pivot[c]) v -= wall.rref_[r][c] * x[c];
            }
            x[wall.pivots_[r]] = v;
        }
        if (std::any_of(x.begin(), x.end(), [](const Rational& v) { return v.sign() <= 0; })) continue;

        // Clear denominators; cells are cones so scaling stays inside.
        Integer lcm = 1;
        for (const auto& v : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.denominator().get_mpz_t());
        PerimeterPair p;
        for (int c = 0; c < cols; ++c) (c < k ? p.black : p.white).push_back(x[c] * Rational(lcm));
        const bool generic = std::none_of(open_forms.begin(), open_forms.end(),
                                          [&](const EdgeForm& f) { return f.evaluate(p).is_zero(); });
        if (generic) return p;
    }
    throw std::runtime_error("wall_sample_point: no positive generic point found");
}

std::uint64_t p0_oracle(const std::vector<int>& black_blocks, const std::vector<int>& white_blocks, std::uint64_t seed) {
    const int k = std::accumulate(black_blocks.begin(), black_blocks.end(), 0);
    const int l = std::accumulate(white_blocks.begin(), white_blocks.end(), 0);
    if (k > 4 || l > 4) throw std::invalid_argument("p0_oracle: block sums must not exceed 4");
    const Wall wall = Wall::partition(black_blocks, white_blocks);
    return count_positive_trees(k, l, wall_sample_point(wall, seed));
}

// -------------------------------------------------------------- interpolation

UPoly fit_ray_polynomial(int g, int k, int l, const PerimeterPair& p, int c_max) {
    if (g < 0) throw std::invalid_argument("fit_ray_polynomial: g must be non-negative");
    if (c_max < 2 * g + 2) throw std::invalid_argument("fit_ray_polynomial: c_max must be at least 2g + 2");
    const bool track_cell = k + l <= 12;
    const auto signature = track_cell ? cell_signature(k, l, p) : std::vector<int>{};

    std::vector<Rational> row;
    for (int c = 1; c <= c_max; ++c) {
        const PerimeterPair q = p.scaled(Rational(c));
        if (track_cell && cell_signature(k, l, q) != signature) {
            throw std::logic_error("fit_ray_polynomial: ray left its cell");
        }
        row.push_back(counting_function(g, k, l, q));
    }

    // Leading entries of the forward-difference table.
    std::vector<Rational> leading;
    for (int order = 0; !row.empty(); ++order) {
        leading.push_back(row.front());
        if (order > 2 * g && std::any_of(row.begin(), row.end(), [](const Rational& x) { return !x.is_zero(); })) {
            throw std::logic_error("fit_ray_polynomial: difference of order " + std::to_string(order) +
                                   " is nonzero; degree bound violated");
        }
        std::vector<Rational> next;
        for (std::size_t i = 0; i + 1 < row.size(); ++i) next.push_back(row[i + 1] - row[i]);
        row = std::move(next);
    }

    // sum_j Delta^j * binom(c - 1, j).
    UPoly result;
    UPoly basis(1);
    for (int j = 0; j <= 2 * g && j < static_cast<int>(leading.size()); ++j) {
        result += basis * leading[j];
        basis = basis * (UPoly::u() - UPoly(Rational(j + 1))) * (Rational(1) / Rational(j + 1));
    }
    return result;
}

}  // namespace stratavol::ribbon
