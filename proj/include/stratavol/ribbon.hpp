#pragma once

#include "stratavol/rational.hpp"
#include "stratavol/series.hpp"

#include <cstdint>
#include <vector>

namespace stratavol::ribbon {

using exact::Rational;

/// Bipartite ribbon graph with labeled vertices. Edges are 0..E-1; sigma_b
/// and sigma_w give the cyclic order of edges around black and white
/// vertices. Dart 2e is the black side of edge e, dart 2e+1 the white side.
class RibbonGraph {
public:
    /// Validates that labels are constant on vertex cycles, that each label
    /// in 0..k-1 (resp. 0..l-1) names exactly one cycle, and that the graph
    /// is connected. Throws std::invalid_argument otherwise.
    RibbonGraph(std::vector<int> sigma_b, std::vector<int> sigma_w, std::vector<int> black_of_edge,
                std::vector<int> white_of_edge);

    int edge_count() const { return static_cast<int>(sigma_b_.size()); }
    int black_count() const { return black_count_; }
    int white_count() const { return white_count_; }
    int face_count() const { return face_count_; }
    int genus() const { return genus_; }

    const std::vector<int>& sigma_b() const { return sigma_b_; }
    const std::vector<int>& sigma_w() const { return sigma_w_; }
    /// 0-based black / white vertex label of each edge's endpoints.
    const std::vector<int>& black_of_edge() const { return black_of_edge_; }
    const std::vector<int>& white_of_edge() const { return white_of_edge_; }

    /// Dart-level view: rotation around vertices and the edge involution.
    std::vector<int> rotation() const;
    std::vector<int> pairing() const;

    friend bool operator==(const RibbonGraph&, const RibbonGraph&) = default;

private:
    std::vector<int> sigma_b_;
    std::vector<int> sigma_w_;
    std::vector<int> black_of_edge_;
    std::vector<int> white_of_edge_;
    int black_count_ = 0;
    int white_count_ = 0;
    int face_count_ = 0;
    int genus_ = 0;
};

struct GraphClass {
    RibbonGraph graph;
    int automorphisms;
};

/// Perimeters of black vertices (L) and white vertices (L').
struct PerimeterPair {
    std::vector<Rational> black;
    std::vector<Rational> white;

    static PerimeterPair of_integers(const std::vector<std::int64_t>& black, const std::vector<std::int64_t>& white);
    bool balanced() const;
    bool positive() const;
    PerimeterPair scaled(const Rational& c) const;
    friend bool operator==(const PerimeterPair&, const PerimeterPair&) = default;
};

/// Largest edge count accepted by enumerate_graphs.
inline constexpr int kMaxEdges = 8;

/// One representative per isomorphism class of genus-g one-face bipartite
/// ribbon graphs with k labeled black and l labeled white vertices, with
/// automorphism counts. Cached per (g, k, l). Throws std::invalid_argument if
/// k + l - 1 + 2g exceeds kMaxEdges or any argument is out of range.
const std::vector<GraphClass>& enumerate_graphs(int g, int k, int l);

/// Number of positive integral edge weights with the given vertex perimeters.
/// Throws std::invalid_argument on size mismatch or non-integer perimeters.
std::uint64_t count_metrics(const RibbonGraph& graph, const PerimeterPair& p);

/// sum over classes of count_metrics / |Aut|.
Rational counting_function(int g, int k, int l, const PerimeterPair& p);

/// Unique weights of a tree with the given perimeters, indexed by edge.
/// Throws std::invalid_argument if the graph is not a tree or p is unbalanced.
std::vector<Rational> tree_weights(const RibbonGraph& tree, const PerimeterPair& p);

/// Number of genus-0 classes whose weights at p are all positive.
std::uint64_t count_positive_trees(int k, int l, const PerimeterPair& p);

/// Linear form sum_{i in I} L_i - sum_{j in J} L'_j, with I and J as bitmasks.
struct EdgeForm {
    std::uint32_t black_mask = 0;
    std::uint32_t white_mask = 0;

    Rational evaluate(const PerimeterPair& p) const;
    friend auto operator<=>(const EdgeForm&, const EdgeForm&) = default;
};

/// Every form with (I,J) nonempty and (I^c,J^c) nonempty.
std::vector<EdgeForm> all_edge_forms(int k, int l);

/// Subspace of the balanced hyperplane on which the listed forms vanish.
class Wall {
public:
    Wall(int k, int l, std::vector<EdgeForm> equations);

    /// The balanced hyperplane itself.
    static Wall full(int k, int l);
    /// Consecutive blocks of sizes b_i (black) and w_i (white) balanced pairwise.
    static Wall partition(const std::vector<int>& black_blocks, const std::vector<int>& white_blocks);
    /// L_i = L'_i for i = 1..n.
    static Wall diagonal(int n);

    int black_count() const { return k_; }
    int white_count() const { return l_; }
    const std::vector<EdgeForm>& equations() const { return equations_; }

    /// True when the form vanishes on the whole wall.
    bool implies(const EdgeForm& form) const;
    bool contains(const PerimeterPair& p) const;
    /// True when p is on the wall, positive, and every form not implied by the wall is nonzero at p.
    bool in_open_cell(const PerimeterPair& p) const;

private:
    int k_;
    int l_;
    std::vector<EdgeForm> equations_;
    /// Row-reduced basis of the equations plus the balance row.
    std::vector<std::vector<Rational>> rref_;
    std::vector<int> pivots_;

    friend PerimeterPair wall_sample_point(const Wall& wall, std::uint64_t seed);
};

/// Signs of all edge forms at p; identifies the open cell containing p.
std::vector<int> cell_signature(int k, int l, const PerimeterPair& p);

/// Deterministic point of the open part of the wall with positive integer
/// coordinates. Throws std::runtime_error if no positive point is found
/// (immediately when the wall forces a coordinate to vanish).
PerimeterPair wall_sample_point(const Wall& wall, std::uint64_t seed);

/// Positive trees at a generic point of the partition wall of (b, w).
/// Throws std::invalid_argument if sum b > 4 or sum w > 4.
std::uint64_t p0_oracle(const std::vector<int>& black_blocks, const std::vector<int>& white_blocks,
                        std::uint64_t seed = 0);

/// Interpolates c -> counting_function(g, k, l, c p) for c = 1..c_max and
/// returns its coefficients in c (as a polynomial in the UPoly variable).
/// Throws std::invalid_argument if c_max < 2g + 2 and std::logic_error if a
/// finite difference of order above 2g is nonzero.
exact::UPoly fit_ray_polynomial(int g, int k, int l, const PerimeterPair& p, int c_max);

}  // namespace stratavol::ribbon
