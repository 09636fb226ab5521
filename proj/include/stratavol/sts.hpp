#pragma once

#include "stratavol/rational.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace stratavol::sts {

using exact::Integer;
using exact::Rational;

/// Square-tiled surface on squares 0..N-1: sigma_h maps a square to its
/// right neighbor, sigma_v to its upper neighbor.
class SquareTiledSurface {
public:
    /// Throws std::invalid_argument unless both are permutations of the same size N >= 1.
    SquareTiledSurface(std::vector<int> sigma_h, std::vector<int> sigma_v);

    int squares() const { return static_cast<int>(sigma_h_.size()); }
    const std::vector<int>& sigma_h() const { return sigma_h_; }
    const std::vector<int>& sigma_v() const { return sigma_v_; }

    /// True when the two permutations generate a transitive group.
    bool connected() const;
    /// Sends a square to the next square, counterclockwise around the vertex
    /// at its bottom-left corner, that has the same vertex at its bottom-left.
    std::vector<int> vertex_permutation() const;

    friend bool operator==(const SquareTiledSurface&, const SquareTiledSurface&) = default;

private:
    std::vector<int> sigma_h_;
    std::vector<int> sigma_v_;
};

struct SurfaceClass {
    SquareTiledSurface surface;
    int automorphisms;
};

struct Cylinder {
    int circumference;
    int height;
    friend bool operator==(const Cylinder&, const Cylinder&) = default;
};

struct CylinderDecomposition {
    std::vector<Cylinder> cylinders;
    int area() const;
};

/// Largest square count accepted by the enumerators.
inline constexpr int kMaxSquares = 8;

/// Sorted (descending) cone-angle excesses: cycle length - 1 over the
/// nontrivial cycles of the vertex permutation; {0} when all are trivial.
/// Throws std::invalid_argument for a disconnected surface.
std::vector<int> zero_profile(const SquareTiledSurface& s);

/// True for connected surfaces in H(2g-2) (for g = 1: trivial vertex permutation).
bool in_minimal_stratum(const SquareTiledSurface& s, int g);

/// Horizontal cylinders. Singular corners are those on nontrivial vertex
/// cycles, or the bottom-left corner of square 0 when there are none.
/// Throws std::invalid_argument for a disconnected surface.
CylinderDecomposition cylinder_decomposition(const SquareTiledSurface& s);

/// One representative per simultaneous-conjugacy class of surfaces in
/// H(2g-2) with exactly N squares, with the order of the centralizer of the
/// pair. Cached. Throws std::invalid_argument if g < 1 or N is outside 1..kMaxSquares.
const std::vector<SurfaceClass>& enumerate_sts(int g, int N);

struct CensusEntry {
    std::uint64_t count = 0;
    Rational weighted_count;
};

/// Keyed by (N, n): classes with exactly N squares and n cylinders, both
/// unweighted and weighted by 1/|Aut|.
std::map<std::pair<int, int>, CensusEntry> census(int g, int N_max);

struct CylinderFormulaRow {
    int n;
    int N;
    /// Classes with n cylinders and at most N squares.
    std::uint64_t census_count;
    Rational census_weighted;
    /// (1/n!) sum over sum h_i L_i <= N of L_1...L_n P^{g-n}_{n,n}(L; L).
    Rational formula;
};

/// One row per (n, N) with 1 <= n <= g and 1 <= N <= N_max.
std::vector<CylinderFormulaRow> cylinder_formula_table(int g, int N_max);

/// True when the unweighted census equals the formula in every row.
bool verify_cylinder_formula(int g, int N_max);

}  // namespace stratavol::sts
