#pragma once

#include "stratavol/rational.hpp"

#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

namespace stratavol::pnum {

using exact::Integer;
using exact::Rational;

/// Sorted (non-increasing), non-empty tuple of parts, each >= 2. Sorting is
/// what makes p_{s_1..s_n} symmetric in its indices.
class PartitionIndex {
public:
    /// Sorts the parts. Throws std::invalid_argument if empty or any part < 2.
    explicit PartitionIndex(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    int weight() const;
    std::string str() const;

    friend auto operator<=>(const PartitionIndex&, const PartitionIndex&) = default;

private:
    std::vector<int> parts_;
};

/// Memo of p-numbers keyed by PartitionIndex. Insert-only: concurrent
/// callers may compute the same entry twice, the stored value is identical.
class PNumberTable {
public:
    PNumberTable() = default;
    PNumberTable(const PNumberTable&) = delete;
    PNumberTable& operator=(const PNumberTable&) = delete;

    /// Process-wide table used by the free functions below.
    static PNumberTable& shared();

    Integer value(const PartitionIndex& index);
    bool contains(const PartitionIndex& index) const;
    /// Throws std::invalid_argument unless value is a positive integer.
    void insert(const PartitionIndex& index, const Integer& value);
    std::map<PartitionIndex, Integer> snapshot() const;
    std::size_t size() const;
    void clear();

private:
    mutable std::shared_mutex mutex_;
    std::map<PartitionIndex, Integer> entries_;
};

/// Right-hand side of the recursion for an arbitrary (possibly unsorted)
/// tuple: (s-2)! minus the sum over set partitions into t >= 2 labeled
/// blocks. Sub-values come from `table`. Exposed for symmetry tests.
Rational p_recursion_rhs(const std::vector<int>& parts, PNumberTable& table);

/// p_{s_1..s_n}; throws std::invalid_argument for any part < 2.
Integer p_value(const PartitionIndex& index, PNumberTable& table = PNumberTable::shared());
Integer p_value(const std::vector<int>& parts, PNumberTable& table = PNumberTable::shared());

/// p^{b_1..b_n}_{w_1..w_n} = p_{b_1+w_1, ..., b_n+w_n}.
Integer p_bw_value(const std::vector<int>& black, const std::vector<int>& white,
                   PNumberTable& table = PNumberTable::shared());

/// Commutative monomial t_{i_1} ... t_{i_m}, stored as a sorted (non-increasing) subscript list.
using Monomial = std::vector<int>;

/// Series in t whose coefficients are polynomials in t_2, t_3, ...; graded
/// by the subscript weight. Terms beyond the truncation weight are dropped.
class WeightedMonomialSeries {
public:
    struct Key {
        int t_power;
        Monomial subscripts;
        friend auto operator<=>(const Key&, const Key&) = default;
    };

    explicit WeightedMonomialSeries(int truncation_weight);

    static WeightedMonomialSeries one(int truncation_weight);

    int truncation_weight() const { return truncation_weight_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    Rational coeff(int t_power, Monomial subscripts) const;
    /// Adds to the coefficient; silently drops terms past the truncation.
    void add(int t_power, Monomial subscripts, const Rational& value);
    /// All terms with the given t power, keyed by monomial.
    std::map<Monomial, Rational> t_coefficient(int t_power) const;

    WeightedMonomialSeries power(unsigned exponent) const;
    friend WeightedMonomialSeries operator*(const WeightedMonomialSeries& a, const WeightedMonomialSeries& b);

private:
    int truncation_weight_;
    std::map<Key, Rational> terms_;
};

int monomial_weight(const Monomial& m);

/// The generating series of p-numbers truncated at the given weight.
WeightedMonomialSeries t_series(int weight, PNumberTable& table = PNumberTable::shared());

/// [t^k] exp(sum_{i>=2} t_i t^i) = sum over partitions of k into parts >= 2 of prod 1/m_i!.
std::map<Monomial, Rational> exp_generating_coefficient(int k);

/// Checks (1/k!) [t^k] T^k == [t^k] exp(sum t_i t^i) for 0 <= k <= k_max.
/// Throws std::invalid_argument if weight < k_max.
bool verify_multivariate_relation(int k_max, int weight, PNumberTable& table = PNumberTable::shared());

/// Homogeneous polynomial in L_1..L_n stored as exponent tuple -> coefficient.
class HomogeneousVolumePolynomial {
public:
    HomogeneousVolumePolynomial(int genus, int cylinders) : genus_(genus), cylinders_(cylinders) {}

    int genus() const { return genus_; }
    int variables() const { return cylinders_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    void add(const std::vector<int>& exponents, const Rational& c);
    Rational coeff(const std::vector<int>& exponents) const;
    Rational evaluate(const std::vector<Rational>& point) const;
    std::string str() const;

private:
    int genus_;
    int cylinders_;
    std::map<std::vector<int>, Rational> terms_;
};

/// 2^n sum_{s_1+..+s_n = g+n, s_i >= 1} p_{2s} prod L_i^{2s_i-2}/(2s_i)!.
HomogeneousVolumePolynomial pgvn_polynomial(int g, int n, PNumberTable& table = PNumberTable::shared());

/// Partitions of `total` into parts >= min_part, each non-increasing.
std::vector<std::vector<int>> partitions(int total, int min_part);
/// Ordered compositions of `total` into exactly `parts` entries >= min_part.
std::vector<std::vector<int>> compositions(int total, int parts, int min_part);

}  // namespace stratavol::pnum
