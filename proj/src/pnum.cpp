#include "stratavol/pnum.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stratavol::pnum {

using exact::factorial;
using exact::falling_factorial;

// ------------------------------------------------------- PartitionIndex

PartitionIndex::PartitionIndex(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("PartitionIndex: empty tuple");
    for (int p : parts_) {
        if (p < 2) throw std::invalid_argument("PartitionIndex: part " + std::to_string(p) + " < 2");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int PartitionIndex::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string PartitionIndex::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

// --------------------------------------------------------- PNumberTable

PNumberTable& PNumberTable::shared() {
    static PNumberTable table;
    return table;
}

bool PNumberTable::contains(const PartitionIndex& index) const {
    std::shared_lock lock(mutex_);
    return entries_.count(index) != 0;
}

void PNumberTable::insert(const PartitionIndex& index, const Integer& value) {
    if (value <= 0) {
        throw std::invalid_argument("PNumberTable: p" + index.str() + " = " + value.get_str() + " is not positive");
    }
    std::unique_lock lock(mutex_);
    entries_.emplace(index, value);
}

std::map<PartitionIndex, Integer> PNumberTable::snapshot() const {
    std::shared_lock lock(mutex_);
    return entries_;
}

std::size_t PNumberTable::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

void PNumberTable::clear() {
    std::unique_lock lock(mutex_);
    entries_.clear();
}

Integer PNumberTable::value(const PartitionIndex& index) {
    {
        std::shared_lock lock(mutex_);
        if (auto it = entries_.find(index); it != entries_.end()) return it->second;
    }
    // Computed without holding the lock; sub-entries recurse back here.
    const Rational rhs = p_recursion_rhs(index.parts(), *this);
    if (!rhs.is_integer() || rhs.sign() <= 0) {
        throw std::logic_error("p" + index.str() + " evaluated to " + rhs.str() + ", not a positive integer");
    }
    const Integer v = rhs.to_integer();
    insert(index, v);
    return v;
}

// ------------------------------------------------------------ recursion

namespace {

/// Calls visit(blocks, block_count) for every restricted-growth string of
/// length n, i.e. every unlabeled set partition of {0..n-1}.
void for_each_set_partition(std::size_t n, const std::function<void(const std::vector<int>&, int)>& visit) {
    std::vector<int> rgs(n, 0);
    std::vector<int> prefix_max(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            visit(rgs, n == 0 ? 0 : prefix_max[n - 1] + 1);
            return;
        }
        const int limit = i == 0 ? 0 : prefix_max[i - 1] + 1;
        for (int b = 0; b <= limit; ++b) {
            rgs[i] = b;
            prefix_max[i] = i == 0 ? b : std::max(prefix_max[i - 1], b);
            rec(i + 1);
        }
    };
    rec(0);
}

}  // namespace

Rational p_recursion_rhs(const std::vector<int>& parts, PNumberTable& table) {
    if (parts.empty()) throw std::invalid_argument("p_recursion_rhs: empty tuple");
    for (int p : parts) {
        if (p < 2) throw std::invalid_argument("p_value: part " + std::to_string(p) + " < 2");
    }
    const int n = static_cast<int>(parts.size());
    const int s = std::accumulate(parts.begin(), parts.end(), 0);

    // Unlabeled block sums, bucketed by block count t.
    std::vector<Rational> unlabeled(static_cast<std::size_t>(n) + 1, Rational(0));
    for_each_set_partition(parts.size(), [&](const std::vector<int>& rgs, int t) {
        if (t < 2) return;
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(t));
        for (std::size_t i = 0; i < rgs.size(); ++i) blocks[rgs[i]].push_back(parts[i]);
        Rational product = 1;
        for (const auto& block : blocks) {
            const int block_sum = std::accumulate(block.begin(), block.end(), 0);
            product *= Rational(block_sum - 1) * Rational(table.value(PartitionIndex(block)));
        }
        unlabeled[t] += product;
    });

    Rational result(factorial(static_cast<unsigned>(s - 2)));
    for (int t = 2; t <= n; ++t) {
        // t! labelings per unlabeled partition, then the 1/t! of the recursion.
        const Rational labeled = unlabeled[t] * Rational(factorial(t));
        result -= Rational(falling_factorial(s - 2, static_cast<unsigned>(t - 2)), factorial(t)) * labeled;
    }
    return result;
}

Integer p_value(const PartitionIndex& index, PNumberTable& table) { return table.value(index); }

Integer p_value(const std::vector<int>& parts, PNumberTable& table) { return table.value(PartitionIndex(parts)); }

Integer p_bw_value(const std::vector<int>& black, const std::vector<int>& white, PNumberTable& table) {
    if (black.size() != white.size()) {
        throw std::invalid_argument("p_bw_value: |b| = " + std::to_string(black.size()) +
                                    " but |w| = " + std::to_string(white.size()));
    }
    if (black.empty()) throw std::invalid_argument("p_bw_value: empty tuples");
    std::vector<int> sums;
    for (std::size_t i = 0; i < black.size(); ++i) {
        if (black[i] < 1 || white[i] < 1) throw std::invalid_argument("p_bw_value: entries must be >= 1");
        sums.push_back(black[i] + white[i]);
    }
    return table.value(PartitionIndex(std::move(sums)));
}

// ------------------------------------------------ partition enumeration

std::vector<std::vector<int>> partitions(int total, int min_part) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= min_part; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    if (total >= 0) rec(total, total);
    return out;
}

std::vector<std::vector<int>> compositions(int total, int parts, int min_part) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int left) {
        if (left == 0) {
            if (remaining == 0) out.push_back(current);
            return;
        }
        for (int p = min_part; p <= remaining - (left - 1) * min_part; ++p) {
            current.push_back(p);
            rec(remaining - p, left - 1);
            current.pop_back();
        }
    };
    if (parts >= 0) rec(total, parts);
    return out;
}

namespace {

Integer multiplicity_factorials(const std::vector<int>& sorted) {
    Integer out = 1;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        out *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return out;
}

Monomial merge(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), std::greater<>());
    return out;
}

}  // namespace

int monomial_weight(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

// -------------------------------------------- WeightedMonomialSeries

WeightedMonomialSeries::WeightedMonomialSeries(int truncation_weight) : truncation_weight_(truncation_weight) {
    if (truncation_weight < 0) throw std::invalid_argument("WeightedMonomialSeries: negative truncation");
}

WeightedMonomialSeries WeightedMonomialSeries::one(int truncation_weight) {
    WeightedMonomialSeries s(truncation_weight);
    s.add(0, {}, Rational(1));
    return s;
}

Rational WeightedMonomialSeries::coeff(int t_power, Monomial subscripts) const {
    std::sort(subscripts.begin(), subscripts.end(), std::greater<>());
    auto it = terms_.find(Key{t_power, std::move(subscripts)});
    return it == terms_.end() ? Rational(0) : it->second;
}

void WeightedMonomialSeries::add(int t_power, Monomial subscripts, const Rational& value) {
    if (value.is_zero()) return;
    std::sort(subscripts.begin(), subscripts.end(), std::greater<>());
    if (t_power > truncation_weight_ || monomial_weight(subscripts) > truncation_weight_) return;
    auto [it, inserted] = terms_.try_emplace(Key{t_power, std::move(subscripts)}, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::map<Monomial, Rational> WeightedMonomialSeries::t_coefficient(int t_power) const {
    std::map<Monomial, Rational> out;
    for (const auto& [key, value] : terms_) {
        if (key.t_power == t_power) out.emplace(key.subscripts, value);
    }
    return out;
}

WeightedMonomialSeries operator*(const WeightedMonomialSeries& a, const WeightedMonomialSeries& b) {
    const int w = std::min(a.truncation_weight_, b.truncation_weight_);
    WeightedMonomialSeries out(w);
    for (const auto& [ka, va] : a.terms_) {
        const int wa = monomial_weight(ka.subscripts);
        for (const auto& [kb, vb] : b.terms_) {
            if (ka.t_power + kb.t_power > w || wa + monomial_weight(kb.subscripts) > w) continue;
            out.add(ka.t_power + kb.t_power, merge(ka.subscripts, kb.subscripts), va * vb);
        }
    }
    return out;
}

WeightedMonomialSeries WeightedMonomialSeries::power(unsigned exponent) const {
    WeightedMonomialSeries result = one(truncation_weight_);
    for (unsigned i = 0; i < exponent; ++i) result = result * *this;
    return result;
}

WeightedMonomialSeries t_series(int weight, PNumberTable& table) {
    if (weight < 1) throw std::invalid_argument("t_series: weight must be >= 1");
    WeightedMonomialSeries out = WeightedMonomialSeries::one(weight);
    for (int s = 2; s <= weight; ++s) {
        for (const auto& parts : partitions(s, 2)) {
            // (1/n!) summed over the n!/prod(m_i!) orderings of the multiset.
            const Rational c = Rational(s - 1) * Rational(p_value(parts, table), multiplicity_factorials(parts));
            out.add(s, parts, c);
        }
    }
    return out;
}

std::map<Monomial, Rational> exp_generating_coefficient(int k) {
    std::map<Monomial, Rational> out;
    for (const auto& parts : partitions(k, 2)) out.emplace(parts, Rational(Integer(1), multiplicity_factorials(parts)));
    return out;
}

bool verify_multivariate_relation(int k_max, int weight, PNumberTable& table) {
    if (k_max < 0) throw std::invalid_argument("verify_multivariate_relation: negative k_max");
    if (weight < k_max) throw std::invalid_argument("verify_multivariate_relation: weight must be >= k_max");
    if (k_max == 0) return true;  // both sides are 1
    const WeightedMonomialSeries series = t_series(weight, table);
    WeightedMonomialSeries power = WeightedMonomialSeries::one(weight);
    for (int k = 1; k <= k_max; ++k) {
        power = power * series;
        auto lhs = power.t_coefficient(k);
        const Rational scale(Integer(1), factorial(static_cast<unsigned>(k)));
        for (auto& [m, v] : lhs) v *= scale;
        if (lhs != exp_generating_coefficient(k)) return false;
    }
    return true;
}

// ------------------------------------------------- volume polynomial

void HomogeneousVolumePolynomial::add(const std::vector<int>& exponents, const Rational& c) {
    if (static_cast<int>(exponents.size()) != cylinders_) {
        throw std::invalid_argument("HomogeneousVolumePolynomial: exponent tuple has wrong length");
    }
    if (std::accumulate(exponents.begin(), exponents.end(), 0) != 2 * genus_) {
        throw std::invalid_argument("HomogeneousVolumePolynomial: term degree differs from 2g");
    }
    terms_[exponents] += c;
}

Rational HomogeneousVolumePolynomial::coeff(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational HomogeneousVolumePolynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != cylinders_) {
        throw std::invalid_argument("HomogeneousVolumePolynomial::evaluate: wrong number of variables");
    }
    Rational acc = 0;
    for (const auto& [exps, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < exps.size(); ++i) term *= exact::pow(point[i], static_cast<unsigned>(exps[i]));
        acc += term;
    }
    return acc;
}

std::string HomogeneousVolumePolynomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            os << "*L" << i + 1;
            if (exps[i] > 1) os << "^" << exps[i];
        }
    }
    if (first) os << "0";
    return os.str();
}

HomogeneousVolumePolynomial pgvn_polynomial(int g, int n, PNumberTable& table) {
    if (g < 0 || n < 1) throw std::invalid_argument("pgvn_polynomial: need g >= 0 and n >= 1");
    HomogeneousVolumePolynomial poly(g, n);
    const Rational two_n(Integer(Integer(1) << static_cast<unsigned>(n)));
    for (const auto& s : compositions(g + n, n, 1)) {
        std::vector<int> parts;
        std::vector<int> exps;
        Integer denom = 1;
        for (int si : s) {
            parts.push_back(2 * si);
            exps.push_back(2 * si - 2);
            denom *= factorial(static_cast<unsigned>(2 * si));
        }
        poly.add(exps, two_n * Rational(p_value(parts, table), denom));
    }
    return poly;
}

}  // namespace stratavol::pnum
