#pragma once

#include "stratavol/pi_scaled.hpp"
#include "stratavol/rational.hpp"
#include "stratavol/series.hpp"

#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace stratavol::volumes {

using exact::Integer;
using exact::PiScaled;
using exact::Rational;
using exact::TruncatedSeries;

/// Memo of normalized contributions a_{g,n}, keyed by (g, n). Insert-only.
class VolumeTable {
public:
    VolumeTable() = default;
    VolumeTable(const VolumeTable&) = delete;
    VolumeTable& operator=(const VolumeTable&) = delete;

    static VolumeTable& shared();

    Rational value(int g, int n);
    std::map<std::pair<int, int>, Rational> snapshot() const;

private:
    mutable std::shared_mutex mutex_;
    std::map<std::pair<int, int>, Rational> entries_;
};

/// a_{g,n} from the Bernoulli form. Throws std::invalid_argument unless 1 <= n <= g.
Rational a_gn(int g, int n);

/// Vol_n(2g-2) = 2 * 4^g / (2g-1)! * a_{g,n} * pi^{2g}. Cross-checked
/// against the zeta form; a mismatch throws std::logic_error.
PiScaled vol_n(int g, int n);

/// The zeta form on its own: 2/(2g-1)! * 1/n! * sum p_{2s} prod zeta(2 s_i)/s_i.
PiScaled vol_n_zeta_form(int g, int n);

/// Sum of vol_n over 1 <= n <= g.
PiScaled total_volume(int g);

/// C(t,u) = 1 + sum_g (2g-1) (sum_n a_{g,n} u^n) t^{2g}. Throws for odd order.
TruncatedSeries c_series(int order);

/// C(t,u) = t / Q^{-1}(t,u) with Q = t exp(sum_k (k-1)! b_k(u) t^k) and
/// b_k(u) = [t^k] ((t/2)/sin(t/2))^u. Throws for odd order.
TruncatedSeries c_series_inverse_route(int order);

/// Checks (1/(2g)!) [t^{2g}] C^{2g} == [t^{2g}] ((t/2)/sin(t/2))^u for 0 <= g <= g_max.
bool verify_bivariate_relation(int g_max);

/// Exact sum of L_1^{s_1}...L_n^{s_n} over positive h_i, L_i with sum h_i L_i <= N.
Integer cylinder_partial_sum(const std::vector<int>& s, int N);

/// Leading term N^{s+n}/(s+n)! * prod s_i! zeta(s_i + 1), s = sum s_i.
double asymptotic_prediction(const std::vector<int>& s, int N);

}  // namespace stratavol::volumes
