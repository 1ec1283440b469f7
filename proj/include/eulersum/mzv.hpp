#pragma once

#include <vector>

#include "eulersum/asymptotic.hpp"
#include "eulersum/finite_sums.hpp"
#include "eulersum/indices.hpp"
#include "eulersum/numerics.hpp"

namespace eulersum {

inline constexpr int kMaxSeriesDepth = 12;
inline constexpr int kMaxSeriesWeight = 16;

/// Both estimates of one infinite nested sum.
struct SeriesEvaluation {
  MultiIndex index;
  long cutoff_used = 0;
  /// Plain partial sum S_{2N}; err = 2|S_{2N} - S_N|.
  ValueWithError raw;
  /// Partial sum completed with its asymptotic tail; err = 2|V_{2N} - V_N|.
  ValueWithError extrapolated;
};

/// Throws DivergentSeriesError for a nonempty index with last part 1 and
/// DomainError beyond the depth/weight limits.
void check_series_index(const MultiIndex& idx);

/// Results are memoized per (index, nesting, digits, cutoff) for the process lifetime.
SeriesEvaluation evaluate_series(const MultiIndex& idx, Nesting nesting, const PrecisionConfig& cfg);
void clear_series_memo();

/// zeta(idx), ascending convention. The empty index gives exactly 1.
ValueWithError mzv(const MultiIndex& idx, const PrecisionConfig& cfg);
/// zeta*(idx), ascending convention. The empty index gives exactly 1.
ValueWithError mzsv(const MultiIndex& idx, const PrecisionConfig& cfg);

/// The 2^{depth-1} indices obtained by merging runs of adjacent parts;
/// zeta*(idx) is the sum of zeta over them.
std::vector<MultiIndex> merged_indices(const MultiIndex& idx);
ValueWithError mzsv_from_mzv(const MultiIndex& idx, const PrecisionConfig& cfg);

/// Coefficient of x^{2m} in prod_{n>=k} (1 - x^2/n^2)^{-1}.
ValueWithError homogeneous_tail_coeff(long k, int m, const PrecisionConfig& cfg);
/// zeta*(r+2, {2}^m) = sum_k k^{-(r+2)} c_m(k) with c_m from homogeneous_tail_coeff.
ValueWithError zetastar_head2(int r, int m, const PrecisionConfig& cfg);

namespace detail {

/// Expansions of every prefix sum of state.index() as functions of x, anchored
/// on the exact prefix values held by `state`:
///   strict:     Q_j(x) = zeta_{x-1}(a_1..a_j)
///   non-strict: Q_j(x) = zeta*_x(a_1..a_j)
/// Element 0 is the constant 1.
std::vector<LogPowerSeries> prefix_expansions(const PrefixState& state, int order);

/// Expansions of c_0..c_m where c_j(x) = sum_{x<=n_1<=...<=n_j} prod n_i^{-2}.
std::vector<LogPowerSeries> homogeneous_tail_expansions(int m, int order, Precision prec);

}  // namespace detail

}  // namespace eulersum
