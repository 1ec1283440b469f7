#include "eulersum/mzv.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "memo.hpp"

namespace eulersum {

void check_series_index(const MultiIndex& idx) {
  if (idx.empty()) return;
  for (int a : idx.parts) {
    if (a < 1) throw DomainError("index parts must be positive: " + to_string(idx));
  }
  if (!idx.admissible()) {
    throw DivergentSeriesError("divergent series: last exponent of " + to_string(idx) + " is 1");
  }
  if (idx.depth() > kMaxSeriesDepth) {
    throw DomainError("depth " + std::to_string(idx.depth()) + " exceeds limit " + std::to_string(kMaxSeriesDepth));
  }
  if (idx.weight() > kMaxSeriesWeight) {
    throw DomainError("weight " + std::to_string(idx.weight()) + " exceeds limit " +
                      std::to_string(kMaxSeriesWeight));
  }
}

namespace detail {

std::vector<LogPowerSeries> prefix_expansions(const PrefixState& state, int order) {
  const Precision prec = state.total().precision();
  const MultiIndex& idx = state.index();
  const bool strict = state.nesting() == Nesting::strict;
  // Strict prefixes are anchored at x = n + 1 (they sum k < x), non-strict at x = n.
  const long anchor = strict ? state.n() + 1 : state.n();

  std::vector<LogPowerSeries> levels;
  levels.reserve(idx.parts.size() + 1);
  levels.push_back(LogPowerSeries::constant(Real(1L, prec), order));
  for (size_t m = 1; m <= idx.parts.size(); ++m) {
    LogPowerSeries summand = levels.back().shifted(idx.parts[m - 1]);
    LogPowerSeries level = sum_below(summand);
    if (!strict) level += summand;
    level.at(0, 0) = state.value(static_cast<int>(m)) - level.evaluate_without_constant(anchor);
    levels.push_back(std::move(level));
  }
  return levels;
}

std::vector<LogPowerSeries> homogeneous_tail_expansions(int m, int order, Precision prec) {
  std::vector<LogPowerSeries> c;
  c.push_back(LogPowerSeries::constant(Real(1L, prec), order));
  for (int j = 1; j <= m; ++j) c.push_back(sum_from(c.back().shifted(2)));
  return c;
}

}  // namespace detail

namespace {

using SeriesKey = std::tuple<std::vector<int>, int, int, long>;

detail::Memo<SeriesKey, SeriesEvaluation>& series_memo() {
  static detail::Memo<SeriesKey, SeriesEvaluation> memo;
  return memo;
}

SeriesEvaluation compute_series(const MultiIndex& idx, Nesting nesting, const PrecisionConfig& cfg);

}  // namespace

void clear_series_memo() { series_memo().clear(); }

SeriesEvaluation evaluate_series(const MultiIndex& idx, Nesting nesting, const PrecisionConfig& cfg) {
  cfg.validate();
  check_series_index(idx);
  const SeriesKey key{idx.parts, static_cast<int>(nesting), cfg.digits, cfg.cutoff};
  if (auto hit = series_memo().find(key)) return *hit;
  SeriesEvaluation out = compute_series(idx, nesting, cfg);
  series_memo().store(key, out);
  return out;
}

namespace {

SeriesEvaluation compute_series(const MultiIndex& idx, Nesting nesting, const PrecisionConfig& cfg) {
  const Precision prec = cfg.working_precision();
  SeriesEvaluation out{idx, cfg.cutoff, ValueWithError::exact(Real(1L, prec)),
                       ValueWithError::exact(Real(1L, prec))};
  if (idx.empty()) return out;

  const long n = cfg.cutoff;
  const int order = expansion_order(n, cfg.working_digits(), idx.depth());
  PrefixState state(idx, nesting, prec);

  state.advance_to(n);
  const Real partial_n = state.total();
  const Real completed_n = detail::prefix_expansions(state, order).back().at(0, 0);

  state.advance_to(2 * n);
  const Real& partial_2n = state.total();
  Real completed_2n = detail::prefix_expansions(state, order).back().at(0, 0);

  out.raw = ValueWithError{partial_2n, abs(partial_2n - partial_n) * 2L + rounding_floor(partial_2n, cfg)};
  Real err = abs(completed_2n - completed_n) * 2L + rounding_floor(completed_2n, cfg);
  out.extrapolated = ValueWithError{std::move(completed_2n), std::move(err)};
  return out;
}

}  // namespace

ValueWithError mzv(const MultiIndex& idx, const PrecisionConfig& cfg) {
  SeriesEvaluation s = evaluate_series(idx, Nesting::strict, cfg);
  return cfg.extrapolate ? s.extrapolated : s.raw;
}

ValueWithError mzsv(const MultiIndex& idx, const PrecisionConfig& cfg) {
  SeriesEvaluation s = evaluate_series(idx, Nesting::non_strict, cfg);
  return cfg.extrapolate ? s.extrapolated : s.raw;
}

std::vector<MultiIndex> merged_indices(const MultiIndex& idx) {
  if (idx.empty()) return {MultiIndex{}};
  const int gaps = idx.depth() - 1;
  std::vector<MultiIndex> out;
  out.reserve(size_t{1} << gaps);
  // Bit g set: the parts on either side of gap g are added together.
  for (unsigned mask = 0; mask < (1u << gaps); ++mask) {
    MultiIndex merged;
    merged.parts.push_back(idx.parts[0]);
    for (int g = 0; g < gaps; ++g) {
      const int next = idx.parts[static_cast<size_t>(g) + 1];
      if (mask & (1u << g)) {
        merged.parts.back() += next;
      } else {
        merged.parts.push_back(next);
      }
    }
    out.push_back(std::move(merged));
  }
  return out;
}

ValueWithError mzsv_from_mzv(const MultiIndex& idx, const PrecisionConfig& cfg) {
  check_series_index(idx);
  ValueWithError total = ValueWithError::exact(Real(cfg.working_precision()));
  for (const MultiIndex& m : merged_indices(idx)) total += mzv(m, cfg);
  return total;
}

namespace {

// c_0(k)..c_m(k) at a single k via the factor DP over n = k..cutoff, started
// from the asymptotic tail at cutoff + 1.
std::vector<Real> tail_coefficients(long k, int m, long cutoff, const std::vector<LogPowerSeries>& tails,
                                    Precision prec) {
  std::vector<Real> c;
  const long start = std::max(k, cutoff + 1);
  for (int j = 0; j <= m; ++j) c.push_back(tails[static_cast<size_t>(j)].evaluate(start));
  Real inv_sq(prec), tmp(prec);
  for (long n = cutoff; n >= k; --n) {
    mpfr_set_si(inv_sq.raw(), n, MPFR_RNDN);
    mpfr_sqr(inv_sq.raw(), inv_sq.raw(), MPFR_RNDN);
    mpfr_ui_div(inv_sq.raw(), 1UL, inv_sq.raw(), MPFR_RNDN);
    // (1 - x^2/n^2)^{-1} = sum_i x^{2i} n^{-2i}
    for (int j = 1; j <= m; ++j) {
      mpfr_mul(tmp.raw(), c[static_cast<size_t>(j - 1)].raw(), inv_sq.raw(), MPFR_RNDN);
      mpfr_add(c[static_cast<size_t>(j)].raw(), c[static_cast<size_t>(j)].raw(), tmp.raw(), MPFR_RNDN);
    }
  }
  return c;
}

Real head2_at_cutoff(int r, int m, long cutoff, const std::vector<LogPowerSeries>& tails, Precision prec) {
  std::vector<Real> c = tail_coefficients(cutoff + 1, m, cutoff, tails, prec);
  Real total = sum_from(tails[static_cast<size_t>(m)].shifted(r + 2)).evaluate(cutoff + 1);
  Real inv(prec), inv_sq(prec), head(prec), tmp(prec);
  for (long n = cutoff; n >= 1; --n) {
    mpfr_set_si(inv.raw(), n, MPFR_RNDN);
    mpfr_ui_div(inv.raw(), 1UL, inv.raw(), MPFR_RNDN);
    mpfr_sqr(inv_sq.raw(), inv.raw(), MPFR_RNDN);
    for (int j = 1; j <= m; ++j) {
      mpfr_mul(tmp.raw(), c[static_cast<size_t>(j - 1)].raw(), inv_sq.raw(), MPFR_RNDN);
      mpfr_add(c[static_cast<size_t>(j)].raw(), c[static_cast<size_t>(j)].raw(), tmp.raw(), MPFR_RNDN);
    }
    mpfr_pow_si(head.raw(), inv.raw(), r + 2, MPFR_RNDN);
    mpfr_mul(tmp.raw(), head.raw(), c[static_cast<size_t>(m)].raw(), MPFR_RNDN);
    mpfr_add(total.raw(), total.raw(), tmp.raw(), MPFR_RNDN);
  }
  return total;
}

ValueWithError dual_cutoff(const Real& at_n, Real at_2n, const PrecisionConfig& cfg) {
  Real err = abs(at_2n - at_n) * 2L + rounding_floor(at_2n, cfg);
  return ValueWithError{std::move(at_2n), std::move(err)};
}

}  // namespace

ValueWithError homogeneous_tail_coeff(long k, int m, const PrecisionConfig& cfg) {
  cfg.validate();
  if (k < 1 || m < 0) throw DomainError("homogeneous_tail_coeff: need k >= 1 and m >= 0");
  if (2 * m > kMaxSeriesWeight) throw DomainError("homogeneous_tail_coeff: m too large");
  const Precision prec = cfg.working_precision();
  if (m == 0) return ValueWithError::exact(Real(1L, prec));
  const int order = expansion_order(cfg.cutoff, cfg.working_digits(), 0);
  const auto tails = detail::homogeneous_tail_expansions(m, order, prec);
  Real at_n = tail_coefficients(k, m, cfg.cutoff, tails, prec)[static_cast<size_t>(m)];
  Real at_2n = tail_coefficients(k, m, 2 * cfg.cutoff, tails, prec)[static_cast<size_t>(m)];
  return dual_cutoff(at_n, std::move(at_2n), cfg);
}

ValueWithError zetastar_head2(int r, int m, const PrecisionConfig& cfg) {
  cfg.validate();
  if (r < 0 || m < 0) throw DomainError("zetastar_head2: need r >= 0 and m >= 0");
  if (r + 2 + 2 * m > kMaxSeriesWeight) throw DomainError("zetastar_head2: weight exceeds limit");
  const Precision prec = cfg.working_precision();
  const int order = expansion_order(cfg.cutoff, cfg.working_digits(), 0);
  const auto tails = detail::homogeneous_tail_expansions(m, order, prec);
  Real at_n = head2_at_cutoff(r, m, cfg.cutoff, tails, prec);
  Real at_2n = head2_at_cutoff(r, m, 2 * cfg.cutoff, tails, prec);
  return dual_cutoff(at_n, std::move(at_2n), cfg);
}

}  // namespace eulersum
