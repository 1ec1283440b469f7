#pragma once

#include <vector>

#include "eulersum/numerics.hpp"

namespace eulersum {

/// Truncated asymptotic expansion  f(x) ~ sum_{i<=max_log, j<=order} a_ij (log x)^i x^{-j}
/// for large x. Closed under products, derivatives and (for j >= 1 terms)
/// antiderivatives, which is all that nested-sum tails need.
class LogPowerSeries {
 public:
  LogPowerSeries(int max_log, int order, Precision prec);
  static LogPowerSeries constant(const Real& c, int order);

  int max_log() const { return max_log_; }
  int order() const { return order_; }
  Precision precision() const { return prec_; }

  Real& at(int log_power, int inv_power);
  const Real& at(int log_power, int inv_power) const;

  LogPowerSeries& operator+=(const LogPowerSeries& rhs);
  friend LogPowerSeries operator*(const LogPowerSeries& a, const LogPowerSeries& b);
  friend LogPowerSeries operator*(const LogPowerSeries& a, const Real& c);

  /// Multiplies by x^{-s}; terms beyond `order` are dropped.
  LogPowerSeries shifted(int s) const;
  LogPowerSeries derivative() const;
  /// Antiderivative that vanishes at infinity where possible; terms in x^{-1}
  /// become powers of log x. Throws DomainError on x^0 terms other than zero.
  LogPowerSeries antiderivative() const;

  /// True when some (log x)^i x^0 with i >= 1 term is nonzero.
  bool grows() const;

  Real evaluate(long x) const;
  Real evaluate_without_constant(long x) const;

 private:
  int max_log_;
  int order_;
  Precision prec_;
  std::vector<Real> coeff_;  // row-major in log power
};

/// Expansion of sum_{1<=j<x} g(j) up to an additive constant (Euler-Maclaurin,
/// B_1 = -1/2). The constant term of the result is zero.
LogPowerSeries sum_below(const LogPowerSeries& g);

/// Expansion of sum_{j>=x} g(j); requires g = O(x^{-2}).
LogPowerSeries sum_from(const LogPowerSeries& g);

/// Truncation order giving about `digits` correct digits when an expansion is
/// evaluated at x >= anchor.
int expansion_order(long anchor, int digits, int max_log);

}  // namespace eulersum
