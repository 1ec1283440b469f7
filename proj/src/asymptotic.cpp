#include "eulersum/asymptotic.hpp"

#include <algorithm>
#include <cmath>

namespace eulersum {

LogPowerSeries::LogPowerSeries(int max_log, int order, Precision prec)
    : max_log_(max_log), order_(order), prec_(prec) {
  if (max_log < 0 || order < 0) throw DomainError("LogPowerSeries: negative dimensions");
  coeff_.assign(static_cast<size_t>((max_log + 1) * (order + 1)), Real(prec));
}

LogPowerSeries LogPowerSeries::constant(const Real& c, int order) {
  LogPowerSeries s(0, order, c.precision());
  s.at(0, 0) = c;
  return s;
}

Real& LogPowerSeries::at(int i, int j) { return coeff_[static_cast<size_t>(i * (order_ + 1) + j)]; }

const Real& LogPowerSeries::at(int i, int j) const {
  return coeff_[static_cast<size_t>(i * (order_ + 1) + j)];
}

LogPowerSeries& LogPowerSeries::operator+=(const LogPowerSeries& rhs) {
  LogPowerSeries out(std::max(max_log_, rhs.max_log_), std::min(order_, rhs.order_), prec_);
  for (int i = 0; i <= out.max_log_; ++i) {
    for (int j = 0; j <= out.order_; ++j) {
      if (i <= max_log_) out.at(i, j) += at(i, j);
      if (i <= rhs.max_log_) out.at(i, j) += rhs.at(i, j);
    }
  }
  *this = std::move(out);
  return *this;
}

LogPowerSeries operator*(const LogPowerSeries& a, const LogPowerSeries& b) {
  const int order = std::min(a.order_, b.order_);
  LogPowerSeries out(a.max_log_ + b.max_log_, order, a.prec_);
  Real tmp(a.prec_);
  for (int i1 = 0; i1 <= a.max_log_; ++i1) {
    for (int j1 = 0; j1 <= order; ++j1) {
      const Real& x = a.at(i1, j1);
      if (x.is_zero()) continue;
      for (int i2 = 0; i2 <= b.max_log_; ++i2) {
        for (int j2 = 0; j1 + j2 <= order; ++j2) {
          const Real& y = b.at(i2, j2);
          if (y.is_zero()) continue;
          mpfr_mul(tmp.raw(), x.raw(), y.raw(), MPFR_RNDN);
          Real& dst = out.at(i1 + i2, j1 + j2);
          mpfr_add(dst.raw(), dst.raw(), tmp.raw(), MPFR_RNDN);
        }
      }
    }
  }
  return out;
}

LogPowerSeries operator*(const LogPowerSeries& a, const Real& c) {
  LogPowerSeries out = a;
  for (auto& v : out.coeff_) v *= c;
  return out;
}

LogPowerSeries LogPowerSeries::shifted(int s) const {
  LogPowerSeries out(max_log_, order_, prec_);
  for (int i = 0; i <= max_log_; ++i) {
    for (int j = 0; j + s <= order_; ++j) out.at(i, j + s) = at(i, j);
  }
  return out;
}

LogPowerSeries LogPowerSeries::derivative() const {
  // d/dx L^i x^-j = (i L^{i-1} - j L^i) x^{-j-1}
  LogPowerSeries out(max_log_, order_, prec_);
  for (int i = 0; i <= max_log_; ++i) {
    for (int j = 0; j < order_; ++j) {
      const Real& c = at(i, j);
      if (c.is_zero()) continue;
      if (i > 0) out.at(i - 1, j + 1) += c * static_cast<long>(i);
      if (j > 0) out.at(i, j + 1) -= c * static_cast<long>(j);
    }
  }
  return out;
}

LogPowerSeries LogPowerSeries::antiderivative() const {
  for (int i = 0; i <= max_log_; ++i) {
    if (!at(i, 0).is_zero()) throw DomainError("antiderivative: expansion has x^0 terms");
  }
  LogPowerSeries out(max_log_ + 1, order_, prec_);
  for (int i = 0; i <= max_log_; ++i) {
    if (order_ >= 1) out.at(i + 1, 0) += at(i, 1) / static_cast<long>(i + 1);
    // int L^i x^-j dx = -x^{1-j} sum_t i!/(i-t)! L^{i-t} / (j-1)^{t+1}
    for (int j = 2; j <= order_; ++j) {
      const Real& c = at(i, j);
      if (c.is_zero()) continue;
      Real term = -c / static_cast<long>(j - 1);
      for (int t = 0; t <= i; ++t) {
        out.at(i - t, j - 1) += term;
        term *= static_cast<long>(i - t);
        term /= static_cast<long>(j - 1);
      }
    }
  }
  return out;
}

bool LogPowerSeries::grows() const {
  for (int i = 1; i <= max_log_; ++i) {
    if (!at(i, 0).is_zero()) return true;
  }
  return false;
}

Real LogPowerSeries::evaluate_without_constant(long x) const {
  const Real big_x(x, prec_);
  const Real lx = log(big_x);
  const Real u = Real(1L, prec_) / big_x;
  Real total(prec_);
  for (int i = max_log_; i >= 0; --i) {
    Real row(prec_);
    for (int j = order_; j >= 0; --j) {
      row *= u;
      if (i == 0 && j == 0) continue;
      row += at(i, j);
    }
    total *= lx;
    total += row;
  }
  return total;
}

Real LogPowerSeries::evaluate(long x) const { return evaluate_without_constant(x) + at(0, 0); }

LogPowerSeries sum_below(const LogPowerSeries& g) {
  const Precision prec = g.precision();
  LogPowerSeries out = g.antiderivative();
  LogPowerSeries deriv = g;
  Real factorial(1L, prec);
  for (int k = 1; k <= g.order(); ++k) {
    factorial *= static_cast<long>(k);
    const Rational b = bernoulli(k);
    if (b != 0) out += deriv * (Real(b, prec) / factorial);
    if (k < g.order()) deriv = deriv.derivative();
  }
  out.at(0, 0) = Real(prec);
  return out;
}

LogPowerSeries sum_from(const LogPowerSeries& g) {
  for (int i = 0; i <= g.max_log(); ++i) {
    if (!g.at(i, 0).is_zero() || (g.order() >= 1 && !g.at(i, 1).is_zero())) {
      throw DomainError("sum_from: tail of a divergent series");
    }
  }
  return sum_below(g) * Real(-1L, g.precision());
}

int expansion_order(long anchor, int digits, int max_log) {
  const double log_anchor = std::log10(static_cast<double>(anchor));
  const double log_growth = max_log * std::log10(std::log(static_cast<double>(anchor)) + 1.0);
  int order = static_cast<int>(std::ceil((digits + 2 + log_growth) / log_anchor)) + 3;
  return std::clamp(order, 6, 80);
}

}  // namespace eulersum
