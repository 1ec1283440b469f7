#pragma once

#include <gmpxx.h>

#include <json.hpp>

#include "eulersum/errors.hpp"
#include "eulersum/real.hpp"

namespace eulersum {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Working-precision and truncation settings shared by every evaluator.
struct PrecisionConfig {
  int digits = 30;          ///< significant decimal digits promised in results
  long cutoff = 100000;     ///< series anchor N; partial sums are taken at N and 2N
  bool extrapolate = true;  ///< complete partial sums with the asymptotic tail
  int quad_level = 10;      ///< tanh-sinh refinement level

  /// Throws DomainError unless digits >= 15, cutoff >= 100, quad_level >= 3.
  void validate() const;

  /// Internal precision: `digits` plus guard digits covering accumulated
  /// rounding over a 2N-term sweep.
  Precision working_precision() const;
  int working_digits() const;

  friend bool operator==(const PrecisionConfig&, const PrecisionConfig&) = default;
};

/// A value together with an estimated absolute error (err >= 0).
struct ValueWithError {
  Real value;
  Real err;

  static ValueWithError exact(Real v);

  ValueWithError& operator+=(const ValueWithError& rhs);
  ValueWithError& operator-=(const ValueWithError& rhs);

  friend ValueWithError operator+(ValueWithError a, const ValueWithError& b) { return a += b; }
  friend ValueWithError operator-(ValueWithError a, const ValueWithError& b) { return a -= b; }
  /// First-order propagation: |a| eb + |b| ea + ea eb.
  friend ValueWithError operator*(const ValueWithError& a, const ValueWithError& b);
  friend ValueWithError operator*(const ValueWithError& a, const Rational& c);
  friend ValueWithError operator*(const Rational& c, const ValueWithError& a) { return a * c; }
  friend ValueWithError operator*(const ValueWithError& a, long c);
  friend ValueWithError operator*(long c, const ValueWithError& a) { return a * c; }
};

/// |v| * 10^-digits: the smallest err any evaluation may report at this config.
Real rounding_floor(const Real& v, const PrecisionConfig& cfg);

/// {"value": "<full digits>", "err": "<3 significant digits>"}.
nlohmann::json to_json(const ValueWithError& v, int digits);
ValueWithError value_from_json(const nlohmann::json& j, Precision prec);

/// B_n with B_1 = -1/2, from sum_{k=0}^{n} C(n+1,k) B_k = 0.
Rational bernoulli(int n);

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// pi at the given precision (Gauss-Legendre AGM), cached per precision.
Real pi(Precision prec);

/// zeta(s) for integer s >= 2 by Euler-Maclaurin summation.
ValueWithError riemann_zeta(int s, const PrecisionConfig& cfg);

}  // namespace eulersum
