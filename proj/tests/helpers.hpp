#pragma once

#include "eulersum/numerics.hpp"

namespace testing {

using eulersum::PrecisionConfig;
using eulersum::Real;
using eulersum::ValueWithError;

inline PrecisionConfig fast_config(int digits = 30) {
  PrecisionConfig cfg;
  cfg.digits = digits;
  cfg.cutoff = 1000;
  return cfg;
}

// pi^k / d at the configuration's working precision.
inline Real pi_power_over(int k, long d, const PrecisionConfig& cfg) {
  return eulersum::pow(eulersum::pi(cfg.working_precision()), k) / d;
}

inline Real rel_diff(const Real& a, const Real& b) { return eulersum::abs(a - b) / eulersum::abs(b); }

inline bool rel_close(const Real& a, const Real& b, double tol) {
  return rel_diff(a, b).to_double() <= tol;
}

// |v - truth| <= v.err
inline bool covers(const ValueWithError& v, const Real& truth) { return eulersum::abs(v.value - truth) <= v.err; }

// Agreement within combined reported errors.
inline bool agree(const ValueWithError& a, const ValueWithError& b) {
  return eulersum::abs(a.value - b.value) <= a.err + b.err;
}

}  // namespace testing
