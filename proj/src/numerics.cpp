#include "eulersum/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace eulersum {

void PrecisionConfig::validate() const {
  if (digits < 15) throw DomainError("digits must be >= 15, got " + std::to_string(digits));
  if (cutoff < 100) throw DomainError("cutoff must be >= 100, got " + std::to_string(cutoff));
  if (quad_level < 3) throw DomainError("quad_level must be >= 3, got " + std::to_string(quad_level));
}

int PrecisionConfig::working_digits() const {
  // Summing 2N positive terms loses at most log10(2N) digits.
  int sweep_loss = static_cast<int>(std::ceil(std::log10(2.0 * static_cast<double>(cutoff))));
  return digits + 10 + sweep_loss;
}

Precision PrecisionConfig::working_precision() const { return Precision::from_digits(working_digits()); }

ValueWithError ValueWithError::exact(Real v) {
  Real zero(v.precision());
  return ValueWithError{std::move(v), std::move(zero)};
}

ValueWithError& ValueWithError::operator+=(const ValueWithError& rhs) {
  value += rhs.value;
  err += rhs.err;
  return *this;
}

ValueWithError& ValueWithError::operator-=(const ValueWithError& rhs) {
  value -= rhs.value;
  err += rhs.err;
  return *this;
}

ValueWithError operator*(const ValueWithError& a, const ValueWithError& b) {
  Real err = abs(a.value) * b.err + abs(b.value) * a.err + a.err * b.err;
  return ValueWithError{a.value * b.value, std::move(err)};
}

ValueWithError operator*(const ValueWithError& a, const Rational& c) {
  Real factor(c, a.value.precision());
  return ValueWithError{a.value * factor, a.err * abs(factor)};
}

ValueWithError operator*(const ValueWithError& a, long c) {
  return ValueWithError{a.value * c, a.err * (c < 0 ? -c : c)};
}

Real rounding_floor(const Real& v, const PrecisionConfig& cfg) {
  return abs(v) * ten_to_minus(cfg.digits, v.precision());
}

nlohmann::json to_json(const ValueWithError& v, int digits) {
  return nlohmann::json{{"value", v.value.to_string(digits)}, {"err", v.err.to_string(3)}};
}

ValueWithError value_from_json(const nlohmann::json& j, Precision prec) {
  return ValueWithError{Real::parse(j.at("value").get<std::string>(), prec),
                        Real::parse(j.at("err").get<std::string>(), prec)};
}

Rational bernoulli(int n) {
  if (n < 0) throw DomainError("bernoulli: n must be >= 0");
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(table.size()) <= n) {
    const long m = static_cast<long>(table.size());
    // (m+1) B_m = -sum_{k<m} C(m+1,k) B_k
    Rational acc(0);
    for (long k = 0; k < m; ++k) {
      acc += Rational(binomial(m + 1, k)) * table[static_cast<size_t>(k)];
    }
    Rational b = -acc / Rational(m + 1);
    b.canonicalize();
    table.push_back(b);
  }
  return table[static_cast<size_t>(n)];
}

BigInt binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial: n must be >= 0");
  if (k < 0 || k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Real pi(Precision prec) {
  static std::mutex mutex;
  static std::map<mpfr_prec_t, Real> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(prec.bits); it != cache.end()) return it->second;
  }

  // Gauss-Legendre iteration with a few guard bits.
  Precision work{prec.bits + 16};
  Real a(1L, work);
  Real b = sqrt(Real(1L, work) / 2L);
  Real t = Real(1L, work) / 4L;
  Real p(1L, work);
  Real eps = pow(Real(2L, work), -static_cast<long>(work.bits));
  while (abs(a - b) > eps) {
    Real next = (a + b) / 2L;
    b = sqrt(a * b);
    Real d = a - next;
    t -= p * d * d;
    p *= 2L;
    a = std::move(next);
  }
  Real sum = a + b;
  Real result(prec);
  mpfr_set(result.raw(), (sum * sum / (t * 4L)).raw(), MPFR_RNDN);

  std::lock_guard lock(mutex);
  return cache.emplace(prec.bits, std::move(result)).first->second;
}

ValueWithError riemann_zeta(int s, const PrecisionConfig& cfg) {
  if (s < 2) throw DomainError("riemann_zeta: s must be >= 2, got " + std::to_string(s));
  const Precision prec = cfg.working_precision();
  const int wd = cfg.working_digits();
  const long n = std::max(10, wd);

  Real sum(prec);
  for (long k = 1; k < n; ++k) {
    sum += pow(Real(k, prec), -s);
  }
  const Real big_n(n, prec);
  sum += pow(big_n, 1 - s) / static_cast<long>(s - 1);
  sum += pow(big_n, -s) / 2L;

  // B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
  const Real threshold = ten_to_minus(wd + 2, prec);
  Real rising(static_cast<long>(s), prec);  // s(s+1)...(s+2j-2)
  Real factorial(2L, prec);                 // (2j)!
  Real npow = pow(big_n, -s - 1);
  const Real inv_n2 = pow(big_n, -2);
  Real omitted(prec);
  for (int j = 1; j < 400; ++j) {
    Real term = Real(bernoulli(2 * j), prec) / factorial * rising * npow;
    if (abs(term) < threshold * abs(sum)) {
      omitted = abs(term);
      break;
    }
    sum += term;
    rising *= static_cast<long>(s + 2 * j - 1);
    rising *= static_cast<long>(s + 2 * j);
    factorial *= static_cast<long>(2 * j + 1);
    factorial *= static_cast<long>(2 * j + 2);
    npow *= inv_n2;
  }
  Real err = omitted + rounding_floor(sum, cfg);
  return ValueWithError{std::move(sum), std::move(err)};
}

}  // namespace eulersum
