#include "eulersum/finite_sums.hpp"

#include <algorithm>

namespace eulersum {

namespace {

Rational inverse_power(long k, int a) {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(a));
  return Rational(BigInt(1), den);
}

Rational finite_sum(const MultiIndex& idx, long n, Nesting nesting) {
  if (n < 0) throw DomainError("finite sum: n must be >= 0");
  const size_t r = idx.parts.size();
  std::vector<Rational> acc(r + 1, Rational(0));
  acc[0] = 1;
  for (long k = 1; k <= n; ++k) {
    if (nesting == Nesting::strict) {
      for (size_t m = r; m >= 1; --m) acc[m] += acc[m - 1] * inverse_power(k, idx.parts[m - 1]);
    } else {
      for (size_t m = 1; m <= r; ++m) acc[m] += acc[m - 1] * inverse_power(k, idx.parts[m - 1]);
    }
  }
  return acc[r];
}

}  // namespace

Rational gen_harmonic(long n, int s) {
  if (n < 0 || s < 1) throw DomainError("gen_harmonic: need n >= 0 and s >= 1");
  Rational h(0);
  for (long j = 1; j <= n; ++j) h += inverse_power(j, s);
  return h;
}

Rational finite_mzv(const MultiIndex& idx, long n) { return finite_sum(idx, n, Nesting::strict); }

Rational finite_mzsv(const MultiIndex& idx, long n) { return finite_sum(idx, n, Nesting::non_strict); }

PrefixState::PrefixState(MultiIndex idx, Nesting nesting, Precision prec)
    : idx_(std::move(idx)), nesting_(nesting), tmp_(prec) {
  acc_.assign(idx_.parts.size() + 1, Real(prec));
  acc_[0] = Real(1L, prec);
  int max_part = 1;
  for (int a : idx_.parts) {
    if (a < 1) throw DomainError("PrefixState: index parts must be positive");
    max_part = std::max(max_part, a);
  }
  inv_pow_.assign(static_cast<size_t>(max_part) + 1, Real(prec));
}

void PrefixState::advance() {
  ++n_;
  const size_t r = idx_.parts.size();
  if (r == 0) return;
  mpfr_set_ui(inv_pow_[1].raw(), static_cast<unsigned long>(n_), MPFR_RNDN);
  mpfr_ui_div(inv_pow_[1].raw(), 1UL, inv_pow_[1].raw(), MPFR_RNDN);
  for (size_t a = 2; a < inv_pow_.size(); ++a) {
    mpfr_mul(inv_pow_[a].raw(), inv_pow_[a - 1].raw(), inv_pow_[1].raw(), MPFR_RNDN);
  }
  auto step = [&](size_t m) {
    mpfr_mul(tmp_.raw(), acc_[m - 1].raw(), inv_pow_[static_cast<size_t>(idx_.parts[m - 1])].raw(), MPFR_RNDN);
    mpfr_add(acc_[m].raw(), acc_[m].raw(), tmp_.raw(), MPFR_RNDN);
  };
  if (nesting_ == Nesting::strict) {
    for (size_t m = r; m >= 1; --m) step(m);
  } else {
    for (size_t m = 1; m <= r; ++m) step(m);
  }
}

void PrefixState::advance_to(long n) {
  while (n_ < n) advance();
}

Real finite_mzv_real(const MultiIndex& idx, long n, Precision prec) {
  PrefixState state(idx, Nesting::strict, prec);
  state.advance_to(n);
  return state.total();
}

Real finite_mzsv_real(const MultiIndex& idx, long n, Precision prec) {
  PrefixState state(idx, Nesting::non_strict, prec);
  state.advance_to(n);
  return state.total();
}

}  // namespace eulersum
