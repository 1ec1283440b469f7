#pragma once

#include <span>
#include <vector>

#include "eulersum/indices.hpp"
#include "eulersum/numerics.hpp"

namespace eulersum {

/// H_n^{(s)} = sum_{j=1}^{n} j^{-s}, exactly.
Rational gen_harmonic(long n, int s);

/// zeta_n(idx): sum over 1 <= k_1 < ... < k_r <= n of prod k_i^{-a_i}. Exact.
Rational finite_mzv(const MultiIndex& idx, long n);
/// zeta*_n(idx): the same with <= between consecutive k_i. Exact.
Rational finite_mzsv(const MultiIndex& idx, long n);

/// Modified Bell polynomial P_m, the z^m coefficient of exp(sum_k x_k z^k / k),
/// via m P_m = sum_{k=1}^{m} x_k P_{m-k}. Works for Rational and Real scalars.
template <typename Scalar>
Scalar bell_poly(int m, std::span<const Scalar> xs, const Scalar& one) {
  if (m < 0) throw DomainError("bell_poly: m must be >= 0");
  if (static_cast<int>(xs.size()) < m) throw DomainError("bell_poly: need at least m arguments");
  std::vector<Scalar> p;
  p.reserve(static_cast<size_t>(m) + 1);
  p.push_back(one);
  for (int j = 1; j <= m; ++j) {
    Scalar acc = one - one;
    for (int k = 1; k <= j; ++k) acc += xs[static_cast<size_t>(k - 1)] * p[static_cast<size_t>(j - k)];
    acc /= static_cast<long>(j);
    p.push_back(std::move(acc));
  }
  return p.back();
}

inline Rational bell_poly(int m, std::span<const Rational> xs) { return bell_poly<Rational>(m, xs, Rational(1)); }

enum class Nesting { strict, non_strict };

/// Running prefix accumulators for one multi-index: after advancing to n,
/// value(j) holds zeta_n(a_1..a_j) (strict) or zeta*_n(a_1..a_j) (non-strict).
/// value(0) is the empty sum, 1. Each advance costs O(depth) operations.
class PrefixState {
 public:
  PrefixState(MultiIndex idx, Nesting nesting, Precision prec);

  void advance();
  void advance_to(long n);

  long n() const { return n_; }
  const MultiIndex& index() const { return idx_; }
  Nesting nesting() const { return nesting_; }
  const Real& value(int prefix_len) const { return acc_[static_cast<size_t>(prefix_len)]; }
  const Real& total() const { return acc_.back(); }

 private:
  MultiIndex idx_;
  Nesting nesting_;
  long n_ = 0;
  std::vector<Real> acc_;
  std::vector<Real> inv_pow_;  // k^{-a} for a = 1..max part
  Real tmp_;
};

/// zeta_n(idx) in extended precision, for n too large for exact rationals.
Real finite_mzv_real(const MultiIndex& idx, long n, Precision prec);
Real finite_mzsv_real(const MultiIndex& idx, long n, Precision prec);

}  // namespace eulersum
