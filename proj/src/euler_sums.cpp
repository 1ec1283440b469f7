#include "eulersum/euler_sums.hpp"

#include "eulersum/asymptotic.hpp"
#include "eulersum/finite_sums.hpp"
#include "eulersum/indices.hpp"
#include "eulersum/mzv.hpp"
#include "eulersum/quadrature.hpp"
#include "memo.hpp"

#include <tuple>

namespace eulersum {

void GSpec::validate() const {
  if (n < 0 || p < 0 || q < 0) throw DomainError("G: n, p, q must be nonnegative");
  if (weight() > kMaxSeriesWeight) {
    throw DomainError("G: weight " + std::to_string(weight()) + " exceeds limit " + std::to_string(kMaxSeriesWeight));
  }
}

std::string to_string(const GSpec& g) {
  return "G(n=" + std::to_string(g.n) + ",p=" + std::to_string(g.p) + ",q=" + std::to_string(g.q) + ")";
}

namespace {

// Advances both blocks to K, accumulating the summand at every step.
class GSweep {
 public:
  GSweep(const GSpec& g, Precision prec)
      : g_(g),
        strict_(repeat(1, g.p), Nesting::strict, prec),
        star_(repeat(1, g.q), Nesting::non_strict, prec),
        sum_(prec),
        head_(prec),
        term_(prec) {}

  void advance_to(long k_end) {
    while (k_ < k_end) {
      ++k_;
      star_.advance();  // zeta*_K
      mpfr_set_si(head_.raw(), k_, MPFR_RNDN);
      mpfr_pow_si(head_.raw(), head_.raw(), -(g_.n + 2), MPFR_RNDN);
      mpfr_mul(term_.raw(), strict_.total().raw(), head_.raw(), MPFR_RNDN);  // zeta_{K-1}
      mpfr_mul(term_.raw(), term_.raw(), star_.total().raw(), MPFR_RNDN);
      mpfr_add(sum_.raw(), sum_.raw(), term_.raw(), MPFR_RNDN);
      strict_.advance();
    }
  }

  // sum_{K<=k} plus the tail expansion of the summand from k+1 on.
  Real completed(int order) const {
    const LogPowerSeries a = detail::prefix_expansions(strict_, order).back();
    const LogPowerSeries b = detail::prefix_expansions(star_, order).back();
    const LogPowerSeries tail = sum_below((a * b).shifted(g_.n + 2));
    return sum_ - tail.evaluate_without_constant(k_ + 1);
  }

  const Real& partial() const { return sum_; }

 private:
  GSpec g_;
  PrefixState strict_;
  PrefixState star_;
  Real sum_, head_, term_;
  long k_ = 0;
};

}  // namespace

namespace {

ValueWithError compute_g_direct(const GSpec& g, const PrecisionConfig& cfg);

using GKey = std::tuple<GSpec, int, long, bool>;

detail::Memo<GKey, ValueWithError>& g_memo() {
  static detail::Memo<GKey, ValueWithError> memo;
  return memo;
}

}  // namespace

ValueWithError g_direct(const GSpec& g, const PrecisionConfig& cfg) {
  cfg.validate();
  g.validate();
  const GKey key{g, cfg.digits, cfg.cutoff, cfg.extrapolate};
  if (auto hit = g_memo().find(key)) return *hit;
  ValueWithError out = compute_g_direct(g, cfg);
  g_memo().store(key, out);
  return out;
}

namespace {

ValueWithError compute_g_direct(const GSpec& g, const PrecisionConfig& cfg) {
  const Precision prec = cfg.working_precision();
  const long n = cfg.cutoff;
  const int order = expansion_order(n, cfg.working_digits(), g.p + g.q);

  GSweep sweep(g, prec);
  sweep.advance_to(n);
  const Real partial_n = sweep.partial();
  const Real completed_n = cfg.extrapolate ? sweep.completed(order) : Real(prec);
  sweep.advance_to(2 * n);

  if (!cfg.extrapolate) {
    Real v = sweep.partial();
    Real err = abs(v - partial_n) * 2L + rounding_floor(v, cfg);
    return ValueWithError{std::move(v), std::move(err)};
  }
  Real v = sweep.completed(order);
  Real err = abs(v - completed_n) * 2L + rounding_floor(v, cfg);
  return ValueWithError{std::move(v), std::move(err)};
}

}  // namespace

ValueWithError g_compositions(const GSpec& g, const PrecisionConfig& cfg) {
  cfg.validate();
  g.validate();
  const int total = g.p + g.q + 1;
  ValueWithError sum = ValueWithError::exact(Real(cfg.working_precision()));
  for (int r = g.p + 1; r <= total; ++r) {
    ValueWithError inner = ValueWithError::exact(Real(cfg.working_precision()));
    for_each_composition(total, r, 1, [&](const std::vector<int>& parts) {
      MultiIndex idx{parts};
      idx.parts.back() += g.n + 1;
      inner += mzv(idx, cfg);
    });
    sum += inner * Rational(binomial(r - 1, g.p));
  }
  return sum;
}

ValueWithError g_quad(const GSpec& g, const PrecisionConfig& cfg) {
  g.validate();
  if (g.n + g.p + g.q > kMaxQuadratureG) throw DomainError("g_quad: need n + p + q <= 10");
  BigInt denom = 1;
  for (int f : {g.p, g.q, g.n}) {
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(f));
    denom *= fact;
  }
  const LogMonomial m =
      monomial(Rational(BigInt(1), denom), {{LogFactor::F1, g.p}, {LogFactor::F2, g.q}, {LogFactor::F3, g.n}});
  return integrate_monomials(std::span(&m, 1), cfg);
}

ClosedForm g2_closed(int p, int q) {
  if (p < 0 || q < 0) throw DomainError("g2_closed: p, q must be nonnegative");
  return ClosedForm{binomial(p + q + 1, q), p + q + 2};
}

ValueWithError reflection_residual(int p, int q, int k, const PrecisionConfig& cfg) {
  if (p < 1 || q < 1 || k < 0) throw DomainError("reflection_residual: need p, q >= 1 and k >= 0");
  ValueWithError out = g_direct(GSpec{k + 1, p - 1, q}, cfg);
  const ValueWithError mirrored = g_direct(GSpec{k + 1, q - 1, p}, cfg);
  if (k % 2 == 0) {
    out += mirrored;
  } else {
    out -= mirrored;
  }
  for (int a = 0; a <= k; ++a) {
    const int b = k - a;
    MultiIndex left = join(repeat(1, p - 1), MultiIndex{{a + 2}});
    MultiIndex right = join(repeat(1, q - 1), MultiIndex{{b + 2}});
    const ValueWithError prod = mzv(left, cfg) * mzv(right, cfg);
    if (b % 2 == 0) {
      out -= prod;
    } else {
      out += prod;
    }
  }
  return out;
}

ValueWithError zetastar_ones(int q, int n, const PrecisionConfig& cfg) { return g_compositions(GSpec{n, 0, q}, cfg); }

}  // namespace eulersum
