#include "eulersum/identities.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "eulersum/euler_sums.hpp"
#include "eulersum/indices.hpp"
#include "eulersum/mzv.hpp"
#include "eulersum/quadrature.hpp"

namespace eulersum {

int param(const Params& params, std::string_view name) {
  for (const auto& [k, v] : params) {
    if (k == name) return v;
  }
  throw DomainError("missing parameter " + std::string(name));
}

std::string to_string(const Params& params) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ",";
    s += k + "=" + std::to_string(v);
  }
  return s;
}

bool IdentityDef::in_range(const Params& params) const {
  if (params.size() != ranges.size()) return false;
  for (size_t i = 0; i < ranges.size(); ++i) {
    if (params[i].first != ranges[i].name) return false;
    if (params[i].second < ranges[i].lo || params[i].second > ranges[i].hi) return false;
  }
  return !constraint || constraint(params);
}

std::vector<Params> IdentityDef::default_grid() const {
  std::vector<Params> out;
  Params current;
  std::function<void(size_t)> walk = [&](size_t i) {
    if (i == ranges.size()) {
      if (!constraint || constraint(current)) out.push_back(current);
      return;
    }
    for (int v = ranges[i].lo; v <= ranges[i].hi; ++v) {
      current.emplace_back(ranges[i].name, v);
      walk(i + 1);
      current.pop_back();
    }
  };
  walk(0);
  return out;
}

namespace {

using V = ValueWithError;

MultiIndex ones(int k) { return repeat(1, k); }
MultiIndex idx(std::initializer_list<int> parts) { return MultiIndex{std::vector<int>(parts)}; }
MultiIndex cat(const MultiIndex& a, const MultiIndex& b) { return join(a, b); }
MultiIndex cat(const MultiIndex& a, const MultiIndex& b, const MultiIndex& c) { return join(join(a, b), c); }

V zero(const PrecisionConfig& cfg) { return V::exact(Real(cfg.working_precision())); }
V z(const MultiIndex& i, const PrecisionConfig& cfg) { return mzv(i, cfg); }
V zs(const MultiIndex& i, const PrecisionConfig& cfg) { return mzsv(i, cfg); }
V rz(int s, const PrecisionConfig& cfg) { return riemann_zeta(s, cfg); }
V G(int n, int p, int q, const PrecisionConfig& cfg) { return g_direct(GSpec{n, p, q}, cfg); }

int sign(int k) { return k % 2 == 0 ? 1 : -1; }

// 1 - 2^{-m}
Rational one_minus_pow2(int m) {
  BigInt d = 1;
  d <<= m;
  return Rational(1) - Rational(BigInt(1), d);
}

// zeta*({2}^a, 3, {2}^b)
MultiIndex twos_three_twos(int a, int b) { return cat(repeat(2, a), idx({3}), repeat(2, b)); }

// 2(2n+2)(1 - 2^{-(2n+2)}) zeta(2n+3)
V odd_zeta_closed(int n, const PrecisionConfig& cfg) {
  return rz(2 * n + 3, cfg) * (Rational(2 * (2 * n + 2)) * one_minus_pow2(2 * n + 2));
}

// 2(2n+3)(1 - 2^{-(2n+3)}) zeta(2n+4)
V prop44_closed(int n, const PrecisionConfig& cfg) {
  return rz(2 * n + 4, cfg) * (Rational(2 * (2 * n + 3)) * one_minus_pow2(2 * n + 3));
}

Rational quad_norm(int a, int b) {
  BigInt fa, fb;
  mpz_fac_ui(fa.get_mpz_t(), static_cast<unsigned long>(a));
  mpz_fac_ui(fb.get_mpz_t(), static_cast<unsigned long>(b));
  return Rational(BigInt(1), fa * fb);
}

// sum_{a+b=n} zeta*({2}^a,3,{2}^b)
V sum_twos_three(int n, const PrecisionConfig& cfg) {
  V s = zero(cfg);
  for (int a = 0; a <= n; ++a) s += zs(twos_three_twos(a, n - a), cfg);
  return s;
}

IdentitySides sides(V lhs, V rhs, bool zero_target = false) {
  return IdentitySides{std::move(lhs), std::move(rhs), zero_target};
}

IdentitySides exact_zero_rhs(V lhs, const PrecisionConfig& cfg) { return sides(std::move(lhs), zero(cfg), true); }

std::vector<IdentityDef> build_catalog() {
  std::vector<IdentityDef> c;
  auto sum_at_most = [](std::vector<std::string> names, int bound) {
    return [names, bound](const Params& p) {
      int s = 0;
      for (const auto& n : names) s += param(p, n);
      return s <= bound;
    };
  };

  c.push_back({"prop2.5", "G_2(p,q) = C(p+q+1,q) zeta(p+q+2)", {{"p", 0, 6}, {"q", 0, 6}}, sum_at_most({"p", "q"}, 6),
               kSeriesTolerance, [](const Params& ps, const PrecisionConfig& cfg) {
                 const int p = param(ps, "p"), q = param(ps, "q");
                 const ClosedForm f = g2_closed(p, q);
                 return sides(G(0, p, q, cfg), rz(f.zeta_arg, cfg) * Rational(f.coeff));
               }});

  c.push_back({"thm2.2-equiv", "G_{n+2}(p,q): nested sum vs composition sum",
               {{"n", 0, 6}, {"p", 0, 6}, {"q", 0, 6}}, sum_at_most({"n", "p", "q"}, 6), kSeriesTolerance,
               [](const Params& ps, const PrecisionConfig& cfg) {
                 const GSpec g{param(ps, "n"), param(ps, "p"), param(ps, "q")};
                 return sides(g_direct(g, cfg), g_compositions(g, cfg));
               }});

  c.push_back({"thm2.2-quad", "G_{n+2}(p,q): double integral vs nested sum",
               {{"n", 0, 4}, {"p", 0, 4}, {"q", 0, 4}}, sum_at_most({"n", "p", "q"}, 4), kQuadratureTolerance,
               [](const Params& ps, const PrecisionConfig& cfg) {
                 const GSpec g{param(ps, "n"), param(ps, "p"), param(ps, "q")};
                 return sides(g_quad(g, cfg), g_direct(g, cfg));
               }});

  c.push_back({"cor2.3", "zeta*({1}^q,n+2) as a composition sum", {{"q", 0, 5}, {"n", 0, 5}},
               sum_at_most({"q", "n"}, 5), kSeriesTolerance, [](const Params& ps, const PrecisionConfig& cfg) {
                 const int q = param(ps, "q"), n = param(ps, "n");
                 return sides(zetastar_ones(q, n, cfg), zs(cat(ones(q), idx({n + 2})), cfg));
               }});

  c.push_back({"prop2.4", "reflection formula for G_{k+3}", {{"p", 1, 3}, {"q", 1, 3}, {"k", 0, 2}},
               [](const Params& ps) { return param(ps, "k") + param(ps, "p") + param(ps, "q") + 2 <= 9; },
               kSeriesTolerance, [](const Params& ps, const PrecisionConfig& cfg) {
                 const int p = param(ps, "p"), q = param(ps, "q"), k = param(ps, "k");
                 V lhs = G(k + 1, p - 1, q, cfg) + G(k + 1, q - 1, p, cfg) * static_cast<long>(sign(k));
                 V rhs = zero(cfg);
                 for (int a = 0; a <= k; ++a) {
                   const int b = k - a;
                   rhs += z(cat(ones(p - 1), idx({a + 2})), cfg) * z(cat(ones(q - 1), idx({b + 2})), cfg) *
                          static_cast<long>(sign(b));
                 }
                 return sides(std::move(lhs), std::move(rhs));
               }});

  c.push_back({"easy-ones", "zeta*({1}^q,2) = (q+1) zeta(q+2)", {{"q", 0, 6}}, {}, kSeriesTolerance,
               [](const Params& ps, const PrecisionConfig& cfg) {
                 const int q = param(ps, "q");
                 return sides(zs(cat(ones(q), idx({2})), cfg), rz(q + 2, cfg) * static_cast<long>(q + 1));
               }});

  c.push_back({"duality-ones", "zeta({1}^m,2) = zeta(m+2)", {{"m", 0, 8}}, {}, kSeriesTolerance,
               [](const Params& ps, const PrecisionConfig& cfg) {
                 const int m = param(ps, "m");
                 return sides(z(cat(ones(m), idx({2})), cfg), rz(m + 2, cfg));
               }});

  c.push_back({"prop3.1", "zeta*(r+2,{2}^m) from the product prod_{n>=k}(1-x^2/n^2)^{-1}",
               {{"r", 0, 2}, {"m", 0, 3}}, {}, kSeriesTolerance, [](const Params& ps, const PrecisionConfig& cfg) {
                 const int r = param(ps, "r"), m = param(ps, "m");
                 return sides(zetastar_head2(r, m, cfg), zs(cat(idx({r + 2}), repeat(2, m)), cfg));
               }});

  c.push_back({"thm3.2", "double integral of F4^r (F1 - F3)^n / (r! n!)", {{"r", 0, 2}, {"n", 0, 3}}, {},
               kQuadratureTolerance, [](const Params& ps, const PrecisionConfig& cfg) {
                 const int r = param(ps, "r"), n = param(ps, "n");
                 const std::vector<LogMonomial> head{monomial(quad_norm(r, n), {{LogFactor::F4, r}})};
                 const auto terms = multiply(head, expand_log_power(LogFactor::F1, LogFactor::F3, -1, n));
                 V lhs = integrate_monomials(terms, cfg);
                 if (n % 2 == 1) return exact_zero_rhs(std::move(lhs), cfg);
                 return sides(std::move(lhs), zs(cat(idx({r + 2}), repeat(2, n / 2)), cfg));
               }});

  c.push_back({"prop3.3", "zeta*(r+2,{2}^m) as a signed sum of G_{q+2}(p+b,a)", {{"r", 0, 2}, {"m", 0, 3}}, {},
               kSeriesTolerance, [](const Params& ps, const PrecisionConfig& cfg) {
                 const int r = param(ps, "r"), m = param(ps, "m");
                 V rhs = zero(cfg);
                 for (int p = 0; p <= 2 * m; ++p) {
                   const int q = 2 * m - p;
                   for (int a = 0; a <= r; ++a) {
                     const int b = r - a;
                     rhs += G(q, p + b, a, cfg) * Rational(binomial(p + b, p) * sign(q + b));
                   }
                 }
                 return sides(zs(cat(idx({r + 2}), repeat(2, m)), cfg), std::move(rhs));
               }});

  c.push_back({"prop4.1", "sum zeta*({s}^a) zeta(sb+r) = sum zeta*({s}^a,r,{s}^b)",
               {{"s", 2, 3}, {"r", 2, 3}, {"n", 0, 2}}, {}, kSeriesTolerance,
               [](const Params& ps, const PrecisionConfig& cfg) {
                 const int s = param(ps, "s"), r = param(ps, "r"), n = param(ps, "n");
                 V lhs = zero(cfg), rhs = zero(cfg);
                 for (int a = 0; a <= n; ++a) {
                   const int b = n - a;
                   lhs += zs(repeat(s, a), cfg) * rz(s * b + r, cfg);
                   rhs += zs(cat(repeat(s, a), idx({r}), repeat(s, b)), cfg);
                 }
                 return sides(std::move(lhs), std::move(rhs));
               }});

  c.push_back({"prop4.2", "sum_r (-1)^{r+n} zeta({1}^r,n+2-r)", {{"n", 0, 5}}, {}, kSeriesTolerance,
               [](const Params& ps, const PrecisionConfig& cfg) {
                 const int n = param(ps, "n");
                 V lhs = zero(cfg);
                 for (int r = 0; r <= n; ++r) lhs += z(cat(ones(r), idx({n + 2 - r})), cfg) * static_cast<long>(sign(r + n));
                 if (n % 2 == 1) return exact_zero_rhs(std::move(lhs), cfg);
                 return sides(std::move(lhs), zs(repeat(2, n / 2 + 1), cfg));
               }});

  c.push_back({"prop4.3", "sum_r (-1)^{r+n} (r+1) zeta({1}^{r+1},n+2-r)", {{"n", 0, 4}}, {}, kSeriesTolerance,
               [](const Params& ps, const PrecisionConfig& cfg) {
                 const int n = param(ps, "n");
                 V lhs = zero(cfg);
                 for (int r = 0; r <= n; ++r) {
                   lhs += z(cat(ones(r + 1), idx({n + 2 - r})), cfg) * static_cast<long>(sign(r + n) * (r + 1));
                 }
                 const int m = n / 2;
                 if (n % 2 == 1) return sides(std::move(lhs), zs(repeat(2, m + 2), cfg) * static_cast<long>(m + 1));
                 return sides(std::move(lhs), sum_twos_three(m, cfg));
               }});

  c.push_back({"prop4.4", "sum_{p+q=2n+2} zeta*({1}^p,q+2)", {{"n", 0, 2}}, {}, kSeriesTolerance,
               [](const Params& ps, const PrecisionConfig& cfg) {
                 const int n = param(ps, "n");
                 V lhs = zero(cfg);
                 for (int p = 0; p <= 2 * n + 2; ++p) lhs += zs(cat(ones(p), idx({2 * n + 4 - p})), cfg);
                 return sides(std::move(lhs), prop44_closed(n, cfg));
               }});

  c.push_back({"aoki-ohno", "sum of zeta* over admissible indices of weight k and height s",
               {{"k", 2, 8}, {"s", 1, 2}}, [](const Params& ps) { return param(ps, "k") >= 2 * param(ps, "s"); },
               kSeriesTolerance, [](const Params& ps, const PrecisionConfig& cfg) {
                 const int k = param(ps, "k"), s = param(ps, "s");
                 V lhs = zero(cfg);
                 for (const MultiIndex& i : admissible_by_weight_height(k, s)) lhs += zs(i, cfg);
                 V rhs = rz(k, cfg) * (Rational(binomial(k - 1, 2 * s - 1) * 2) * one_minus_pow2(k - 1));
                 return sides(std::move(lhs), std::move(rhs));
               }});

  c.push_back({"zetastar-2s", "zeta*({2}^{n+2}) = 2(1 - 2^{-(2n+3)}) zeta(2n+4)", {{"n", 0, 3}}, {},
               kSeriesTolerance, [](const Params& ps, const PrecisionConfig& cfg) {
                 const int n = param(ps, "n");
                 return sides(zs(repeat(2, n + 2), cfg), rz(2 * n + 4, cfg) * (Rational(2) * one_minus_pow2(2 * n + 3)));
               }});

  c.push_back({"prop5.1", "sum_{p+q=2n} (-1)^q G_{q+2}(p,2)", {{"n", 0, 2}}, {}, kSeriesTolerance,
               [](const Params& ps, const PrecisionConfig& cfg) {
                 const int n = param(ps, "n");
                 V lhs = zero(cfg), rhs = zero(cfg);
                 for (int p = 0; p <= 2 * n; ++p) lhs += G(2 * n - p, p, 2, cfg) * static_cast<long>(sign(2 * n - p));
                 for (int p = 0; p <= 2 * n + 1; ++p) rhs += G(2 * n + 1 - p, 1, p, cfg);
                 for (int a = 0; a <= n; ++a) rhs -= z(idx({1, 2 * a + 3}), cfg) * zs(repeat(2, n - a), cfg);
                 return sides(std::move(lhs), std::move(rhs));
               }});

  c.push_back({"prop5.2", "sum_{p+q=2n} (-1)^q (p+1) G_{q+2}(p+1,1)", {{"n", 0, 2}}, {}, kSeriesTolerance,
               [](const Params& ps, const PrecisionConfig& cfg) {
                 const int n = param(ps, "n");
                 V lhs = zero(cfg), rhs = zero(cfg);
                 for (int p = 0; p <= 2 * n; ++p) {
                   const int q = 2 * n - p;
                   lhs += G(q, p + 1, 1, cfg) * static_cast<long>(sign(q) * (p + 1));
                   rhs += zs(cat(ones(p + 2), idx({q + 2})), cfg) * static_cast<long>(p + 1);
                 }
                 for (int a = 0; a <= n; ++a) {
                   const int b = n - a;
                   rhs -= rz(2 * a + 2, cfg) * zs(repeat(2, b + 1), cfg) * static_cast<long>(b);
                 }
                 for (int a = 0; a <= n - 1; ++a) {
                   for (int b = 0; a + b <= n - 1; ++b) {
                     rhs -= zs(twos_three_twos(a, b), cfg) * rz(2 * (n - 1 - a - b) + 3, cfg);
                   }
                 }
                 return sides(std::move(lhs), std::move(rhs));
               }});

  c.push_back({"thm5.3", "sum (p+1) zeta*({1}^{p+1},q+2) - sum G_{q+2}(1,p)", {{"n", 0, 2}}, {},
               kSeriesTolerance, [](const Params& ps, const PrecisionConfig& cfg) {
                 const int n = param(ps, "n");
                 V lhs = zero(cfg);
                 for (int p = 0; p <= 2 * n + 1; ++p) {
                   const int q = 2 * n + 1 - p;
                   lhs += zs(cat(ones(p + 1), idx({q + 2})), cfg) * static_cast<long>(p + 1);
                   lhs -= G(q, 1, p, cfg);
                 }
                 return sides(std::move(lhs), thm53_rhs(n, cfg));
               }});

  c.push_back({"eq6.1", "sum (2 + [a=0]) zeta*({2}^a,3,{2}^b)", {{"n", 0, 3}}, {}, kSeriesTolerance,
               [](const Params& ps, const PrecisionConfig& cfg) {
                 const int n = param(ps, "n");
                 V lhs = zero(cfg);
                 for (int a = 0; a <= n; ++a) {
                   lhs += zs(twos_three_twos(a, n - a), cfg) * static_cast<long>(a == 0 ? 3 : 2);
                 }
                 return sides(std::move(lhs), odd_zeta_closed(n, cfg));
               }});

  for (int r = 0; r <= 2; ++r) {
    c.push_back({"sec6-r" + std::to_string(r), "closed evaluation of zeta*(" + std::to_string(r + 2) + ",{2}^n)",
                 {{"n", 0, 3}}, {}, kSeriesTolerance, [r](const Params& ps, const PrecisionConfig& cfg) {
                   const int n = param(ps, "n");
                   return sides(zetastar_head_eval(r, n, cfg), zs(cat(idx({r + 2}), repeat(2, n)), cfg));
                 }});
  }

  std::sort(c.begin(), c.end(), [](const IdentityDef& a, const IdentityDef& b) { return a.id < b.id; });
  return c;
}

}  // namespace

BigInt thm53_weight(const std::vector<int>& c) {
  if (c.empty()) throw DomainError("thm53_weight: empty composition");
  BigInt w = binomial(c[0] + 3, 3);
  for (size_t i = 1; i < c.size(); ++i) w *= c[i] + 1;
  return w;
}

ValueWithError thm53_rhs(int n, const PrecisionConfig& cfg) {
  if (n < 0 || n > 3) throw DomainError("thm53_rhs: need 0 <= n <= 3");
  V out = rz(2 * n + 4, cfg) * Rational(binomial(2 * n + 4, 3));
  for (int j = 1; j <= n; ++j) {
    V inner = zero(cfg);
    for_each_composition(2 * n + 1 - 2 * j, j + 1, 0, [&](const std::vector<int>& c) {
      MultiIndex i{{c[0] + 3}};
      for (size_t k = 1; k < c.size(); ++k) i.parts.push_back(c[k] + 2);
      inner += z(i, cfg) * Rational(thm53_weight(c));
    });
    out += inner * static_cast<long>(sign(j));
  }
  return out;
}

ValueWithError zetastar_head_eval(int r, int n, const PrecisionConfig& cfg) {
  if (r < 0 || r > 2) throw DomainError("zetastar_head_eval: need 0 <= r <= 2");
  if (n < 0 || n > 3) throw DomainError("zetastar_head_eval: need 0 <= n <= 3");
  V out = zero(cfg);
  if (r == 0) {
    for (int p = 0; p <= 2 * n; ++p) {
      const int q = 2 * n - p;
      out += z(cat(ones(p), idx({q + 2})), cfg) * static_cast<long>(sign(q));
    }
    return out;
  }
  if (r == 1) return odd_zeta_closed(n, cfg) - sum_twos_three(n, cfg) * 2L;

  out += rz(2 * n + 4, cfg) * (Rational(-binomial(2 * n + 4, 3)) - 1);
  out += prop44_closed(n, cfg);
  out -= thm53_rhs(n, cfg) - rz(2 * n + 4, cfg) * Rational(binomial(2 * n + 4, 3));  // the alternating j-sum, negated
  for (int p = 0; p <= 2 * n; ++p) {
    const int q = 2 * n - p;
    out += z(cat(ones(p + 2), idx({q + 2})), cfg) * Rational(binomial(p + 2, 2) * sign(q));
  }
  for (int a = 0; a <= n; ++a) {
    const int b = n - a;
    out -= z(idx({1, 2 * a + 3}), cfg) * zs(repeat(2, b), cfg);
    out += rz(2 * a + 2, cfg) * zs(repeat(2, b + 1), cfg) * static_cast<long>(b);
  }
  for (int a = 0; a <= n - 1; ++a) {
    for (int b = 0; a + b <= n - 1; ++b) out += zs(twos_three_twos(a, b), cfg) * rz(2 * (n - 1 - a - b) + 3, cfg);
  }
  return out;
}

const std::vector<IdentityDef>& catalog() {
  static const std::vector<IdentityDef> c = build_catalog();
  return c;
}

const IdentityDef* find_identity(std::string_view id) {
  for (const auto& d : catalog()) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

bool identity_passes(const IdentitySides& s, double tol, Real* residual) {
  Real diff = abs(s.lhs.value - s.rhs.value);
  const Precision prec = diff.precision();
  Real scale = s.zero_target ? Real(1L, prec) : max(abs(s.lhs.value), abs(s.rhs.value));
  Real allowed = max(scale * Real(tol, prec), s.lhs.err + s.rhs.err);
  const bool pass = diff <= allowed;
  if (residual) *residual = std::move(diff);
  return pass;
}

IdentityReport run_identity(std::string_view id, const Params& params, const PrecisionConfig& cfg,
                            std::optional<double> tol) {
  const IdentityDef* def = find_identity(id);
  if (!def) throw DomainError("unknown identity: " + std::string(id));
  if (!def->in_range(params)) {
    throw DomainError("parameters out of range for " + def->id + ": " + to_string(params));
  }
  IdentityReport report;
  report.id = def->id;
  report.params = params;
  report.tol = tol.value_or(def->tol);
  const auto start = std::chrono::steady_clock::now();
  try {
    IdentitySides s = def->build(params, cfg);
    Real residual(cfg.working_precision());
    report.pass = identity_passes(s, report.tol, &residual);
    report.lhs = std::move(s.lhs);
    report.rhs = std::move(s.rhs);
    report.residual = std::move(residual);
  } catch (const std::exception& e) {
    report.pass = false;
    report.error = e.what();
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<IdentityReport> run_instances(const std::vector<std::pair<std::string, Params>>& instances,
                                          const PrecisionConfig& cfg, std::optional<double> tol, int threads) {
  for (const auto& [id, params] : instances) {
    const IdentityDef* def = find_identity(id);
    if (!def) throw DomainError("unknown identity: " + id);
    if (!def->in_range(params)) throw DomainError("parameters out of range for " + id + ": " + to_string(params));
  }
  std::vector<IdentityReport> reports(instances.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < instances.size(); i = next++) {
      reports[i] = run_identity(instances[i].first, instances[i].second, cfg, tol);
    }
  };
  const int n = std::max(1, threads);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  return reports;
}

std::vector<IdentityReport> run_suite(const SuiteOptions& options, const PrecisionConfig& cfg) {
  std::vector<std::pair<std::string, Params>> instances;
  for (const auto& def : catalog()) {
    if (options.filter && fnmatch(options.filter->c_str(), def.id.c_str(), 0) != 0) continue;
    for (auto& p : def.default_grid()) instances.emplace_back(def.id, std::move(p));
  }
  return run_instances(instances, cfg, options.tol, options.threads);
}

nlohmann::json to_json(const IdentityReport& r, int digits, bool timing) {
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json j;
  j["id"] = r.id;
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["lhs"] = r.lhs ? to_json(*r.lhs, digits) : nlohmann::json(nullptr);
  j["rhs"] = r.rhs ? to_json(*r.rhs, digits) : nlohmann::json(nullptr);
  j["residual"] = r.residual ? nlohmann::json(r.residual->to_string(3)) : nlohmann::json(nullptr);
  j["tol"] = r.tol;
  j["pass"] = r.pass;
  j["elapsed_ms"] = timing ? nlohmann::json(r.elapsed_ms) : nlohmann::json(nullptr);
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

}  // namespace eulersum
