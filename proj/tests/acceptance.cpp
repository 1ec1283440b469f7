// Acceptance gate: one PASS/FAIL line per criterion, default configuration.
// Usage: acceptance <path-to-eulersum-cli>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eulersum/euler_sums.hpp"
#include "eulersum/finite_sums.hpp"
#include "eulersum/identities.hpp"
#include "eulersum/indices.hpp"
#include "eulersum/mzv.hpp"
#include "oracles.hpp"

using namespace eulersum;

namespace {

constexpr double kExactBudgetSeconds = 10;
constexpr double kEquivTol = 1e-6;
constexpr double kEquivBudgetSeconds = 120;
constexpr double kClosedTol = 1e-6;
constexpr double kReflectionTol = 1e-6;
constexpr double kGeneratingTol = 1e-5;
constexpr double kSection4Tol = 1e-6;
constexpr double kSection5Tol = 1e-5;
constexpr double kEq61Tol = 1e-5;
constexpr double kHeadEvalTol = 1e-4;
constexpr double kQuadTol = 1e-4;
constexpr double kQuadBudgetSeconds = 300;
constexpr double kHonestyFactor = 10;
constexpr double kCliBudgetSeconds = 15 * 60;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Worst relative (or absolute, for zero targets) discrepancy seen so far.
struct Tally {
  double tol;
  double worst = 0;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void add(const std::string& label, const Real& a, const Real& b, bool zero_target = false) {
    const double diff = abs(a - b).to_double();
    const double scale = zero_target ? 1.0 : std::max(abs(a).to_double(), abs(b).to_double());
    const double d = diff / scale;
    ++cases;
    worst = std::max(worst, d);
    if (!(d <= tol)) {
      ++failures;
      if (first_failure.empty()) first_failure = label;
    }
  }
  bool ok() const { return failures == 0 && cases > 0; }
  std::string summary() const {
    std::ostringstream s;
    s << cases << " cases, worst " << worst << " (tol " << tol << ")";
    if (failures) s << ", " << failures << " failed, first " << first_failure;
    return s.str();
  }
};

struct Outcome {
  bool pass;
  std::string detail;
};

// Runs one catalog instance and feeds lhs/rhs to the tally; evaluation errors count as failures.
void add_identity(Tally& t, const std::string& id, const Params& ps, const PrecisionConfig& cfg) {
  const IdentityReport r = run_identity(id, ps, cfg);
  const std::string label = id + " " + to_string(ps);
  if (!r.error.empty() || !r.lhs || !r.rhs) {
    ++t.cases;
    ++t.failures;
    if (t.first_failure.empty()) t.first_failure = label + ": " + r.error;
    return;
  }
  const bool zero_target = r.rhs->value.is_zero() && r.rhs->err.is_zero();
  t.add(label, r.lhs->value, r.rhs->value, zero_target);
}

Outcome exact_suite() {
  const auto t0 = Clock::now();
  int checks = 0, bad = 0;
  auto expect = [&](bool ok) {
    ++checks;
    bad += !ok;
  };
  // sum_{k<=n} C(n+1,k) B_k = 0
  for (int n = 0; n <= 24; ++n) {
    expect(bernoulli(n) == oracle::bernoulli_at(n));
    if (n >= 1) {
      Rational s(0);
      for (int k = 0; k <= n; ++k) s += Rational(binomial(n + 1, k)) * bernoulli(k);
      expect(s == 0);
    }
  }
  const std::vector<Rational> xs{Rational(1, 2), Rational(-3), Rational(7, 5), Rational(2, 9),
                                 Rational(-1, 4), Rational(5), Rational(11, 3), Rational(-8, 7)};
  for (int m = 0; m <= 8; ++m) expect(bell_poly(m, std::span<const Rational>(xs)) == oracle::exp_coefficient(m, xs));
  for (long n = 0; n <= 50; ++n) {
    for (int m = 1; m <= 6; ++m) {
      std::vector<Rational> alt, plain;
      for (int k = 1; k <= m; ++k) {
        const Rational h = gen_harmonic(n, k);
        plain.push_back(h);
        alt.push_back(k % 2 == 0 ? Rational(-h) : h);
      }
      expect(finite_mzv(repeat(1, m), n) == bell_poly(m, std::span<const Rational>(alt)));
      expect(finite_mzsv(repeat(1, m), n) == bell_poly(m, std::span<const Rational>(plain)));
    }
  }
  for (int t = 1; t <= 12; ++t) {
    BigInt total = 0;
    for (int p = 1; p <= t; ++p) {
      const auto positive = compositions(t, p, 1).size();
      expect(BigInt(static_cast<long>(positive)) == binomial(t - 1, p - 1));
      expect(BigInt(static_cast<long>(compositions(t, p, 0).size())) == binomial(t + p - 1, p - 1));
      total += static_cast<long>(positive);
    }
    expect(total == BigInt(1) << (t - 1));
  }
  const double secs = seconds_since(t0);
  std::ostringstream s;
  s << checks << " exact checks, " << bad << " mismatches, " << secs << " s (budget " << kExactBudgetSeconds << " s)";
  return {bad == 0 && secs <= kExactBudgetSeconds, s.str()};
}

Outcome representation_equivalence(const PrecisionConfig& cfg) {
  clear_series_memo();
  const auto t0 = Clock::now();
  Tally t{kEquivTol};
  for (int n = 0; n <= 6; ++n) {
    for (int p = 0; n + p <= 6; ++p) {
      for (int q = 0; n + p + q <= 6; ++q) {
        const GSpec g{n, p, q};
        t.add(to_string(g), g_direct(g, cfg).value, g_compositions(g, cfg).value);
      }
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream s;
  s << t.summary() << ", " << secs << " s (budget " << kEquivBudgetSeconds << " s)";
  return {t.ok() && secs <= kEquivBudgetSeconds, s.str()};
}

Outcome closed_form_g2(const PrecisionConfig& cfg) {
  Tally t{kClosedTol};
  for (int p = 0; p <= 6; ++p) {
    for (int q = 0; p + q <= 6; ++q) {
      const ClosedForm f = g2_closed(p, q);
      const bool exact = f.coeff == binomial(p + q + 1, q) && f.zeta_arg == p + q + 2;
      const Real rhs = riemann_zeta(f.zeta_arg, cfg).value * Real(f.coeff, cfg.working_precision());
      t.add("G_2(" + std::to_string(p) + "," + std::to_string(q) + ")", g_direct({0, p, q}, cfg).value,
            exact ? rhs : Real(cfg.working_precision()));
    }
  }
  return {t.ok(), t.summary()};
}

Outcome reflection(const PrecisionConfig& cfg) {
  int cases = 0, bad = 0;
  double worst = 0;
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      for (int k = 0; k <= 2; ++k) {
        if (p + q + k + 2 > 9) continue;
        const ValueWithError r = reflection_residual(p, q, k, cfg);
        const Real scale = g_direct({k + 1, p - 1, q}, cfg).value;
        const double rel = (abs(r.value) / abs(scale)).to_double();
        worst = std::max(worst, rel);
        ++cases;
        bad += !(abs(r.value) <= r.err && rel <= kReflectionTol);
      }
    }
  }
  std::ostringstream s;
  s << cases << " cases, worst relative residual " << worst << " (tol " << kReflectionTol
    << ", also within combined err), " << bad << " failed";
  return {bad == 0 && cases > 0, s.str()};
}

Outcome generating_function(const PrecisionConfig& cfg) {
  Tally t{kGeneratingTol};
  for (int r = 0; r <= 2; ++r) {
    for (int m = 0; m <= 3; ++m) {
      const std::string label = "r=" + std::to_string(r) + ",m=" + std::to_string(m);
      const Real head = zetastar_head2(r, m, cfg).value;
      const Real star = mzsv(join(MultiIndex{r + 2}, repeat(2, m)), cfg).value;
      const IdentityReport g = run_identity("prop3.3", {{"r", r}, {"m", m}}, cfg);
      if (!g.rhs) {
        t.add(label, Real(1L, cfg.working_precision()), Real(cfg.working_precision()));
        continue;
      }
      t.add(label + " head/star", head, star);
      t.add(label + " head/G", head, g.rhs->value);
      t.add(label + " G/star", g.rhs->value, star);
    }
  }
  return {t.ok(), t.summary()};
}

Outcome section4(const PrecisionConfig& cfg) {
  Tally t{kSection4Tol};
  for (int n = 0; n <= 5; ++n) add_identity(t, "prop4.2", {{"n", n}}, cfg);
  for (int n = 0; n <= 4; ++n) add_identity(t, "prop4.3", {{"n", n}}, cfg);
  for (int n = 0; n <= 2; ++n) add_identity(t, "prop4.4", {{"n", n}}, cfg);
  for (int s = 1; s <= 2; ++s) {
    for (int k = 2 * s; k <= 8; ++k) add_identity(t, "aoki-ohno", {{"k", k}, {"s", s}}, cfg);
  }
  return {t.ok(), t.summary()};
}

Outcome section5(const PrecisionConfig& cfg) {
  Tally t{kSection5Tol};
  for (const char* id : {"prop5.1", "prop5.2", "thm5.3"}) {
    for (int n = 0; n <= 2; ++n) add_identity(t, id, {{"n", n}}, cfg);
  }
  return {t.ok(), t.summary()};
}

Outcome section6(const PrecisionConfig& cfg) {
  Tally eq{kEq61Tol};
  for (int n = 0; n <= 3; ++n) add_identity(eq, "eq6.1", {{"n", n}}, cfg);
  Tally heads{kHeadEvalTol};
  double budget = 0;
  for (int r = 0; r <= 2; ++r) {
    for (int n = 0; n <= 2; ++n) {
      const ValueWithError v = zetastar_head_eval(r, n, cfg);
      budget = std::max(budget, (v.err / abs(v.value)).to_double());
      heads.add("r=" + std::to_string(r) + ",n=" + std::to_string(n), v.value,
                mzsv(join(MultiIndex{r + 2}, repeat(2, n)), cfg).value);
    }
  }
  std::ostringstream s;
  s << "eq6.1: " << eq.summary() << "; heads: " << heads.summary() << ", largest reported relative err " << budget;
  return {eq.ok() && heads.ok(), s.str()};
}

Outcome quadrature(const PrecisionConfig& cfg) {
  const auto t0 = Clock::now();
  Tally t{kQuadTol};
  for (int n = 0; n <= 4; ++n) {
    for (int p = 0; n + p <= 4; ++p) {
      for (int q = 0; n + p + q <= 4; ++q) {
        const GSpec g{n, p, q};
        t.add(to_string(g), g_quad(g, cfg).value, g_direct(g, cfg).value);
      }
    }
  }
  for (int r = 0; r <= 2; ++r) {
    for (int n = 0; n <= 3; ++n) add_identity(t, "thm3.2", {{"r", r}, {"n", n}}, cfg);
  }
  const double secs = seconds_since(t0);
  std::ostringstream s;
  s << t.summary() << ", " << secs << " s at level " << cfg.quad_level << " (budget " << kQuadBudgetSeconds << " s)";
  return {t.ok() && secs <= kQuadBudgetSeconds, s.str()};
}

// zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!)
Real even_zeta_closed(int s, Precision prec) {
  Rational c = bernoulli(s) * Rational(BigInt(1) << (s - 1));
  for (int j = 2; j <= s; ++j) c /= j;
  if (s % 4 == 0) c = -c;
  return pow(pi(prec), s) * Real(c, prec);
}

Outcome error_honesty(const PrecisionConfig& cfg) {
  PrecisionConfig ref = cfg;
  ref.digits = 60;
  const Precision rp = ref.working_precision();
  int cases = 0, bad = 0;
  double worst = 0;
  std::string first;
  auto check = [&](const std::string& label, const ValueWithError& v, const Real& truth) {
    const Real err = abs(v.value - truth);  // evaluated at the larger precision
    const double ratio = (err / v.err).to_double();
    worst = std::max(worst, ratio);
    ++cases;
    if (!(err <= v.err * static_cast<long>(kHonestyFactor))) {
      ++bad;
      if (first.empty()) first = label;
    }
  };
  PrecisionConfig raw = cfg;
  raw.extrapolate = false;
  for (const PrecisionConfig& c : {cfg, raw}) {
    const std::string tag = c.extrapolate ? "" : " raw";
    check("zeta(2)" + tag, mzv(MultiIndex{2}, c), even_zeta_closed(2, rp));
    check("zeta(4)" + tag, mzv(MultiIndex{4}, c), even_zeta_closed(4, rp));
    // zeta*({2}^m) = 2 (1 - 2^{1-2m}) zeta(2m)
    for (int m = 1; m <= 4; ++m) {
      const Rational f = Rational(2) - Rational(BigInt(1), BigInt(1) << (2 * m - 2));
      check("zeta*({2}^" + std::to_string(m) + ")" + tag, mzsv(repeat(2, m), c), even_zeta_closed(2 * m, rp) * Real(f, rp));
    }
    for (int p = 0; p <= 6; ++p) {
      for (int q = 0; p + q <= 6; ++q) {
        const ClosedForm f = g2_closed(p, q);
        const int s = f.zeta_arg;
        const Real zeta_s = s % 2 == 0 ? even_zeta_closed(s, rp) : riemann_zeta(s, ref).value;
        check("G_2(" + std::to_string(p) + "," + std::to_string(q) + ")" + tag, g_direct({0, p, q}, c),
              zeta_s * Real(f.coeff, rp));
      }
    }
  }
  std::ostringstream s;
  s << cases << " cases, worst true/reported error ratio " << worst << " (limit " << kHonestyFactor << ")";
  if (bad) s << ", " << bad << " failed, first " << first;
  return {bad == 0, s.str()};
}

struct Captured {
  int code = -1;
  std::string out;
  double seconds = 0;
};

Captured run_command(const std::string& cmd) {
  Captured c;
  const auto t0 = Clock::now();
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return c;
  char buf[1 << 16];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) c.out.append(buf, n);
  const int status = ::pclose(pipe);
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  c.seconds = seconds_since(t0);
  return c;
}

Outcome cli_full_run(const char* cli) {
  if (cli == nullptr) return {false, "no CLI path given"};
  const std::string cmd = std::string(cli) + " verify --all --json --no-cache 2>/dev/null";
  const Captured a = run_command(cmd);
  const Captured b = run_command(cmd);
  const bool same = a.out == b.out && !a.out.empty();
  std::ostringstream s;
  s << "exit codes " << a.code << "/" << b.code << ", runs " << a.seconds << " s / " << b.seconds << " s (budget "
    << kCliBudgetSeconds << " s), " << a.out.size() << " bytes, " << (same ? "byte-identical" : "outputs differ");
  return {a.code == 0 && b.code == 0 && same && a.seconds <= kCliBudgetSeconds && b.seconds <= kCliBudgetSeconds,
          s.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const PrecisionConfig cfg;  // digits 30, cutoff 1e5, extrapolation on, quad level 10
  const char* cli = argc > 1 ? argv[1] : nullptr;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exact suite", exact_suite},
      {"representation equivalence", [&] { return representation_equivalence(cfg); }},
      {"closed form G_2", [&] { return closed_form_g2(cfg); }},
      {"reflection", [&] { return reflection(cfg); }},
      {"generating function", [&] { return generating_function(cfg); }},
      {"sum formulas", [&] { return section4(cfg); }},
      {"G-sum identities", [&] { return section5(cfg); }},
      {"zeta-star heads", [&] { return section6(cfg); }},
      {"quadrature", [&] { return quadrature(cfg); }},
      {"error honesty", [&] { return error_honesty(cfg); }},
      {"cli full run", [&] { return cli_full_run(cli); }},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  std::cout << (failed ? "acceptance FAILED (" + std::to_string(failed) + " criteria)" : "acceptance PASSED")
            << std::endl;
  return failed ? 1 : 0;
}
