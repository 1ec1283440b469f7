#include "eulersum/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace eulersum {

int LogMonomial::degree() const {
  int d = 0;
  for (int e : exponents) d += e;
  return d;
}

std::string to_string(const LogMonomial& m) {
  std::string s = m.coeff.get_str();
  for (int f = 0; f < 5; ++f) {
    if (m.exponents[static_cast<size_t>(f)] > 0) {
      s += "*F" + std::to_string(f + 1);
      if (m.exponents[static_cast<size_t>(f)] > 1) s += "^" + std::to_string(m.exponents[static_cast<size_t>(f)]);
    }
  }
  return s;
}

LogMonomial monomial(Rational coeff, std::initializer_list<std::pair<LogFactor, int>> powers) {
  LogMonomial m;
  m.coeff = std::move(coeff);
  for (auto [f, e] : powers) {
    if (e < 0) throw DomainError("monomial: negative exponent");
    m.exponent(f) += e;
  }
  if (m.degree() > kMaxMonomialDegree) throw DomainError("monomial: degree exceeds 12");
  return m;
}

std::vector<LogMonomial> expand_log_power(LogFactor a, LogFactor b, int sign, int n) {
  if (sign != 1 && sign != -1) throw DomainError("expand_log_power: sign must be +1 or -1");
  if (n < 0 || n > kMaxMonomialDegree) throw DomainError("expand_log_power: need 0 <= n <= 12");
  std::vector<LogMonomial> out;
  for (int k = 0; k <= n; ++k) {
    // C(n,k) F_a^{n-k} (sign F_b)^k
    Rational c(binomial(n, k));
    if (sign < 0 && k % 2 == 1) c = -c;
    out.push_back(monomial(c, {{a, n - k}, {b, k}}));
  }
  if (a == b) {
    std::vector<LogMonomial> one{monomial(1, {})};
    return multiply(one, out);
  }
  return out;
}

std::vector<LogMonomial> multiply(std::span<const LogMonomial> a, std::span<const LogMonomial> b) {
  std::map<std::array<int, 5>, Rational> merged;
  for (const auto& x : a) {
    for (const auto& y : b) {
      std::array<int, 5> e{};
      for (size_t i = 0; i < 5; ++i) e[i] = x.exponents[i] + y.exponents[i];
      merged[e] += x.coeff * y.coeff;
    }
  }
  std::vector<LogMonomial> out;
  for (auto& [e, c] : merged) {
    if (c == 0) continue;
    LogMonomial m;
    m.coeff = c;
    m.exponents = e;
    if (m.degree() > kMaxMonomialDegree) throw DomainError("multiply: degree exceeds 12");
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

constexpr double kHalfRange = 4.5;

struct Node {
  double x;   // abscissa in (0,1)
  double cx;  // 1 - x, computed without cancellation
  double w;   // weight at the finest step
  int k;      // position on the finest grid
};

std::vector<Node> tanh_sinh_nodes(double h) {
  // Node count a multiple of 4 so levels L-1 and L-2 are sub-grids.
  const int half = 4 * static_cast<int>(std::ceil(kHalfRange / (4 * h)));
  std::vector<Node> nodes;
  for (int k = -half; k <= half; ++k) {
    const double t = k * h;
    const double v = std::numbers::pi / 2 * std::sinh(t);
    const double x = 1 / (1 + std::exp(-2 * v));
    const double cx = 1 / (1 + std::exp(2 * v));
    const double w = h * std::numbers::pi * std::cosh(t) * x * cx;
    if (x > 0 && cx > 0 && w > 0) nodes.push_back({x, cx, w, k});
  }
  return nodes;
}

double neg_log(double x, double cx) { return x > 0.5 ? -std::log1p(-cx) : -std::log(x); }

}  // namespace

std::array<double, 3> quadrature_levels(std::span<const LogMonomial> terms, int level) {
  if (level < 3) throw DomainError("quadrature level must be >= 3");
  int max_exp[5] = {0, 0, 0, 0, 0};
  for (const auto& m : terms) {
    if (m.degree() > kMaxMonomialDegree) throw DomainError("integrate: degree exceeds 12");
    for (size_t f = 0; f < 5; ++f) max_exp[f] = std::max(max_exp[f], m.exponents[f]);
  }
  std::vector<double> coeffs;
  for (const auto& m : terms) coeffs.push_back(m.coeff.get_d());

  const double h = std::ldexp(1.0, 3 - level);
  const std::vector<Node> nodes = tanh_sinh_nodes(h);

  std::array<long double, 3> sums{0, 0, 0};  // finest, every 2nd, every 4th node
  std::vector<std::array<double, kMaxMonomialDegree + 1>> powers(5);
  auto fill = [&](size_t f, double v) {
    auto& p = powers[f];
    p[0] = 1;
    for (int e = 1; e <= max_exp[f]; ++e) p[static_cast<size_t>(e)] = p[static_cast<size_t>(e) - 1] * v;
  };

  for (const Node& s : nodes) {
    fill(2, neg_log(s.x, s.cx));  // F3 = log(1/s)
    for (const Node& t : nodes) {
      const double one_minus_st = s.cx + s.x * t.cx;  // 1 - s t
      fill(0, -std::log(one_minus_st));
      fill(1, -std::log(t.cx));
      fill(3, std::log(s.x + s.cx / t.cx));  // log((1 - s t)/(1 - t))
      fill(4, neg_log(t.x, t.cx));
      double f = 0;
      for (size_t i = 0; i < terms.size(); ++i) {
        double v = coeffs[i];
        for (size_t k = 0; k < 5; ++k) v *= powers[k][static_cast<size_t>(terms[i].exponents[k])];
        f += v;
      }
      const long double contrib = static_cast<long double>(s.w) * t.w * f / one_minus_st;
      sums[0] += contrib;
      if (s.k % 2 == 0 && t.k % 2 == 0) sums[1] += 4 * contrib;
      if (s.k % 4 == 0 && t.k % 4 == 0) sums[2] += 16 * contrib;
    }
  }
  return {static_cast<double>(sums[2]), static_cast<double>(sums[1]), static_cast<double>(sums[0])};
}

ValueWithError integrate_monomials(std::span<const LogMonomial> terms, const PrecisionConfig& cfg) {
  cfg.validate();
  const Precision prec = cfg.working_precision();
  if (terms.empty()) return ValueWithError::exact(Real(prec));

  // Scale for the rounding floor and the stall test: integral of |integrand|
  // bounded by the sum of the integrals of each |term|.
  double scale = 0;
  for (const auto& m : terms) {
    LogMonomial a = m;
    a.coeff = abs(m.coeff);
    scale += quadrature_levels(std::span(&a, 1), std::max(3, cfg.quad_level - 3))[2];
  }

  const auto levels = quadrature_levels(terms, cfg.quad_level);
  const double coarse_diff = std::abs(levels[1] - levels[0]);
  const double fine_diff = std::abs(levels[2] - levels[1]);
  const double noise = 1e-13 * scale;
  if (fine_diff > coarse_diff && fine_diff > 1e-10 * scale) {
    throw QuadratureError("tanh-sinh quadrature not converging at level " + std::to_string(cfg.quad_level));
  }
  Real value(levels[2], prec);
  Real err(2 * fine_diff + noise, prec);
  return ValueWithError{std::move(value), std::move(err)};
}

}  // namespace eulersum
