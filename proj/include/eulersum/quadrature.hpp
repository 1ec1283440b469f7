#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "eulersum/numerics.hpp"

namespace eulersum {

/// The logarithmic factors of integrands over E_2 = {0 < t1 < t2 < 1}:
///   F1 = log 1/(1-t1)        F2 = log 1/(1-t2)      F3 = log t2/t1
///   F4 = log (1-t1)/(1-t2)   F5 = log 1/t2
enum class LogFactor { F1 = 0, F2 = 1, F3 = 2, F4 = 3, F5 = 4 };

inline constexpr int kMaxMonomialDegree = 12;

/// coeff * prod F_i^{e_i} against the measure dt1 dt2 / ((1-t1) t2).
struct LogMonomial {
  Rational coeff{1};
  std::array<int, 5> exponents{};

  int degree() const;
  int& exponent(LogFactor f) { return exponents[static_cast<size_t>(f)]; }
  int exponent(LogFactor f) const { return exponents[static_cast<size_t>(f)]; }

  friend bool operator==(const LogMonomial&, const LogMonomial&) = default;
};

std::string to_string(const LogMonomial& m);

LogMonomial monomial(Rational coeff, std::initializer_list<std::pair<LogFactor, int>> powers);

/// (F_a + sign F_b)^n expanded by the binomial theorem.
std::vector<LogMonomial> expand_log_power(LogFactor a, LogFactor b, int sign, int n);

/// Product of two monomial sums with like terms merged (zero terms dropped).
std::vector<LogMonomial> multiply(std::span<const LogMonomial> a, std::span<const LogMonomial> b);

/// Sum of the integrals of `terms` over E_2 by tanh-sinh quadrature in both
/// variables after t1 = s t2 (the measure becomes ds dt2 / (1 - s t2)).
/// err = 2 |I_L - I_{L-1}|; throws QuadratureError when refining stops helping.
ValueWithError integrate_monomials(std::span<const LogMonomial> terms, const PrecisionConfig& cfg);

/// The three nested level sums I_{L-2}, I_{L-1}, I_L, for diagnostics and tests.
std::array<double, 3> quadrature_levels(std::span<const LogMonomial> terms, int level);

}  // namespace eulersum
