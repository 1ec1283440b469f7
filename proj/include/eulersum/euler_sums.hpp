#pragma once

#include <string>

#include "eulersum/numerics.hpp"

namespace eulersum {

/// G_{n+2}(p,q) = sum_K zeta_{K-1}({1}^p) K^{-(n+2)} zeta*_K({1}^q).
struct GSpec {
  int n = 0;
  int p = 0;
  int q = 0;

  void validate() const;
  int weight() const { return n + 2 + p + q; }

  friend auto operator<=>(const GSpec&, const GSpec&) = default;
};

/// "G(n=<n>,p=<p>,q=<q>)"
std::string to_string(const GSpec& g);

/// One sweep over K with both prefix blocks, completed by the asymptotic tail.
ValueWithError g_direct(const GSpec& g, const PrecisionConfig& cfg);

/// sum_{r=p+1}^{p+q+1} C(r-1,p) sum_{|alpha|=p+q+1, r parts} zeta(alpha_1..alpha_{r-1}, alpha_r+n+1).
ValueWithError g_compositions(const GSpec& g, const PrecisionConfig& cfg);

inline constexpr int kMaxQuadratureG = 10;

/// (1/(p!q!n!)) * integral over E_2 of F1^p F2^q F3^n.
ValueWithError g_quad(const GSpec& g, const PrecisionConfig& cfg);

/// G_2(p,q) = coeff * zeta(zeta_arg).
struct ClosedForm {
  BigInt coeff;
  int zeta_arg;
};
ClosedForm g2_closed(int p, int q);

/// G_{k+3}(p-1,q) + (-1)^k G_{k+3}(q-1,p)
///   - sum_{a+b=k} (-1)^b zeta({1}^{p-1},a+2) zeta({1}^{q-1},b+2).
ValueWithError reflection_residual(int p, int q, int k, const PrecisionConfig& cfg);

/// zeta*({1}^q, n+2) through the composition sum with p = 0.
ValueWithError zetastar_ones(int q, int n, const PrecisionConfig& cfg);

}  // namespace eulersum
