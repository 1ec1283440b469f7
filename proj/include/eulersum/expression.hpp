#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "eulersum/euler_sums.hpp"
#include "eulersum/indices.hpp"
#include "eulersum/numerics.hpp"

namespace eulersum {

enum class ExprKind { zeta, zetastar, G, finite_zeta, finite_zetastar, harmonic };

/// One evaluable quantity. Grammar (whitespace ignored):
///   zeta(idx)  zetastar(idx)  G(n=<int>,p=<int>,q=<int>)
///   zeta[N](idx)  zetastar[N](idx)  H[N](s)
/// where idx is a comma list of integers or {a}^k blocks, possibly empty.
struct Expression {
  ExprKind kind = ExprKind::zeta;
  MultiIndex index;
  GSpec g;
  long truncation = 0;  ///< N for the finite kinds
  int power = 0;        ///< s for H[N](s)

  friend bool operator==(const Expression&, const Expression&) = default;
};

/// Throws ParseError with a 0-based column.
Expression parse_expression(std::string_view text);
/// Canonical text; parse(to_string(e)) == e.
std::string to_string(const Expression& e);

/// Finite kinds are exact; the result is rounded to working precision.
ValueWithError evaluate(const Expression& e, const PrecisionConfig& cfg);

}  // namespace eulersum
