#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace eulersum {

/// An exponent sequence (a_1, ..., a_r). Summation is ascending throughout
/// this library: zeta(a_1,...,a_r) sums over k_1 < ... < k_r, so the series
/// converges iff the LAST part is >= 2.
struct MultiIndex {
  std::vector<int> parts;

  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> p) : parts(p) {}
  explicit MultiIndex(std::vector<int> p) : parts(std::move(p)) {}

  int depth() const { return static_cast<int>(parts.size()); }
  int weight() const;
  int height() const;
  bool empty() const { return parts.empty(); }
  /// Nonempty with last part >= 2.
  bool admissible() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

struct IndexStats {
  int weight = 0;
  int depth = 0;
  int height = 0;
  friend bool operator==(const IndexStats&, const IndexStats&) = default;
};

IndexStats weight_depth_height(const MultiIndex& idx);

/// {value}^count
MultiIndex repeat(int value, int count);
/// Concatenation, e.g. join(repeat(1, p), {n + 2}).
MultiIndex join(const MultiIndex& a, const MultiIndex& b);

/// Canonical text: "(3,2,2)"; the empty index is "()".
std::string to_string(const MultiIndex& idx);
/// Parses "(3,{2}^2)" style text; throws ParseError with a 0-based column.
MultiIndex parse_index(std::string_view text);

struct Composition {
  std::vector<int> parts;
  int total = 0;
  friend bool operator==(const Composition&, const Composition&) = default;
};

/// Calls `visit` for every sequence of `parts` integers >= min_part summing
/// to `total`, in lexicographic order. min_part must be 0 or 1.
void for_each_composition(int total, int parts, int min_part,
                          const std::function<void(const std::vector<int>&)>& visit);
std::vector<Composition> compositions(int total, int parts, int min_part);

/// Every admissible index of the given weight with exactly `height` parts > 1,
/// lexicographically ordered.
std::vector<MultiIndex> admissible_by_weight_height(int weight, int height);

}  // namespace eulersum
