#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulersum/numerics.hpp"

namespace eulersum {

/// Named integer parameters in declaration order, e.g. {{"p", 1}, {"q", 2}}.
using Params = std::vector<std::pair<std::string, int>>;

int param(const Params& params, std::string_view name);
std::string to_string(const Params& params);

struct ParamRange {
  std::string name;
  int lo = 0;
  int hi = 0;
};

struct IdentitySides {
  ValueWithError lhs;
  ValueWithError rhs;
  /// The right side is exactly zero: the tolerance is then absolute.
  bool zero_target = false;
};

inline constexpr double kSeriesTolerance = 1e-6;
inline constexpr double kQuadratureTolerance = 1e-4;

struct IdentityDef {
  std::string id;
  std::string description;
  std::vector<ParamRange> ranges;
  /// Extra restriction inside the box of ranges; empty means none.
  std::function<bool(const Params&)> constraint;
  double tol = kSeriesTolerance;
  std::function<IdentitySides(const Params&, const PrecisionConfig&)> build;

  bool in_range(const Params& params) const;
  /// Every parameter binding in the declared ranges, in lexicographic order.
  std::vector<Params> default_grid() const;
};

/// All catalog entries, sorted by id.
const std::vector<IdentityDef>& catalog();
/// nullptr when the id is unknown.
const IdentityDef* find_identity(std::string_view id);

struct IdentityReport {
  std::string id;
  Params params;
  std::optional<ValueWithError> lhs;
  std::optional<ValueWithError> rhs;
  std::optional<Real> residual;
  double tol = 0;
  bool pass = false;
  double elapsed_ms = 0;
  std::string error;  ///< evaluation failure, empty on success
};

/// pass <=> |lhs - rhs| <= max(tol * scale, lhs.err + rhs.err) where scale is
/// max(|lhs|, |rhs|), or 1 for a zero target.
bool identity_passes(const IdentitySides& sides, double tol, Real* residual = nullptr);

/// Throws DomainError for an unknown id or parameters outside the declared
/// ranges; evaluation errors are recorded in the report.
IdentityReport run_identity(std::string_view id, const Params& params, const PrecisionConfig& cfg,
                            std::optional<double> tol = std::nullopt);

struct SuiteOptions {
  std::optional<std::string> filter;  ///< glob over ids, e.g. "prop2.*"
  std::optional<double> tol;          ///< overrides every default tolerance
  int threads = 1;
};

/// Runs the selected entries over their default grids. Reports are ordered by
/// (id, params) whatever the thread count.
std::vector<IdentityReport> run_suite(const SuiteOptions& options, const PrecisionConfig& cfg);

/// Runs explicit instances in parallel, returning reports in input order.
std::vector<IdentityReport> run_instances(const std::vector<std::pair<std::string, Params>>& instances,
                                          const PrecisionConfig& cfg, std::optional<double> tol, int threads);

/// {"id","params","lhs","rhs","residual","tol","pass","elapsed_ms"}; elapsed_ms
/// is null unless `timing` is set so that reports are reproducible.
nlohmann::json to_json(const IdentityReport& report, int digits, bool timing);

/// W(c) = C(c_0+3, 3) * prod_{i>=1} (c_i + 1).
BigInt thm53_weight(const std::vector<int>& c);
/// C(2n+4,3) zeta(2n+4) + sum_{j=1}^{n} (-1)^j sum_{|c|=2n+1-2j} zeta(c_0+3, c_1+2, .., c_j+2) W(c).
ValueWithError thm53_rhs(int n, const PrecisionConfig& cfg);
/// zeta*(r+2, {2}^n) assembled from the closed evaluations for r = 0, 1, 2.
ValueWithError zetastar_head_eval(int r, int n, const PrecisionConfig& cfg);

}  // namespace eulersum
