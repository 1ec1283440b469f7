// eulersum: evaluate multiple zeta values and Euler sums, verify the identity
// catalog, and print tables.
//
// Exit codes: 0 success, 1 an identity failed, 2 usage or parse error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eulersum/cache.hpp"
#include "eulersum/euler_sums.hpp"
#include "eulersum/expression.hpp"
#include "eulersum/identities.hpp"
#include "eulersum/mzv.hpp"

using namespace eulersum;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  PrecisionConfig cfg;
  std::optional<double> tol;
  int threads = 1;
  std::string cache_path = "./eulersum-cache.jsonl";
  bool no_cache = false;
  bool no_extrapolate = false;
  bool json = false;
  bool verbose = false;
  bool timing = false;
};

struct Range {
  int lo = 0;
  int hi = 0;
};

// "3" or "0..2"
Range parse_range(const std::string& flag, const std::string& text) {
  auto to_int = [&](const std::string& s) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("--" + flag + ": expected N or A..B, got '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  Range r{to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
  if (r.lo > r.hi) throw UsageError("--" + flag + ": empty range '" + text + "'");
  return r;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void print_parse_error(const std::string& text, const ParseError& e) {
  std::cerr << "error: " << e.what() << " at column " << e.position() + 1 << "\n  " << text << "\n  "
            << std::string(e.position(), ' ') << "^\n";
}

// ---- eval -----------------------------------------------------------------

int cmd_eval(const GlobalOptions& opt, const std::vector<std::string>& texts) {
  std::optional<ResultCache> cache;
  if (!opt.no_cache) {
    cache.emplace(opt.cache_path);
    for (const auto& w : cache->warnings()) std::cerr << "warning: " << w << "\n";
  }
  const PrecisionConfig& cfg = opt.cfg;
  for (const auto& text : texts) {
    Expression e;
    try {
      e = parse_expression(text);
    } catch (const ParseError& err) {
      print_parse_error(text, err);
      return kExitUsage;
    }
    const std::string canonical = to_string(e);
    const auto t0 = std::chrono::steady_clock::now();
    std::string value, err;
    bool hit = false;
    if (cache) {
      if (auto rec = cache->lookup(canonical, cfg.digits, cfg.cutoff, cfg.extrapolate, cfg.quad_level)) {
        value = rec->value;
        err = rec->err;
        hit = true;
      }
    }
    if (!hit) {
      ValueWithError v;
      try {
        v = evaluate(e, cfg);
      } catch (const DivergentSeriesError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
      } catch (const DomainError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
      }
      value = v.value.to_string(cfg.digits);
      err = v.err.to_string(3);
      if (cache) cache->store(CacheRecord{canonical, cfg.digits, cfg.cutoff, cfg.extrapolate, cfg.quad_level, value,
                                          err, kCacheSchemaVersion});
    }
    if (opt.verbose) {
      std::cerr << canonical << ": " << (hit ? "cache hit" : "computed") << " in " << ms_since(t0) << " ms\n";
    }
    if (opt.json) {
      std::cout << nlohmann::json{{"expr", canonical}, {"value", value}, {"err", err}}.dump() << "\n";
    } else {
      std::cout << canonical << " = " << value << " +/- " << err << "\n";
    }
  }
  return 0;
}

// ---- verify ---------------------------------------------------------------

const std::vector<std::string> kParamFlags = {"n", "p", "q", "k", "r", "m", "s"};

std::vector<Params> instances_for(const IdentityDef& def, const std::map<std::string, Range>& given) {
  for (const auto& [name, range] : given) {
    bool known = false;
    for (const auto& pr : def.ranges) known = known || pr.name == name;
    if (!known) throw UsageError(def.id + " has no parameter --" + name);
  }
  std::vector<Range> ranges;
  for (const auto& pr : def.ranges) {
    auto it = given.find(pr.name);
    if (it == given.end()) {
      ranges.push_back({pr.lo, pr.hi});
      continue;
    }
    if (it->second.lo < pr.lo || it->second.hi > pr.hi) {
      throw UsageError("--" + pr.name + " outside " + std::to_string(pr.lo) + ".." + std::to_string(pr.hi) +
                       " for " + def.id);
    }
    ranges.push_back(it->second);
  }
  std::vector<Params> out;
  for (const Params& p : def.default_grid()) {
    bool keep = true;
    for (size_t i = 0; i < ranges.size(); ++i) keep = keep && p[i].second >= ranges[i].lo && p[i].second <= ranges[i].hi;
    if (keep) out.push_back(p);
  }
  if (out.empty()) throw UsageError("no admissible parameter bindings for " + def.id);
  return out;
}

int print_reports(const GlobalOptions& opt, const std::vector<IdentityReport>& reports) {
  int passed = 0, failed = 0;
  for (const auto& r : reports) (r.pass ? passed : failed)++;
  if (opt.json) {
    nlohmann::json doc;
    doc["reports"] = nlohmann::json::array();
    for (const auto& r : reports) doc["reports"].push_back(to_json(r, opt.cfg.digits, opt.timing));
    doc["summary"] = {{"passed", passed}, {"failed", failed}, {"total", passed + failed}};
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << " " << to_string(r.params);
      if (r.error.empty()) {
        std::cout << "  lhs=" << r.lhs->value.to_string(16) << " rhs=" << r.rhs->value.to_string(16)
                  << " residual=" << r.residual->to_string(3) << " tol=" << r.tol;
      } else {
        std::cout << "  error: " << r.error;
      }
      if (opt.timing) std::cout << " (" << static_cast<long>(r.elapsed_ms) << " ms)";
      std::cout << "\n";
    }
    std::cout << "summary: " << passed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? 0 : kExitFail;
}

int cmd_verify(const GlobalOptions& opt, const std::string& id, bool all, const std::map<std::string, Range>& given) {
  if (all) {
    if (!id.empty() || !given.empty()) throw UsageError("--all takes no identity or parameter flags");
    SuiteOptions so;
    so.tol = opt.tol;
    so.threads = opt.threads;
    return print_reports(opt, run_suite(so, opt.cfg));
  }
  if (id.empty()) throw UsageError("verify needs an identity id or --all");
  std::vector<std::pair<std::string, Params>> instances;
  if (id.find_first_of("*?[") != std::string::npos) {
    if (!given.empty()) throw UsageError("parameter flags need a single identity id");
    SuiteOptions so;
    so.filter = id;
    so.tol = opt.tol;
    so.threads = opt.threads;
    auto reports = run_suite(so, opt.cfg);
    if (reports.empty()) throw UsageError("no identity matches '" + id + "'");
    return print_reports(opt, reports);
  }
  const IdentityDef* def = find_identity(id);
  if (!def) {
    std::string known;
    for (const auto& d : catalog()) known += " " + d.id;
    throw UsageError("unknown identity '" + id + "'; known:" + known);
  }
  for (auto& p : instances_for(*def, given)) instances.emplace_back(def->id, std::move(p));
  return print_reports(opt, run_instances(instances, opt.cfg, opt.tol, opt.threads));
}

// ---- table ----------------------------------------------------------------

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void print_table(const Table& t, const std::string& format) {
  if (format == "csv") {
    for (size_t i = 0; i < t.columns.size(); ++i) std::cout << (i ? "," : "") << t.columns[i];
    std::cout << "\n";
    for (const auto& row : t.rows) {
      for (size_t i = 0; i < row.size(); ++i) {
        const bool quote = row[i].find(',') != std::string::npos;
        std::cout << (i ? "," : "") << (quote ? "\"" + row[i] + "\"" : row[i]);
      }
      std::cout << "\n";
    }
  } else if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : t.rows) {
      nlohmann::json obj = nlohmann::json::object();
      for (size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i];
      arr.push_back(obj);
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    std::vector<size_t> width;
    for (const auto& c : t.columns) width.push_back(c.size());
    for (const auto& row : t.rows) {
      for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (size_t i = 0; i < cells.size(); ++i) {
        std::cout << cells[i] << (i + 1 < cells.size() ? std::string(width[i] - cells[i].size() + 2, ' ') : "");
      }
      std::cout << "\n";
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
  }
}

Range checked(const std::optional<std::string>& text, const std::string& flag, Range fallback, Range limits) {
  const Range r = text ? parse_range(flag, *text) : fallback;
  if (r.lo < limits.lo || r.hi > limits.hi) {
    throw UsageError("--" + flag + " must lie in " + std::to_string(limits.lo) + ".." + std::to_string(limits.hi));
  }
  return r;
}

int cmd_table(const GlobalOptions& opt, const std::string& name, const std::optional<std::string>& r_text,
              const std::optional<std::string>& n_text, int max_weight, const std::string& format) {
  Table t;
  const PrecisionConfig& cfg = opt.cfg;
  if (name == "zetastar-head") {
    const Range rr = checked(r_text, "r", {0, 2}, {0, 2});
    const Range nr = checked(n_text, "n", {0, 2}, {0, 3});
    t.columns = {"r", "n", "index", "value", "err"};
    for (int r = rr.lo; r <= rr.hi; ++r) {
      for (int n = nr.lo; n <= nr.hi; ++n) {
        const MultiIndex idx = join(MultiIndex{r + 2}, repeat(2, n));
        const ValueWithError v = mzsv(idx, cfg);
        t.rows.push_back({std::to_string(r), std::to_string(n), to_string(idx), v.value.to_string(cfg.digits),
                          v.err.to_string(3)});
      }
    }
  } else if (name == "g2") {
    if (r_text || n_text) throw UsageError("table g2 takes --max only");
    if (max_weight < 0 || max_weight > kMaxSeriesWeight - 2) {
      throw UsageError("--max must lie in 0.." + std::to_string(kMaxSeriesWeight - 2));
    }
    t.columns = {"p", "q", "coeff", "zeta_arg", "value", "err"};
    for (int total = 0; total <= max_weight; ++total) {
      for (int p = 0; p <= total; ++p) {
        const int q = total - p;
        const ClosedForm f = g2_closed(p, q);
        const ValueWithError v = riemann_zeta(f.zeta_arg, cfg) * Rational(f.coeff);
        t.rows.push_back({std::to_string(p), std::to_string(q), f.coeff.get_str(), std::to_string(f.zeta_arg),
                          v.value.to_string(cfg.digits), v.err.to_string(3)});
      }
    }
  } else {
    throw UsageError("unknown table '" + name + "' (known: zetastar-head, g2)");
  }
  print_table(t, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiple zeta values, zeta-star values and the Euler sums G_{n+2}(p,q)"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opt;
  app.add_option("--digits", opt.cfg.digits, "Significant digits (>= 15)")->capture_default_str();
  app.add_option("--cutoff", opt.cfg.cutoff, "Series anchor N; partial sums at N and 2N (>= 100)")
      ->capture_default_str();
  app.add_flag("--no-extrapolate", opt.no_extrapolate, "Report the raw partial sum S_2N");
  app.add_option("--quad-level", opt.cfg.quad_level, "Tanh-sinh level (>= 3)")->capture_default_str();
  app.add_option("--tol", opt.tol, "Override identity tolerances");
  app.add_option("--threads", opt.threads, "Worker threads for identity instances")->capture_default_str();
  app.add_option("--cache", opt.cache_path, "JSON-lines result cache")->capture_default_str();
  app.add_flag("--no-cache", opt.no_cache, "Neither read nor write the cache");
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_flag("--verbose", opt.verbose, "Timing and cache diagnostics on stderr");
  app.add_flag("--timing", opt.timing, "Include per-instance elapsed time in reports");

  auto* eval = app.add_subcommand("eval", "Evaluate expressions, e.g. 'zetastar(3,{2}^2)' or 'G(n=0,p=1,q=1)'");
  std::vector<std::string> exprs;
  eval->add_option("expr", exprs,
                   "zeta(..), zetastar(..), G(n=,p=,q=), zeta[N](..), zetastar[N](..), H[N](s)")
      ->required();

  auto* verify = app.add_subcommand("verify", "Check catalog identities");
  std::string verify_id;
  bool verify_all = false;
  verify->add_option("id", verify_id, "Identity id or glob, e.g. prop2.4 or 'sec6-*'");
  verify->add_flag("--all", verify_all, "Every identity over its default grid");
  std::map<std::string, std::string> param_text;
  for (const auto& name : kParamFlags) verify->add_option("--" + name, param_text[name], "Value or range A..B");

  auto* table = app.add_subcommand(
      "table", "Print a table. zetastar-head: columns r,n,index,value,err of zeta*(r+2,{2}^n) "
               "(--r in 0..2, --n in 0..3). g2: columns p,q,coeff,zeta_arg,value,err of "
               "G_2(p,q) = coeff*zeta(zeta_arg) for p+q <= --max");
  std::string table_name;
  std::string r_text, n_text;
  int max_weight = 4;
  std::string format = "text";
  table->add_option("name", table_name, "zetastar-head or g2")->required();
  table->add_option("--r", r_text, "Range of r");
  table->add_option("--n", n_text, "Range of n");
  table->add_option("--max", max_weight, "Largest p+q for g2")->capture_default_str();
  table->add_option("--format", format, "csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    opt.cfg.extrapolate = !opt.no_extrapolate;
    opt.cfg.validate();
    if (opt.threads < 1) throw UsageError("--threads must be >= 1");
    if (*eval) return cmd_eval(opt, exprs);
    if (*verify) {
      std::map<std::string, Range> given;
      for (const auto& name : kParamFlags) {
        if (verify->count("--" + name) > 0) given[name] = parse_range(name, param_text[name]);
      }
      return cmd_verify(opt, verify_id, verify_all, given);
    }
    if (*table) {
      auto opt_text = [&](const char* flag, const std::string& s) {
        return table->count(flag) > 0 ? std::optional<std::string>(s) : std::nullopt;
      };
      return cmd_table(opt, table_name, opt_text("--r", r_text), opt_text("--n", n_text), max_weight, format);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
