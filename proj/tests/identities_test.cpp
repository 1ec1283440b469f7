#include <doctest.h>

#include <set>

#include "eulersum/identities.hpp"
#include "eulersum/indices.hpp"
#include "eulersum/mzv.hpp"
#include "helpers.hpp"

using namespace eulersum;
using testing::agree;
using testing::covers;
using testing::fast_config;
using testing::pi_power_over;

TEST_CASE("catalog shape") {
  const auto& all = catalog();
  CHECK(all.size() >= 22);
  std::set<std::string> ids;
  for (const auto& def : all) {
    ids.insert(def.id);
    CHECK_FALSE(def.default_grid().empty());
    CHECK(find_identity(def.id) == &def);
  }
  CHECK(ids.size() == all.size());
  CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
  CHECK(find_identity("bogus") == nullptr);
}

TEST_CASE("single instances") {
  const PrecisionConfig cfg = fast_config();
  const IdentityReport e = run_identity("eq6.1", {{"n", 0}}, cfg);
  REQUIRE(e.lhs);
  CHECK(e.pass);
  CHECK(agree(*e.lhs, riemann_zeta(3, cfg) * 3L));

  const IdentityReport p42 = run_identity("prop4.2", {{"n", 2}}, cfg);
  REQUIRE(p42.rhs);
  CHECK(p42.pass);
  CHECK(covers(*p42.rhs, pi_power_over(4, 360, cfg) * 7L));

  const IdentityReport p51 = run_identity("prop5.1", {{"n", 0}}, cfg);
  REQUIRE(p51.lhs);
  CHECK(p51.pass);
  CHECK(covers(*p51.lhs, pi_power_over(4, 30, cfg)));
}

TEST_CASE("bad ids and parameters") {
  const PrecisionConfig cfg = fast_config();
  CHECK_THROWS_AS(run_identity("bogus", {}, cfg), DomainError);
  CHECK_THROWS_AS(run_identity("eq6.1", {{"n", 9}}, cfg), DomainError);
  CHECK_THROWS_AS(run_identity("eq6.1", {}, cfg), DomainError);
}

TEST_CASE("pass rule") {
  const Precision prec = fast_config().working_precision();
  auto v = [&](double x, double e) { return ValueWithError{Real(x, prec), Real(e, prec)}; };
  CHECK(identity_passes({v(1.0, 0), v(1.0 + 1e-7, 0), false}, 1e-6));
  CHECK_FALSE(identity_passes({v(1.0, 0), v(1.0 + 1e-5, 0), false}, 1e-6));
  CHECK(identity_passes({v(1.0, 1e-4), v(1.0 + 1e-5, 0), false}, 1e-6));
  // a zero target is judged on an absolute scale
  CHECK(identity_passes({v(5e-7, 0), v(0, 0), true}, 1e-6));
  CHECK_FALSE(identity_passes({v(5e-6, 0), v(0, 0), true}, 1e-6));
  Real residual(prec);
  identity_passes({v(2.0, 0), v(1.5, 0), false}, 1e-6, &residual);
  CHECK(residual.to_double() == doctest::Approx(0.5));
}

TEST_CASE("W weights and the theorem 5.3 right side") {
  CHECK(thm53_weight({1, 0}) == 4);
  CHECK(thm53_weight({0, 1}) == 2);
  CHECK(thm53_weight({2}) == 10);
  const PrecisionConfig cfg = fast_config();
  CHECK(covers(thm53_rhs(0, cfg), pi_power_over(4, 90, cfg) * 4L));
  ValueWithError n1 = riemann_zeta(6, cfg) * 20L;
  n1 -= mzv(MultiIndex{4, 2}, cfg) * 4L;
  n1 -= mzv(MultiIndex{3, 3}, cfg) * 2L;
  CHECK(agree(thm53_rhs(1, cfg), n1));
}

TEST_CASE("zeta-star heads from the closed evaluations") {
  const PrecisionConfig cfg = fast_config();
  CHECK(covers(zetastar_head_eval(0, 1, cfg), pi_power_over(4, 360, cfg) * 7L));
  CHECK(agree(zetastar_head_eval(1, 0, cfg), riemann_zeta(3, cfg)));
  CHECK(covers(zetastar_head_eval(2, 0, cfg), pi_power_over(4, 90, cfg)));
  for (int r = 0; r <= 2; ++r) {
    for (int n = 0; n <= 2; ++n) {
      CAPTURE(r);
      CAPTURE(n);
      const ValueWithError v = zetastar_head_eval(r, n, cfg);
      CHECK(agree(v, mzsv(join(MultiIndex{r + 2}, repeat(2, n)), cfg)));
      CHECK(agree(v, zetastar_head2(r, n, cfg)));
    }
  }
  CHECK_THROWS_AS(zetastar_head_eval(3, 0, cfg), DomainError);
}

TEST_CASE("filtered suites") {
  const PrecisionConfig cfg = fast_config();
  CHECK(run_suite({.filter = "nonexistent"}, cfg).empty());
  const auto reports = run_suite({.filter = "prop2.*", .threads = 4}, cfg);
  std::set<std::string> ids;
  for (const auto& r : reports) {
    CAPTURE(r.id);
    CAPTURE(to_string(r.params));
    CHECK(r.pass);
    CHECK(r.error.empty());
    ids.insert(r.id);
  }
  CHECK(ids == std::set<std::string>{"prop2.4", "prop2.5"});
}

TEST_CASE("reports are deterministic across thread counts") {
  const PrecisionConfig cfg = fast_config();
  auto dump = [&](int threads) {
    std::string out;
    for (const auto& r : run_suite({.filter = "eq6.1", .threads = threads}, cfg)) out += to_json(r, 20, false).dump();
    return out;
  };
  clear_series_memo();
  const std::string a = dump(1);
  clear_series_memo();
  const std::string b = dump(3);
  CHECK(a == b);
  CHECK(a.find("\"elapsed_ms\":null") != std::string::npos);
}

TEST_CASE("instances keep their input order") {
  const PrecisionConfig cfg = fast_config();
  const std::vector<std::pair<std::string, Params>> in{
      {"prop2.5", {{"p", 2}, {"q", 1}}}, {"eq6.1", {{"n", 1}}}, {"easy-ones", {{"q", 0}}}};
  const auto out = run_instances(in, cfg, std::nullopt, 3);
  REQUIRE(out.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(out[i].id == in[i].first);
    CHECK(out[i].params == in[i].second);
    CHECK(out[i].pass);
  }
  const auto strict = run_instances({{"eq6.1", {{"n", 1}}}}, cfg, 1e-40, 1);
  CHECK(strict[0].tol == 1e-40);
}
