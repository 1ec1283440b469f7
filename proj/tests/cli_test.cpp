#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

const std::filesystem::path kCache =
    std::filesystem::temp_directory_path() / ("eulersum-cli-test-" + std::to_string(::getpid()) + ".jsonl");

// Runs the CLI with stderr folded into stdout.
Run cli(const std::string& args, bool merge_stderr = true) {
  const std::string cmd = std::string(EULERSUM_CLI) + " --cache " + kCache.string() + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct CacheGuard {
  CacheGuard() { std::filesystem::remove(kCache); }
  ~CacheGuard() { std::filesystem::remove(kCache); }
};

}  // namespace

TEST_CASE("eval prints value and error") {
  CacheGuard guard;
  const Run g = cli("--cutoff 1000 eval 'G(n=0,p=1,q=1)'");
  CHECK(g.code == 0);
  CHECK(g.out.find("G(n=0,p=1,q=1) = 3.246969701133414574548011089") != std::string::npos);

  const Run z = cli("--cutoff 1000 eval 'zetastar(3,{2}^2)'");
  CHECK(z.code == 0);
  CHECK(z.out.find("zetastar(3,2,2) = ") != std::string::npos);

  const Run j = cli("--cutoff 1000 --json --no-cache eval 'zeta(2)'");
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.dump().find("1.6449340668482264364724151666") != std::string::npos);
}

TEST_CASE("cache hit, digits miss and corrupt lines") {
  CacheGuard guard;
  CHECK(cli("--cutoff 1000 eval 'zeta(1,3)'").code == 0);
  const Run hit = cli("--cutoff 1000 --verbose eval 'zeta(1,3)'");
  CHECK(hit.out.find("cache hit") != std::string::npos);
  const Run miss = cli("--cutoff 1000 --digits 40 --verbose eval 'zeta(1,3)'");
  CHECK(miss.out.find("cache hit") == std::string::npos);
  CHECK(miss.out.find("computed") != std::string::npos);
  {
    std::ofstream out(kCache, std::ios::app);
    out << "garbage\n";
  }
  const Run warned = cli("--cutoff 1000 --verbose eval 'zeta(1,3)'");
  CHECK(warned.code == 0);
  CHECK(warned.out.find("skipped corrupt cache line") != std::string::npos);
  CHECK(warned.out.find("cache hit") != std::string::npos);
}

TEST_CASE("usage and domain errors exit 2") {
  CacheGuard guard;
  const Run div = cli("eval 'zeta(2,1)'");
  CHECK(div.code == 2);
  CHECK(div.out.find("divergent series") != std::string::npos);
  const Run parse = cli("eval 'zeta(2,'");
  CHECK(parse.code == 2);
  CHECK(parse.out.find("column 8") != std::string::npos);
  CHECK(cli("verify bogus").code == 2);
  CHECK(cli("table zetastar-head --r 5").code == 2);
  CHECK(cli("table nothing").code == 2);
  CHECK(cli("--digits 10 eval 'zeta(2)'").code == 2);
  CHECK(cli("").code == 2);
  CHECK(cli("--help").code == 0);
}

TEST_CASE("verify") {
  CacheGuard guard;
  const Run text = cli("--cutoff 1000 verify eq6.1 --n 0..2");
  CHECK(text.code == 0);
  CHECK(text.out.find("summary: 3 passed, 0 failed") != std::string::npos);

  const Run json = cli("--cutoff 1000 --json verify prop2.4 --p 1 --q 1 --k 0", false);
  CHECK(json.code == 0);
  const auto doc = nlohmann::json::parse(json.out);
  REQUIRE(doc["reports"].size() == 1);
  CHECK(doc["reports"][0]["pass"] == true);
  CHECK(doc["reports"][0]["elapsed_ms"].is_null());

  const Run strict = cli("--cutoff 1000 --tol 1e-60 verify eq6.1 --n 1");
  CHECK(strict.code == 0);  // the combined error bound still admits it
  const Run out_of_range = cli("verify eq6.1 --n 7");
  CHECK(out_of_range.code == 2);
}

TEST_CASE("tables") {
  CacheGuard guard;
  const Run csv = cli("--cutoff 1000 table zetastar-head --r 0..2 --n 0..2 --format csv", false);
  CHECK(csv.code == 0);
  int lines = 0;
  for (char c : csv.out) lines += c == '\n';
  CHECK(lines == 10);  // header plus 9 rows
  CHECK(csv.out.rfind("r,n,", 0) == 0);

  const Run g2 = cli("table g2 --max 4 --format json", false);
  CHECK(g2.code == 0);
  const auto doc = nlohmann::json::parse(g2.out);
  CHECK(doc.size() == 15);
}
