#include "eulersum/expression.hpp"

#include <cctype>
#include <charconv>

#include "eulersum/finite_sums.hpp"
#include "eulersum/mzv.hpp"

namespace eulersum {

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Expression parse() {
    Expression e;
    skip();
    const size_t name_at = pos_;
    std::string name;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) != 0)) name += text_[pos_++];
    skip();
    std::optional<long> trunc;
    if (peek() == '[') {
      ++pos_;
      trunc = number();
      expect(']');
    }
    if (name == "zeta") {
      e.kind = trunc ? ExprKind::finite_zeta : ExprKind::zeta;
    } else if (name == "zetastar") {
      e.kind = trunc ? ExprKind::finite_zetastar : ExprKind::zetastar;
    } else if (name == "G") {
      if (trunc) fail("G takes no truncation", name_at);
      e.kind = ExprKind::G;
    } else if (name == "H") {
      if (!trunc) fail("H needs a truncation, e.g. H[10](2)", name_at);
      e.kind = ExprKind::harmonic;
    } else {
      fail("unknown function '" + name + "' (expected zeta, zetastar, G or H)", name_at);
    }
    if (trunc) {
      if (*trunc < 0) fail("truncation must be nonnegative", name_at);
      e.truncation = *trunc;
    }
    skip();
    const size_t open_at = pos_;
    if (peek() != '(') fail("expected '('", pos_);
    if (e.kind == ExprKind::G) {
      ++pos_;
      e.g.n = named("n");
      expect(',');
      e.g.p = named("p");
      expect(',');
      e.g.q = named("q");
      expect(')');
    } else if (e.kind == ExprKind::harmonic) {
      ++pos_;
      const size_t at = pos_;
      const long s = number();
      if (s < 1) fail("H power must be >= 1", at);
      e.power = static_cast<int>(s);
      expect(')');
    } else {
      size_t depth = 0, close = open_at;
      for (; close < text_.size(); ++close) {
        if (text_[close] == '(') ++depth;
        if (text_[close] == ')' && --depth == 0) break;
      }
      if (close == text_.size()) fail("missing ')'", text_.size());
      try {
        e.index = parse_index(text_.substr(open_at, close - open_at + 1));
      } catch (const ParseError& err) {
        throw ParseError(err.what(), open_at + err.position());
      }
      pos_ = close + 1;
    }
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing text", pos_);
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, size_t at) const { throw ParseError(msg, at); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  long number() {
    skip();
    const size_t at = pos_;
    long v = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first) fail("expected an integer", at);
    pos_ += static_cast<size_t>(ptr - first);
    return v;
  }

  int named(const char* key) {
    skip();
    const size_t at = pos_;
    if (text_.substr(pos_, 1) != key) fail(std::string("expected '") + key + "='", at);
    ++pos_;
    expect('=');
    const size_t value_at = pos_;
    const long v = number();
    if (v < 0) fail(std::string(key) + " must be nonnegative", value_at);
    return static_cast<int>(v);
  }

  std::string_view text_;
  size_t pos_ = 0;
};

std::string index_args(const MultiIndex& idx) { return to_string(idx); }

}  // namespace

Expression parse_expression(std::string_view text) { return ExprParser(text).parse(); }

std::string to_string(const Expression& e) {
  const std::string trunc = "[" + std::to_string(e.truncation) + "]";
  switch (e.kind) {
    case ExprKind::zeta: return "zeta" + index_args(e.index);
    case ExprKind::zetastar: return "zetastar" + index_args(e.index);
    case ExprKind::G: return to_string(e.g);
    case ExprKind::finite_zeta: return "zeta" + trunc + index_args(e.index);
    case ExprKind::finite_zetastar: return "zetastar" + trunc + index_args(e.index);
    case ExprKind::harmonic: return "H" + trunc + "(" + std::to_string(e.power) + ")";
  }
  return {};
}

namespace {

ValueWithError rounded(const Rational& q, const PrecisionConfig& cfg) {
  Real v(cfg.working_precision());
  mpfr_set_q(v.raw(), q.get_mpq_t(), MPFR_RNDN);
  Real err = rounding_floor(v, cfg);
  return ValueWithError{std::move(v), std::move(err)};
}

// Beyond this truncation exact rationals grow too large; sum in working precision.
constexpr long kExactTruncationLimit = 1000;

ValueWithError rounded(const Real& v, const PrecisionConfig& cfg) {
  Real err = rounding_floor(v, cfg);
  return ValueWithError{v, std::move(err)};
}

void check_finite_index(const MultiIndex& idx) {
  for (int a : idx.parts) {
    if (a < 1) throw DomainError("index parts must be positive: " + to_string(idx));
  }
}

}  // namespace

ValueWithError evaluate(const Expression& e, const PrecisionConfig& cfg) {
  cfg.validate();
  switch (e.kind) {
    case ExprKind::zeta: return mzv(e.index, cfg);
    case ExprKind::zetastar: return mzsv(e.index, cfg);
    case ExprKind::G: return g_direct(e.g, cfg);
    case ExprKind::finite_zeta:
      check_finite_index(e.index);
      if (e.truncation > kExactTruncationLimit) {
        return rounded(finite_mzv_real(e.index, e.truncation, cfg.working_precision()), cfg);
      }
      return rounded(finite_mzv(e.index, e.truncation), cfg);
    case ExprKind::finite_zetastar:
      check_finite_index(e.index);
      if (e.truncation > kExactTruncationLimit) {
        return rounded(finite_mzsv_real(e.index, e.truncation, cfg.working_precision()), cfg);
      }
      return rounded(finite_mzsv(e.index, e.truncation), cfg);
    case ExprKind::harmonic:
      if (e.truncation > kExactTruncationLimit) {
        return rounded(finite_mzv_real(MultiIndex{e.power}, e.truncation, cfg.working_precision()), cfg);
      }
      return rounded(gen_harmonic(e.truncation, e.power), cfg);
  }
  throw DomainError("unknown expression kind");
}

}  // namespace eulersum
