#include "eulersum/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace eulersum {

Precision Precision::from_digits(int decimal_digits) {
  // log2(10) = 3.3219...; a few extra bits absorb the conversion.
  auto bits = static_cast<mpfr_prec_t>(std::ceil(decimal_digits * 3.3219280948873623)) + 4;
  return Precision{std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN)};
}

int Precision::digits10() const {
  return static_cast<int>(std::floor(static_cast<double>(bits - 4) / 3.3219280948873623));
}

namespace {

mpfr_prec_t wider(const Real& a, const Real& b) {
  return std::max(mpfr_get_prec(a.raw()), mpfr_get_prec(b.raw()));
}

}  // namespace

Real::Real(Precision prec) {
  mpfr_init2(data_, prec.bits);
  mpfr_set_zero(data_, 1);
}

Real::Real(long value, Precision prec) {
  mpfr_init2(data_, prec.bits);
  mpfr_set_si(data_, value, MPFR_RNDN);
}

Real::Real(double value, Precision prec) {
  mpfr_init2(data_, prec.bits);
  mpfr_set_d(data_, value, MPFR_RNDN);
}

Real::Real(const mpq_class& value, Precision prec) {
  mpfr_init2(data_, prec.bits);
  mpfr_set_q(data_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const mpz_class& value, Precision prec) {
  mpfr_init2(data_, prec.bits);
  mpfr_set_z(data_, value.get_mpz_t(), MPFR_RNDN);
}

Real Real::parse(const std::string& text, Precision prec) {
  Real r(prec);
  char* end = nullptr;
  if (mpfr_strtofr(r.data_, text.c_str(), &end, 10, MPFR_RNDN); end == text.c_str() || *end != '\0') {
    throw std::invalid_argument("not a decimal number: '" + text + "'");
  }
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(data_, mpfr_get_prec(other.data_));
  mpfr_set(data_, other.data_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  data_[0] = other.data_[0];
  other.data_[0]._mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    if (data_[0]._mpfr_d == nullptr) {
      mpfr_init2(data_, mpfr_get_prec(other.data_));
    } else if (mpfr_get_prec(data_) != mpfr_get_prec(other.data_)) {
      mpfr_set_prec(data_, mpfr_get_prec(other.data_));
    }
    mpfr_set(data_, other.data_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    std::swap(data_[0], other.data_[0]);
  }
  return *this;
}

Real::~Real() {
  if (data_[0]._mpfr_d != nullptr) {
    mpfr_clear(data_);
  }
}

Real& Real::operator+=(const Real& rhs) {
  mpfr_add(data_, data_, rhs.data_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  mpfr_sub(data_, data_, rhs.data_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  mpfr_mul(data_, data_, rhs.data_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  mpfr_div(data_, data_, rhs.data_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(data_, data_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(data_, data_, rhs, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.data_, data_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(Precision{wider(a, b)});
  mpfr_add(r.data_, a.data_, b.data_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(Precision{wider(a, b)});
  mpfr_sub(r.data_, a.data_, b.data_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(Precision{wider(a, b)});
  mpfr_mul(r.data_, a.data_, b.data_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(Precision{wider(a, b)});
  mpfr_div(r.data_, a.data_, b.data_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.precision());
  mpfr_mul_si(r.data_, a.data_, b, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r(a.precision());
  mpfr_div_si(r.data_, a.data_, b, MPFR_RNDN);
  return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.data_, b.data_) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.data_, b.data_)) {
    return std::partial_ordering::unordered;
  }
  int c = mpfr_cmp(a.data_, b.data_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::string Real::to_string(int digits) const {
  digits = std::max(digits, 1);
  int needed = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, data_);
  std::vector<char> buf(static_cast<size_t>(needed) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, data_);
  return std::string(buf.data());
}

Real abs(const Real& x) {
  Real r(x.precision());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  Real r(x.precision());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x.precision());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(x.precision());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real ten_to_minus(int digits, Precision prec) {
  Real r(10L, prec);
  mpfr_pow_si(r.raw(), r.raw(), -static_cast<long>(digits), MPFR_RNDN);
  return r;
}

}  // namespace eulersum
