#pragma once

#include <mpfr.h>

#include <compare>
#include <gmpxx.h>
#include <string>

namespace eulersum {

/// Binary precision of an extended-precision value, in bits.
struct Precision {
  mpfr_prec_t bits = 128;

  static Precision from_digits(int decimal_digits);
  int digits10() const;

  friend bool operator==(Precision, Precision) = default;
};

/// Owning RAII wrapper around an MPFR number.
///
/// Binary operators produce a result at the larger of the two operand
/// precisions; compound assignment keeps the precision of the target.
/// All rounding is to nearest.
class Real {
 public:
  explicit Real(Precision prec = Precision{});
  Real(long value, Precision prec);
  Real(int value, Precision prec) : Real(static_cast<long>(value), prec) {}
  Real(double value, Precision prec);
  Real(const mpq_class& value, Precision prec);
  Real(const mpz_class& value, Precision prec);
  static Real parse(const std::string& text, Precision prec);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Precision precision() const { return Precision{mpfr_get_prec(data_)}; }

  mpfr_ptr raw() { return data_; }
  mpfr_srcptr raw() const { return data_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b);

  friend bool operator==(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

  bool is_zero() const { return mpfr_zero_p(data_) != 0; }
  bool is_finite() const { return mpfr_number_p(data_) != 0; }
  int sign() const { return mpfr_sgn(data_); }

  double to_double() const { return mpfr_get_d(data_, MPFR_RNDN); }

  /// Scientific notation with `digits` significant digits, e.g. "1.6449e+00".
  std::string to_string(int digits) const;

 private:
  mpfr_t data_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real pow(const Real& x, long n);
Real max(const Real& a, const Real& b);
/// 10^(-digits) at the given precision.
Real ten_to_minus(int digits, Precision prec);

}  // namespace eulersum
