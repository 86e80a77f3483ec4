#ifndef LAPINV_MPNUM_BIG_REAL_HPP
#define LAPINV_MPNUM_BIG_REAL_HPP

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lapinv::mp {

/// Smallest accepted working precision, in decimal digits.
inline constexpr int kMinDigits = 16;

/// Binary precision backing a decimal precision. Sixteen guard bits are
/// carried on top of the nominal decimal digits.
mpfr_prec_t bits_for_digits(int digits);

/// Arbitrary-precision real scalar with an explicit decimal working precision.
///
/// Arithmetic between two values is carried at the larger of the operand
/// precisions. Values are immutable from the caller's point of view except
/// through the compound assignment operators.
class BigReal {
 public:
  explicit BigReal(int digits = kMinDigits);
  BigReal(long value, int digits);

  /// Parses a decimal literal such as "-1.25e-3" directly at `digits`
  /// (correctly rounded, never through a binary double).
  static BigReal from_string(std::string_view text, int digits);
  static BigReal from_rational(const mpq_class& q, int digits);
  /// Exact binary value of `x`; meant for test fixtures and plotting only.
  static BigReal from_double(double x, int digits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  int digits() const noexcept { return digits_; }
  mpfr_prec_t bits() const noexcept { return mpfr_get_prec(value_); }

  /// Copy rounded (or zero-extended) to a different working precision.
  BigReal with_digits(int digits) const;

  mpfr_ptr raw() noexcept { return value_; }
  mpfr_srcptr raw() const noexcept { return value_; }

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  bool is_integer() const noexcept { return mpfr_integer_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  double to_double() const;
  long to_long_round() const;

  /// Human-readable decimal with at most `significant` digits, trailing
  /// zeros trimmed ("3.7", "-2", "0.000001", "1.0000005e-7").
  std::string to_string(int significant) const;
  std::string to_string() const { return to_string(digits_); }

  /// Precision-tagged lossless form `<digits>:<mantissa>e<exp>`.
  std::string serialize() const;
  static BigReal deserialize(std::string_view text);

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator+=(long rhs);
  BigReal& operator-=(long rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);

  BigReal operator-() const;

 private:
  struct NoInit {};
  BigReal(NoInit, int digits, mpfr_prec_t bits);
  void widen_to(const BigReal& other);

  mpfr_t value_;
  int digits_;
};

BigReal operator+(BigReal lhs, const BigReal& rhs);
BigReal operator-(BigReal lhs, const BigReal& rhs);
BigReal operator*(BigReal lhs, const BigReal& rhs);
BigReal operator/(BigReal lhs, const BigReal& rhs);
BigReal operator+(BigReal lhs, long rhs);
BigReal operator-(BigReal lhs, long rhs);
BigReal operator*(BigReal lhs, long rhs);
BigReal operator/(BigReal lhs, long rhs);
BigReal operator+(long lhs, BigReal rhs);
BigReal operator-(long lhs, const BigReal& rhs);
BigReal operator*(long lhs, BigReal rhs);
BigReal operator/(long lhs, const BigReal& rhs);

bool operator==(const BigReal& a, const BigReal& b);
std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
bool operator==(const BigReal& a, long b);
std::partial_ordering operator<=>(const BigReal& a, long b);

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log10(const BigReal& x);
BigReal pow(const BigReal& base, const BigReal& exponent);
BigReal pow(const BigReal& base, long exponent);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal hypot(const BigReal& x, const BigReal& y);
BigReal floor(const BigReal& x);
BigReal round(const BigReal& x);
BigReal max(const BigReal& a, const BigReal& b);
BigReal min(const BigReal& a, const BigReal& b);
/// sin(pi*x) with exact argument reduction, so integers give exact zeros.
BigReal sin_pi(const BigReal& x);

/// 10^(-n) at the given precision; the usual way tolerances are expressed.
BigReal ten_to_minus(int n, int digits);

BigReal pi(int digits);
BigReal euler_gamma(int digits);
BigReal ln2(int digits);

}  // namespace lapinv::mp

#endif  // LAPINV_MPNUM_BIG_REAL_HPP
