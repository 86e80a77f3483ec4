#ifndef LAPINV_MPNUM_EXACT_REAL_HPP
#define LAPINV_MPNUM_EXACT_REAL_HPP

#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "lapinv/mpnum/big_real.hpp"

namespace lapinv::mp {

/// A real parameter that is kept as an exact rational whenever it came from
/// a decimal literal (or exact arithmetic on one), and as a BigReal
/// otherwise. `at(digits)` materializes it at any precision, so exponents
/// such as beta never carry a precision ceiling from their first use.
class ExactReal {
 public:
  ExactReal() : rational_(mpq_class(0)) {}
  explicit ExactReal(mpq_class q);
  explicit ExactReal(BigReal approx);

  /// Decimal literal ("0.000001", "-1.6", "1e-6") parsed exactly.
  static ExactReal parse(std::string_view text);
  static ExactReal integer(long n) { return ExactReal(mpq_class(n)); }

  bool is_exact() const noexcept { return rational_.has_value(); }
  const mpq_class& rational() const { return *rational_; }
  BigReal at(int digits) const;
  double to_double() const;
  /// Precision of the stored approximation; 0 for exact rationals.
  int native_digits() const noexcept;

  bool is_integer() const;
  /// Exact for rationals; rounded to nearest for approximate values.
  long nearest_integer() const;
  int sign() const;

  /// Canonical text used for cache keys: "q:<num>/<den>" or "r:<serialized>".
  std::string key() const;
  /// Short human-readable form (terminating decimals printed as decimals).
  std::string to_string() const;

  ExactReal operator-() const;
  friend ExactReal operator+(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator-(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator*(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator/(const ExactReal& a, const ExactReal& b);
  friend bool operator==(const ExactReal& a, const ExactReal& b);

 private:
  std::optional<mpq_class> rational_;
  std::optional<BigReal> approx_;
};

}  // namespace lapinv::mp

#endif  // LAPINV_MPNUM_EXACT_REAL_HPP
