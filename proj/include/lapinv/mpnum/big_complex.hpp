#ifndef LAPINV_MPNUM_BIG_COMPLEX_HPP
#define LAPINV_MPNUM_BIG_COMPLEX_HPP

#include <string>

#include "lapinv/mpnum/big_real.hpp"

namespace lapinv::mp {

/// Arbitrary-precision complex scalar. Both parts share one working
/// precision (the larger of the two when constructed from parts).
class BigComplex {
 public:
  explicit BigComplex(int digits = kMinDigits);
  BigComplex(const BigReal& re);  // NOLINT(google-explicit-constructor)
  BigComplex(const BigReal& re, const BigReal& im);

  const BigReal& re() const noexcept { return re_; }
  const BigReal& im() const noexcept { return im_; }
  int digits() const noexcept { return re_.digits(); }
  BigComplex with_digits(int digits) const;

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const noexcept { return re_.is_finite() && im_.is_finite(); }

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);
  BigComplex& operator*=(const BigReal& rhs);
  BigComplex& operator/=(const BigReal& rhs);
  BigComplex& operator*=(long rhs);
  BigComplex& operator/=(long rhs);
  BigComplex operator-() const;

  std::string to_string(int significant) const;

 private:
  BigReal re_;
  BigReal im_;
};

BigComplex operator+(BigComplex lhs, const BigComplex& rhs);
BigComplex operator-(BigComplex lhs, const BigComplex& rhs);
BigComplex operator*(BigComplex lhs, const BigComplex& rhs);
BigComplex operator/(BigComplex lhs, const BigComplex& rhs);
BigComplex operator*(BigComplex lhs, const BigReal& rhs);
BigComplex operator*(const BigReal& lhs, BigComplex rhs);
BigComplex operator/(BigComplex lhs, const BigReal& rhs);
BigComplex operator+(BigComplex lhs, long rhs);
BigComplex operator-(BigComplex lhs, long rhs);
BigComplex operator*(BigComplex lhs, long rhs);
BigComplex operator/(BigComplex lhs, long rhs);
BigComplex operator/(long lhs, const BigComplex& rhs);
BigComplex operator+(long lhs, BigComplex rhs);
BigComplex operator-(long lhs, const BigComplex& rhs);
BigComplex operator*(long lhs, BigComplex rhs);

BigComplex conj(const BigComplex& z);
/// |z|^2
BigReal norm(const BigComplex& z);
BigReal abs(const BigComplex& z);
BigReal arg(const BigComplex& z);
BigComplex inverse(const BigComplex& z);

// Elementary functions. Branch cuts follow the principal branch with the
// cut on the negative real axis; signed zeros in the imaginary part select
// the side of the cut, which keeps conj(f(z)) == f(conj(z)) exact.
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
BigComplex cosh(const BigComplex& z);
BigComplex sinh(const BigComplex& z);
/// z^a = exp(a log z) on the principal branch.
BigComplex pow(const BigComplex& z, const BigReal& a);
BigComplex pow(const BigComplex& z, long n);

}  // namespace lapinv::mp

#endif  // LAPINV_MPNUM_BIG_COMPLEX_HPP
