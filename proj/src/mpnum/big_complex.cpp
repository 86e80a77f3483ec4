#include "lapinv/mpnum/big_complex.hpp"

#include <algorithm>
#include <cmath>

#include "lapinv/error.hpp"

namespace lapinv::mp {

BigComplex::BigComplex(int digits) : re_(digits), im_(digits) {}

BigComplex::BigComplex(const BigReal& re) : re_(re), im_(re.digits()) {}

BigComplex::BigComplex(const BigReal& re, const BigReal& im)
    : re_(re.with_digits(std::max(re.digits(), im.digits()))),
      im_(im.with_digits(std::max(re.digits(), im.digits()))) {}

BigComplex BigComplex::with_digits(int digits) const {
  return BigComplex(re_.with_digits(digits), im_.with_digits(digits));
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  BigReal re = re_ * rhs.re_ - im_ * rhs.im_;
  im_ = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::DomainError, "complex division by zero");
  const BigReal den = norm(rhs);
  BigReal re = (re_ * rhs.re_ + im_ * rhs.im_) / den;
  im_ = (im_ * rhs.re_ - re_ * rhs.im_) / den;
  re_ = std::move(re);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigReal& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::DomainError, "complex division by zero");
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

BigComplex& BigComplex::operator*=(long rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

BigComplex& BigComplex::operator/=(long rhs) {
  if (rhs == 0) throw Error(ErrorKind::DomainError, "complex division by zero");
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

BigComplex BigComplex::operator-() const { return BigComplex(-re_, -im_); }

std::string BigComplex::to_string(int significant) const {
  std::string out = re_.to_string(significant);
  const std::string im = im_.to_string(significant);
  if (im.front() == '-') {
    out += " - " + im.substr(1);
  } else {
    out += " + " + im;
  }
  return out + "i";
}

BigComplex operator+(BigComplex lhs, const BigComplex& rhs) { return lhs += rhs; }
BigComplex operator-(BigComplex lhs, const BigComplex& rhs) { return lhs -= rhs; }
BigComplex operator*(BigComplex lhs, const BigComplex& rhs) { return lhs *= rhs; }
BigComplex operator/(BigComplex lhs, const BigComplex& rhs) { return lhs /= rhs; }
BigComplex operator*(BigComplex lhs, const BigReal& rhs) { return lhs *= rhs; }
BigComplex operator*(const BigReal& lhs, BigComplex rhs) { return rhs *= lhs; }
BigComplex operator/(BigComplex lhs, const BigReal& rhs) { return lhs /= rhs; }
BigComplex operator+(BigComplex lhs, long rhs) { return lhs += BigComplex(BigReal(rhs, lhs.digits())); }
BigComplex operator-(BigComplex lhs, long rhs) { return lhs -= BigComplex(BigReal(rhs, lhs.digits())); }
BigComplex operator*(BigComplex lhs, long rhs) { return lhs *= rhs; }
BigComplex operator/(BigComplex lhs, long rhs) { return lhs /= rhs; }
BigComplex operator/(long lhs, const BigComplex& rhs) { return BigComplex(BigReal(lhs, rhs.digits())) / rhs; }

BigComplex operator+(long lhs, BigComplex rhs) { return rhs + lhs; }
BigComplex operator-(long lhs, const BigComplex& rhs) { return BigComplex(BigReal(lhs, rhs.digits())) - rhs; }
BigComplex operator*(long lhs, BigComplex rhs) { return rhs *= lhs; }

BigComplex conj(const BigComplex& z) { return BigComplex(z.re(), -z.im()); }

BigReal norm(const BigComplex& z) { return z.re() * z.re() + z.im() * z.im(); }

BigReal abs(const BigComplex& z) { return hypot(z.re(), z.im()); }

BigReal arg(const BigComplex& z) { return atan2(z.im(), z.re()); }

BigComplex inverse(const BigComplex& z) { return 1L / z; }

BigComplex exp(const BigComplex& z) {
  const BigReal scale = exp(z.re());
  if (z.im().is_zero()) return BigComplex(scale, z.im());
  return BigComplex(scale * cos(z.im()), scale * sin(z.im()));
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw Error(ErrorKind::DomainError, "log of complex zero");
  return BigComplex(log(abs(z)), arg(z));
}

BigComplex sqrt(const BigComplex& z) {
  if (z.is_zero()) return z;
  const BigReal r = abs(z);
  if (z.re().sign() >= 0) {
    BigReal t = sqrt((r + z.re()) / 2L);
    BigReal im = z.im() / (t * 2L);
    return BigComplex(t, im);
  }
  BigReal t = sqrt((r - z.re()) / 2L);
  BigReal re = abs(z.im()) / (t * 2L);
  if (mpfr_signbit(z.im().raw())) t = -t;
  return BigComplex(re, t);
}

BigComplex cosh(const BigComplex& z) {
  return BigComplex(cosh(z.re()) * cos(z.im()), sinh(z.re()) * sin(z.im()));
}

BigComplex sinh(const BigComplex& z) {
  return BigComplex(sinh(z.re()) * cos(z.im()), cosh(z.re()) * sin(z.im()));
}

BigComplex pow(const BigComplex& z, const BigReal& a) {
  if (z.is_zero()) throw Error(ErrorKind::DomainError, "real power of complex zero");
  const int digits = std::max(z.digits(), a.digits());
  if (z.im().is_zero() && z.re().sign() > 0) {
    return BigComplex(pow(z.re(), a).with_digits(digits), BigReal(digits));
  }
  // exp(a log z) amplifies the error of log z by |a log z|; pay for it up front.
  const BigComplex lz = log(z);
  const double amplification = std::abs(a.to_double()) * (std::abs(lz.re().to_double()) + 4.0) + 1.0;
  const int guard = static_cast<int>(std::ceil(std::log10(amplification))) + 2;
  const BigComplex wide = z.with_digits(digits + guard);
  BigComplex out = exp(log(wide) * a.with_digits(digits + guard));
  return out.with_digits(digits);
}

BigComplex pow(const BigComplex& z, long n) {
  if (n < 0) {
    if (z.is_zero()) throw Error(ErrorKind::DomainError, "negative power of complex zero");
    return inverse(pow(z, -n));
  }
  BigComplex result(BigReal(1L, z.digits()));
  BigComplex base = z;
  unsigned long e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

}  // namespace lapinv::mp
