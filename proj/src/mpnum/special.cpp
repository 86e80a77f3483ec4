#include "lapinv/mpnum/special.hpp"

#include <cmath>
#include <mutex>
#include <vector>

#include <gmpxx.h>

#include "lapinv/error.hpp"

namespace lapinv::mp {

namespace {

constexpr int kGuardDigits = 10;

// B_{2k} for k = 1..n as exact rationals, via tangent numbers
// (B_{2k} = (-1)^(k-1) 2k T_k / (4^k (4^k - 1))).
class BernoulliTable {
 public:
  mpq_class get(int k) {
    std::lock_guard lock(mutex_);
    if (static_cast<int>(values_.size()) < k) extend(std::max(k, 2 * static_cast<int>(values_.size())));
    return values_[static_cast<size_t>(k - 1)];
  }

 private:
  void extend(int n) {
    std::vector<mpz_class> t(static_cast<size_t>(n) + 1);
    t[1] = 1;
    for (int k = 2; k <= n; ++k) t[k] = (k - 1) * t[k - 1];
    for (int k = 2; k <= n; ++k) {
      for (int j = k; j <= n; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
    }
    values_.clear();
    for (int k = 1; k <= n; ++k) {
      mpz_class four_k;
      mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
      mpq_class b(2 * k * t[k], four_k * (four_k - 1));
      b.canonicalize();
      if (k % 2 == 0) b = -b;
      values_.push_back(b);
    }
  }

  std::mutex mutex_;
  std::vector<mpq_class> values_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

bool is_nonpositive_integer(const BigReal& x) { return x.sign() <= 0 && x.is_integer(); }

// ln Gamma(y) by the Stirling series; y must already exceed the threshold.
BigReal log_gamma_stirling(const BigReal& y) {
  const int digits = y.digits();
  const BigReal eps = ten_to_minus(digits + 2, digits);
  BigReal out = (y - BigReal::from_rational(mpq_class(1, 2), digits)) * log(y) - y +
                log(pi(digits) * 2L) / 2L;
  const BigReal y2 = y * y;
  BigReal ypow = y;  // y^(2k-1)
  for (int k = 1;; ++k) {
    BigReal term = BigReal::from_rational(bernoulli_b2k_exact(k), digits) / (ypow * (2L * k * (2L * k - 1)));
    out += term;
    if (abs(term) < eps * abs(out)) break;
    if (k > 4 * digits) throw Error(ErrorKind::DomainError, "Stirling series did not converge");
    ypow *= y2;
  }
  return out;
}

}  // namespace

mpq_class bernoulli_b2k_exact(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "Bernoulli index must be positive");
  return bernoulli_table().get(k);
}

double stirling_threshold(int digits) { return 0.4 * digits + 10.0; }

BigReal bernoulli_b2k(int k, int digits) { return BigReal::from_rational(bernoulli_b2k_exact(k), digits); }

BigReal gamma_real(const BigReal& x) {
  if (!x.is_finite()) throw Error(ErrorKind::DomainError, "gamma of a non-finite value");
  if (is_nonpositive_integer(x)) {
    throw Error(ErrorKind::PoleOfGamma, "gamma has a pole at " + x.to_string(20));
  }
  const int digits = x.digits();
  const BigReal half = BigReal::from_rational(mpq_class(1, 2), digits);
  if (x < half) {
    // Gamma(x) Gamma(1-x) = pi / sin(pi x)
    const BigReal s = sin_pi(x.with_digits(digits + kGuardDigits));
    if (s.is_zero()) throw Error(ErrorKind::PoleOfGamma, "gamma has a pole at " + x.to_string(20));
    const BigReal reflected = gamma_real((1L - x).with_digits(digits + kGuardDigits));
    return (pi(digits + kGuardDigits) / (s * reflected)).with_digits(digits);
  }
  // exp() turns the absolute error of ln Gamma into relative error, so
  // guard digits grow with log10 |ln Gamma|.
  const double xd = x.to_double();
  const double threshold = stirling_threshold(digits);
  const double y_est = std::max(xd, threshold);
  const int guard = kGuardDigits + static_cast<int>(std::ceil(std::log10(y_est * std::log(y_est) + 10.0)));
  const int work = digits + guard;
  BigReal y = x.with_digits(work);
  BigReal product(1L, work);
  while (y.to_double() < threshold) {
    product *= y;
    y += 1L;
  }
  return (exp(log_gamma_stirling(y)) / product).with_digits(digits);
}

BigComplex digamma_complex(const BigComplex& z) {
  if (!z.is_finite()) throw Error(ErrorKind::DomainError, "digamma of a non-finite value");
  if (z.im().is_zero() && is_nonpositive_integer(z.re())) {
    throw Error(ErrorKind::PoleOfDigamma, "digamma has a pole at " + z.re().to_string(20));
  }
  const int digits = z.digits();
  const int work = digits + kGuardDigits;
  const double threshold = stirling_threshold(work);
  BigComplex w = z.with_digits(work);
  BigComplex shift(work);
  while (w.re().to_double() < threshold) {
    shift -= inverse(w);
    w += BigComplex(BigReal(1L, work));
  }
  // psi(w) = log w - 1/(2w) - sum_k B_2k / (2k w^2k)
  const BigComplex inv = inverse(w);
  const BigComplex inv2 = inv * inv;
  BigComplex out = log(w) - inv / 2L;
  const BigReal eps = ten_to_minus(work + 2, work);
  BigComplex ipow = inv2;
  for (int k = 1;; ++k) {
    BigComplex term = ipow * (bernoulli_b2k(k, work) / BigReal(2L * k, work));
    out -= term;
    if (abs(term) < eps * abs(out)) break;
    if (k > 4 * work) throw Error(ErrorKind::DomainError, "digamma asymptotic series did not converge");
    ipow *= inv2;
  }
  return (out + shift).with_digits(digits);
}

}  // namespace lapinv::mp
