#include "lapinv/oracles/special.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace lapinv::oracles {

using mp::BigComplex;
using mp::BigReal;

BigReal gamma_oracle(const BigReal& x) {
  BigReal out(x.digits());
  mpfr_gamma(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigComplex digamma_series_oracle(const BigComplex& z) {
  const int digits = z.digits();
  const BigComplex d0 = z - 1L;
  const double dabs = std::abs(d0.re().to_double()) + std::abs(d0.im().to_double());
  const long m_terms = static_cast<long>(std::ceil(4.0 * dabs)) + 20;
  // zeta(s) - sum_{m<=M} m^-s cancels to (M+1)^(1-s)/(s-1); the absolute
  // rounding noise is then multiplied by |d|^k, so the working precision
  // carries log10 |d|^(M+1) extra digits.
  const int work = digits * 3 / 2 + 20 +
                   static_cast<int>(std::ceil((m_terms + 1) * std::log10(std::max(1.0, dabs))));
  const BigComplex zw = z.with_digits(work);
  const BigComplex d = zw - 1L;

  BigComplex sum = BigComplex(-mp::euler_gamma(work));
  for (long n = 0; n < m_terms; ++n) {
    sum += BigComplex(BigReal(1L, work) / (n + 1));
    sum -= mp::inverse(zw + n);
  }

  // Terms are bounded by (|d|/(M+1))^k (M+2); stop once that is negligible.
  const double log_ratio = std::log10(std::max(dabs, 1e-300)) - std::log10(static_cast<double>(m_terms + 1));
  const double log_eps = -static_cast<double>(digits) - 10.0;
  BigComplex dpow = d;
  for (long k = 1;; ++k) {
    const long s = k + 1;
    BigReal hurwitz(work);
    if (s > m_terms + 1) {
      for (long m = m_terms + 1;; ++m) {
        const BigReal term = mp::pow(BigReal(m, work), -s);
        hurwitz += term;
        if (term < mp::ten_to_minus(work, work) * hurwitz) break;
      }
    } else {
      mpfr_zeta_ui(hurwitz.raw(), static_cast<unsigned long>(s), MPFR_RNDN);
      for (long m = 1; m <= m_terms; ++m) hurwitz -= mp::pow(BigReal(m, work), -s);
    }
    BigComplex term = dpow * hurwitz;
    if (k % 2 == 0) term = -term;
    sum += term;
    if (k * log_ratio + std::log10(static_cast<double>(m_terms + 2)) < log_eps) break;
    dpow *= d;
  }
  return sum.with_digits(digits);
}

}  // namespace lapinv::oracles

namespace lapinv::oracles {

using mp::BigComplex;
using mp::BigReal;

namespace {

BigComplex cot_pi(const BigComplex& z) {
  const int d = z.digits();
  const BigComplex i(BigReal(d), BigReal(1L, d));
  const BigComplex e = mp::exp(i * z * mp::pi(d) * 2L);
  return i * (e + 1L) / (e - 1L);
}

// B_2k / (2k) for k = 1..count at `work` digits, from zeta(2k).
const std::vector<BigReal>& bernoulli_over_2k(int work, size_t count) {
  static std::mutex mutex;
  static std::map<int, std::vector<BigReal>> cache;
  std::lock_guard lock(mutex);
  auto& v = cache[work];
  if (v.size() >= count) return v;
  const BigReal two_pi_sq = mp::pi(work) * mp::pi(work) * 4L;
  v.clear();
  BigReal fact(2L, work);  // (2k)!
  BigReal tpow = two_pi_sq;
  for (long k = 1; k <= static_cast<long>(count); ++k) {
    BigReal zeta(work);
    mpfr_zeta_ui(zeta.raw(), static_cast<unsigned long>(2 * k), MPFR_RNDN);
    BigReal b2k = zeta * fact * 2L / tpow;
    if (k % 2 == 0) b2k = -b2k;
    v.push_back(b2k / (2L * k));
    fact *= (2 * k + 1) * (2 * k + 2);
    tpow *= two_pi_sq;
  }
  return v;
}

BigComplex digamma_asymptotic(const BigComplex& z) {
  const int digits = z.digits();
  const int work = digits + 15;
  BigComplex w = z.with_digits(work);
  BigComplex acc(work);
  if (w.re() < BigReal::from_double(0.5, work)) {
    acc -= cot_pi(w) * mp::pi(work);
    w = 1L - w;
  }
  const double reach = 0.5 * digits + 15;
  while (mp::abs(w).to_double() < reach) {
    acc -= mp::inverse(w);
    w += BigComplex(BigReal(1L, work));
  }
  acc += mp::log(w) - mp::inverse(w) / 2L;
  const BigComplex inv2 = mp::inverse(w * w);
  const BigReal eps = mp::ten_to_minus(work, work);
  const auto& b = bernoulli_over_2k(work, static_cast<size_t>(work));
  BigComplex wpow = inv2;
  for (const auto& coeff : b) {
    const BigComplex term = wpow * coeff;
    acc -= term;
    if (mp::abs(term) < eps * mp::abs(acc)) break;
    wpow *= inv2;
  }
  return acc.with_digits(digits);
}

}  // namespace

BigComplex digamma_oracle(const BigComplex& z) { return digamma_asymptotic(z); }

}  // namespace lapinv::oracles
