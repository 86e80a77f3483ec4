#include <algorithm>
#include <cmath>
#include <memory>

#include "lapinv/error.hpp"
#include "lapinv/hadamard.hpp"

namespace lapinv::hadamard {

using mp::BigReal;

namespace {

// Leftmost part of [0, v] handled apart from the adaptive quadrature.
constexpr double kEndpointFraction = 1e-6;
// Digits lost per Taylor order when forming f - T_k at w = 1e-6 v.
constexpr int kCancellationDigitsPerOrder = 6;
constexpr int kSeriesTermLimit = 400;

BigReal factorial(int n, int digits) {
  BigReal out(1L, digits);
  for (int i = 2; i <= n; ++i) out *= static_cast<long>(i);
  return out;
}

// Taylor coefficients f^(l)(0)/l! for l <= k.
std::vector<BigReal> taylor(const SmoothIntegrand& f, int k, int digits) {
  std::vector<BigReal> out;
  for (int l = 0; l <= k; ++l) out.push_back(f.derivative_at_zero(l, digits) / factorial(l, digits));
  return out;
}

BigReal taylor_eval(const std::vector<BigReal>& t, const BigReal& w) {
  BigReal acc(w.digits());
  for (size_t l = t.size(); l-- > 0;) acc = acc * w + t[l];
  return acc;
}

// The order m with beta + m = 0 (within 1e-9), or -1. That term would
// integrate to a logarithm, so it is allowed only with a vanishing coefficient.
int logarithmic_order(const BigReal& beta) {
  if (beta.to_double() > 1e-9) return -1;
  const BigReal m = mp::round(-beta);
  if (mp::abs(beta + m).to_double() >= 1e-9) return -1;
  return static_cast<int>(m.to_long_round());
}

void check_logarithmic(const SmoothIntegrand& f, const BigReal& beta, int m, int digits) {
  if (m < 0) return;
  if (m > f.max_order) {
    throw Error(ErrorKind::MissingDerivative, "need f^(" + std::to_string(m) + ")(0) to rule out a logarithmic term");
  }
  if (!f.derivative_at_zero(m, digits).is_zero()) {
    throw Error(ErrorKind::LogarithmicFinitePart,
                "beta+" + std::to_string(m) + " vanishes for beta=" + beta.to_string(20) +
                    " and f^(" + std::to_string(m) + ")(0) != 0; the finite part would need a logarithmic convention");
  }
}

int working_digits(int quad_precision, int k) {
  return quad_precision + kCancellationDigitsPerOrder * std::max(k + 1, 0) + 10;
}

}  // namespace

SmoothIntegrand constant_integrand(const BigReal& c) {
  return {[c](const BigReal& w) { return c.with_digits(w.digits()); },
          [c](int order, int digits) { return order == 0 ? c.with_digits(digits) : BigReal(digits); }, 1 << 20};
}

SmoothIntegrand polynomial_integrand(std::vector<BigReal> coeffs) {
  auto shared = std::make_shared<const std::vector<BigReal>>(std::move(coeffs));
  return {[shared](const BigReal& w) {
            BigReal acc(w.digits());
            for (size_t m = shared->size(); m-- > 0;) acc = acc * w + (*shared)[m];
            return acc;
          },
          [shared](int order, int digits) {
            if (order >= static_cast<int>(shared->size())) return BigReal(digits);
            return (*shared)[static_cast<size_t>(order)].with_digits(digits) * factorial(order, digits);
          },
          1 << 20};
}

BigReal fp_monomial(const BigReal& b, const BigReal& v) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroExponent, "finite part of 1/w is logarithmic");
  if (!(v > 0L)) throw Error(ErrorKind::InvalidArgument, "upper limit must be positive");
  return mp::pow(v, b) / b;
}

int subtraction_order(const BigReal& beta) {
  if (beta > 0L) return -1;
  const BigReal minus = -beta;
  if (minus.is_integer()) return static_cast<int>(minus.to_long_round()) - 1;
  return static_cast<int>(mp::floor(minus).to_long_round());
}

BigReal subtracted_integrand(const SmoothIntegrand& f, const BigReal& beta, const BigReal& w) {
  const int k = subtraction_order(beta);
  if (k > f.max_order) throw Error(ErrorKind::MissingDerivative, "Taylor data ends before order " + std::to_string(k));
  const auto t = taylor(f, k, w.digits());
  return (f.eval(w) - taylor_eval(t, w)) * mp::pow(w, beta.with_digits(w.digits()) - 1L);
}

BigReal fp_integral(const SmoothIntegrand& f, const BigReal& beta, const BigReal& v, int quad_precision) {
  if (!(v > 0L)) throw Error(ErrorKind::InvalidArgument, "upper limit must be positive, lower limit is 0");
  const int k = subtraction_order(beta);
  if (k > f.max_order) {
    throw Error(ErrorKind::MissingDerivative, "need f^(" + std::to_string(k) + ")(0) but Taylor data ends at order " +
                                                  std::to_string(f.max_order));
  }
  const int digits = working_digits(quad_precision, k);
  const int m = logarithmic_order(beta);
  check_logarithmic(f, beta, m, digits);
  const BigReal b = beta.with_digits(digits);
  const BigReal vw = v.with_digits(digits);
  const auto t = taylor(f, k, digits);
  const BigReal bm1 = b - 1L;

  auto integrand = [&](const BigReal& w) { return (f.eval(w) - taylor_eval(t, w)) * mp::pow(w, bm1); };

  BigReal finite(digits);
  for (int l = 0; l <= k; ++l) {
    if (l != m) finite += t[l] * fp_monomial(b + static_cast<long>(l), vw);
  }

  const BigReal eps = vw * BigReal::from_double(kEndpointFraction, digits);
  QuadratureOptions options;
  options.target_digits = quad_precision + 2;
  options.work_digits = digits;
  std::vector<BigReal> cuts;
  for (BigReal x = eps * 10L; x < vw; x *= 10L) cuts.push_back(x);
  const BigReal bulk = integrate(integrand, eps, vw, options, cuts);

  // [0, eps]: remaining Taylor terms integrate in closed form.
  const BigReal scale = mp::abs(bulk) + mp::abs(finite) + mp::ten_to_minus(quad_precision + 10, digits);
  const BigReal tol = mp::ten_to_minus(quad_precision + 4, digits) * scale;
  BigReal head(digits);
  bool converged = false;
  int small_terms = 0;
  const int last = std::min(f.max_order, k + kSeriesTermLimit);
  BigReal l_factorial = factorial(k + 1, digits);
  for (int l = k + 1; l <= last; ++l) {
    if (l > k + 1) l_factorial *= static_cast<long>(l);
    if (l == m) continue;
    const BigReal term = f.derivative_at_zero(l, digits) / l_factorial * fp_monomial(b + static_cast<long>(l), eps);
    head += term;
    small_terms = mp::abs(term) <= tol ? small_terms + 1 : 0;
    if (small_terms >= 3) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    // Substitution w = eps t^q, q = 1/(k+beta+1), flattens w^(k+beta).
    const BigReal e = b + static_cast<long>(k);
    QuadratureOptions sub = options;
    if (e < 0L) {
      const BigReal q = 1L / (e + 1L);
      sub.work_digits = digits + static_cast<int>(std::ceil(8.0 * (k + 1) * q.to_double()));
      const BigReal qw = q.with_digits(sub.work_digits);
      const BigReal epsw = eps.with_digits(sub.work_digits);
      auto mapped = [&](const BigReal& s) {
        const BigReal w = epsw * mp::pow(s, qw);
        return integrand(w) * epsw * qw * mp::pow(s, qw - 1L);
      };
      const std::vector<BigReal> tcuts{BigReal::from_double(0.01, sub.work_digits),
                                       BigReal::from_double(0.1, sub.work_digits)};
      head = integrate(mapped, BigReal(sub.work_digits), BigReal(1L, sub.work_digits), sub, tcuts)
                 .with_digits(digits);
    } else {
      head = integrate(integrand, BigReal(digits), eps, options);
    }
  }
  return (bulk + head + finite).with_digits(quad_precision);
}

}  // namespace lapinv::hadamard
