#ifndef LAPINV_HADAMARD_HPP
#define LAPINV_HADAMARD_HPP

#include <functional>
#include <vector>

#include "lapinv/mpnum.hpp"

namespace lapinv::hadamard {

/// Gauss–Legendre nodes and weights on [-1, 1], cached per (n, digits).
struct GaussLegendre {
  std::vector<mp::BigReal> nodes;
  std::vector<mp::BigReal> weights;
};
const GaussLegendre& gauss_legendre(int n, int digits);

struct QuadratureOptions {
  /// Relative accuracy target (digits) against the integral's L1 scale.
  int target_digits = 30;
  /// Arithmetic precision for nodes and integrand calls.
  int work_digits = 40;
  int max_panels = 20000;
};

/// Adaptive Gauss–Legendre over [a, b], bisecting panels whose estimate
/// changes when split. `breakpoints` (strictly inside (a, b)) seed the
/// initial partition. Throws QuadratureFailure if the panel budget runs out.
mp::BigReal integrate(const std::function<mp::BigReal(const mp::BigReal&)>& f, const mp::BigReal& a,
                      const mp::BigReal& b, const QuadratureOptions& options,
                      const std::vector<mp::BigReal>& breakpoints = {});

/// f(w) together with its Taylor data at w = 0.
struct SmoothIntegrand {
  std::function<mp::BigReal(const mp::BigReal& w)> eval;
  /// f^(order)(0) at the requested precision; only called for order <= max_order.
  std::function<mp::BigReal(int order, int digits)> derivative_at_zero;
  int max_order = -1;
};

/// f = constant; every derivative beyond order 0 vanishes.
SmoothIntegrand constant_integrand(const mp::BigReal& c);
/// f(w) = sum_m c_m w^m.
SmoothIntegrand polynomial_integrand(std::vector<mp::BigReal> coeffs);

/// Finite part of the integral of w^(b-1) over [0, v]: v^b / b. For b > 0
/// this is the ordinary integral. Throws ZeroExponent for b == 0.
mp::BigReal fp_monomial(const mp::BigReal& b, const mp::BigReal& v);

/// Number of Taylor terms subtracted for exponent beta: floor(-beta) for
/// non-integer -beta, -beta-1 for positive integer -beta, and -1 (nothing
/// subtracted) for beta > 0.
int subtraction_order(const mp::BigReal& beta);

/// Finite part of the integral of f(w) w^(beta-1) over [0, v]:
///   int_0^v (f - T_k)(w) w^(beta-1) dw + sum_{l<=k} f^(l)(0)/l! v^(beta+l)/(beta+l)
/// with k = subtraction_order(beta). For beta > 0 this is the ordinary
/// integral. The Riemann part is integrated adaptively on [eps, v] with
/// eps = 1e-6 v; on [0, eps] it is summed from further Taylor terms when
/// the integrand supplies them, otherwise integrated after the substitution
/// w = eps t^(1/(k+beta+1)).
/// When beta + m = 0 for an integer m >= 0 (within 1e-9) the w^-1 term is
/// logarithmic: it is dropped if f^(m)(0) = 0, else LogarithmicFinitePart.
/// Errors: LogarithmicFinitePart,
/// MissingDerivative if f lacks Taylor data to order k, QuadratureFailure.
mp::BigReal fp_integral(const SmoothIntegrand& f, const mp::BigReal& beta, const mp::BigReal& v,
                        int quad_precision);

/// The Riemann-part integrand (f - T_k)(w) w^(beta-1) at one point, exposed
/// for diagnostics.
mp::BigReal subtracted_integrand(const SmoothIntegrand& f, const mp::BigReal& beta, const mp::BigReal& w);

}  // namespace lapinv::hadamard

#endif  // LAPINV_HADAMARD_HPP
