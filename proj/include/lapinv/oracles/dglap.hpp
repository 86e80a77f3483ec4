#ifndef LAPINV_ORACLES_DGLAP_HPP
#define LAPINV_ORACLES_DGLAP_HPP

#include <array>
#include <functional>

#include "lapinv/mpnum.hpp"

namespace lapinv::oracles {

using Matrix2 = std::array<std::array<mp::BigComplex, 2>, 2>;

/// Rows (Phi_f, Theta_f; Theta_g, Phi_g) at s, typed in from the LO singlet
/// formulas and built on digamma_oracle.
Matrix2 singlet_matrix(const mp::BigComplex& s, int n_f);

/// exp(tau M(s)) by scaling and squaring with a Taylor core. Row 0 gives
/// (k_ff, k_fg), row 1 gives (k_gf, k_gg).
Matrix2 matrix_exp_oracle(const mp::BigComplex& s, const mp::BigReal& tau, int n_f);

/// Fixed-Talbot inversion of F at t > 0 with M contour points, evaluated at
/// t's precision. F must be analytic to the right of and on the contour
/// S(theta) = r theta (cot theta + i), r = 2M/(5t); about 0.6 M correct
/// digits when the precision exceeds M.
mp::BigReal talbot_oracle(const std::function<mp::BigComplex(const mp::BigComplex&)>& F, const mp::BigReal& t,
                          int M);

}  // namespace lapinv::oracles

#endif  // LAPINV_ORACLES_DGLAP_HPP
