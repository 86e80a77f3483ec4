#ifndef LAPINV_ORACLES_SPECIAL_HPP
#define LAPINV_ORACLES_SPECIAL_HPP

#include "lapinv/mpnum.hpp"

// Reference values for the special functions. These go straight to MPFR
// primitives (gamma, zeta) and never through lapinv::mp::gamma_real or
// digamma_complex.
namespace lapinv::oracles {

mp::BigReal gamma_oracle(const mp::BigReal& x);

/// psi(z) = -gamma_E + sum_{n>=0} (1/(n+1) - 1/(n+z)). The first M terms
/// are summed directly; the tail is re-expanded in powers of d = z - 1 with
/// Hurwitz zeta coefficients zeta(k+1, M+1) = zeta(k+1) - sum_{m<=M} m^-(k+1).
mp::BigComplex digamma_series_oracle(const mp::BigComplex& z);

/// Reflection to Re z >= 1/2, upward recurrence, then the asymptotic series with
/// B_2k = (-1)^(k+1) 2 (2k)! zeta(2k) / (2 pi)^(2k) from mpfr_zeta_ui.
mp::BigComplex digamma_oracle(const mp::BigComplex& z);

}  // namespace lapinv::oracles

#endif  // LAPINV_ORACLES_SPECIAL_HPP
