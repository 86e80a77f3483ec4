#ifndef LAPINV_MPNUM_SPECIAL_HPP
#define LAPINV_MPNUM_SPECIAL_HPP

#include "lapinv/mpnum/big_complex.hpp"
#include "lapinv/mpnum/big_real.hpp"

namespace lapinv::mp {

/// Real part above which the Stirling series is applied directly:
/// 0.4 * digits + 10. Below it, Gamma and digamma are shifted upward by
/// recurrence first. The Stirling remainder is bounded by roughly
/// exp(-2 pi x), so this threshold is sufficient at every precision.
double stirling_threshold(int digits);

/// Bernoulli number B_{2k} (k >= 1), from exact integer tangent numbers.
mpq_class bernoulli_b2k_exact(int k);
BigReal bernoulli_b2k(int k, int digits);

/// Gamma of a real argument, including negative non-integers (reflection
/// from Gamma(1 - x)). Throws PoleOfGamma at non-positive integers.
BigReal gamma_real(const BigReal& x);

/// Digamma on the complex plane via upward recurrence and the Stirling
/// series. Throws PoleOfDigamma at non-positive integers on the real axis.
BigComplex digamma_complex(const BigComplex& z);

}  // namespace lapinv::mp

#endif  // LAPINV_MPNUM_SPECIAL_HPP
