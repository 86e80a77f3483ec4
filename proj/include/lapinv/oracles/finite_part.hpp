#ifndef LAPINV_ORACLES_FINITE_PART_HPP
#define LAPINV_ORACLES_FINITE_PART_HPP

#include <vector>

#include "lapinv/mpnum.hpp"

namespace lapinv::oracles {

/// sum_m c_m v^(beta+m) / (beta+m): the finite part of the integral of
/// w^(beta-1) sum_m c_m w^m over [0, v], term by term.
mp::BigReal fp_series_oracle(const std::vector<mp::BigReal>& coeffs, const mp::BigReal& beta, const mp::BigReal& v);

/// Maclaurin coefficients of cos, truncated once 1/(2n)! < 10^-(digits+5).
std::vector<mp::BigReal> cos_series(int digits);

}  // namespace lapinv::oracles

#endif  // LAPINV_ORACLES_FINITE_PART_HPP
