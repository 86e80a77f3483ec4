#ifndef LAPINV_ORACLES_PADE_HPP
#define LAPINV_ORACLES_PADE_HPP

#include <optional>
#include <string>
#include <vector>

#include "lapinv/mpnum.hpp"

namespace lapinv::oracles {

struct PadeSolve {
  std::vector<mp::BigReal> numerator;    // degree twoN-1, increasing powers
  std::vector<mp::BigReal> denominator;  // degree twoN, denominator[0] == 1
};

/// Padé (twoN-1, twoN) of sum_k z^k / Gamma(beta+k) from the Maclaurin
/// matching conditions, by dense Gaussian elimination. Returns nullopt and
/// fills `why` when the system is singular.
std::optional<PadeSolve> pade_by_linear_solve(const mp::BigReal& beta, int twoN, std::string* why = nullptr);

}  // namespace lapinv::oracles

#endif  // LAPINV_ORACLES_PADE_HPP
