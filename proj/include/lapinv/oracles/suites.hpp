#ifndef LAPINV_ORACLES_SUITES_HPP
#define LAPINV_ORACLES_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lapinv/mpnum.hpp"
#include "lapinv/pade.hpp"

#include "lapinv/oracles/report.hpp"

// Randomized invariant suites shared by the unit tests, the acceptance
// binary and `selftest`. Each takes an explicit seed so runs are repeatable.
namespace lapinv::oracles {

SuiteResult gamma_recurrence_suite(int digits, int draws, std::uint64_t seed);
SuiteResult digamma_recurrence_suite(int digits, int draws, std::uint64_t seed);
SuiteResult schwarz_reflection_suite(int digits, int draws, std::uint64_t seed);
SuiteResult precision_monotonicity_suite(int digits, int draws, std::uint64_t seed);
SuiteResult field_axioms_suite(int digits, int draws, std::uint64_t seed);

/// |Gamma(beta+k) 2 Re sum w_j a_j^-(beta+k) + 1| for k < 2 twoN with Gamma
/// from MPFR, bound 10^(-precision+10).
SuiteResult canonical_suite(const std::vector<std::string>& betas, const std::vector<int>& twoNs, int precision,
                            pade::TableCache* cache);
/// Every root of every denominator has Re > 0 and roots pair up as
/// conjugates within 10^(-precision+5); tables store Im > 0 representatives.
SuiteResult pole_geometry_suite(const std::vector<std::string>& betas, const std::vector<int>& twoNs, int precision,
                                pade::TableCache* cache);
/// build_pade against the dense Maclaurin-matching solve, coefficientwise.
SuiteResult pade_linear_solve_suite(int precision);
/// Random beta, degree <= 2 twoN - 1 and coefficients; the inversion must
/// reproduce sum b_k v^(beta+k-1) / Gamma(beta+k) at `points` random v.
SuiteResult exactness_suite(int draws, int points, int twoN, int precision, double tolerance, std::uint64_t seed,
                            pade::TableCache* cache);
/// Finite parts: f = 1 and cos at beta = -1/2, v = 1, then random
/// polynomials of degree <= 6 against the termwise series.
SuiteResult finite_part_suite(int quad_digits, int draws, double cos_tolerance, double poly_tolerance,
                              std::uint64_t seed);
/// Gluon row of exp(tau M(s)) against kernel_laplace at random complex s.
SuiteResult gluon_row_suite(int precision, int draws, std::uint64_t seed);

}  // namespace lapinv::oracles

#endif  // LAPINV_ORACLES_SUITES_HPP
