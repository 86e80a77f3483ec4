#ifndef LAPINV_ORACLES_ROUND_TRIP_HPP
#define LAPINV_ORACLES_ROUND_TRIP_HPP

#include <vector>

#include "lapinv/dglap.hpp"
#include "lapinv/fitpoly.hpp"

namespace lapinv::oracles {

/// Singlet (row 0) or gluon (row 1) at v after evolving (F0, G0) by tau:
/// exp(tau M(s)) from matrix_exp_oracle applied to the exact transforms,
/// inverted by fixed Talbot.
mp::BigReal evolved_oracle(int row, const fitpoly::PowerLawPolynomial& f0, const fitpoly::PowerLawPolynomial& g0,
                           const mp::BigReal& tau, int n_f, const mp::BigReal& v, int talbot_points = 40);

struct RoundTripOptions {
  mp::ExactReal tau;
  int n_f = 4;
  dglap::KernelFitOptions kernel;
  int quad_digits = 20;
  /// Chebyshev nodes on [1e-3, 9] for the intermediate fits.
  int nodes = 40;
  int degree = 20;
  std::vector<mp::BigReal> check_points;
};

struct RoundTripResult {
  std::vector<double> errors;  // |G_back - G0| / |G0| per check point
  double worst = 0;
  double gluon_fit_residual = 0;
  double quark_fit_residual = 0;
};

/// Evolve (G0, F0) by +tau through evolve_gluon, fit the intermediate gluon
/// with beta = 1 + 12 tau, take the intermediate quark singlet from
/// evolved_oracle (fit with beta = 1 + 16 tau / 3), devolve by -tau and
/// compare with G0.
RoundTripResult devolution_round_trip(const fitpoly::PowerLawPolynomial& g0, const fitpoly::PowerLawPolynomial& f0,
                                      const RoundTripOptions& options);

}  // namespace lapinv::oracles

#endif  // LAPINV_ORACLES_ROUND_TRIP_HPP
