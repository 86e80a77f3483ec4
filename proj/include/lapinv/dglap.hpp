#ifndef LAPINV_DGLAP_HPP
#define LAPINV_DGLAP_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lapinv/fitpoly.hpp"
#include "lapinv/invlap.hpp"
#include "lapinv/mpnum.hpp"

namespace lapinv::dglap {

/// Running-coupling setup. With both thresholds set, n_f follows the
/// band of Q^2 (3 below mc2, 4 below mb2, 5 above); otherwise n_f is fixed.
struct DglapConfig {
  int n_f = 4;
  /// Lambda_{n_f} in GeV.
  std::map<int, mp::BigReal> lambda;
  std::optional<mp::BigReal> mc2;
  std::optional<mp::BigReal> mb2;
  std::optional<mp::BigReal> tau_override;
};

int active_flavors(const mp::BigReal& Q2, const DglapConfig& cfg);

/// 4 pi / ((11 - 2 n_f / 3) ln(Q^2 / Lambda_{n_f}^2)). BelowLandauPole if
/// the logarithm is not positive.
mp::BigReal alpha_s(const mp::BigReal& Q2, const DglapConfig& cfg);

/// (1/4pi) int alpha_s d ln Q'^2 from Q02 to Q2, closed form per flavor band.
/// Returns cfg.tau_override when set.
mp::BigReal tau(const mp::BigReal& Q2, const mp::BigReal& Q02, const DglapConfig& cfg);

/// Lambda_4, Lambda_5 making alpha_s continuous at mc2 and mb2 for a given Lambda_3.
std::map<int, mp::BigReal> continuous_lambdas(const mp::BigReal& lambda3, const mp::BigReal& mc2,
                                              const mp::BigReal& mb2);

struct CoefficientFunctions {
  mp::BigComplex phi_f;
  mp::BigComplex theta_f;
  mp::BigComplex phi_g;
  mp::BigComplex theta_g;
};

/// LO singlet coefficient functions at s. CoefficientPole at s = 0 and at
/// negative integers (poles of the rational terms and of psi(s+1)).
CoefficientFunctions coeff_functions(const mp::BigComplex& s, int n_f);

enum class KernelKind { GG, GF };
std::string kernel_name(KernelKind kind);

/// k_gg or k_gf at (s, tau), evaluated at the precision of s.
mp::BigComplex kernel_laplace(KernelKind kind, const mp::BigComplex& s, const mp::BigReal& tau, int n_f);

/// The kernel as a LaplaceFunction of s for fixed tau.
invlap::LaplaceFunction kernel_function(KernelKind kind, const mp::ExactReal& tau, int n_f);

/// Inversion class of a kernel: 12 tau for GG; for GF the large-s power of
/// k_gf, 1 + 12 tau (tau < 0) or 1 + 16 tau / 3 (tau > 0).
mp::ExactReal kernel_beta(KernelKind kind, const mp::ExactReal& tau);

struct KernelFitOptions {
  int twoN = 20;
  int precision = 50;
  int degree = 32;
  double v_min = 1e-3;
  double v_max = 9.0;
  /// Chebyshev nodes; 0 picks 2 (degree + 1) + 10.
  int nodes = 0;
  double max_residual = 1e-6;
  /// k_gf carries a 1/ln s factor no power-law class absorbs, so its fit
  /// residual bottoms out near 1e-3 and gets its own bound.
  double gf_max_residual = 1e-2;
  /// Replaces kernel_beta when set.
  std::optional<mp::ExactReal> beta;
  pade::TableCache* cache = nullptr;
};

/// Inverts the kernel at Chebyshev nodes on [v_min, v_max] and fits
/// v^(beta-1)/Gamma(beta) sum B_i v^i with beta = kernel_beta. Throws
/// FitResidualTooLarge when the fit residual exceeds max_residual.
fitpoly::PowerLawPolynomial build_kernel_model(KernelKind kind, const mp::ExactReal& tau, int n_f,
                                               const KernelFitOptions& options);

/// FP int_0^v K(w) H(v-w) dw for two models. The interval is split at v/2;
/// each half is integrated in the variable that puts its model's power-law
/// factor at the origin, with Taylor data from the other model's analytic
/// derivatives.
mp::BigReal convolve(const fitpoly::PowerLawPolynomial& kernel, const fitpoly::PowerLawPolynomial& dist,
                     const mp::BigReal& v, int quad_digits);

struct EvolutionProblem {
  fitpoly::PowerLawPolynomial g0_model;
  fitpoly::PowerLawPolynomial fs0_model;
  mp::ExactReal tau;
  int n_f = 4;
  KernelFitOptions kernel;
  int quad_digits = 20;
};

struct EvolutionPoint {
  mp::BigReal v;
  std::optional<mp::BigReal> value;
  std::string error;
};

struct EvolutionResult {
  std::vector<EvolutionPoint> points;
  /// Empty when tau == 0 (no kernels needed).
  std::optional<fitpoly::PowerLawPolynomial> k_gg;
  std::optional<fitpoly::PowerLawPolynomial> k_gf;
};

/// G(v) = FP int K_GG(w) G0(v-w) dw + int K_GF(w) F_s0(v-w) dw on the grid;
/// G0 itself at tau = 0. Failures are recorded per point.
EvolutionResult evolve_gluon(const EvolutionProblem& problem, const std::vector<mp::BigReal>& v_points);

struct XPoint {
  mp::BigReal x;
  mp::BigReal v;
  mp::BigReal value;
};

/// x = exp(-v) for every successful point, in input order.
std::vector<XPoint> to_x_space(const std::vector<EvolutionPoint>& points);
mp::BigReal v_of_x(const mp::BigReal& x);

/// Reads `x,value` rows (optional header line) at `precision` digits.
/// ParseError for malformed rows or x outside (0, 1); NonMonotoneGrid
/// unless x is strictly monotone.
std::vector<std::pair<mp::BigReal, mp::BigReal>> read_grid(const std::filesystem::path& path, int precision);

/// read_grid, then a beta = 1 fit in v = ln(1/x). FitResidualTooLarge
/// above max_residual.
fitpoly::PowerLawPolynomial ingest_grid(const std::filesystem::path& path, int precision, int degree = 20,
                                        double max_residual = 1e-4);

}  // namespace lapinv::dglap

#endif  // LAPINV_DGLAP_HPP
