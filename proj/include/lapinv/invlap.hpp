#ifndef LAPINV_INVLAP_HPP
#define LAPINV_INVLAP_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lapinv/mpnum.hpp"
#include "lapinv/pade.hpp"

namespace lapinv::invlap {

enum class FunctionKind { ClosedForm, Composed, Sampled };

/// g(s) evaluated at a complex point and a requested precision (digits).
/// Evaluators are expected to return values accurate at that precision.
struct LaplaceFunction {
  using Evaluator = std::function<mp::BigComplex(const mp::BigComplex& s, int digits)>;

  Evaluator eval;
  FunctionKind kind = FunctionKind::ClosedForm;
  std::string name;

  mp::BigComplex operator()(const mp::BigComplex& s, int digits) const { return eval(s, digits); }
};

/// s^(-exponent)
LaplaceFunction power_law(const mp::ExactReal& exponent);
/// sum_k b_k s^(-beta-k); the transform of v^(beta-1) sum_k b_k v^k / Gamma(beta+k).
LaplaceFunction power_series(const mp::ExactReal& beta, std::vector<mp::BigReal> coeffs);
/// a g1 + b g2
LaplaceFunction linear_combination(const mp::BigReal& a, LaplaceFunction g1, const mp::BigReal& b,
                                   LaplaceFunction g2);
/// s -> g(s / c)
LaplaceFunction rescaled(LaplaceFunction g, const mp::BigReal& c);

/// Exact original of power_series at v, for tests and error reports.
mp::BigReal power_series_original(const mp::ExactReal& beta, const std::vector<mp::BigReal>& coeffs,
                                  const mp::BigReal& v);

/// Radius around non-positive integers inside which beta is refused.
inline constexpr double kBetaRejectRadius = 1e-3;

/// Throws InvalidBeta for beta <= 0 within kBetaRejectRadius of a
/// non-positive integer: the original is then (close to) a derivative of the
/// Dirac delta and no power-law-times-polynomial representation exists.
void validate_beta(const mp::ExactReal& beta);

/// Table lookup through a cache (the process-wide default when null).
std::shared_ptr<const pade::PoleWeightTable> table_for(const mp::ExactReal& beta, int twoN, int precision,
                                                       pade::TableCache* cache = nullptr);

/// G(v) = -(2/v) sum_j Re[w_j g(a_j/v)] over the stored upper-half-plane
/// poles. g is evaluated at the table's internal precision; the result is
/// rounded to the table's nominal precision. With `check_imaginary` the
/// full 2N-pole sum is also formed and an imaginary part above
/// 10^(-precision+10) of the term scale raises EvaluatorFailure.
mp::BigReal invert_at(const LaplaceFunction& g, const mp::BigReal& v, const pade::PoleWeightTable& table,
                      bool check_imaginary = false);

/// Imaginary part of the full 2N-pole sum relative to the sum of |terms|.
mp::BigReal full_sum_imaginary(const LaplaceFunction& g, const mp::BigReal& v, const pade::PoleWeightTable& table);

struct InversionRequest {
  LaplaceFunction g;
  mp::ExactReal beta;
  int twoN = 20;
  int precision = 50;
  std::vector<mp::BigReal> v_points;
};

struct GridPoint {
  mp::BigReal v;
  std::optional<mp::BigReal> value;
  std::string error;
};

/// One entry per v in request order. Individual failures are recorded in
/// the entry; AllPointsFailed is thrown only when no point succeeds.
std::vector<GridPoint> invert_grid(const InversionRequest& request, pade::TableCache* cache = nullptr);

struct BetaEstimate {
  mp::BigReal beta;
  mp::BigReal log_amplitude;
  /// Largest |log|g| - fit| over the samples.
  mp::BigReal max_residual;
};

inline constexpr double kBetaFitTolerance = 1e-3;

/// Least-squares fit of log|g(s)| = log a - beta log s over real samples.
BetaEstimate estimate_beta(const std::vector<std::pair<mp::BigReal, mp::BigReal>>& samples);

/// Samples g at n log-spaced real points in [s_min, s_max] at `precision`
/// digits and fits them.
BetaEstimate estimate_beta(const LaplaceFunction& g, const mp::BigReal& s_min, const mp::BigReal& s_max,
                           int n_samples, int precision);

}  // namespace lapinv::invlap

#endif  // LAPINV_INVLAP_HPP
