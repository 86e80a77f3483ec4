#include "lapinv/invlap.hpp"

#include <cmath>

#include "lapinv/error.hpp"

namespace lapinv::invlap {

using mp::BigComplex;
using mp::BigReal;
using mp::ExactReal;

LaplaceFunction power_law(const ExactReal& exponent) {
  return {[exponent](const BigComplex& s, int digits) {
            return mp::pow(s.with_digits(digits), -exponent.at(digits));
          },
          FunctionKind::ClosedForm, "s^-" + exponent.to_string()};
}

LaplaceFunction power_series(const ExactReal& beta, std::vector<BigReal> coeffs) {
  if (coeffs.empty()) throw Error(ErrorKind::InvalidArgument, "power series needs at least one coefficient");
  return {[beta, coeffs = std::move(coeffs)](const BigComplex& s, int digits) {
            const BigComplex sw = s.with_digits(digits);
            const BigComplex inv = mp::inverse(sw);
            BigComplex acc(coeffs.back().with_digits(digits));
            for (size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * inv + BigComplex(coeffs[k].with_digits(digits));
            return acc * mp::pow(sw, -beta.at(digits));
          },
          FunctionKind::ClosedForm, "power-series"};
}

LaplaceFunction linear_combination(const BigReal& a, LaplaceFunction g1, const BigReal& b, LaplaceFunction g2) {
  return {[a, b, g1 = std::move(g1), g2 = std::move(g2)](const BigComplex& s, int digits) {
            return g1(s, digits) * a.with_digits(digits) + g2(s, digits) * b.with_digits(digits);
          },
          FunctionKind::Composed, "linear-combination"};
}

LaplaceFunction rescaled(LaplaceFunction g, const BigReal& c) {
  if (c.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "rescaling factor must be positive");
  const std::string name = g.name + "(s/c)";
  return {[c, g = std::move(g)](const BigComplex& s, int digits) {
            return g(s.with_digits(digits) / c.with_digits(digits), digits);
          },
          FunctionKind::Composed, name};
}

BigReal power_series_original(const ExactReal& beta, const std::vector<BigReal>& coeffs, const BigReal& v) {
  const int digits = v.digits();
  const BigReal b = beta.at(digits);
  BigReal gamma = mp::gamma_real(b);
  BigReal vk(1L, digits);
  BigReal sum(digits);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    sum += coeffs[k] * vk / gamma;
    vk *= v;
    gamma *= b + static_cast<long>(k);
  }
  return mp::pow(v, b - 1L) * sum;
}

void validate_beta(const ExactReal& beta) {
  if (beta.sign() > 0) return;
  const long nearest = beta.nearest_integer();
  const double distance = std::abs((beta - ExactReal::integer(nearest)).to_double());
  if (nearest <= 0 && distance < kBetaRejectRadius) {
    throw Error(ErrorKind::InvalidBeta,
                "beta=" + beta.to_string() + " is within " + std::to_string(kBetaRejectRadius) +
                    " of the non-positive integer " + std::to_string(nearest) +
                    "; there the original is a Dirac delta or one of its derivatives, which has no "
                    "power-law-times-polynomial form");
  }
}

std::shared_ptr<const pade::PoleWeightTable> table_for(const ExactReal& beta, int twoN, int precision,
                                                       pade::TableCache* cache) {
  validate_beta(beta);
  pade::TableCache& c = cache != nullptr ? *cache : pade::default_cache();
  return c.get_or_build(beta, twoN, precision);
}

namespace {

void check_v(const BigReal& v) {
  if (!(v > 0L)) throw Error(ErrorKind::InvalidArgument, "v must be positive, got " + v.to_string(20));
}

BigComplex evaluate_node(const LaplaceFunction& g, const BigComplex& s, int digits) {
  try {
    BigComplex value = g(s, digits);
    if (!value.is_finite()) throw Error(ErrorKind::EvaluatorFailure, "non-finite value");
    return value;
  } catch (const std::exception& e) {
    throw Error(ErrorKind::EvaluatorFailure, "g(" + s.to_string(20) + ") failed: " + e.what());
  }
}

}  // namespace

BigReal full_sum_imaginary(const LaplaceFunction& g, const BigReal& v, const pade::PoleWeightTable& table) {
  check_v(v);
  const int digits = table.digits();
  const BigReal vw = v.with_digits(digits);
  BigComplex sum(digits);
  BigReal scale(digits);
  for (size_t j = 0; j < table.poles.size(); ++j) {
    for (bool lower : {false, true}) {
      const BigComplex a = lower ? mp::conj(table.poles[j]) : table.poles[j];
      const BigComplex w = lower ? mp::conj(table.weights[j]) : table.weights[j];
      const BigComplex term = w * evaluate_node(g, a / vw, digits);
      sum += term;
      scale += mp::abs(term);
    }
  }
  if (scale.is_zero()) return scale;
  return mp::abs(sum.im()) / scale;
}

BigReal invert_at(const LaplaceFunction& g, const BigReal& v, const pade::PoleWeightTable& table,
                  bool check_imaginary) {
  check_v(v);
  const int digits = table.digits();
  const BigReal vw = v.with_digits(digits);
  BigReal sum(digits);
  for (size_t j = 0; j < table.poles.size(); ++j) {
    const BigComplex value = evaluate_node(g, table.poles[j] / vw, digits);
    const BigComplex& w = table.weights[j];
    sum += w.re() * value.re() - w.im() * value.im();
  }
  if (check_imaginary) {
    const BigReal imag = full_sum_imaginary(g, v, table);
    if (imag > mp::ten_to_minus(table.precision - 10, digits)) {
      throw Error(ErrorKind::EvaluatorFailure,
                  "full pole sum has a relative imaginary part " + imag.to_string(5) +
                      "; g does not satisfy g(conj s) = conj g(s)");
    }
  }
  return (sum * -2L / vw).with_digits(table.precision);
}

std::vector<GridPoint> invert_grid(const InversionRequest& request, pade::TableCache* cache) {
  const auto table = table_for(request.beta, request.twoN, request.precision, cache);
  std::vector<GridPoint> out;
  out.reserve(request.v_points.size());
  bool any = false;
  for (const auto& v : request.v_points) {
    GridPoint point{v, std::nullopt, {}};
    try {
      point.value = invert_at(request.g, v, *table);
      any = true;
    } catch (const Error& e) {
      point.error = e.what();
    }
    out.push_back(std::move(point));
  }
  if (!any) {
    throw Error(ErrorKind::AllPointsFailed,
                "all " + std::to_string(out.size()) + " points failed" +
                    (out.empty() ? std::string() : "; first: " + out.front().error));
  }
  return out;
}

BetaEstimate estimate_beta(const std::vector<std::pair<BigReal, BigReal>>& samples) {
  if (samples.size() < 4) throw Error(ErrorKind::InvalidArgument, "need at least 4 samples to estimate beta");
  int digits = mp::kMinDigits;
  for (const auto& [s, g] : samples) digits = std::max({digits, s.digits(), g.digits()});
  std::vector<BigReal> x;
  std::vector<BigReal> y;
  for (const auto& [s, g] : samples) {
    if (!(s > 0L) || g.is_zero()) {
      throw Error(ErrorKind::InvalidArgument, "samples need s > 0 and g(s) != 0");
    }
    x.push_back(mp::log(s.with_digits(digits)));
    y.push_back(mp::log(mp::abs(g.with_digits(digits))));
  }
  const long n = static_cast<long>(x.size());
  BigReal mx(digits);
  BigReal my(digits);
  for (long i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  BigReal sxx(digits);
  BigReal sxy(digits);
  for (long i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx.is_zero()) throw Error(ErrorKind::FitFailure, "samples must span more than one s value");
  const BigReal slope = sxy / sxx;
  const BigReal intercept = my - slope * mx;
  BigReal worst(digits);
  for (long i = 0; i < n; ++i) worst = mp::max(worst, mp::abs(y[i] - intercept - slope * x[i]));
  if (worst > BigReal::from_double(kBetaFitTolerance, digits)) {
    throw Error(ErrorKind::FitFailure, "log-log fit residual " + worst.to_string(5) +
                                           " exceeds " + std::to_string(kBetaFitTolerance) +
                                           "; g is not a pure power law over the sampled window");
  }
  return {-slope, intercept, worst};
}

BetaEstimate estimate_beta(const LaplaceFunction& g, const BigReal& s_min, const BigReal& s_max, int n_samples,
                           int precision) {
  if (n_samples < 4) throw Error(ErrorKind::InvalidArgument, "n_samples must be at least 4");
  if (!(s_min >= 1000L) || !(s_max > s_min)) {
    throw Error(ErrorKind::InvalidArgument, "need s_max > s_min >= 1000");
  }
  const BigReal lo = mp::log(s_min.with_digits(precision));
  const BigReal hi = mp::log(s_max.with_digits(precision));
  std::vector<std::pair<BigReal, BigReal>> samples;
  for (int i = 0; i < n_samples; ++i) {
    const BigReal s = mp::exp(lo + (hi - lo) * static_cast<long>(i) / static_cast<long>(n_samples - 1));
    const BigComplex value = evaluate_node(g, BigComplex(s), precision);
    samples.emplace_back(s, value.re());
  }
  return estimate_beta(samples);
}

}  // namespace lapinv::invlap
