#include "lapinv/dglap.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include "lapinv/error.hpp"
#include "lapinv/hadamard.hpp"

namespace lapinv::dglap {

using fitpoly::PowerLawPolynomial;
using mp::BigComplex;
using mp::BigReal;
using mp::ExactReal;

namespace {

// Below this |tau R / 2|, sinh(x)/x comes from its series.
constexpr double kSinhcSeriesRadius = 1e-8;
// Extra digits carried by beta when it is handed to the finite-part code.
constexpr int kBetaDigits = 100;

const BigReal& lambda_for(int n_f, const DglapConfig& cfg) {
  auto it = cfg.lambda.find(n_f);
  if (it == cfg.lambda.end()) {
    throw Error(ErrorKind::InvalidArgument, "no Lambda configured for n_f=" + std::to_string(n_f));
  }
  return it->second;
}

// ln(Q^2 / Lambda^2), refusing scales at or below the Landau pole.
BigReal log_over_lambda(const BigReal& Q2, const BigReal& lambda) {
  if (!(Q2 > 0L)) throw Error(ErrorKind::InvalidArgument, "Q^2 must be positive");
  const BigReal l = mp::log(Q2 / (lambda * lambda));
  if (!(l > 0L)) {
    throw Error(ErrorKind::BelowLandauPole, "Q^2=" + Q2.to_string(10) + " GeV^2 is not above Lambda^2=" +
                                                (lambda * lambda).to_string(10) + " GeV^2");
  }
  return l;
}

// sinh(x)/x
BigComplex sinhc(const BigComplex& x) {
  const int d = x.digits();
  if (mp::abs(x).to_double() >= kSinhcSeriesRadius) return mp::sinh(x) / x;
  const BigComplex x2 = x * x;
  const BigReal eps = mp::ten_to_minus(d + 2, d);
  BigComplex term(BigReal(1L, d));
  BigComplex sum = term;
  for (long k = 1; k < 100; ++k) {
    term = term * x2 / ((2 * k) * (2 * k + 1));
    sum += term;
    if (mp::abs(term) <= eps) break;
  }
  return sum;
}

BigReal binomial(int n, int k, int digits) {
  BigReal out(1L, digits);
  for (int i = 1; i <= k; ++i) {
    out *= static_cast<long>(n - k + i);
    out /= static_cast<long>(i);
  }
  return out;
}

BigReal factorial(int n, int digits) {
  BigReal out(1L, digits);
  for (int i = 2; i <= n; ++i) out *= static_cast<long>(i);
  return out;
}

// f(w) = P(w)/Gamma(beta_P) * H(v - w), where `power` supplies P (its
// power-law factor is left to the finite-part integral) and `other` is H.
hadamard::SmoothIntegrand product_integrand(std::shared_ptr<const PowerLawPolynomial> power,
                                            std::shared_ptr<const PowerLawPolynomial> other, const BigReal& v) {
  struct Derivatives {
    int digits = 0;
    std::vector<BigReal> values;  // H^(n)(v)
  };
  auto cache = std::make_shared<Derivatives>();
  auto eval = [power, other, v](const BigReal& w) {
    const int d = w.digits();
    const auto& c = power->coeffs();
    BigReal acc(d);
    for (size_t i = c.size(); i-- > 0;) acc = acc * w + c[i];
    return acc * power->inverse_gamma().with_digits(d) * fitpoly::eval(*other, v.with_digits(d) - w);
  };
  auto taylor = [power, other, v, cache](int order, int digits) {
    if (cache->digits != digits) {
      cache->digits = digits;
      cache->values.clear();
    }
    while (static_cast<int>(cache->values.size()) <= order) {
      const int n = static_cast<int>(cache->values.size());
      cache->values.push_back(fitpoly::derivative(*other, n, v.with_digits(digits)));
    }
    const auto& c = power->coeffs();
    BigReal sum(digits);
    for (int j = 0; j <= std::min(order, static_cast<int>(c.size()) - 1); ++j) {
      BigReal term = binomial(order, j, digits) * factorial(j, digits) * c[static_cast<size_t>(j)] *
                     cache->values[static_cast<size_t>(order - j)];
      if ((order - j) % 2 == 1) term = -term;
      sum += term;
    }
    return sum * power->inverse_gamma().with_digits(digits);
  };
  return {eval, taylor, 1 << 20};
}

}  // namespace

int active_flavors(const BigReal& Q2, const DglapConfig& cfg) {
  if (!cfg.mc2 || !cfg.mb2) return cfg.n_f;
  if (Q2 < *cfg.mc2) return 3;
  if (Q2 < *cfg.mb2) return 4;
  return 5;
}

BigReal alpha_s(const BigReal& Q2, const DglapConfig& cfg) {
  const int n_f = active_flavors(Q2, cfg);
  const BigReal l = log_over_lambda(Q2, lambda_for(n_f, cfg).with_digits(Q2.digits()));
  return 12L * mp::pi(Q2.digits()) / (l * static_cast<long>(33 - 2 * n_f));
}

BigReal tau(const BigReal& Q2, const BigReal& Q02, const DglapConfig& cfg) {
  if (cfg.tau_override) return *cfg.tau_override;
  const int d = std::max(Q2.digits(), Q02.digits());
  const bool forward = Q2 >= Q02;
  const BigReal lo = (forward ? Q02 : Q2).with_digits(d);
  const BigReal hi = (forward ? Q2 : Q02).with_digits(d);
  std::vector<BigReal> cuts{lo};
  if (cfg.mc2 && cfg.mb2) {
    for (const BigReal* t : {&*cfg.mc2, &*cfg.mb2}) {
      if (*t > lo && *t < hi) cuts.push_back(t->with_digits(d));
    }
  }
  cuts.push_back(hi);
  BigReal sum(d);
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    // flavors of the open band (a, b), taken at its geometric midpoint
    const int n_f = active_flavors(mp::sqrt(cuts[i] * cuts[i + 1]), cfg);
    const BigReal lambda = lambda_for(n_f, cfg).with_digits(d);
    sum += mp::log(log_over_lambda(cuts[i + 1], lambda) / log_over_lambda(cuts[i], lambda)) * 3L /
           static_cast<long>(33 - 2 * n_f);
  }
  return forward ? sum : -sum;
}

std::map<int, BigReal> continuous_lambdas(const BigReal& lambda3, const BigReal& mc2, const BigReal& mb2) {
  // (33 - 2 n_f) ln(M^2 / Lambda_{n_f}^2) is the same on both sides of M^2.
  const BigReal l3 = mp::log(mc2 / (lambda3 * lambda3));
  const BigReal lambda4 = mp::sqrt(mc2 / mp::exp(l3 * 27L / 25L));
  const BigReal l4 = mp::log(mb2 / (lambda4 * lambda4));
  const BigReal lambda5 = mp::sqrt(mb2 / mp::exp(l4 * 25L / 23L));
  return {{3, lambda3}, {4, lambda4}, {5, lambda5}};
}

CoefficientFunctions coeff_functions(const BigComplex& s, int n_f) {
  const int d = s.digits();
  if (s.im().is_zero() && s.re().is_integer() && s.re() <= 0L) {
    throw Error(ErrorKind::CoefficientPole, "coefficient functions are singular at s=" + s.re().to_string(10));
  }
  const BigComplex r0 = mp::inverse(s);
  const BigComplex r1 = mp::inverse(s + 1L);
  const BigComplex r2 = mp::inverse(s + 2L);
  const BigComplex r3 = mp::inverse(s + 3L);
  const BigComplex psi = mp::digamma_complex(s + 1L) + mp::euler_gamma(d);
  CoefficientFunctions c;
  c.phi_f = 4L - (r1 + r2 + 2L * psi) * BigReal(8L, d) / 3L;
  c.theta_f = (r1 - 2L * r2 + 2L * r3) * static_cast<long>(2 * n_f);
  c.phi_g = BigComplex(BigReal(static_cast<long>(33 - 2 * n_f), d) / 3L) + (r0 - 2L * r1 + r2 - r3 - psi) * 12L;
  c.theta_g = (2L * r0 - 2L * r1 + r2) * BigReal(8L, d) / 3L;
  return c;
}

std::string kernel_name(KernelKind kind) { return kind == KernelKind::GG ? "gg" : "gf"; }

BigComplex kernel_laplace(KernelKind kind, const BigComplex& s, const BigReal& tau, int n_f) {
  const int d = s.digits();
  const BigReal t = tau.with_digits(d);
  const CoefficientFunctions c = coeff_functions(s, n_f);
  const BigComplex diff = c.phi_f - c.phi_g;
  const BigComplex r = mp::sqrt(diff * diff + 4L * c.theta_f * c.theta_g);
  const BigComplex x = r * t / 2L;
  const BigComplex e = mp::exp((c.phi_f + c.phi_g) * t / 2L);
  // sinh(x)/R = (tau/2) sinhc(x), so the R -> 0 limit is regular.
  const BigComplex shc = sinhc(x);
  if (kind == KernelKind::GG) return e * (mp::cosh(x) - shc * diff * t / 2L);
  return e * shc * c.theta_g * t;
}

invlap::LaplaceFunction kernel_function(KernelKind kind, const ExactReal& tau, int n_f) {
  return {[kind, tau, n_f](const BigComplex& s, int digits) {
            return kernel_laplace(kind, s.with_digits(digits), tau.at(digits), n_f);
          },
          invlap::FunctionKind::ClosedForm, "k_" + kernel_name(kind) + "(tau=" + tau.to_string() + ")"};
}

ExactReal kernel_beta(KernelKind kind, const ExactReal& tau) {
  if (kind == KernelKind::GG) return ExactReal::integer(12) * tau;
  // k_gf ~ Theta_g (s^(-16 tau/3) - s^(-12 tau)) / R for large s; the slower
  // of the two powers sets the class.
  const ExactReal quark = ExactReal::integer(16) * tau / ExactReal::integer(3);
  const ExactReal gluon = ExactReal::integer(12) * tau;
  return ExactReal::integer(1) + (tau.sign() < 0 ? gluon : quark);
}

PowerLawPolynomial build_kernel_model(KernelKind kind, const ExactReal& tau, int n_f, const KernelFitOptions& o) {
  const ExactReal beta = o.beta ? *o.beta : kernel_beta(kind, tau);
  const auto table = invlap::table_for(beta, o.twoN, o.precision, o.cache);
  const auto g = kernel_function(kind, tau, n_f);
  const int n = o.nodes > 0 ? o.nodes : 2 * (o.degree + 1) + 10;
  const auto nodes = fitpoly::chebyshev_nodes(BigReal::from_double(o.v_min, o.precision),
                                              BigReal::from_double(o.v_max, o.precision), n);
  std::vector<std::pair<BigReal, BigReal>> samples;
  for (const auto& v : nodes) samples.emplace_back(v, invlap::invert_at(g, v, *table));
  PowerLawPolynomial model = fitpoly::fit(samples, beta, o.degree, o.precision);
  const double bound = kind == KernelKind::GG ? o.max_residual : o.gf_max_residual;
  if (model.residual().to_double() > bound) {
    throw Error(ErrorKind::FitResidualTooLarge,
                "K_" + kernel_name(kind) + " fit at tau=" + tau.to_string() + " has relative residual " +
                    model.residual().to_string(3) + " > " + std::to_string(bound));
  }
  return model;
}

BigReal convolve(const PowerLawPolynomial& kernel, const PowerLawPolynomial& dist, const BigReal& v,
                 int quad_digits) {
  if (!(v > 0L)) throw Error(ErrorKind::InvalidArgument, "convolution needs v > 0");
  auto k = std::make_shared<const PowerLawPolynomial>(kernel);
  auto h = std::make_shared<const PowerLawPolynomial>(dist);
  const BigReal half = v / 2L;
  const int bd = quad_digits + kBetaDigits;
  // [0, v/2] in w: kernel singular at 0; [v/2, v] as u = v - w: dist singular at 0.
  const BigReal near = hadamard::fp_integral(product_integrand(k, h, v), kernel.beta().at(bd), half, quad_digits);
  const BigReal far = hadamard::fp_integral(product_integrand(h, k, v), dist.beta().at(bd), half, quad_digits);
  return near + far;
}

EvolutionResult evolve_gluon(const EvolutionProblem& problem, const std::vector<BigReal>& v_points) {
  EvolutionResult out;
  const bool identity = problem.tau.sign() == 0;
  if (!identity) {
    out.k_gg = build_kernel_model(KernelKind::GG, problem.tau, problem.n_f, problem.kernel);
    out.k_gf = build_kernel_model(KernelKind::GF, problem.tau, problem.n_f, problem.kernel);
  }
  for (const auto& v : v_points) {
    EvolutionPoint p{v, std::nullopt, {}};
    try {
      if (identity) {
        p.value = fitpoly::eval(problem.g0_model, v);
      } else {
        p.value = convolve(*out.k_gg, problem.g0_model, v, problem.quad_digits) +
                  convolve(*out.k_gf, problem.fs0_model, v, problem.quad_digits);
      }
    } catch (const Error& e) {
      p.error = e.what();
    }
    out.points.push_back(std::move(p));
  }
  return out;
}

BigReal v_of_x(const BigReal& x) {
  if (!(x > 0L) || !(x <= 1L)) throw Error(ErrorKind::DomainError, "x must lie in (0, 1]");
  return -mp::log(x);
}

std::vector<XPoint> to_x_space(const std::vector<EvolutionPoint>& points) {
  std::vector<XPoint> out;
  for (const auto& p : points) {
    if (p.value) out.push_back({mp::exp(-p.v), p.v, *p.value});
  }
  return out;
}

std::vector<std::pair<BigReal, BigReal>> read_grid(const std::filesystem::path& path, int precision) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open grid file " + path.string());
  std::vector<std::pair<BigReal, BigReal>> rows;
  std::string line;
  int lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::string xs;
    std::string gs;
    std::string extra;
    fields >> xs >> gs;
    const bool header_allowed = first;
    first = false;
    try {
      if (gs.empty() || (fields >> extra)) throw Error(ErrorKind::ParseError, "expected two columns");
      BigReal x = BigReal::from_string(xs, precision);
      BigReal g = BigReal::from_string(gs, precision);
      if (!(x > 0L) || !(x < 1L)) throw Error(ErrorKind::ParseError, "x=" + xs + " outside (0, 1)");
      rows.emplace_back(std::move(x), std::move(g));
    } catch (const Error& e) {
      if (header_allowed && e.kind() == ErrorKind::ParseError) continue;  // header row
      throw Error(ErrorKind::ParseError, path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (rows.size() < 2) throw Error(ErrorKind::ParseError, path.string() + ": need at least two data rows");
  const bool ascending = rows[1].first > rows[0].first;
  for (size_t i = 1; i < rows.size(); ++i) {
    if (ascending ? !(rows[i].first > rows[i - 1].first) : !(rows[i].first < rows[i - 1].first)) {
      throw Error(ErrorKind::NonMonotoneGrid,
                  path.string() + ": x is not strictly monotone at row " + std::to_string(i + 1));
    }
  }
  return rows;
}

PowerLawPolynomial ingest_grid(const std::filesystem::path& path, int precision, int degree, double max_residual) {
  std::vector<std::pair<BigReal, BigReal>> samples;
  for (auto& [x, g] : read_grid(path, precision)) samples.emplace_back(v_of_x(x), g);
  PowerLawPolynomial model = fitpoly::fit(samples, ExactReal::integer(1), degree, precision);
  if (model.residual().to_double() > max_residual) {
    throw Error(ErrorKind::FitResidualTooLarge, "grid fit residual " + model.residual().to_string(3) + " > " +
                                                    std::to_string(max_residual));
  }
  return model;
}

}  // namespace lapinv::dglap
