#include "lapinv/fitpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <json.hpp>

#include "lapinv/error.hpp"

namespace lapinv::fitpoly {

using mp::BigComplex;
using mp::BigReal;
using mp::ExactReal;

namespace {

constexpr int kGammaGuardDigits = 20;
constexpr int kRankDigitsMargin = 10;

// Digits written per value in JSON: enough to reproduce the binary value.
int text_digits(int digits) { return digits + 10; }

// (a)_i = a (a+1) ... (a+i-1)
std::vector<BigReal> pochhammer(const BigReal& a, size_t count) {
  std::vector<BigReal> out;
  BigReal p(1L, a.digits());
  for (size_t i = 0; i < count; ++i) {
    out.push_back(p);
    p *= a + static_cast<long>(i);
  }
  return out;
}

ExactReal beta_from_key(const std::string& key) {
  if (key.starts_with("q:")) {
    try {
      mpq_class q(key.substr(2));
      q.canonicalize();
      return ExactReal(q);
    } catch (const std::invalid_argument&) {
      throw Error(ErrorKind::ParseError, "bad beta key '" + key + "'");
    }
  }
  if (key.starts_with("r:")) return ExactReal(BigReal::deserialize(key.substr(2)));
  throw Error(ErrorKind::ParseError, "bad beta key '" + key + "'");
}

}  // namespace

PowerLawPolynomial::PowerLawPolynomial(ExactReal beta, std::vector<BigReal> coeffs, int precision)
    : beta_(std::move(beta)), coeffs_(std::move(coeffs)), precision_(precision), residual_(precision) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "model needs at least one coefficient");
  if (beta_.sign() <= 0 && beta_.is_integer()) {
    throw Error(ErrorKind::InvalidBeta, "1/Gamma(beta) vanishes at beta=" + beta_.to_string());
  }
  inv_gamma_ = 1L / mp::gamma_real(beta_.at(precision + kGammaGuardDigits));
}

BigReal eval(const PowerLawPolynomial& model, const BigReal& v) {
  if (!(v > 0L)) throw Error(ErrorKind::DomainError, "model is evaluated at v > 0 only");
  const int digits = v.digits();
  const auto& c = model.coeffs();
  BigReal acc(digits);
  for (size_t i = c.size(); i-- > 0;) acc = acc * v + c[i];
  return acc * mp::pow(v, model.beta().at(digits) - 1L) * model.inverse_gamma().with_digits(digits);
}

BigReal derivative(const PowerLawPolynomial& model, int order, const BigReal& v) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "derivative order must be non-negative");
  if (order == 0) return eval(model, v);
  if (!(v > 0L)) throw Error(ErrorKind::DomainError, "model is differentiated at v > 0 only");
  const int digits = v.digits();
  const BigReal e0 = model.beta().at(digits) - 1L;
  const auto& c = model.coeffs();
  // sum_i B_i (e0+i)(e0+i-1)...(e0+i-order+1) v^(i-order), times v^e0.
  BigReal acc(digits);
  const BigReal inv_v = 1L / v;
  BigReal vpow = mp::pow(inv_v, static_cast<long>(order));
  for (size_t i = 0; i < c.size(); ++i) {
    BigReal falling(1L, digits);
    const BigReal e = e0 + static_cast<long>(i);
    for (int j = 0; j < order; ++j) falling *= e - static_cast<long>(j);
    acc += c[i] * falling * vpow;
    vpow *= v;
  }
  return acc * mp::pow(v, e0) * model.inverse_gamma().with_digits(digits);
}

invlap::LaplaceFunction laplace_dual(const PowerLawPolynomial& model) {
  const int digits = model.precision() + kGammaGuardDigits;
  const auto poch = pochhammer(model.beta().at(digits), model.coeffs().size());
  std::vector<BigReal> b;
  for (size_t i = 0; i < poch.size(); ++i) b.push_back(model.coeffs()[i] * poch[i]);
  auto g = invlap::power_series(model.beta(), std::move(b));
  g.name = "power-law-polynomial";
  return g;
}

BigReal max_relative_residual(const PowerLawPolynomial& model,
                              const std::vector<std::pair<BigReal, BigReal>>& samples) {
  const int digits = model.precision();
  const BigReal bm1 = model.beta().at(digits) - 1L;
  // Compare the polynomial factors G v^(1-beta); zero crossings of G then
  // do not blow the measure up.
  BigReal largest(digits);
  BigReal worst(digits);
  for (const auto& [v, g] : samples) {
    const BigReal vw = v.with_digits(digits);
    const BigReal weight = mp::pow(vw, -bm1);
    const BigReal gw = g.with_digits(digits);
    largest = mp::max(largest, mp::abs(gw * weight));
    worst = mp::max(worst, mp::abs((gw - eval(model, vw)) * weight));
  }
  if (largest.is_zero()) return largest;
  return worst / largest;
}

PowerLawPolynomial fit(const std::vector<std::pair<BigReal, BigReal>>& samples, const ExactReal& beta, int degree,
                       int precision, int work_digits) {
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "degree must be non-negative");
  const size_t m = static_cast<size_t>(degree) + 1;
  const size_t n = samples.size();
  if (n < m) {
    throw Error(ErrorKind::InvalidArgument, std::to_string(n) + " samples cannot determine " + std::to_string(m) +
                                                " coefficients");
  }
  if (work_digits <= 0) {
    work_digits = precision;
    for (const auto& [v, g] : samples) work_digits = std::max({work_digits, v.digits(), g.digits()});
    work_digits += 20;
  }
  const int d = work_digits;
  const PowerLawPolynomial unit(beta, {BigReal(1L, precision)}, precision);
  const BigReal gamma = 1L / unit.inverse_gamma().with_digits(d);
  const BigReal bm1 = beta.at(d) - 1L;

  // Rows: t_j^i with t = v / vmax; rhs: G Gamma(beta) v^(1-beta).
  BigReal vmax(d);
  for (const auto& s : samples) {
    if (!(s.first > 0L)) throw Error(ErrorKind::InvalidArgument, "fit samples need v > 0");
    vmax = mp::max(vmax, s.first.with_digits(d));
  }
  std::vector<std::vector<BigReal>> a(n, std::vector<BigReal>(m, BigReal(d)));
  std::vector<BigReal> rhs(n, BigReal(d));
  for (size_t r = 0; r < n; ++r) {
    const BigReal v = samples[r].first.with_digits(d);
    const BigReal t = v / vmax;
    BigReal p(1L, d);
    for (size_t c = 0; c < m; ++c) {
      a[r][c] = p;
      p *= t;
    }
    rhs[r] = samples[r].second.with_digits(d) * gamma / mp::pow(v, bm1);
  }

  // Column equilibration so the rank test compares like with like.
  std::vector<BigReal> col_scale(m, BigReal(d));
  for (size_t c = 0; c < m; ++c) {
    BigReal s(d);
    for (size_t r = 0; r < n; ++r) s += a[r][c] * a[r][c];
    col_scale[c] = mp::sqrt(s);
    for (size_t r = 0; r < n; ++r) a[r][c] /= col_scale[c];
  }

  // Householder QR, applying each reflector to rhs as well.
  std::vector<BigReal> diag(m, BigReal(d));
  for (size_t k = 0; k < m; ++k) {
    BigReal norm2(d);
    for (size_t r = k; r < n; ++r) norm2 += a[r][k] * a[r][k];
    BigReal alpha = mp::sqrt(norm2);
    if (a[k][k].sign() > 0) alpha = -alpha;
    diag[k] = alpha;
    if (alpha.is_zero()) continue;
    const BigReal xk = a[k][k];
    a[k][k] -= alpha;
    const BigReal vnorm2 = norm2 - xk * xk + a[k][k] * a[k][k];
    if (vnorm2.is_zero()) continue;
    for (size_t c = k + 1; c < m; ++c) {
      BigReal dot(d);
      for (size_t r = k; r < n; ++r) dot += a[r][k] * a[r][c];
      const BigReal f = 2L * dot / vnorm2;
      for (size_t r = k; r < n; ++r) a[r][c] -= f * a[r][k];
    }
    BigReal dot(d);
    for (size_t r = k; r < n; ++r) dot += a[r][k] * rhs[r];
    const BigReal f = 2L * dot / vnorm2;
    for (size_t r = k; r < n; ++r) rhs[r] -= f * a[r][k];
  }

  BigReal largest(d);
  for (const auto& x : diag) largest = mp::max(largest, mp::abs(x));
  const BigReal cutoff = largest * mp::ten_to_minus(d - kRankDigitsMargin, d);
  for (size_t k = 0; k < m; ++k) {
    if (!(mp::abs(diag[k]) > cutoff)) {
      throw Error(ErrorKind::RankDeficient, "design matrix has numerical rank " + std::to_string(k) + " < " +
                                                std::to_string(m) + " (duplicated or too few distinct v?)");
    }
  }

  std::vector<BigReal> x(m, BigReal(d));
  for (size_t k = m; k-- > 0;) {
    BigReal s = rhs[k];
    for (size_t c = k + 1; c < m; ++c) s -= a[k][c] * x[c];
    x[k] = s / diag[k];
  }
  std::vector<BigReal> coeffs;
  BigReal vpow(1L, d);
  for (size_t c = 0; c < m; ++c) {
    coeffs.push_back((x[c] / col_scale[c] / vpow).with_digits(precision));
    vpow *= vmax;
  }
  PowerLawPolynomial model(beta, std::move(coeffs), precision);
  model.set_residual(max_relative_residual(model, samples));
  return model;
}

std::vector<BigReal> chebyshev_nodes(const BigReal& a, const BigReal& b, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "need at least one node");
  const int d = std::max(a.digits(), b.digits());
  const BigReal mid = (a + b) / 2L;
  const BigReal half = (b - a) / 2L;
  const BigReal pi = mp::pi(d);
  std::vector<BigReal> out;
  for (int k = n - 1; k >= 0; --k) out.push_back(mid + half * mp::cos(pi * static_cast<long>(2 * k + 1) / (2L * n)));
  return out;
}

std::string to_json(const PowerLawPolynomial& model) {
  nlohmann::json j;
  const int digits = text_digits(model.precision());
  j["beta"] = model.beta().is_exact() ? model.beta().to_string() : model.beta().at(digits).to_string(digits);
  j["beta_key"] = model.beta().key();
  j["precision"] = model.precision();
  j["residual"] = model.residual().to_string(6);
  auto& c = j["coeffs"] = nlohmann::json::array();
  for (const auto& b : model.coeffs()) c.push_back(b.to_string(digits));
  return j.dump(2);
}

PowerLawPolynomial from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const int precision = j.at("precision").get<int>();
    const ExactReal beta = j.contains("beta_key") ? beta_from_key(j["beta_key"].get<std::string>())
                                                  : ExactReal::parse(j.at("beta").get<std::string>());
    std::vector<BigReal> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(BigReal::from_string(c.get<std::string>(), precision));
    PowerLawPolynomial model(beta, std::move(coeffs), precision);
    if (j.contains("residual")) model.set_residual(BigReal::from_string(j["residual"].get<std::string>(), precision));
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("model JSON: ") + e.what());
  }
}

}  // namespace lapinv::fitpoly
