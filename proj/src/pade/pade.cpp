#include "lapinv/pade.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lapinv/error.hpp"

namespace lapinv::pade {

using mp::BigComplex;
using mp::BigReal;
using mp::ExactReal;

namespace {

// The first Aberth stage runs at a precision that grows with the degree
// (the coefficients span ever more orders of magnitude); Newton then lifts
// each root to the full internal precision.
int root_stage_digits(int twoN) { return 40 + 3 * twoN; }

std::string describe(const ExactReal& beta, int twoN) {
  return "beta=" + beta.to_string() + ", twoN=" + std::to_string(twoN);
}

BigReal binomial(int n, int k, int digits) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigReal::from_rational(mpq_class(c), digits);
}

// p(z) and p'(z) together.
void horner_with_derivative(const std::vector<BigReal>& c, const BigComplex& z, BigComplex& p, BigComplex& dp) {
  const int digits = std::max(z.digits(), c.back().digits());
  p = BigComplex(c.back().with_digits(digits));
  dp = BigComplex(digits);
  for (size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + BigComplex(c[i]);
  }
}

BigReal max_abs_component(const BigComplex& z) { return mp::max(mp::abs(z.re()), mp::abs(z.im())); }

// Aberth–Ehrlich on a monic polynomial. `roots` holds the starting values
// and receives the result. Returns false when the budget runs out before
// every correction drops below 10^-tol_digits relative.
bool aberth(const std::vector<BigReal>& monic, std::vector<BigComplex>& roots, int digits, int budget,
            int tol_digits) {
  const size_t n = roots.size();
  const BigReal tol = mp::ten_to_minus(tol_digits, digits);
  BigComplex p(digits);
  BigComplex dp(digits);
  for (int iter = 0; iter < budget; ++iter) {
    bool converged = true;
    for (size_t i = 0; i < n; ++i) {
      horner_with_derivative(monic, roots[i], p, dp);
      if (p.is_zero()) continue;
      if (dp.is_zero()) {
        converged = false;
        roots[i] += BigComplex(mp::ten_to_minus(digits / 4, digits), mp::ten_to_minus(digits / 4, digits));
        continue;
      }
      const BigComplex ratio = p / dp;
      BigComplex repulsion(digits);
      for (size_t j = 0; j < n; ++j) {
        if (j != i) repulsion += mp::inverse(roots[i] - roots[j]);
      }
      const BigComplex step = ratio / (1L - ratio * repulsion);
      roots[i] -= step;
      if (max_abs_component(step) > tol * mp::max(max_abs_component(roots[i]), BigReal(1L, digits))) {
        converged = false;
      }
    }
    if (converged) return true;
  }
  return false;
}

// Newton refinement of one simple root at the polynomial's precision. Stops
// at convergence or once the steps stall at the rounding floor; whether the
// root is good enough is judged afterwards by its residual.
bool newton_polish(const std::vector<BigReal>& coeffs, BigComplex& z) {
  const int digits = coeffs.front().digits();
  z = z.with_digits(digits);
  const BigReal tol = mp::ten_to_minus(digits - 10, digits);
  BigComplex p(digits);
  BigComplex dp(digits);
  BigReal previous(digits);
  for (int iter = 0; iter < 60; ++iter) {
    horner_with_derivative(coeffs, z, p, dp);
    if (p.is_zero()) return true;
    if (dp.is_zero()) return false;
    const BigComplex step = p / dp;
    const BigReal size = max_abs_component(step);
    if (iter > 2 && size * 2L > previous) return true;
    z -= step;
    if (size <= tol * max_abs_component(z)) return true;
    previous = size;
  }
  return false;
}

bool roots_distinct(const std::vector<BigComplex>& roots) {
  for (size_t i = 0; i < roots.size(); ++i) {
    for (size_t j = i + 1; j < roots.size(); ++j) {
      const double scale = std::max(1.0, mp::abs(roots[i]).to_double());
      if (mp::abs(roots[i] - roots[j]).to_double() < 1e-8 * scale) return false;
    }
  }
  return true;
}

// |den(a)| <= 10^(-precision+5) |leading| max(1,|a|)^2N
bool root_accepted(const std::vector<BigReal>& den, const BigComplex& a, int precision) {
  const int digits = a.digits();
  const BigReal value = mp::abs(horner(den, a));
  const BigReal scale = mp::pow(mp::max(BigReal(1L, digits), mp::abs(a)), static_cast<long>(den.size() - 1));
  return value <= mp::ten_to_minus(precision - 5, digits) * mp::abs(den.back()) * scale;
}

}  // namespace

void validate_arguments(const ExactReal& beta, int twoN, int precision) {
  if (twoN < 2 || twoN % 2 != 0) {
    throw Error(ErrorKind::InvalidOrder, "twoN must be even and at least 2, got " + std::to_string(twoN));
  }
  if (beta.sign() <= 0 && beta.is_integer()) {
    throw Error(ErrorKind::InvalidBeta,
                "beta=" + beta.to_string() +
                    " is a non-positive integer; the inverse transform is a Dirac delta or one of its derivatives");
  }
  if (precision < kMinTablePrecision) {
    throw Error(ErrorKind::InvalidArgument,
                "precision must be at least " + std::to_string(kMinTablePrecision) + " digits");
  }
}

PadeRational build_pade(const ExactReal& beta, int twoN, int precision) {
  validate_arguments(beta, twoN, precision);
  const int digits = internal_digits(precision) + kCoefficientGuardDigits;
  const BigReal b = beta.at(digits);

  // c_j = (-1)^j C(2N,j) Gamma(2N+j+beta-1), with the Gammas by recurrence.
  std::vector<BigReal> c;
  c.reserve(static_cast<size_t>(twoN) + 1);
  BigReal g = mp::gamma_real(b + static_cast<long>(twoN - 1));
  for (int j = 0; j <= twoN; ++j) {
    BigReal cj = binomial(twoN, j, digits) * g;
    if (j % 2 != 0) cj = -cj;
    c.push_back(std::move(cj));
    g *= b + static_cast<long>(twoN - 1 + j);
  }

  // 1/Gamma(beta+k), k < 2N
  std::vector<BigReal> inv_gamma;
  inv_gamma.reserve(static_cast<size_t>(twoN));
  BigReal ig = 1L / mp::gamma_real(b);
  for (int k = 0; k < twoN; ++k) {
    inv_gamma.push_back(ig);
    ig /= b + static_cast<long>(k);
  }

  PadeRational out;
  out.beta = beta;
  out.twoN = twoN;
  out.precision = precision;
  out.denominator.assign(static_cast<size_t>(twoN) + 1, BigReal(digits));
  out.numerator.assign(static_cast<size_t>(twoN), BigReal(digits));
  for (int m = 0; m <= twoN; ++m) out.denominator[m] = c[twoN - m];
  // z^(2N-j) S_{j-1}(z) contributes c_j / Gamma(beta+k) to z^(2N-j+k), k <= j-1.
  for (int m = 0; m < twoN; ++m) {
    for (int j = twoN - m; j <= twoN; ++j) out.numerator[m] += c[j] * inv_gamma[m - twoN + j];
  }
  const BigReal norm = out.denominator[0];
  for (auto& x : out.denominator) x /= norm;
  for (auto& x : out.numerator) x /= norm;
  return out;
}

std::vector<BigReal> maclaurin_coefficients(const PadeRational& pade, int count) {
  std::vector<BigReal> q;
  q.reserve(static_cast<size_t>(count));
  for (int m = 0; m < count; ++m) {
    BigReal qm = m < static_cast<int>(pade.numerator.size()) ? pade.numerator[m] : BigReal(pade.digits());
    const int top = std::min(m, pade.twoN);
    for (int i = 1; i <= top; ++i) qm -= pade.denominator[i] * q[m - i];
    q.push_back(std::move(qm));
  }
  return q;
}

BigComplex horner(const std::vector<BigReal>& coeffs, const BigComplex& z) {
  const int digits = std::max(z.digits(), coeffs.back().digits());
  BigComplex p(coeffs.back().with_digits(digits));
  for (size_t i = coeffs.size() - 1; i-- > 0;) p = p * z + BigComplex(coeffs[i]);
  return p;
}

std::vector<BigComplex> find_poles(const PadeRational& pade) {
  const int n = pade.twoN;
  const int digits = internal_digits(pade.precision);
  if (pade.denominator.back().is_zero() || !pade.denominator.back().is_finite()) {
    throw Error(ErrorKind::RootFindingFailure, "denominator leading coefficient vanishes");
  }
  std::vector<BigReal> den;
  for (const auto& x : pade.denominator) den.push_back(x.with_digits(digits));

  const int stage = std::min(root_stage_digits(n), digits);
  std::vector<BigReal> monic;
  for (const auto& x : pade.denominator) monic.push_back((x / pade.denominator.back()).with_digits(stage));

  // Starting values on the circle |z| = |c0/c2N|^(1/2N), rotated off the axes.
  const double radius = std::pow(std::abs(monic.front().to_double()), 1.0 / n);
  std::vector<BigComplex> roots;
  const BigReal r = BigReal::from_double(radius, stage);
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    roots.emplace_back(r * BigReal::from_double(std::cos(angle), stage),
                       r * BigReal::from_double(std::sin(angle), stage));
  }
  const int budget = 200 * n;
  if (!aberth(monic, roots, stage, budget, stage / 2)) {
    throw Error(ErrorKind::RootFindingFailure,
                "Aberth iteration did not converge within " + std::to_string(budget) + " sweeps for " +
                    describe(pade.beta, n));
  }

  bool polished = true;
  for (auto& z : roots) polished = newton_polish(den, z) && polished;
  if (!polished || !roots_distinct(roots)) {
    // Fall back to running the simultaneous iteration at full precision.
    std::vector<BigReal> monic_full;
    for (const auto& x : den) monic_full.push_back(x / den.back());
    for (auto& z : roots) z = z.with_digits(digits);
    if (!aberth(monic_full, roots, digits, budget, digits - 10) || !roots_distinct(roots)) {
      throw Error(ErrorKind::RootFindingFailure, "root polishing failed for " + describe(pade.beta, n));
    }
  }
  for (const auto& z : roots) {
    if (!root_accepted(den, z, pade.precision)) {
      throw Error(ErrorKind::RootFindingFailure,
                  "residual of root " + z.to_string(20) + " too large for " + describe(pade.beta, n));
    }
  }

  for (const auto& z : roots) {
    if (z.re().sign() <= 0) {
      throw Error(ErrorKind::LeftHalfPlanePole,
                  "root " + z.to_string(20) + " has Re <= 0 for " + describe(pade.beta, n));
    }
  }

  // Conjugate pairing.
  std::vector<BigComplex> upper;
  std::vector<BigComplex> lower;
  for (const auto& z : roots) (z.im().sign() > 0 ? upper : lower).push_back(z);
  if (upper.size() != lower.size()) {
    throw Error(ErrorKind::RootFindingFailure, "roots do not split into conjugate pairs for " + describe(pade.beta, n));
  }
  const BigReal pair_tol = mp::ten_to_minus(pade.precision / 2, digits);
  std::vector<BigComplex> reps;
  std::vector<bool> used(lower.size(), false);
  for (const auto& u : upper) {
    size_t best = lower.size();
    BigReal best_dist(digits);
    for (size_t j = 0; j < lower.size(); ++j) {
      if (used[j]) continue;
      BigReal dist = mp::abs(u - mp::conj(lower[j]));
      if (best == lower.size() || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best == lower.size() || best_dist > pair_tol * mp::max(BigReal(1L, digits), mp::abs(u))) {
      throw Error(ErrorKind::RootFindingFailure,
                  "root " + u.to_string(20) + " has no conjugate partner for " + describe(pade.beta, n));
    }
    used[best] = true;
    reps.push_back((u + mp::conj(lower[best])) / 2L);
  }
  std::sort(reps.begin(), reps.end(), [](const BigComplex& a, const BigComplex& b) {
    const int c = mp::abs(a.im()) < mp::abs(b.im()) ? -1 : (mp::abs(b.im()) < mp::abs(a.im()) ? 1 : 0);
    if (c != 0) return c < 0;
    return a.re() < b.re();
  });
  std::vector<BigComplex> out;
  for (const auto& a : reps) {
    out.push_back(a);
    out.push_back(mp::conj(a));
  }
  return out;
}

std::vector<BigReal> canonical_residuals(const ExactReal& beta, int twoN, const std::vector<BigComplex>& poles,
                                         const std::vector<BigComplex>& weights) {
  const int digits = poles.front().digits();
  const BigReal b = beta.at(digits);
  std::vector<BigComplex> terms;
  std::vector<BigComplex> inv;
  for (size_t j = 0; j < poles.size(); ++j) {
    terms.push_back(weights[j] * mp::pow(poles[j], -b));
    inv.push_back(mp::inverse(poles[j]));
  }
  std::vector<BigReal> out;
  BigReal gamma = mp::gamma_real(b);
  for (int k = 0; k < 2 * twoN; ++k) {
    BigReal sum(digits);
    for (size_t j = 0; j < terms.size(); ++j) {
      sum += terms[j].re();
      terms[j] *= inv[j];
    }
    out.push_back(mp::abs(gamma * sum * 2L + 1L));
    gamma *= b + static_cast<long>(k);
  }
  return out;
}

PoleWeightTable compute_weights(const PadeRational& pade, const std::vector<BigComplex>& poles) {
  const int digits = internal_digits(pade.precision);
  const BigReal bm1 = pade.beta.at(pade.digits()) - 1L;
  std::vector<BigReal> dden;
  for (size_t i = 1; i < pade.denominator.size(); ++i) {
    dden.push_back(pade.denominator[i] * static_cast<long>(i));
  }

  PoleWeightTable table;
  table.beta = pade.beta;
  table.twoN = pade.twoN;
  table.precision = pade.precision;
  for (const auto& a : poles) {
    if (a.im().sign() <= 0) continue;
    const BigComplex wide = a.with_digits(pade.digits());
    const BigComplex w = mp::pow(wide, bm1) * horner(pade.numerator, wide) / horner(dden, wide);
    table.poles.push_back(a.with_digits(digits));
    table.weights.push_back(w.with_digits(digits));
  }
  if (static_cast<int>(table.poles.size()) * 2 != pade.twoN) {
    throw Error(ErrorKind::RootFindingFailure, "expected " + std::to_string(pade.twoN / 2) +
                                                   " upper-half-plane poles, got " +
                                                   std::to_string(table.poles.size()));
  }

  const auto residuals = canonical_residuals(pade.beta, pade.twoN, table.poles, table.weights);
  const auto worst = std::max_element(residuals.begin(), residuals.end());
  table.canonical_residual = *worst;
  const BigReal bound = mp::ten_to_minus(pade.precision - 10, digits);
  if (*worst > bound) {
    throw Error(ErrorKind::CanonicalCheckFailure,
                "canonical equation k=" + std::to_string(worst - residuals.begin()) + " has residual " +
                    worst->to_string(6) + " > " + bound.to_string(3) + " for " + describe(pade.beta, pade.twoN) +
                    " at precision " + std::to_string(pade.precision));
  }
  return table;
}

void check_pole_geometry(const PoleWeightTable& table) {
  if (static_cast<int>(table.poles.size()) * 2 != table.twoN || table.weights.size() != table.poles.size()) {
    throw Error(ErrorKind::RootFindingFailure, "table has the wrong number of poles or weights");
  }
  for (const auto& a : table.poles) {
    if (a.re().sign() <= 0) throw Error(ErrorKind::LeftHalfPlanePole, "pole " + a.to_string(20) + " has Re <= 0");
    if (a.im().sign() <= 0) {
      throw Error(ErrorKind::RootFindingFailure, "stored pole " + a.to_string(20) + " is not in the upper half plane");
    }
  }
}

PoleWeightTable build_table(const ExactReal& beta, int twoN, int precision) {
  const PadeRational pade = build_pade(beta, twoN, precision);
  return compute_weights(pade, find_poles(pade));
}

}  // namespace lapinv::pade
