#include <cmath>
#include <cstdio>

#include "lapinv/dglap.hpp"
#include "lapinv/error.hpp"
#include "lapinv/hadamard.hpp"
#include "lapinv/invlap.hpp"
#include "lapinv/oracles/dglap.hpp"
#include "lapinv/oracles/finite_part.hpp"
#include "lapinv/oracles/pade.hpp"
#include "lapinv/oracles/random.hpp"
#include "lapinv/oracles/special.hpp"
#include "lapinv/oracles/suites.hpp"

namespace lapinv::oracles {

using mp::BigComplex;
using mp::BigReal;
using mp::ExactReal;

namespace {

double tol(int digits, int slack) { return std::pow(10.0, -digits + slack); }

std::string key(const std::string& beta, int twoN) { return "beta=" + beta + " twoN=" + std::to_string(twoN); }

OracleReport absolute(std::string name, std::string inputs, const BigReal& value, double bound) {
  OracleReport r;
  r.name = std::move(name);
  r.inputs = std::move(inputs);
  r.oracle_value = "0";
  r.tested_value = value.to_string(6);
  r.relative_error = mp::abs(value).to_double();
  r.tolerance = bound;
  r.pass = r.relative_error <= bound;
  return r;
}

// Beta drawn on a 4-decimal grid, away from the non-positive integers.
std::string random_beta(Rng& rng) {
  for (;;) {
    const double b = uniform(rng, -2.5, 3.0);
    if (b <= 0 && std::abs(b - std::round(b)) < 0.05) continue;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", b);
    return buf;
  }
}

hadamard::SmoothIntegrand cosine() {
  return {[](const BigReal& w) { return mp::cos(w); },
          [](int order, int digits) {
            switch (order % 4) {
              case 0: return BigReal(1L, digits);
              case 2: return BigReal(-1L, digits);
              default: return BigReal(digits);
            }
          },
          1 << 20};
}

}  // namespace

SuiteResult canonical_suite(const std::vector<std::string>& betas, const std::vector<int>& twoNs, int precision,
                            pade::TableCache* cache) {
  SuiteResult suite;
  suite.name = "canonical equations @" + std::to_string(precision);
  const double bound = tol(precision, 10);
  for (const auto& b : betas) {
    for (int twoN : twoNs) {
      try {
        const auto table = invlap::table_for(ExactReal::parse(b), twoN, precision, cache);
        const int d = table->digits();
        const BigReal beta = table->beta.at(d);
        BigReal worst(d);
        int worst_k = 0;
        for (int k = 0; k < 2 * twoN; ++k) {
          const BigReal e = -(beta + static_cast<long>(k));
          BigReal sum(d);
          for (size_t j = 0; j < table->poles.size(); ++j) sum += (table->weights[j] * mp::pow(table->poles[j], e)).re();
          const BigReal r = mp::abs(gamma_oracle(-e) * sum * 2L + 1L);
          if (r > worst) {
            worst = r;
            worst_k = k;
          }
        }
        suite.record(absolute(suite.name, key(b, twoN) + " worst k=" + std::to_string(worst_k), worst, bound));
      } catch (const Error& e) {
        suite.record_exception(key(b, twoN), e.what());
      }
    }
  }
  return suite;
}

SuiteResult pole_geometry_suite(const std::vector<std::string>& betas, const std::vector<int>& twoNs, int precision,
                                pade::TableCache* cache) {
  SuiteResult suite;
  suite.name = "pole geometry @" + std::to_string(precision);
  const double bound = tol(precision, 5);
  for (const auto& b : betas) {
    for (int twoN : twoNs) {
      const std::string in = key(b, twoN);
      try {
        const auto roots = pade::find_poles(pade::build_pade(ExactReal::parse(b), twoN, precision));
        bool ok = static_cast<int>(roots.size()) == twoN;
        BigReal pairing(roots.front().digits());
        for (size_t i = 0; ok && i + 1 < roots.size(); i += 2) {
          ok = roots[i].re() > 0L && roots[i + 1].re() > 0L;
          pairing = mp::max(pairing, mp::abs(roots[i + 1] - mp::conj(roots[i])) / mp::abs(roots[i]));
        }
        const auto table = invlap::table_for(ExactReal::parse(b), twoN, precision, cache);
        for (const auto& a : table->poles) ok = ok && a.re() > 0L && a.im() > 0L;
        OracleReport r = absolute(suite.name, in, pairing, bound);
        if (!ok) {
          r.pass = false;
          r.tested_value = "pole with Re <= 0 or missing upper representative";
        }
        suite.record(std::move(r));
      } catch (const Error& e) {
        suite.record_exception(in, e.what());
      }
    }
  }
  return suite;
}

SuiteResult pade_linear_solve_suite(int precision) {
  SuiteResult suite;
  suite.name = "pade vs linear solve @" + std::to_string(precision);
  const double bound = tol(precision, 10);
  const std::pair<const char*, int> cases[] = {{"1", 2}, {"1", 4}, {"0.5", 4}, {"-0.4", 6}, {"1.7", 8}};
  for (const auto& [b, twoN] : cases) {
    try {
      const auto p = pade::build_pade(ExactReal::parse(b), twoN, precision);
      std::string why;
      const auto o = pade_by_linear_solve(ExactReal::parse(b).at(p.digits() * 3 / 2), twoN, &why);
      if (!o) {
        suite.record_exception(key(b, twoN), "oracle system singular: " + why);
        continue;
      }
      for (int i = 0; i <= twoN; ++i) {
        suite.record(compare(suite.name, key(b, twoN) + " den " + std::to_string(i), o->denominator[i],
                             p.denominator[i], bound));
      }
      for (int i = 0; i < twoN; ++i) {
        suite.record(compare(suite.name, key(b, twoN) + " num " + std::to_string(i), o->numerator[i],
                             p.numerator[i], bound));
      }
    } catch (const Error& e) {
      suite.record_exception(key(b, twoN), e.what());
    }
  }
  return suite;
}

SuiteResult exactness_suite(int draws, int points, int twoN, int precision, double tolerance, std::uint64_t seed,
                            pade::TableCache* cache) {
  SuiteResult suite;
  suite.name = "exactness class twoN=" + std::to_string(twoN) + " @" + std::to_string(precision);
  Rng rng(seed);
  for (int i = 0; i < draws; ++i) {
    const std::string b = random_beta(rng);
    const int degree = uniform_int(rng, 0, 2 * twoN - 1);
    const int d = pade::internal_digits(precision);
    std::vector<BigReal> coeffs;
    for (int k = 0; k <= degree; ++k) coeffs.push_back(uniform_big(rng, -1.0, 1.0, d));
    const ExactReal beta = ExactReal::parse(b);
    try {
      const auto table = invlap::table_for(beta, twoN, precision, cache);
      const auto g = invlap::power_series(beta, coeffs);
      for (int j = 0; j < points; ++j) {
        const BigReal v = uniform_big(rng, 0.05, 20.0, precision);
        // sum b_k v^(beta+k-1) / Gamma(beta+k), Gamma from MPFR.
        const int od = d + 20;
        const BigReal bo = beta.at(od);
        BigReal want(od);
        for (int k = 0; k <= degree; ++k) {
          const BigReal e = bo + static_cast<long>(k);
          want += coeffs[k].with_digits(od) * mp::pow(v.with_digits(od), e - 1L) / gamma_oracle(e);
        }
        const BigReal got = invlap::invert_at(g, v, *table);
        const std::string in = "beta=" + b + " degree=" + std::to_string(degree) + " v=" + v.to_string(12);
        suite.record(compare(suite.name, in, want.with_digits(precision), got, tolerance));
      }
    } catch (const Error& e) {
      suite.record_exception("beta=" + b, e.what());
    }
  }
  return suite;
}

SuiteResult finite_part_suite(int quad_digits, int draws, double cos_tolerance, double poly_tolerance,
                              std::uint64_t seed) {
  SuiteResult suite;
  suite.name = "finite part @" + std::to_string(quad_digits);
  const int od = quad_digits * 3 / 2 + 10;
  const BigReal half = BigReal::from_string("-0.5", od);
  try {
    const BigReal one = hadamard::fp_integral(hadamard::constant_integrand(BigReal(1L, od)), half.with_digits(quad_digits),
                                              BigReal(1L, quad_digits), quad_digits);
    suite.record(compare(suite.name, "f=1 beta=-1/2 v=1", BigReal(-2L, quad_digits), one, tol(quad_digits, 2)));
    const BigReal c = hadamard::fp_integral(cosine(), half.with_digits(quad_digits), BigReal(1L, quad_digits),
                                            quad_digits);
    suite.record(compare(suite.name, "f=cos beta=-1/2 v=1",
                         fp_series_oracle(cos_series(od), half, BigReal(1L, od)).with_digits(quad_digits), c,
                         cos_tolerance));
  } catch (const Error& e) {
    suite.record_exception("reference integrands", e.what());
  }
  Rng rng(seed);
  for (int i = 0; i < draws; ++i) {
    double b = 0;
    do b = uniform(rng, -4.0, 1.5);
    while (std::abs(b - std::round(b)) < 0.05);
    const BigReal beta = BigReal::from_double(b, od);
    const BigReal v = uniform_big(rng, 0.2, 3.0, od);
    std::vector<BigReal> c;
    for (int m = 0; m <= uniform_int(rng, 0, 6); ++m) c.push_back(uniform_big(rng, -1.0, 1.0, od));
    const std::string in = "beta=" + beta.to_string(17) + " degree=" + std::to_string(c.size() - 1);
    try {
      const BigReal got = hadamard::fp_integral(hadamard::polynomial_integrand(c), beta.with_digits(quad_digits),
                                                v.with_digits(quad_digits), quad_digits);
      const BigReal want = fp_series_oracle(c, beta, v);
      OracleReport r = compare(suite.name, in, want.with_digits(quad_digits), got, poly_tolerance);
      // Absolute bound once the value itself is small.
      r.relative_error = mp::abs(got - want).to_double() / std::max(1.0, mp::abs(want).to_double());
      r.pass = r.relative_error <= poly_tolerance;
      suite.record(std::move(r));
    } catch (const Error& e) {
      suite.record_exception(in, e.what());
    }
  }
  return suite;
}

SuiteResult gluon_row_suite(int precision, int draws, std::uint64_t seed) {
  SuiteResult suite;
  suite.name = "gluon row vs matrix exponential @" + std::to_string(precision);
  const double bound = tol(precision, 12);
  const int od = precision * 3 / 2;
  Rng rng(seed);
  for (int i = 0; i <= draws; ++i) {
    // First case is s = 5, tau = -0.0332005; the rest are random.
    const BigComplex s = i == 0 ? BigComplex(BigReal(5L, precision)) : uniform_disc(rng, 40.0, 0.5, precision);
    const BigReal tau = i == 0 ? BigReal::from_string("-0.0332005", precision) : uniform_big(rng, -0.06, 0.06, precision);
    const std::string in = "s=" + s.to_string(12) + " tau=" + tau.to_string(12);
    try {
      const BigComplex so(s.re().with_digits(od), s.im().with_digits(od));
      const auto m = matrix_exp_oracle(so, tau.with_digits(od), 4);
      suite.record(compare(suite.name, in + " k_gf", m[1][0],
                           dglap::kernel_laplace(dglap::KernelKind::GF, s, tau, 4), bound));
      suite.record(compare(suite.name, in + " k_gg", m[1][1],
                           dglap::kernel_laplace(dglap::KernelKind::GG, s, tau, 4), bound));
    } catch (const Error& e) {
      suite.record_exception(in, e.what());
    }
  }
  return suite;
}

}  // namespace lapinv::oracles
