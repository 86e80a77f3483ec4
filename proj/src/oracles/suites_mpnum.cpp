#include <cmath>
#include <functional>
#include <string>

#include "lapinv/error.hpp"
#include "lapinv/oracles/random.hpp"
#include "lapinv/oracles/suites.hpp"

namespace lapinv::oracles {

using mp::BigComplex;
using mp::BigReal;

namespace {

double tol(int digits, int slack) { return std::pow(10.0, -digits + slack); }

std::string show(const BigComplex& z) { return z.to_string(20); }

struct ComplexFn {
  const char* name;
  std::function<BigComplex(const BigComplex&, const BigReal&)> fn;
};

std::vector<ComplexFn> suite_functions() {
  return {
      {"exp", [](const BigComplex& z, const BigReal&) { return mp::exp(z); }},
      {"log", [](const BigComplex& z, const BigReal&) { return mp::log(z); }},
      {"sqrt", [](const BigComplex& z, const BigReal&) { return mp::sqrt(z); }},
      {"cosh", [](const BigComplex& z, const BigReal&) { return mp::cosh(z); }},
      {"sinh", [](const BigComplex& z, const BigReal&) { return mp::sinh(z); }},
      {"pow", [](const BigComplex& z, const BigReal& a) { return mp::pow(z, a); }},
      {"powi", [](const BigComplex& z, const BigReal& a) { return mp::pow(z, a.to_long_round()); }},
      {"digamma", [](const BigComplex& z, const BigReal&) { return mp::digamma_complex(z); }},
  };
}

}  // namespace

SuiteResult gamma_recurrence_suite(int digits, int draws, std::uint64_t seed) {
  SuiteResult suite;
  suite.name = "gamma recurrence @" + std::to_string(digits);
  Rng rng(seed);
  const double t = tol(digits, 3);
  for (int i = 0; i < draws; ++i) {
    const BigReal x = uniform_big(rng, 0.0, 10.0, digits);
    if (x.is_zero()) continue;
    try {
      const BigReal lhs = mp::gamma_real(x + 1L);
      const BigReal rhs = x * mp::gamma_real(x);
      suite.record(compare(suite.name, "x=" + x.to_string(20), lhs, rhs, t));
    } catch (const Error& e) {
      suite.record_exception("x=" + x.to_string(20), e.what());
    }
  }
  return suite;
}

SuiteResult digamma_recurrence_suite(int digits, int draws, std::uint64_t seed) {
  SuiteResult suite;
  suite.name = "digamma recurrence @" + std::to_string(digits);
  Rng rng(seed);
  const double t = tol(digits, 3);
  for (int i = 0; i < draws; ++i) {
    const BigComplex z = uniform_disc(rng, 10.0, 0.0, digits);
    try {
      const BigComplex diff = mp::digamma_complex(z + 1L) - mp::digamma_complex(z);
      const BigComplex expect = mp::inverse(z);
      // Absolute bound, scaled up only when 1/z itself is large.
      const double scale = std::max(1.0, mp::abs(expect).to_double());
      OracleReport r = compare(suite.name, "z=" + show(z), expect, diff, t);
      r.relative_error = mp::abs(diff - expect).to_double() / scale;
      r.pass = r.relative_error <= t;
      suite.record(std::move(r));
    } catch (const Error& e) {
      suite.record_exception("z=" + show(z), e.what());
    }
  }
  return suite;
}

SuiteResult schwarz_reflection_suite(int digits, int draws, std::uint64_t seed) {
  SuiteResult suite;
  suite.name = "Schwarz reflection @" + std::to_string(digits);
  Rng rng(seed);
  const double t = tol(digits, 3);
  const auto fns = suite_functions();
  for (int i = 0; i < draws; ++i) {
    const BigComplex z = uniform_disc(rng, 10.0, -10.0, digits);
    const BigReal a = uniform_big(rng, -3.0, 3.0, digits);
    for (const auto& f : fns) {
      const std::string inputs = std::string(f.name) + " z=" + show(z) + " a=" + a.to_string(12);
      try {
        const BigComplex lhs = mp::conj(f.fn(z, a));
        const BigComplex rhs = f.fn(mp::conj(z), a);
        suite.record(compare(suite.name, inputs, lhs, rhs, t));
      } catch (const Error& e) {
        suite.record_exception(inputs, e.what());
      }
    }
  }
  return suite;
}

SuiteResult precision_monotonicity_suite(int digits, int draws, std::uint64_t seed) {
  SuiteResult suite;
  suite.name = "precision doubling @" + std::to_string(digits);
  Rng rng(seed);
  const double t = tol(digits, 2);
  const auto fns = suite_functions();
  for (int i = 0; i < draws; ++i) {
    const BigComplex z = uniform_disc(rng, 10.0, -10.0, digits);
    const BigReal a = uniform_big(rng, -3.0, 3.0, digits);
    for (const auto& f : fns) {
      const std::string inputs = std::string(f.name) + " z=" + show(z) + " a=" + a.to_string(12);
      try {
        const BigComplex lo = f.fn(z, a);
        const BigComplex hi = f.fn(z.with_digits(2 * digits), a.with_digits(2 * digits));
        suite.record(compare(suite.name, inputs, hi, lo.with_digits(2 * digits), t));
      } catch (const Error& e) {
        suite.record_exception(inputs, e.what());
      }
    }
    const BigReal x = uniform_big(rng, -5.0, 10.0, digits);
    const std::string inputs = "gamma x=" + x.to_string(20);
    try {
      const BigReal lo = mp::gamma_real(x);
      const BigReal hi = mp::gamma_real(x.with_digits(2 * digits));
      suite.record(compare(suite.name, inputs, hi, lo.with_digits(2 * digits), t));
    } catch (const Error& e) {
      suite.record_exception(inputs, e.what());
    }
  }
  return suite;
}

SuiteResult field_axioms_suite(int digits, int draws, std::uint64_t seed) {
  SuiteResult suite;
  suite.name = "field axioms @" + std::to_string(digits);
  Rng rng(seed);
  const double t = tol(digits, 0);
  for (int i = 0; i < draws; ++i) {
    const BigComplex a = uniform_disc(rng, 100.0, -100.0, digits);
    BigComplex b = uniform_disc(rng, 100.0, -100.0, digits);
    if (b.is_zero()) continue;
    const std::string inputs = "a=" + show(a) + " b=" + show(b);
    suite.record(compare(suite.name, "(a*b)/b " + inputs, a, (a * b) / b, t));
    OracleReport add = compare(suite.name, "(a+b)-b " + inputs, a, (a + b) - b, t);
    add.relative_error = mp::abs(((a + b) - b) - a).to_double() /
                         std::max(mp::abs(a).to_double(), mp::abs(b).to_double());
    add.pass = add.relative_error <= t;
    suite.record(std::move(add));
    suite.record(compare(suite.name, "conj(conj a) " + inputs, a, mp::conj(mp::conj(a)), 0.0));
  }
  return suite;
}

}  // namespace lapinv::oracles
