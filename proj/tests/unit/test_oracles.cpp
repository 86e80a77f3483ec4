#include <doctest.h>

#include "lapinv/oracles/dglap.hpp"
#include "lapinv/oracles/finite_part.hpp"
#include "lapinv/oracles/pade.hpp"
#include "lapinv/oracles/random.hpp"
#include "lapinv/oracles/special.hpp"
#include "support/check.hpp"

using namespace lapinv;
using namespace testing;

// Each oracle recomputed at twice the precision must agree to 10^(-p+2).
TEST_CASE("oracles are stable under precision doubling") {
  oracles::Rng rng(2024);
  for (int p : {30, 60}) {
    const double bound = tol(-p + 2);
    for (int i = 0; i < 5; ++i) {
      const double x = oracles::uniform(rng, -6.5, 12.0);
      const BigReal lo = BigReal::from_double(x, p);
      const BigReal hi = BigReal::from_double(x, 2 * p);
      CHECK(rel(oracles::gamma_oracle(lo), oracles::gamma_oracle(hi).with_digits(p)) < bound);

      const BigComplex z = oracles::uniform_disc(rng, 20.0, -20.0, p);
      const BigComplex z2(z.re().with_digits(2 * p), z.im().with_digits(2 * p));
      CHECK(rel(oracles::digamma_oracle(z), oracles::digamma_oracle(z2)) < bound);

      const BigComplex s = oracles::uniform_disc(rng, 20.0, 1.0, p);
      const BigComplex s2(s.re().with_digits(2 * p), s.im().with_digits(2 * p));
      const BigReal t = oracles::uniform_big(rng, -0.05, 0.05, p);
      const auto a = oracles::matrix_exp_oracle(s, t, 4);
      const auto b = oracles::matrix_exp_oracle(s2, t.with_digits(2 * p), 4);
      CHECK(rel(a[1][1], b[1][1]) < bound);
      CHECK(rel(a[0][1], b[0][1]) < bound);
    }
    const BigReal beta = BigReal::from_string("-0.5", p);
    CHECK(rel(oracles::fp_series_oracle(oracles::cos_series(p), beta, BigReal(1L, p)),
              oracles::fp_series_oracle(oracles::cos_series(2 * p), beta.with_digits(2 * p), BigReal(1L, 2 * p))) <
          bound);
  }
}

TEST_CASE("the two digamma oracles agree") {
  oracles::Rng rng(9);
  for (int i = 0; i < 10; ++i) {
    const BigComplex z = oracles::uniform_disc(rng, 15.0, 0.2, 40);
    CHECK(rel(oracles::digamma_oracle(z), oracles::digamma_series_oracle(z)) < tol(-36));
  }
}

TEST_CASE("linear-solve Pade example") {
  const auto p = oracles::pade_by_linear_solve(BigReal(1L, 40), 2);
  REQUIRE(p);
  CHECK(rel(p->numerator[0], BigReal(1L, 40)) < tol(-38));
  CHECK(rel(p->numerator[1], BigReal(1L, 40) / 3L) < tol(-38));
  CHECK(rel(p->denominator[1], BigReal(-2L, 40) / 3L) < tol(-38));
  CHECK(rel(p->denominator[2], BigReal(1L, 40) / 6L) < tol(-38));
}

TEST_CASE("failing comparisons keep a full report") {
  oracles::SuiteResult suite;
  suite.name = "demo";
  suite.record(oracles::compare("ok", "x=1", BigReal(1L, 20), BigReal(1L, 20), 1e-15));
  suite.record(oracles::compare("off", "x=2", BigReal(2L, 20), BigReal::from_string("2.001", 20), 1e-15));
  CHECK(suite.cases == 2);
  CHECK(suite.failed == 1);
  CHECK(!suite.pass());
  REQUIRE(suite.failures.size() == 1);
  const auto json = oracles::to_json(suite);
  CHECK(json["failures"][0]["inputs"] == "x=2");
  CHECK(json["failures"][0]["pass"] == false);
  CHECK(json["failures"][0]["relative_error"].get<double>() > 4e-4);
}
