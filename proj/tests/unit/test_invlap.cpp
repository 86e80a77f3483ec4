#include <doctest.h>

#include "lapinv/error.hpp"
#include "lapinv/invlap.hpp"
#include "lapinv/oracles/random.hpp"
#include "lapinv/oracles/special.hpp"
#include "support/check.hpp"

using namespace lapinv;
using namespace testing;
using mp::ExactReal;

namespace {

ExactReal B(const char* text) { return ExactReal::parse(text); }

pade::TableCache& cache() {
  static pade::TableCache c;  // memory-only
  return c;
}

}  // namespace

TEST_CASE("invert_at: 1/s gives 1") {
  for (int twoN : {2, 6, 10}) {
    const auto table = invlap::table_for(B("1"), twoN, 40, &cache());
    const BigReal g = invlap::invert_at(invlap::power_law(B("1")), R("3.7", 40), *table);
    CHECK(rel(g, BigReal(1L, 40)) < tol(-35));
  }
}

TEST_CASE("invert_at: s^-3/2 with beta 1/2 gives 1/Gamma(3/2)") {
  const auto table = invlap::table_for(B("0.5"), 10, 40, &cache());
  const BigReal g = invlap::invert_at(invlap::power_law(B("1.5")), BigReal(1L, 40), *table);
  const BigReal expect = 2L / mp::sqrt(mp::pi(40));
  CHECK(rel(g, expect) < tol(-30));
  CHECK(g.to_string(15) == "1.12837916709551");
}

TEST_CASE("invert_at: delta surrogate at v=1") {
  const auto table = invlap::table_for(B("0.000001"), 20, 100, &cache());
  const BigReal g = invlap::invert_at(invlap::power_law(B("0.000001")), BigReal(1L, 100), *table);
  // 1/Gamma(eps) = eps / Gamma(1+eps), via the independent gamma oracle at 40 digits.
  const BigReal eps = R("0.000001", 40);
  const BigReal expect = eps / oracles::gamma_oracle(eps + 1L);
  CHECK(rel(g.with_digits(40), expect) < tol(-25));
  CHECK(g.to_string(8) == "0.0000010000006");
}

TEST_CASE("exactness class: random power series") {
  oracles::Rng rng(2024);
  const int precision = 40;
  const int twoN = 6;
  for (int c = 0; c < 12; ++c) {
    double beta_d;
    do {
      beta_d = oracles::uniform(rng, -2.0, 2.0);
    } while (beta_d <= 0 && std::abs(beta_d - std::round(beta_d)) < 1e-3);
    const ExactReal beta(BigReal::from_double(beta_d, precision));
    const int degree = oracles::uniform_int(rng, 0, 2 * twoN - 1);
    std::vector<BigReal> b;
    for (int k = 0; k <= degree; ++k) b.push_back(oracles::uniform_big(rng, -1.0, 1.0, precision));
    const auto table = invlap::table_for(beta, twoN, precision, &cache());
    const auto g = invlap::power_series(beta, b);
    for (int i = 0; i < 3; ++i) {
      const BigReal v = oracles::uniform_big(rng, 0.1, 10.0, precision);
      const BigReal got = invlap::invert_at(g, v, *table);
      const BigReal want = invlap::power_series_original(beta, b, v.with_digits(precision + 20));
      CHECK_MESSAGE(rel(got, want.with_digits(precision)) < tol(-precision + 15), "beta=", beta_d, " d=", degree);
    }
  }
}

TEST_CASE("linearity and scaling") {
  const int precision = 40;
  const ExactReal beta = B("0.3");
  const auto table = invlap::table_for(beta, 8, precision, &cache());
  const auto g1 = invlap::power_series(beta, {R("1", precision), R("-0.5", precision)});
  const auto g2 = invlap::power_series(beta, {R("0", precision), R("0", precision), R("2", precision)});
  const BigReal a = R("1.25", precision);
  const BigReal b = R("-3", precision);
  const auto combo = invlap::linear_combination(a, g1, b, g2);
  const BigReal v = R("2.5", precision);
  const BigReal lhs = invlap::invert_at(combo, v, *table);
  const BigReal rhs = a * invlap::invert_at(g1, v, *table) + b * invlap::invert_at(g2, v, *table);
  CHECK(rel(lhs, rhs) < tol(-precision + 5));

  // g(s/c) inverts to c G(c v).
  const BigReal c = R("1.75", precision);
  const std::vector<BigReal> coeffs{R("1", precision), R("-0.5", precision)};
  const BigReal scaled = invlap::invert_at(invlap::rescaled(g1, c), v, *table);
  const BigReal expect = c * invlap::power_series_original(beta, coeffs, c * v);
  CHECK(rel(scaled, expect) < tol(-precision + 15));
}

TEST_CASE("full pole sum is real for real originals") {
  const auto table = invlap::table_for(B("-0.398406"), 10, 40, &cache());
  const auto g = invlap::power_law(B("-0.398406"));
  CHECK(invlap::full_sum_imaginary(g, R("0.7", 40), *table).to_double() < tol(-35));
  CHECK_NOTHROW(invlap::invert_at(g, R("0.7", 40), *table, true));
  // A transform that breaks Schwarz reflection is caught in debug mode.
  invlap::LaplaceFunction skew{[](const BigComplex& s, int digits) {
                                 return mp::inverse(s.with_digits(digits)) * BigComplex(BigReal(1L, digits), BigReal(1L, digits));
                               },
                               invlap::FunctionKind::Composed, "skew"};
  CHECK(kind_of([&] { invlap::invert_at(skew, R("0.7", 40), *table, true); }) == ErrorKind::EvaluatorFailure);
}

TEST_CASE("built-in transforms satisfy Schwarz reflection") {
  oracles::Rng rng(77);
  const auto forms = {invlap::power_law(B("0.3")), invlap::power_law(B("-1.6")),
                      invlap::power_series(B("1.7"), {R("1", 40), R("0.25", 40), R("-2", 40)})};
  for (const auto& g : forms) {
    for (int i = 0; i < 10; ++i) {
      const BigComplex s = oracles::uniform_disc(rng, 20.0, 0.01, 40);
      CHECK(rel(g(mp::conj(s), 40), mp::conj(g(s, 40))) < tol(-37));
    }
  }
}

TEST_CASE("invert_grid") {
  invlap::InversionRequest req{invlap::power_law(B("1")), B("1"), 4, 30,
                               {R("0.5", 30), R("1", 30), R("7", 30)}};
  const auto out = invlap::invert_grid(req, &cache());
  REQUIRE(out.size() == 3);
  const auto table = invlap::table_for(B("1"), 4, 30, &cache());
  for (const auto& p : out) {
    REQUIRE(p.value.has_value());
    CHECK(rel(*p.value, BigReal(1L, 30)) < tol(-25));
    CHECK(mpfr_equal_p(p.value->raw(), invlap::invert_at(req.g, p.v, *table).raw()));
  }
  // One bad point is reported in place; all bad points fail the batch.
  req.v_points = {R("1", 30), BigReal(30), R("-1", 30)};
  const auto partial = invlap::invert_grid(req, &cache());
  CHECK(partial[0].value.has_value());
  CHECK_FALSE(partial[1].value.has_value());
  CHECK_FALSE(partial[1].error.empty());
  req.v_points = {BigReal(30)};
  CHECK(kind_of([&] { invlap::invert_grid(req, &cache()); }) == ErrorKind::AllPointsFailed);
}

TEST_CASE("beta validation") {
  CHECK(kind_of([] { invlap::validate_beta(B("-2")); }) == ErrorKind::InvalidBeta);
  CHECK(kind_of([] { invlap::validate_beta(B("-1.0005")); }) == ErrorKind::InvalidBeta);
  CHECK(kind_of([] { invlap::validate_beta(B("0")); }) == ErrorKind::InvalidBeta);
  CHECK_NOTHROW(invlap::validate_beta(B("0.000001")));
  CHECK_NOTHROW(invlap::validate_beta(B("-1.6")));
  CHECK_NOTHROW(invlap::validate_beta(B("-0.998")));
}

TEST_CASE("estimate_beta") {
  SUBCASE("1/s") {
    const auto est = invlap::estimate_beta(invlap::power_law(B("1")), R("1e3", 40), R("1e6", 40), 8, 40);
    CHECK(mp::abs(est.beta - 1L).to_double() < 1e-20);
  }
  SUBCASE("shifted power law with a 1/s correction") {
    const int d = 40;
    const BigReal c = R("0.7", d);
    invlap::LaplaceFunction g{[c](const BigComplex& s, int digits) {
                                const BigComplex sw = s.with_digits(digits);
                                return mp::pow(sw, R("0.398406", digits)) * mp::exp(c.with_digits(digits)) *
                                       (1L + BigComplex(R("0.3", digits)) / sw);
                              },
                              invlap::FunctionKind::ClosedForm, "synthetic"};
    const auto est = invlap::estimate_beta(g, R("1e8", d), R("1e12", d), 12, d);
    CHECK(mp::abs(est.beta - R("-0.398406", d)).to_double() < 1e-6);
  }
  SUBCASE("non power law is refused") {
    invlap::LaplaceFunction g{[](const BigComplex& s, int digits) {
                                return mp::exp(mp::inverse(s.with_digits(digits)) * 1000000L) / s;
                              },
                              invlap::FunctionKind::ClosedForm, "bent"};
    CHECK(kind_of([&] { invlap::estimate_beta(g, R("1e3", 30), R("1e7", 30), 10, 30); }) == ErrorKind::FitFailure);
  }
  CHECK(kind_of([] { invlap::estimate_beta(invlap::power_law(B("1")), R("10", 30), R("1e6", 30), 8, 30); }) ==
        ErrorKind::InvalidArgument);
}
