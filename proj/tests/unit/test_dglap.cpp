#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include <doctest.h>

#include "lapinv/dglap.hpp"
#include "lapinv/oracles/dglap.hpp"
#include "lapinv/oracles/random.hpp"
#include "lapinv/oracles/round_trip.hpp"
#include "lapinv/oracles/special.hpp"
#include "support/check.hpp"

using namespace lapinv;
using namespace testing;
using dglap::KernelKind;
using fitpoly::PowerLawPolynomial;
using mp::ExactReal;

namespace {

constexpr int P = 40;

dglap::DglapConfig fixed_config(const char* lambda) {
  dglap::DglapConfig cfg;
  cfg.n_f = 4;
  cfg.lambda[4] = R(lambda, P);
  return cfg;
}

dglap::DglapConfig banded_config() {
  dglap::DglapConfig cfg;
  cfg.mc2 = R("2.0", P);
  cfg.mb2 = R("20.0", P);
  cfg.lambda = dglap::continuous_lambdas(R("0.35", P), *cfg.mc2, *cfg.mb2);
  return cfg;
}

// (1/4pi) int alpha_s d ln Q^2 in doubles, composite Simpson in ln Q^2.
double tau_by_quadrature(const dglap::DglapConfig& cfg, double q2, double q02) {
  const int n = 20000;
  const double a = std::log(q02);
  const double b = std::log(q2);
  const double h = (b - a) / n;
  double acc = 0;
  for (int i = 0; i <= n; ++i) {
    const double w = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
    const double t = std::exp(a + i * h);
    const double as = dglap::alpha_s(BigReal::from_double(t, P), cfg).to_double();
    acc += w * as;
  }
  return acc * h / 3 / (4 * std::numbers::pi);
}

PowerLawPolynomial model(std::vector<const char*> c, const char* beta = "1") {
  std::vector<BigReal> coeffs;
  for (const char* x : c) coeffs.push_back(R(x, P));
  return {ExactReal::parse(beta), std::move(coeffs), P};
}

// sum_ij b_i d_j Gamma(a+i) Gamma(c+j) / (Gamma(a) Gamma(c) Gamma(a+c+i+j)) v^(a+c+i+j-1):
// the convolution of two power-law polynomials, termwise by the Beta integral.
BigReal convolution_oracle(const PowerLawPolynomial& k, const PowerLawPolynomial& h, const BigReal& v) {
  const int d = v.digits() + 20;
  const BigReal a = k.beta().at(d);
  const BigReal c = h.beta().at(d);
  const BigReal norm = oracles::gamma_oracle(a) * oracles::gamma_oracle(c);
  BigReal acc(d);
  for (size_t i = 0; i < k.coeffs().size(); ++i) {
    for (size_t j = 0; j < h.coeffs().size(); ++j) {
      const BigReal ai = a + static_cast<long>(i);
      const BigReal cj = c + static_cast<long>(j);
      acc += k.coeffs()[i].with_digits(d) * h.coeffs()[j].with_digits(d) * oracles::gamma_oracle(ai) *
             oracles::gamma_oracle(cj) / oracles::gamma_oracle(ai + cj) * mp::pow(v.with_digits(d), ai + cj - 1L);
    }
  }
  return (acc / norm).with_digits(v.digits());
}

std::filesystem::path write_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("lapinv_test_" + name);
  std::ofstream(path) << text;
  return path;
}

const PowerLawPolynomial& gg_model_negative() {
  static const PowerLawPolynomial m =
      dglap::build_kernel_model(KernelKind::GG, ExactReal::parse("-0.0332005"), 4, dglap::KernelFitOptions{});
  return m;
}

}  // namespace

TEST_CASE("alpha_s examples") {
  const auto cfg = fixed_config("0.3");
  const BigReal l2 = R("0.3", P) * R("0.3", P);
  const BigReal q2 = l2 * mp::exp(BigReal(1L, P));
  CHECK(rel(dglap::alpha_s(q2, cfg), mp::pi(P) * 12L / 25L) < tol(-35));
  CHECK(dglap::alpha_s(q2, cfg).to_string(7) == "1.507964");

  BigReal prev = dglap::alpha_s(R("1", P), cfg);
  for (double q : {1.5, 2.0, 5.0, 10.0, 100.0, 1e4}) {
    const BigReal next = dglap::alpha_s(BigReal::from_double(q, P), cfg);
    CHECK(next < prev);
    prev = next;
  }
  CHECK(kind_of([&] { dglap::alpha_s(l2, cfg); }) == ErrorKind::BelowLandauPole);
  CHECK(kind_of([&] { dglap::alpha_s(R("0.01", P), cfg); }) == ErrorKind::BelowLandauPole);
}

TEST_CASE("alpha_s is continuous across flavor thresholds") {
  const auto cfg = banded_config();
  const BigReal eps = mp::ten_to_minus(25, P);
  for (const BigReal& m2 : {*cfg.mc2, *cfg.mb2}) {
    const BigReal below = dglap::alpha_s(m2 - eps, cfg);
    const BigReal above = dglap::alpha_s(m2 + eps, cfg);
    CHECK(dglap::active_flavors(m2 - eps, cfg) + 1 == dglap::active_flavors(m2 + eps, cfg));
    CHECK(rel(below, above) < tol(-12));
  }
  CHECK(dglap::active_flavors(R("1.0", P), cfg) == 3);
  CHECK(dglap::active_flavors(R("5.0", P), cfg) == 4);
  CHECK(dglap::active_flavors(R("50.0", P), cfg) == 5);
}

TEST_CASE("tau against direct quadrature of alpha_s") {
  const auto fixed = fixed_config("0.3");
  const BigReal q02 = R("5", P);
  CHECK(dglap::tau(q02, q02, fixed).is_zero());
  for (double q2 : {1.69, 3.0, 10.0, 100.0}) {
    const BigReal t = dglap::tau(BigReal::from_double(q2, P), q02, fixed);
    CHECK(std::abs(t.to_double() - tau_by_quadrature(fixed, q2, 5.0)) < 1e-12);
    CHECK((t < 0L) == (q2 < 5.0));
    const BigReal back = dglap::tau(q02, BigReal::from_double(q2, P), fixed);
    CHECK(rel(-back, t) < tol(-35));
  }

  const auto banded = banded_config();
  for (auto [q2, q02] : {std::pair{1.2, 50.0}, {3.0, 1.5}, {40.0, 10.0}}) {
    const BigReal t = dglap::tau(BigReal::from_double(q2, P), BigReal::from_double(q02, P), banded);
    CHECK(std::abs(t.to_double() - tau_by_quadrature(banded, q2, q02)) < 1e-11);
    const BigReal mid = BigReal::from_double(7.0, P);
    const BigReal split = dglap::tau(BigReal::from_double(q2, P), mid, banded) +
                          dglap::tau(mid, BigReal::from_double(q02, P), banded);
    CHECK(rel(split, t) < tol(-30));
  }

  auto over = fixed;
  over.tau_override = R("-0.0332005", P);
  CHECK(dglap::tau(R("1.69", P), q02, over) == *over.tau_override);
}

TEST_CASE("coefficient function examples") {
  const BigComplex one(BigReal(1L, P));
  for (int n_f : {3, 4, 5}) {
    const auto c = dglap::coeff_functions(one, n_f);
    CHECK(rel(c.theta_f, BigComplex(BigReal(2L * n_f, P) / 3L)) < tol(-35));
    CHECK(rel(c.phi_f, BigComplex(BigReal(-32L, P) / 9L)) < tol(-35));
  }
  const auto big = dglap::coeff_functions(BigComplex(R("1e8", P)), 4);
  CHECK(mp::abs(big.theta_g).to_double() <= 1e-7);
  for (const char* s : {"0", "-1", "-2", "-3", "-7"}) {
    CHECK(kind_of([&] { dglap::coeff_functions(BigComplex(R(s, P)), 4); }) == ErrorKind::CoefficientPole);
  }
}

TEST_CASE("coefficient functions match the oracle matrix") {
  oracles::Rng rng(11);
  for (int i = 0; i < 10; ++i) {
    const BigComplex s = oracles::uniform_disc(rng, 30.0, 0.5, P);
    const auto c = dglap::coeff_functions(s, 4);
    const auto m = oracles::singlet_matrix(s, 4);
    CHECK(rel(c.phi_f, m[0][0]) < tol(-P + 8));
    CHECK(rel(c.theta_f, m[0][1]) < tol(-P + 8));
    CHECK(rel(c.theta_g, m[1][0]) < tol(-P + 8));
    CHECK(rel(c.phi_g, m[1][1]) < tol(-P + 8));
  }
}

TEST_CASE("kernels at tau = 0 and the R sign") {
  oracles::Rng rng(5);
  for (int i = 0; i < 10; ++i) {
    const BigComplex s = oracles::uniform_disc(rng, 50.0, 0.2, P);
    const BigComplex gg = dglap::kernel_laplace(KernelKind::GG, s, BigReal(P), 4);
    const BigComplex gf = dglap::kernel_laplace(KernelKind::GF, s, BigReal(P), 4);
    CHECK(rel(gg, BigComplex(BigReal(1L, P))) < tol(-P + 2));
    CHECK(mp::abs(gf).to_double() < tol(-P + 2));
  }

  // cosh and sinh(x)/x are even, so either square root of R^2 gives the same kernel.
  const BigReal tau = R("-0.0332005", P);
  for (double x : {0.7, 3.0, 12.0}) {
    const BigComplex s(BigReal::from_double(x, P), BigReal::from_double(x / 3, P));
    const auto c = dglap::coeff_functions(s, 4);
    const BigComplex d = c.phi_f - c.phi_g;
    const BigComplex r = mp::sqrt(d * d + c.theta_f * c.theta_g * 4L);
    const BigComplex e = mp::exp((c.phi_f + c.phi_g) * tau / 2L);
    for (const BigComplex& root : {r, -r}) {
      const BigComplex h = root * tau / 2L;
      const BigComplex gg = e * (mp::cosh(h) - mp::sinh(h) / root * d);
      CHECK(rel(dglap::kernel_laplace(KernelKind::GG, s, tau, 4), gg) < tol(-P + 5));
    }
  }
}

TEST_CASE("gluon row matches the matrix exponential") {
  const BigComplex s(BigReal(5L, P));
  const BigReal tau = R("-0.0332005", P);
  const auto m = oracles::matrix_exp_oracle(s, tau.with_digits(P * 3 / 2), 4);
  CHECK(rel(dglap::kernel_laplace(KernelKind::GF, s, tau, 4), m[1][0]) < tol(-P + 12));
  CHECK(rel(dglap::kernel_laplace(KernelKind::GG, s, tau, 4), m[1][1]) < tol(-P + 12));

  const auto id = oracles::matrix_exp_oracle(s, BigReal(P), 4);
  CHECK(rel(id[0][0], BigComplex(BigReal(1L, P))) < tol(-P + 2));
  CHECK(mp::abs(id[0][1]).to_double() < tol(-P + 2));
}

TEST_CASE("group property in Laplace space") {
  oracles::Rng rng(42);
  for (int i = 0; i < 12; ++i) {
    const BigComplex s(oracles::uniform_big(rng, 2.0, 20.0, P));
    const BigReal t1 = oracles::uniform_big(rng, -0.02, 0.02, P);
    const BigReal t2 = oracles::uniform_big(rng, -0.02, 0.02, P);
    const auto a = oracles::matrix_exp_oracle(s, t1, 4);
    const auto b = oracles::matrix_exp_oracle(s, t2, 4);
    const BigComplex gf = a[1][0] * b[0][0] + a[1][1] * b[1][0];
    const BigComplex gg = a[1][0] * b[0][1] + a[1][1] * b[1][1];
    CHECK(rel(dglap::kernel_laplace(KernelKind::GG, s, t1 + t2, 4), gg) < tol(-P + 10));
    CHECK(rel(dglap::kernel_laplace(KernelKind::GF, s, t1 + t2, 4), gf) < tol(-P + 10));
  }
}

TEST_CASE("k_gg approaches its power law monotonically") {
  const BigReal tau = R("-0.0332005", P);
  const BigReal lead = mp::exp(-tau * 25L / 3L);
  double prev = 1e9;
  for (const char* s : {"1e2", "1e4", "1e6", "1e8"}) {
    const BigReal x = R(s, P);
    const BigComplex k = dglap::kernel_laplace(KernelKind::GG, BigComplex(x), tau, 4);
    const double dev = mp::abs(k.re() * mp::pow(x, tau * 12L) * lead - 1L).to_double();
    CHECK(dev < prev);
    prev = dev;
  }
}

TEST_CASE("kernel classes") {
  CHECK(dglap::kernel_beta(KernelKind::GG, ExactReal::parse("-0.0332005")) == ExactReal::parse("-0.398406"));
  CHECK(dglap::kernel_beta(KernelKind::GG, ExactReal::parse("0.0332005")) == ExactReal::parse("0.398406"));
  CHECK(dglap::kernel_beta(KernelKind::GF, ExactReal::parse("0")) == ExactReal::integer(1));
  CHECK(dglap::kernel_beta(KernelKind::GF, ExactReal::parse("-0.01")) == ExactReal::parse("0.88"));
  CHECK(dglap::kernel_beta(KernelKind::GF, ExactReal::parse("0.03")) == ExactReal::parse("1.16"));
}

TEST_CASE("GG kernel model for devolution") {
  const auto& m = gg_model_negative();
  CHECK(m.beta() == ExactReal::parse("-0.398406"));
  CHECK(m.coeffs().size() == 33);
  CHECK(m.residual().to_double() <= 1e-6);

  const BigReal tau = R("-0.0332005", 60);
  auto F = [&](const BigComplex& s) { return oracles::matrix_exp_oracle(s, tau.with_digits(s.digits()), 4)[1][1]; };
  for (const char* v : {"0.05", "1"}) {
    const BigReal truth = oracles::talbot_oracle(F, R(v, 60), 40);
    CHECK(rel(fitpoly::eval(m, R(v, P)), truth.with_digits(P)) < 1e-6);
  }
}

TEST_CASE("GG kernel model for forward evolution is integrable") {
  const auto m =
      dglap::build_kernel_model(KernelKind::GG, ExactReal::parse("0.0332005"), 4, dglap::KernelFitOptions{});
  CHECK(m.beta() == ExactReal::parse("0.398406"));
  CHECK(m.residual().to_double() <= 1e-6);
  const auto one = model({"1"});
  for (const char* v : {"0.5", "2", "9"}) {
    const BigReal got = dglap::convolve(m, one, R(v, P), 20);
    CHECK(got.is_finite());
    CHECK(rel(got, convolution_oracle(m, one, R(v, P))) < tol(-16));
  }
}

TEST_CASE("GF kernel model vanishes as tau goes to zero") {
  const auto m = dglap::build_kernel_model(KernelKind::GF, ExactReal::parse("1e-10"), 4, dglap::KernelFitOptions{});
  for (const auto& c : m.coeffs()) CHECK(mp::abs(c).to_double() <= 1e-8);
  CHECK(m.residual().to_double() <= 1e-2);
}

TEST_CASE("convolution against the Beta-integral oracle") {
  oracles::Rng rng(7);
  const char* betas[] = {"-0.398406", "-1.3", "0.4", "1", "2.5"};
  for (const char* kb : betas) {
    for (int draw = 0; draw < 2; ++draw) {
      std::vector<BigReal> kc;
      std::vector<BigReal> hc;
      for (int i = 0; i <= oracles::uniform_int(rng, 0, 6); ++i) kc.push_back(oracles::uniform_big(rng, -1, 1, P));
      for (int i = 0; i <= oracles::uniform_int(rng, 0, 4); ++i) hc.push_back(oracles::uniform_big(rng, -1, 1, P));
      const PowerLawPolynomial k(ExactReal::parse(kb), kc, P);
      const PowerLawPolynomial h(ExactReal::integer(draw + 1), hc, P);
      const BigReal v = oracles::uniform_big(rng, 0.3, 9.0, P);
      const BigReal want = convolution_oracle(k, h, v);
      CHECK_MESSAGE(std::abs((dglap::convolve(k, h, v, 20) - want).to_double()) <
                        1e-17 * std::max(1.0, std::abs(want.to_double())),
                    kb);
    }
  }
}

TEST_CASE("evolution at tau = 0 and near it") {
  const auto g0 = model({"0", "1", "0.3", "0.02"});
  const auto f0 = model({"0.5", "0.2", "0.01"});
  std::vector<BigReal> vs{R("1", P), R("5", P), R("9", P)};

  dglap::EvolutionProblem still{g0, f0, ExactReal::integer(0)};
  const auto r0 = dglap::evolve_gluon(still, vs);
  CHECK(!r0.k_gg);
  for (const auto& pt : r0.points) CHECK(*pt.value == fitpoly::eval(g0, pt.v));

  for (const char* t : {"-1e-4", "1e-4"}) {
    dglap::EvolutionProblem p{g0, f0, ExactReal::parse(t)};
    const auto r = dglap::evolve_gluon(p, vs);
    for (const auto& pt : r.points) {
      REQUIRE(pt.value);
      const BigReal truth = oracles::evolved_oracle(1, f0, g0, ExactReal::parse(t).at(P), 4, pt.v);
      CHECK_MESSAGE(rel(*pt.value, truth) < 1e-5, t);
    }
  }
}

TEST_CASE("evolution against Talbot truth") {
  const auto g0 = model({"0", "1", "0.3", "0.02"});
  const auto f0 = model({"0.5", "0.2", "0.01"});
  std::vector<BigReal> vs{R("1", P), R("4", P), R("9", P)};
  for (const char* t : {"-0.0332005", "0.0332005"}) {
    dglap::EvolutionProblem p{g0, f0, ExactReal::parse(t)};
    const auto r = dglap::evolve_gluon(p, vs);
    for (const auto& pt : r.points) {
      REQUIRE(pt.value);
      const BigReal truth = oracles::evolved_oracle(1, f0, g0, ExactReal::parse(t).at(P), 4, pt.v);
      CHECK_MESSAGE(rel(*pt.value, truth) < 1e-3, t);
    }
  }
}

TEST_CASE("x-space mapping") {
  std::vector<dglap::EvolutionPoint> pts{{R("0", P), R("2", P), ""},
                                         {R("1", P), std::nullopt, "failed"},
                                         {mp::log(R("1e4", P)), R("3", P), ""}};
  const auto xs = dglap::to_x_space(pts);
  REQUIRE(xs.size() == 2);
  CHECK(xs[0].x == BigReal(1L, P));
  CHECK(rel(xs[1].x, R("1e-4", P)) < tol(-35));
  CHECK(dglap::v_of_x(R("1e-4", P)).to_string(5) == "9.2103");

  std::vector<BigReal> x_desc{R("0.9", P), R("0.1", P), R("0.01", P), R("1e-5", P)};
  for (size_t i = 1; i < x_desc.size(); ++i) CHECK(dglap::v_of_x(x_desc[i]) > dglap::v_of_x(x_desc[i - 1]));
}

TEST_CASE("grid ingestion") {
  const auto truth = model({"1.5", "-0.4", "0.03"});
  std::string text = "x,value\n";
  for (const auto& v : fitpoly::chebyshev_nodes(R("0.01", P), R("9", P), 40)) {
    text += mp::exp(-v).to_string(P) + "," + fitpoly::eval(truth, v).to_string(P) + "\n";
  }
  const auto path = write_file("grid.csv", text);
  const auto rows = dglap::read_grid(path, P);
  CHECK(rows.size() == 40);
  const auto fitted = dglap::ingest_grid(path, P, 6);
  CHECK(fitted.beta() == ExactReal::integer(1));
  for (size_t i = 0; i < 3; ++i) CHECK(std::abs((fitted.coeffs()[i] - truth.coeffs()[i]).to_double()) < 1e-25);
  for (size_t i = 3; i < fitted.coeffs().size(); ++i) CHECK(std::abs(fitted.coeffs()[i].to_double()) < 1e-25);

  CHECK(kind_of([] { dglap::read_grid(write_file("bad.csv", "0.1,2\n0.2,abc\n"), P); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { dglap::read_grid(write_file("range.csv", "0.1,2\n1.5,1\n"), P); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { dglap::read_grid(write_file("order.csv", "0.1,2\n0.3,1\n0.2,1\n"), P); }) ==
        ErrorKind::NonMonotoneGrid);
}

TEST_CASE("devolution error grows with |tau|" * doctest::test_suite("slow")) {
  const auto g0 = model({"0", "1", "0.3", "0.02"});
  const auto f0 = model({"0.5", "0.2", "0.01"});
  double prev = 0;
  for (const char* t : {"0.01", "0.033", "0.06"}) {
    oracles::RoundTripOptions o;
    o.tau = ExactReal::parse(t);
    o.check_points = {R("1", P), R("3", P), R("5", P), R("7", P), R("9", P)};
    const auto r = oracles::devolution_round_trip(g0, f0, o);
    MESSAGE("tau=" << std::string(t) << " worst round-trip error " << r.worst);
    CHECK(r.worst >= prev);
    prev = r.worst;
  }
}
