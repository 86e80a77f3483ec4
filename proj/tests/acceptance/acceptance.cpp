// One line per acceptance criterion: "criterion N: PASS|FAIL|SKIP <detail>".
// Arguments select criteria (default: all); the exit code is nonzero when a
// selected criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lapinv/dglap.hpp"
#include "lapinv/error.hpp"
#include "lapinv/fitpoly.hpp"
#include "lapinv/invlap.hpp"
#include "lapinv/oracles/round_trip.hpp"
#include "lapinv/oracles/special.hpp"
#include "lapinv/oracles/suites.hpp"

using namespace lapinv;
using mp::BigComplex;
using mp::BigReal;
using mp::ExactReal;

namespace {

struct Outcome {
  enum { Pass, Fail, Skip } status;
  std::string detail;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Outcome verdict(bool ok, const std::string& detail) { return {ok ? Outcome::Pass : Outcome::Fail, detail}; }

Outcome from_suites(const std::vector<oracles::SuiteResult>& suites) {
  bool ok = true;
  std::string detail;
  for (const auto& s : suites) {
    ok = ok && s.pass();
    if (!detail.empty()) detail += "; ";
    detail += s.name + ": " + std::to_string(s.cases - s.failed) + "/" + std::to_string(s.cases) +
              " worst " + sci(s.worst_error) + " (tol " + sci(s.tolerance) + ")";
    for (const auto& f : s.failures) {
      std::fprintf(stderr, "  %s | %s | oracle %s | tested %s | err %s\n", f.name.c_str(), f.inputs.c_str(),
                   f.oracle_value.c_str(), f.tested_value.c_str(), sci(f.relative_error).c_str());
    }
  }
  return verdict(ok, detail);
}

const std::vector<std::string> kBetas{"0.3", "1", "1.7", "-0.398406", "-1.6"};
const std::vector<int> kTwoNs{4, 10, 20};

pade::TableCache& cache() {
  static pade::TableCache c;  // memory only: every table is built here
  return c;
}

fitpoly::PowerLawPolynomial model(std::vector<const char*> c, int p) {
  std::vector<BigReal> coeffs;
  for (const char* x : c) coeffs.push_back(BigReal::from_string(x, p));
  return {ExactReal::integer(1), std::move(coeffs), p};
}

Outcome delta_surrogate() {
  const ExactReal beta = ExactReal::parse("0.000001");
  const int p = 100;
  const auto table = invlap::table_for(beta, 20, p, &cache());
  const auto g = invlap::power_law(beta);
  const int od = p + 30;
  const BigReal b = beta.at(od);
  const BigReal inv_gamma = 1L / oracles::gamma_oracle(b);
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const BigReal v = mp::pow(BigReal(10L, p), BigReal(-4L, p) + BigReal(8L * i, p) / 49L);
    const BigReal want = mp::pow(v.with_digits(od), b - 1L) * inv_gamma;
    const BigReal got = invlap::invert_at(g, v, *table);
    worst = std::max(worst, (mp::abs(got - want) / mp::abs(want)).to_double());
  }
  return verdict(worst <= 1e-25, "max fractional error " + sci(worst) + " over 50 v in [1e-4, 1e4] (tol 1e-25)");
}

Outcome exactness() {
  return from_suites({oracles::exactness_suite(50, 5, 10, 60, 1e-45, 20240601, &cache())});
}

Outcome canonical() { return from_suites({oracles::canonical_suite(kBetas, kTwoNs, 80, &cache())}); }

Outcome geometry() { return from_suites({oracles::pole_geometry_suite(kBetas, kTwoNs, 80, &cache())}); }

Outcome hadamard_suite() { return from_suites({oracles::finite_part_suite(25, 20, 1e-10, 1e-20, 77)}); }

Outcome kernel_asymptotics() {
  const int p = 50;
  const BigReal tau = BigReal::from_string("-0.0332005", p);
  const BigReal s = BigReal::from_string("1e6", p);
  const BigComplex k = dglap::kernel_laplace(dglap::KernelKind::GG, BigComplex(s), tau, 4);
  const double dev = mp::abs(k.re() * mp::pow(s, tau * 12L) * mp::exp(-tau * 25L / 3L) - 1L).to_double();
  return verdict(dev <= 1e-2, "|k_gg s^(12 tau) e^(-(33-2n_f) tau/3) - 1| = " + sci(dev) + " at s=1e6 (tol 1e-2)");
}

Outcome tau_zero_limits() {
  const int p = 50;
  double laplace = 0;
  for (const char* s : {"0.5", "2", "17", "1e6"}) {
    for (const char* im : {"0", "3"}) {
      const BigComplex z(BigReal::from_string(s, p), BigReal::from_string(im, p));
      const BigComplex gg = dglap::kernel_laplace(dglap::KernelKind::GG, z, BigReal(p), 4);
      const BigComplex gf = dglap::kernel_laplace(dglap::KernelKind::GF, z, BigReal(p), 4);
      laplace = std::max({laplace, mp::abs(gg - 1L).to_double(), mp::abs(gf).to_double()});
    }
  }
  const bool laplace_ok = laplace <= std::pow(10.0, -p + 2);

  const auto g0 = model({"0", "1", "0.3", "0.02"}, p);
  const auto f0 = model({"0.5", "0.2", "0.01"}, p);
  std::vector<BigReal> vs;
  for (int v = 1; v <= 9; ++v) vs.emplace_back(static_cast<long>(v), p);
  double worst = 0;
  std::string where;
  for (const char* t : {"1e-4", "-1e-4"}) {
    const dglap::EvolutionProblem problem{g0, f0, ExactReal::parse(t)};
    for (const auto& pt : dglap::evolve_gluon(problem, vs).points) {
      if (!pt.value) return {Outcome::Fail, "evolution failed at v=" + pt.v.to_string(4) + ": " + pt.error};
      const BigReal want = fitpoly::eval(g0, pt.v);
      const double e = (mp::abs(*pt.value - want) / mp::abs(want)).to_double();
      if (e > worst) {
        worst = e;
        where = std::string("tau=") + t + " v=" + pt.v.to_string(3);
      }
    }
  }
  return verdict(laplace_ok && worst <= 1e-3, "(k_gg, k_gf) at tau=0 off by " + sci(laplace) +
                                                  "; |G - G0|/|G0| at |tau|=1e-4 on v in [1, 9] up to " + sci(worst) +
                                                  " at " + where + " (tol 1e-3)");
}

Outcome round_trip() {
  const int p = 50;
  oracles::RoundTripOptions o;
  o.tau = ExactReal::parse("0.0332005");
  for (int v = 1; v <= 9; ++v) o.check_points.emplace_back(static_cast<long>(v), p);
  const auto r = oracles::devolution_round_trip(model({"0", "1", "0.3", "0.02"}, p), model({"0.5", "0.2", "0.01"}, p), o);
  return verdict(r.worst <= 1e-3, "max |G_back - G0|/|G0| on v in [1, 9] = " + sci(r.worst) +
                                      " (tol 1e-3); intermediate fit residuals g " + sci(r.gluon_fit_residual) +
                                      ", f " + sci(r.quark_fit_residual));
}

// Grids from $LAPINV_MSTW_DIR: gluon_5.csv, singlet_5.csv, gluon_1.69.csv (x,value rows).
Outcome mstw() {
  const char* dir = std::getenv("LAPINV_MSTW_DIR");
  if (!dir) return {Outcome::Skip, "set LAPINV_MSTW_DIR to a directory with gluon_5.csv, singlet_5.csv, gluon_1.69.csv"};
  const std::filesystem::path d(dir);
  for (const char* f : {"gluon_5.csv", "singlet_5.csv", "gluon_1.69.csv"}) {
    if (!std::filesystem::exists(d / f)) return {Outcome::Skip, std::string("missing ") + (d / f).string()};
  }
  const int p = 50;
  const auto g0 = dglap::ingest_grid(d / "gluon_5.csv", p);
  const auto f0 = dglap::ingest_grid(d / "singlet_5.csv", p);
  const auto target = dglap::read_grid(d / "gluon_1.69.csv", p);
  const auto smallest = std::min_element(target.begin(), target.end(),
                                         [](const auto& a, const auto& b) { return a.first < b.first; });
  const dglap::EvolutionProblem problem{g0, f0, ExactReal::parse("-0.0332005")};
  const auto r = dglap::evolve_gluon(problem, {dglap::v_of_x(smallest->first)});
  if (!r.points[0].value) return {Outcome::Fail, "devolution failed: " + r.points[0].error};
  const double e = (mp::abs(*r.points[0].value - smallest->second) / mp::abs(smallest->second)).to_double();
  return verdict(e <= 5e-4, "fractional error at x=" + smallest->first.to_string(4) + ": " + sci(e) + " (tol 5e-4)");
}

Outcome beta_estimation() {
  const ExactReal truth = ExactReal::parse("0.000001");
  const auto g = invlap::power_law(truth);
  const int sample_digits = 30;
  const auto est = invlap::estimate_beta(g, BigReal::from_string("1e3", sample_digits),
                                         BigReal::from_string("1e6", sample_digits), 12, sample_digits);
  const ExactReal beta_hat = ExactReal::parse(est.beta.to_string(sample_digits));
  const int p = 60;
  const auto table = invlap::table_for(beta_hat, 20, p, &cache());
  const BigReal b = truth.at(p + 20);
  double worst = 0;
  for (const char* v : {"1e-3", "0.1", "1", "10", "1e3"}) {
    const BigReal x = BigReal::from_string(v, p);
    const BigReal want = mp::pow(x.with_digits(p + 20), b - 1L) / oracles::gamma_oracle(b);
    worst = std::max(worst, (mp::abs(invlap::invert_at(g, x, *table) - want) / mp::abs(want)).to_double());
  }
  return verdict(worst <= 1e-10, "beta_hat = " + est.beta.to_string(12) + ", max relative error " + sci(worst) +
                                     " over v in [1e-3, 1e3] (tol 1e-10)");
}

Outcome special_functions() {
  std::vector<oracles::SuiteResult> suites;
  for (int d : {40, 80}) {
    suites.push_back(oracles::gamma_recurrence_suite(d, 100, 11 + d));
    suites.push_back(oracles::digamma_recurrence_suite(d, 100, 12 + d));
    suites.push_back(oracles::schwarz_reflection_suite(d, 50, 13 + d));
  }
  return from_suites(suites);
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::function<Outcome()>> criteria{
      {1, delta_surrogate}, {2, exactness},          {3, canonical},  {4, geometry},
      {5, hadamard_suite},  {6, kernel_asymptotics}, {7, tau_zero_limits}, {8, round_trip},
      {9, mstw},            {10, beta_estimation},   {11, special_functions}};
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty()) {
    for (const auto& [id, fn] : criteria) selected.push_back(id);
  }
  int failures = 0;
  for (int id : selected) {
    auto it = criteria.find(id);
    if (it == criteria.end()) {
      std::fprintf(stderr, "unknown criterion %d\n", id);
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = it->second();
    } catch (const std::exception& e) {
      o = {Outcome::Fail, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* status = o.status == Outcome::Pass ? "PASS" : o.status == Outcome::Fail ? "FAIL" : "SKIP";
    std::printf("criterion %d: %s %s [%.1fs]\n", id, status, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (o.status == Outcome::Fail) ++failures;
  }
  return failures ? 1 : 0;
}
