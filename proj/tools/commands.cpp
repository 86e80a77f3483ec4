#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "args.hpp"
#include "lapinv/dglap.hpp"
#include "lapinv/error.hpp"
#include "lapinv/fitpoly.hpp"
#include "lapinv/invlap.hpp"
#include "lapinv/oracles/suites.hpp"

namespace lapinv::cli {

using mp::BigReal;
using mp::ExactReal;
using nlohmann::json;

namespace {

void emit(const Output& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  const std::filesystem::path path(out.path);
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write " + tmp.string());
    f << text;
    if (!f) throw UsageError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void check_format(const Output& out) {
  if (out.format != "csv" && out.format != "json") throw UsageError("--format must be csv or json");
}

void check_precision(int precision, int twoN) {
  if (precision < pade::kMinTablePrecision) {
    throw UsageError("--precision must be at least " + std::to_string(pade::kMinTablePrecision));
  }
  if (twoN < 2 || twoN % 2) throw UsageError("--twoN must be even and at least 2");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Decimal text of a JSON scalar; strings are preferred so nothing passes through a double.
std::string scalar(const json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number()) return j.dump();
  throw UsageError(what + " must be a decimal string");
}

int integer(const json& problem, const char* key, int fallback) {
  if (!problem.contains(key)) return fallback;
  if (!problem[key].is_number_integer()) throw UsageError(std::string(key) + " must be an integer");
  return problem[key].get<int>();
}

}  // namespace

int cmd_invert(const InvertArgs& a, const Output& out, pade::TableCache& cache) {
  check_format(out);
  check_precision(a.precision, a.twoN);
  const ExactReal beta = parse_beta(a.beta);
  const int internal = pade::internal_digits(a.precision);
  const GForm form = parse_g(a.g, internal);
  std::vector<BigReal> vs;
  for (const auto& v : a.v) vs.push_back(parse_real(v, a.precision, "--v"));
  if (!a.v_grid.empty()) {
    for (auto& v : parse_grid(a.v_grid, a.precision)) vs.push_back(std::move(v));
  }
  if (vs.empty()) throw UsageError("give --v or --v-grid");
  for (const auto& v : vs) {
    if (!(v > 0L)) throw UsageError("v must be positive");
  }
  if (a.exact && !form.beta) throw UsageError("--exact needs a power or series form");
  const int digits = a.digits > 0 ? a.digits : a.precision;

  const auto table = invlap::table_for(beta, a.twoN, a.precision, &cache);
  std::ostringstream csv;
  json rows = json::array();
  int failures = 0;
  for (const auto& v : vs) {
    json row{{"v", v.to_string(digits)}};
    std::string line = v.to_string(digits);
    try {
      const BigReal G = invlap::invert_at(form.g, v, *table, a.check_imaginary);
      row["G"] = G.to_string(digits);
      line += "," + G.to_string(digits);
      if (a.exact) {
        const BigReal want = invlap::power_series_original(*form.beta, form.coeffs, v.with_digits(internal));
        const BigReal err = mp::abs(G - want) / mp::abs(want);
        row["exact"] = want.to_string(digits);
        row["rel_error"] = err.to_string(6);
        line += "," + want.to_string(digits) + "," + err.to_string(6);
      }
    } catch (const Error& e) {
      ++failures;
      row["error"] = e.what();
      line += ",";
      std::cerr << "v=" << v.to_string(20) << ": " << e.what() << "\n";
    }
    csv << line << "\n";
    rows.push_back(std::move(row));
  }
  if (failures == static_cast<int>(vs.size())) {
    throw Error(ErrorKind::AllPointsFailed, "no v point could be inverted");
  }
  if (out.format == "json") {
    json doc{{"g", a.g},      {"beta", beta.to_string()}, {"twoN", a.twoN}, {"precision", a.precision},
             {"points", rows}};
    emit(out, doc.dump(2) + "\n");
  } else {
    emit(out, csv.str());
  }
  return failures ? 3 : 0;
}

int cmd_fp(const FpArgs& a, const Output& out) {
  check_format(out);
  if (a.quad_digits < 5) throw UsageError("--quad-digits must be at least 5");
  const BigReal beta = parse_real(a.beta, a.quad_digits, "--beta");
  const BigReal v = parse_real(a.v, a.quad_digits, "--v");
  if (!(v > 0L)) throw UsageError("--v must be positive");
  const int work = a.quad_digits * 2 + 40;
  const auto f = parse_integrand(a.f, work);
  const BigReal value = hadamard::fp_integral(f, beta, v, a.quad_digits);
  const int digits = a.digits > 0 ? a.digits : a.quad_digits - 4;
  if (out.format == "json") {
    json doc{{"beta", a.beta}, {"v", a.v}, {"f", a.f}, {"value", value.to_string(digits)}};
    emit(out, doc.dump(2) + "\n");
  } else {
    emit(out, value.to_string(digits) + "\n");
  }
  return 0;
}

int cmd_estimate_beta(const EstimateArgs& a, const Output& out) {
  check_format(out);
  if (a.g.empty() == a.samples_file.empty()) throw UsageError("give exactly one of --g and --samples-file");
  invlap::BetaEstimate est;
  if (!a.g.empty()) {
    const GForm form = parse_g(a.g, a.precision + 20);
    est = invlap::estimate_beta(form.g, parse_real(a.s_min, a.precision, "--s-min"),
                                parse_real(a.s_max, a.precision, "--s-max"), a.samples, a.precision);
  } else {
    std::vector<std::pair<BigReal, BigReal>> samples;
    std::istringstream in(read_text(a.samples_file));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      const auto comma = line.find(',');
      if (comma == std::string::npos) throw UsageError("samples rows are s,g: '" + line + "'");
      try {
        samples.emplace_back(BigReal::from_string(line.substr(0, comma), a.precision),
                             BigReal::from_string(line.substr(comma + 1), a.precision));
      } catch (const Error&) {
        if (samples.empty()) continue;  // header row
        throw UsageError("bad sample row '" + line + "'");
      }
    }
    est = invlap::estimate_beta(samples);
  }
  const int digits = a.precision - 5;
  if (out.format == "json") {
    json doc{{"beta", est.beta.to_string(digits)},
             {"log_amplitude", est.log_amplitude.to_string(digits)},
             {"max_residual", est.max_residual.to_string(6)}};
    emit(out, doc.dump(2) + "\n");
  } else {
    emit(out, "beta,log_amplitude,max_residual\n" + est.beta.to_string(digits) + "," +
                  est.log_amplitude.to_string(digits) + "," + est.max_residual.to_string(6) + "\n");
  }
  return 0;
}

int cmd_table(const TableArgs& a, const Output& out, pade::TableCache& cache) {
  check_precision(a.precision, a.twoN);
  const ExactReal beta = parse_beta(a.beta);
  const auto table = cache.get_or_build(beta, a.twoN, a.precision);
  emit(out, pade::serialize_table(*table) + "\n");
  return 0;
}

int cmd_dglap(const DglapArgs& a, const Output& out, pade::TableCache& cache) {
  check_format(out);
  const std::filesystem::path path(a.problem);
  json problem;
  try {
    problem = json::parse(read_text(path));
  } catch (const json::exception& e) {
    throw UsageError("problem file is not JSON: " + std::string(e.what()));
  }
  if (!problem.is_object()) throw UsageError("problem must be a JSON object");
  const auto base = path.parent_path();
  auto resolve = [&](const std::string& p) {
    const std::filesystem::path q(p);
    return q.is_absolute() ? q : base / q;
  };

  dglap::KernelFitOptions kernel;
  kernel.twoN = integer(problem, "twoN", 20);
  kernel.precision = integer(problem, "precision", 50);
  kernel.degree = integer(problem, "kernel_degree", 32);
  kernel.cache = &cache;
  check_precision(kernel.precision, kernel.twoN);
  const int p = kernel.precision;
  const int n_f = integer(problem, "n_f", 4);
  const int fit_degree = integer(problem, "fit_degree", 20);
  const int quad_digits = integer(problem, "quad_digits", 20);
  const double grid_residual = problem.value("max_grid_residual", 1e-4);

  ExactReal tau = ExactReal::integer(0);
  if (problem.contains("tau")) {
    tau = parse_exact(scalar(problem["tau"], "tau"), "tau");
  } else if (problem.contains("Q2") && problem.contains("Q02") && problem.contains("lambda")) {
    dglap::DglapConfig cfg;
    cfg.n_f = n_f;
    for (const auto& [k, v] : problem["lambda"].items()) {
      cfg.lambda[std::stoi(k)] = parse_real(scalar(v, "lambda"), p + 10, "lambda");
    }
    if (problem.contains("mc2")) cfg.mc2 = parse_real(scalar(problem["mc2"], "mc2"), p + 10, "mc2");
    if (problem.contains("mb2")) cfg.mb2 = parse_real(scalar(problem["mb2"], "mb2"), p + 10, "mb2");
    const BigReal t = dglap::tau(parse_real(scalar(problem["Q2"], "Q2"), p + 10, "Q2"),
                                 parse_real(scalar(problem["Q02"], "Q02"), p + 10, "Q02"), cfg);
    tau = ExactReal::parse(t.to_string(p));
  } else {
    throw UsageError("problem needs tau, or Q2, Q02 and lambda");
  }

  std::vector<BigReal> xs;
  auto load = [&](const char* grid_key, const char* model_key) -> fitpoly::PowerLawPolynomial {
    if (problem.contains(model_key)) return fitpoly::from_json(problem[model_key].dump());
    if (!problem.contains(grid_key)) throw UsageError(std::string("problem needs ") + grid_key + " or " + model_key);
    const auto file = resolve(problem[grid_key].get<std::string>());
    if (xs.empty() && std::string(grid_key) == "g0_grid") {
      for (const auto& [x, value] : dglap::read_grid(file, p)) xs.push_back(x);
    }
    return dglap::ingest_grid(file, p, fit_degree, grid_residual);
  };
  const auto g0 = load("g0_grid", "g0_model");
  const auto f0 = load("fs0_grid", "fs0_model");

  std::vector<BigReal> vs;
  if (problem.contains("x")) {
    xs.clear();
    for (const auto& x : problem["x"]) xs.push_back(parse_real(scalar(x, "x"), p, "x"));
  }
  if (problem.contains("v_grid")) {
    vs = parse_grid(problem["v_grid"].get<std::string>(), p);
  } else {
    if (xs.empty()) throw UsageError("problem needs x, v_grid or g0_grid to define the output points");
    for (const auto& x : xs) {
      if (!(x > 0L && x < 1L)) throw UsageError("x values must lie in (0, 1)");
      vs.push_back(dglap::v_of_x(x));
    }
  }

  const dglap::EvolutionProblem ep{g0, f0, tau, n_f, kernel, quad_digits};
  const auto result = dglap::evolve_gluon(ep, vs);
  int failures = 0;
  for (const auto& pt : result.points) {
    if (!pt.value) {
      ++failures;
      std::cerr << "v=" << pt.v.to_string(20) << ": " << pt.error << "\n";
    }
  }
  if (failures == static_cast<int>(vs.size())) throw Error(ErrorKind::AllPointsFailed, "every output point failed");

  const int digits = integer(problem, "output_digits", p);
  if (out.format == "json") {
    json doc{{"tau", tau.to_string()}, {"n_f", n_f}, {"points", json::array()}};
    if (result.k_gg) {
      doc["k_gg"] = {{"beta", result.k_gg->beta().to_string()}, {"residual", result.k_gg->residual().to_string(4)}};
      doc["k_gf"] = {{"beta", result.k_gf->beta().to_string()}, {"residual", result.k_gf->residual().to_string(4)}};
    }
    for (const auto& pt : result.points) {
      json row{{"x", mp::exp(-pt.v).to_string(digits)}, {"v", pt.v.to_string(digits)}};
      if (pt.value) row["G"] = pt.value->to_string(digits);
      else row["error"] = pt.error;
      doc["points"].push_back(std::move(row));
    }
    emit(out, doc.dump(2) + "\n");
  } else {
    std::ostringstream csv;
    csv << "x,v,G\n";
    for (const auto& pt : result.points) {
      csv << mp::exp(-pt.v).to_string(digits) << "," << pt.v.to_string(digits) << ","
          << (pt.value ? pt.value->to_string(digits) : "") << "\n";
    }
    emit(out, csv.str());
  }
  return failures ? 3 : 0;
}

int cmd_selftest(const SelftestArgs& a, pade::TableCache& cache) {
  using oracles::SuiteResult;
  const std::vector<std::string> betas{"0.3", "1", "1.7", "-0.398406", "-1.6"};
  std::vector<std::function<SuiteResult()>> suites;
  const std::vector<int> digit_levels = a.quick ? std::vector<int>{40} : std::vector<int>{40, 80};
  const int draws = a.quick ? 20 : 60;
  for (int d : digit_levels) {
    suites.emplace_back([=] { return oracles::gamma_recurrence_suite(d, draws, a.seed); });
    suites.emplace_back([=] { return oracles::digamma_recurrence_suite(d, draws, a.seed + 1); });
    suites.emplace_back([=] { return oracles::schwarz_reflection_suite(d, draws, a.seed + 2); });
    suites.emplace_back([=] { return oracles::precision_monotonicity_suite(d, draws, a.seed + 3); });
    suites.emplace_back([=] { return oracles::field_axioms_suite(d, draws, a.seed + 4); });
  }
  const std::vector<int> twoNs = a.quick ? std::vector<int>{4, 10} : std::vector<int>{4, 10, 20};
  const int table_precision = a.quick ? 50 : 80;
  suites.emplace_back([&] { return oracles::canonical_suite(betas, twoNs, table_precision, &cache); });
  suites.emplace_back([&] { return oracles::pole_geometry_suite(betas, twoNs, table_precision, &cache); });
  suites.emplace_back([] { return oracles::pade_linear_solve_suite(40); });
  suites.emplace_back([&] { return oracles::exactness_suite(a.quick ? 10 : 50, 5, 10, 60, 1e-45, a.seed + 5, &cache); });
  suites.emplace_back([&] { return oracles::finite_part_suite(25, 20, 1e-10, 1e-20, a.seed + 6); });
  suites.emplace_back([&] { return oracles::gluon_row_suite(40, a.quick ? 10 : 40, a.seed + 7); });

  json report{{"suites", json::array()}};
  bool all = true;
  for (const auto& run : suites) {
    const SuiteResult s = run();
    all = all && s.pass();
    std::printf("%-4s  %-48s cases=%-4d failed=%-3d worst=%.3g tol=%.3g\n", s.pass() ? "PASS" : "FAIL", s.name.c_str(),
                s.cases, s.failed, s.worst_error, s.tolerance);
    std::fflush(stdout);
    report["suites"].push_back(oracles::to_json(s));
  }
  report["pass"] = all;
  if (!a.report.empty()) emit(Output{a.report, "json"}, report.dump(2) + "\n");
  std::printf("%s\n", all ? "selftest: all suites pass" : "selftest: FAILURES");
  return all ? 0 : 3;
}

}  // namespace lapinv::cli
