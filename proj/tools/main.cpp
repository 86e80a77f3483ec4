#include <cstdlib>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "args.hpp"
#include "commands.hpp"
#include "lapinv/error.hpp"

using namespace lapinv::cli;

int main(int argc, char** argv) {
  CLI::App app{"Arbitrary-precision inverse Laplace transforms, finite-part integrals and LO gluon evolution"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string cache_dir;
  Output out;
  app.add_option("--cache-dir", cache_dir, "table cache directory (default: $LAPINV_CACHE_DIR)");
  app.add_option("-o,--out", out.path, "output file (default: stdout)");
  app.add_option("--format", out.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  InvertArgs inv;
  auto* invert = app.add_subcommand("invert", "invert a built-in transform on a v grid");
  invert->add_option("--g", inv.g, "power:beta=B | series:beta=B:coeffs=c0,c1,... | dglap-gg:tau=T | dglap-gf:tau=T")
      ->required();
  invert->add_option("--beta", inv.beta, "power-law class of the original")->required();
  invert->add_option("--twoN", inv.twoN, "Pade order 2N");
  invert->add_option("--precision", inv.precision, "decimal digits");
  invert->add_option("--v", inv.v, "evaluation point (repeatable)");
  invert->add_option("--v-grid", inv.v_grid, "log:a:b:n or lin:a:b:n");
  invert->add_option("--digits", inv.digits, "printed significant digits (default: precision)");
  invert->add_flag("--exact", inv.exact, "append the exact original and relative error");
  invert->add_flag("--check-imaginary", inv.check_imaginary, "reject evaluators with a spurious imaginary part");

  FpArgs fp;
  auto* fpc = app.add_subcommand("fp", "Hadamard finite part of int_0^v f(w) w^(beta-1) dw");
  fpc->add_option("--beta", fp.beta)->required();
  fpc->add_option("--v", fp.v)->required();
  fpc->add_option("--f", fp.f, "one | cos | sin | exp | poly:c0,c1,...");
  fpc->add_option("--quad-digits", fp.quad_digits);
  fpc->add_option("--digits", fp.digits, "printed significant digits (default: quad-digits - 4)");

  EstimateArgs est;
  auto* estc = app.add_subcommand("estimate-beta", "fit log|g(s)| = log a - beta log s at large real s");
  estc->add_option("--g", est.g, "built-in form to sample");
  estc->add_option("--samples-file", est.samples_file, "CSV rows s,g");
  estc->add_option("--s-min", est.s_min);
  estc->add_option("--s-max", est.s_max);
  estc->add_option("--samples", est.samples);
  estc->add_option("--precision", est.precision);

  TableArgs tab;
  auto* tabc = app.add_subcommand("table", "build or fetch a pole/weight table and print it as JSON");
  tabc->add_option("--beta", tab.beta)->required();
  tabc->add_option("--twoN", tab.twoN);
  tabc->add_option("--precision", tab.precision);

  DglapArgs dg;
  auto* dgc = app.add_subcommand("dglap", "evolve the gluon distribution described by a problem JSON");
  dgc->add_option("--problem", dg.problem)->required()->check(CLI::ExistingFile);

  SelftestArgs st;
  auto* stc = app.add_subcommand("selftest", "run the invariant and oracle suites");
  stc->add_flag("--quick", st.quick);
  stc->add_option("--report", st.report, "write the suite reports as JSON");
  stc->add_option("--seed", st.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::unique_ptr<lapinv::pade::TableCache> own;
    lapinv::pade::TableCache* cache = &lapinv::pade::default_cache();
    if (!cache_dir.empty()) {
      own = std::make_unique<lapinv::pade::TableCache>(cache_dir);
      cache = own.get();
    }
    if (*invert) return cmd_invert(inv, out, *cache);
    if (*fpc) return cmd_fp(fp, out);
    if (*estc) return cmd_estimate_beta(est, out);
    if (*tabc) return cmd_table(tab, out, *cache);
    if (*dgc) return cmd_dglap(dg, out, *cache);
    if (*stc) return cmd_selftest(st, *cache);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lapinv::Error& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
