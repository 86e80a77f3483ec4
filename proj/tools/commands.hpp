#ifndef LAPINV_TOOLS_COMMANDS_HPP
#define LAPINV_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lapinv/pade.hpp"

namespace lapinv::cli {

struct Output {
  std::string path;  // empty: stdout
  std::string format = "csv";
};

struct InvertArgs {
  std::string g;
  std::string beta;
  int twoN = 20;
  int precision = 50;
  std::vector<std::string> v;
  std::string v_grid;
  int digits = 0;
  bool exact = false;
  bool check_imaginary = false;
};

struct FpArgs {
  std::string beta;
  std::string v;
  std::string f = "one";
  int quad_digits = 20;
  int digits = 0;
};

struct EstimateArgs {
  std::string g;
  std::string samples_file;
  std::string s_min = "1e3";
  std::string s_max = "1e6";
  int samples = 12;
  int precision = 30;
};

struct TableArgs {
  std::string beta;
  int twoN = 20;
  int precision = 50;
};

struct DglapArgs {
  std::string problem;
};

struct SelftestArgs {
  bool quick = false;
  std::string report;
  std::uint64_t seed = 1;
};

int cmd_invert(const InvertArgs& a, const Output& out, pade::TableCache& cache);
int cmd_fp(const FpArgs& a, const Output& out);
int cmd_estimate_beta(const EstimateArgs& a, const Output& out);
int cmd_table(const TableArgs& a, const Output& out, pade::TableCache& cache);
int cmd_dglap(const DglapArgs& a, const Output& out, pade::TableCache& cache);
int cmd_selftest(const SelftestArgs& a, pade::TableCache& cache);

}  // namespace lapinv::cli

#endif  // LAPINV_TOOLS_COMMANDS_HPP
