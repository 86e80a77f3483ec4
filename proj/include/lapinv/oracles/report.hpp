#ifndef LAPINV_ORACLES_REPORT_HPP
#define LAPINV_ORACLES_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "lapinv/mpnum.hpp"

namespace lapinv::oracles {

/// One oracle-versus-module comparison.
struct OracleReport {
  std::string name;
  std::string inputs;
  std::string oracle_value;
  std::string tested_value;
  double relative_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Aggregate over a randomized or enumerated suite. Only failing cases keep
/// their full report; passing ones are counted.
struct SuiteResult {
  std::string name;
  int cases = 0;
  int failed = 0;
  double worst_error = 0.0;
  double tolerance = 0.0;
  std::vector<OracleReport> failures;
  std::string note;

  bool pass() const { return cases > 0 && failed == 0; }
  /// Records one comparison; keeps at most a handful of failure dumps.
  void record(OracleReport report);
  /// Records a case that threw instead of producing a value.
  void record_exception(const std::string& inputs, const std::string& what);
};

nlohmann::json to_json(const OracleReport& report);
nlohmann::json to_json(const SuiteResult& suite);

/// |a - ref| / |ref|, or |a - ref| when ref is zero.
double relative_error(const mp::BigReal& a, const mp::BigReal& ref);
double relative_error(const mp::BigComplex& a, const mp::BigComplex& ref);

/// Fills an OracleReport from values at the given display precision.
OracleReport compare(std::string name, std::string inputs, const mp::BigReal& oracle,
                     const mp::BigReal& tested, double tolerance);
OracleReport compare(std::string name, std::string inputs, const mp::BigComplex& oracle,
                     const mp::BigComplex& tested, double tolerance);

}  // namespace lapinv::oracles

#endif  // LAPINV_ORACLES_REPORT_HPP
