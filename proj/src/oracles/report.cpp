#include "lapinv/oracles/report.hpp"

#include <algorithm>
#include <cmath>

namespace lapinv::oracles {

namespace {
constexpr size_t kMaxFailureDumps = 8;
constexpr int kDisplayDigits = 30;
}  // namespace

void SuiteResult::record(OracleReport report) {
  ++cases;
  if (std::isnan(report.relative_error)) {
    worst_error = report.relative_error;
  } else if (!std::isnan(worst_error)) {
    worst_error = std::max(worst_error, report.relative_error);
  }
  tolerance = std::max(tolerance, report.tolerance);
  if (!report.pass) {
    ++failed;
    if (failures.size() < kMaxFailureDumps) failures.push_back(std::move(report));
  }
}

void SuiteResult::record_exception(const std::string& inputs, const std::string& what) {
  OracleReport report;
  report.name = name;
  report.inputs = inputs;
  report.tested_value = "exception: " + what;
  report.relative_error = std::nan("");
  report.pass = false;
  record(std::move(report));
}

nlohmann::json to_json(const OracleReport& report) {
  return {{"name", report.name},
          {"inputs", report.inputs},
          {"oracle", report.oracle_value},
          {"tested", report.tested_value},
          {"relative_error", report.relative_error},
          {"tolerance", report.tolerance},
          {"pass", report.pass}};
}

nlohmann::json to_json(const SuiteResult& suite) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : suite.failures) failures.push_back(to_json(f));
  nlohmann::json out = {{"name", suite.name},       {"cases", suite.cases},
                        {"failed", suite.failed},   {"worst_error", suite.worst_error},
                        {"tolerance", suite.tolerance}, {"pass", suite.pass()},
                        {"failures", failures}};
  if (!suite.note.empty()) out["note"] = suite.note;
  return out;
}

double relative_error(const mp::BigReal& a, const mp::BigReal& ref) {
  const mp::BigReal diff = mp::abs(a - ref);
  if (ref.is_zero()) return diff.to_double();
  return (diff / mp::abs(ref)).to_double();
}

double relative_error(const mp::BigComplex& a, const mp::BigComplex& ref) {
  const mp::BigReal diff = mp::abs(a - ref);
  if (ref.is_zero()) return diff.to_double();
  return (diff / mp::abs(ref)).to_double();
}

OracleReport compare(std::string name, std::string inputs, const mp::BigReal& oracle,
                     const mp::BigReal& tested, double tolerance) {
  OracleReport r;
  r.name = std::move(name);
  r.inputs = std::move(inputs);
  r.oracle_value = oracle.to_string(kDisplayDigits);
  r.tested_value = tested.to_string(kDisplayDigits);
  r.relative_error = relative_error(tested, oracle);
  r.tolerance = tolerance;
  r.pass = r.relative_error <= tolerance;
  return r;
}

OracleReport compare(std::string name, std::string inputs, const mp::BigComplex& oracle,
                     const mp::BigComplex& tested, double tolerance) {
  OracleReport r;
  r.name = std::move(name);
  r.inputs = std::move(inputs);
  r.oracle_value = oracle.to_string(kDisplayDigits);
  r.tested_value = tested.to_string(kDisplayDigits);
  r.relative_error = relative_error(tested, oracle);
  r.tolerance = tolerance;
  r.pass = r.relative_error <= tolerance;
  return r;
}

}  // namespace lapinv::oracles
