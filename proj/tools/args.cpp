#include "args.hpp"

#include <map>
#include <sstream>

#include "lapinv/dglap.hpp"
#include "lapinv/error.hpp"

namespace lapinv::cli {

using mp::BigReal;
using mp::ExactReal;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::map<std::string, std::string> parameters(const std::vector<std::string>& parts, const std::string& arg) {
  std::map<std::string, std::string> out;
  for (size_t i = 1; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value in '" + arg + "'");
    out[parts[i].substr(0, eq)] = parts[i].substr(eq + 1);
  }
  return out;
}

const std::string& require(const std::map<std::string, std::string>& p, const std::string& k,
                           const std::string& arg) {
  auto it = p.find(k);
  if (it == p.end()) throw UsageError("'" + arg + "' needs " + k + "=...");
  return it->second;
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    size_t used = 0;
    const int n = std::stoi(text, &used);
    if (used == text.size()) return n;
  } catch (const std::exception&) {
  }
  throw UsageError(what + " must be an integer, got '" + text + "'");
}

std::vector<BigReal> parse_list(const std::string& text, int digits, const std::string& what) {
  std::vector<BigReal> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_real(item, digits, what));
  if (out.empty()) throw UsageError(what + " is empty");
  return out;
}

// f^(n)(0) for cos and sin: the derivative cycle shifted by `phase`.
BigReal trig_derivative(int order, int phase, int digits) {
  switch ((order + phase) % 4) {
    case 0: return BigReal(1L, digits);
    case 2: return BigReal(-1L, digits);
    default: return BigReal(digits);
  }
}

}  // namespace

ExactReal parse_exact(const std::string& text, const std::string& what) {
  try {
    return ExactReal::parse(text);
  } catch (const Error&) {
    throw UsageError(what + " is not a decimal number: '" + text + "'");
  }
}

BigReal parse_real(const std::string& text, int digits, const std::string& what) {
  try {
    return BigReal::from_string(text, digits);
  } catch (const Error&) {
    throw UsageError(what + " is not a decimal number: '" + text + "'");
  }
}

ExactReal parse_beta(const std::string& text) {
  ExactReal beta = parse_exact(text, "--beta");
  try {
    invlap::validate_beta(beta);
  } catch (const Error& e) {
    throw UsageError("--beta " + text +
                     " is refused: for beta at or near a non-positive integer the original function is a "
                     "derivative of the Dirac delta (a distribution), which has no power-law times "
                     "polynomial representation. (" + e.what() + ")");
  }
  return beta;
}

std::vector<BigReal> parse_grid(const std::string& arg, int digits) {
  const auto parts = split(arg, ':');
  if (parts.size() != 4 || (parts[0] != "log" && parts[0] != "lin")) {
    throw UsageError("grid must be log:a:b:n or lin:a:b:n, got '" + arg + "'");
  }
  const BigReal a = parse_real(parts[1], digits, "grid start");
  const BigReal b = parse_real(parts[2], digits, "grid end");
  const int n = parse_int(parts[3], "grid size");
  if (n < 1) throw UsageError("grid size must be positive");
  if (parts[0] == "log" && !(a > 0L && b > 0L)) throw UsageError("log grid needs positive endpoints");
  if (n == 1) return {a};
  std::vector<BigReal> out;
  for (int i = 0; i < n; ++i) {
    if (i == n - 1) {
      out.push_back(b);
    } else if (parts[0] == "log") {
      out.push_back(a * mp::pow(b / a, BigReal(static_cast<long>(i), digits) / static_cast<long>(n - 1)));
    } else {
      out.push_back(a + (b - a) * static_cast<long>(i) / static_cast<long>(n - 1));
    }
  }
  return out;
}

GForm parse_g(const std::string& arg, int digits) {
  const auto parts = split(arg, ':');
  const auto p = parameters(parts, arg);
  const std::string& kind = parts.empty() ? arg : parts[0];
  GForm out;
  out.name = arg;
  if (kind == "power") {
    out.beta = parse_exact(require(p, "beta", arg), "power beta");
    out.coeffs = {BigReal(1L, digits)};
    out.g = invlap::power_law(*out.beta);
  } else if (kind == "series") {
    out.beta = parse_exact(require(p, "beta", arg), "series beta");
    out.coeffs = parse_list(require(p, "coeffs", arg), digits, "series coefficient");
    out.g = invlap::power_series(*out.beta, out.coeffs);
  } else if (kind == "dglap-gg" || kind == "dglap-gf") {
    const ExactReal tau = parse_exact(require(p, "tau", arg), "tau");
    const int n_f = p.contains("nf") ? parse_int(p.at("nf"), "nf") : 4;
    if (n_f < 3 || n_f > 6) throw UsageError("nf must be between 3 and 6");
    out.g = dglap::kernel_function(kind == "dglap-gg" ? dglap::KernelKind::GG : dglap::KernelKind::GF, tau, n_f);
  } else {
    throw UsageError("unknown g form '" + kind + "' (power, series, dglap-gg, dglap-gf)");
  }
  return out;
}

hadamard::SmoothIntegrand parse_integrand(const std::string& arg, int digits) {
  if (arg == "one") return hadamard::constant_integrand(BigReal(1L, digits));
  if (arg == "cos" || arg == "sin") {
    const int phase = arg == "cos" ? 0 : 3;
    return {[arg](const BigReal& w) { return arg == "cos" ? mp::cos(w) : mp::sin(w); },
            [phase](int order, int d) { return trig_derivative(order, phase, d); }, 1 << 20};
  }
  if (arg == "exp") {
    return {[](const BigReal& w) { return mp::exp(w); }, [](int, int d) { return BigReal(1L, d); }, 1 << 20};
  }
  if (arg.starts_with("poly:")) return hadamard::polynomial_integrand(parse_list(arg.substr(5), digits, "poly"));
  throw UsageError("unknown integrand '" + arg + "' (one, cos, sin, exp, poly:c0,c1,...)");
}

}  // namespace lapinv::cli
