#ifndef LAPINV_TOOLS_ARGS_HPP
#define LAPINV_TOOLS_ARGS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lapinv/hadamard.hpp"
#include "lapinv/invlap.hpp"

namespace lapinv::cli {

/// Bad command-line input; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

mp::ExactReal parse_exact(const std::string& text, const std::string& what);
mp::BigReal parse_real(const std::string& text, int digits, const std::string& what);

/// Rejects beta values whose original is a Dirac-delta derivative, as a usage error.
mp::ExactReal parse_beta(const std::string& text);

/// `log:a:b:n`, `lin:a:b:n`; endpoints included, parsed at `digits`.
std::vector<mp::BigReal> parse_grid(const std::string& arg, int digits);

/// A built-in transform: `power:beta=B`, `series:beta=B:coeffs=c0,c1,...`,
/// `dglap-gg:tau=T[:nf=4]`, `dglap-gf:tau=T[:nf=4]`.
struct GForm {
  invlap::LaplaceFunction g;
  std::string name;
  /// Exact original for power and series forms.
  std::optional<mp::ExactReal> beta;
  std::vector<mp::BigReal> coeffs;
};
GForm parse_g(const std::string& arg, int digits);

/// `one`, `cos`, `sin`, `exp`, or `poly:c0,c1,...`.
hadamard::SmoothIntegrand parse_integrand(const std::string& arg, int digits);

}  // namespace lapinv::cli

#endif  // LAPINV_TOOLS_ARGS_HPP
