#ifndef LAPINV_FITPOLY_HPP
#define LAPINV_FITPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "lapinv/invlap.hpp"
#include "lapinv/mpnum.hpp"

namespace lapinv::fitpoly {

/// G(v) = v^(beta-1) / Gamma(beta) * sum_i B_i v^i.
class PowerLawPolynomial {
 public:
  PowerLawPolynomial() = default;
  /// Throws InvalidBeta when beta is a non-positive integer (1/Gamma(beta) = 0).
  PowerLawPolynomial(mp::ExactReal beta, std::vector<mp::BigReal> coeffs, int precision);

  const mp::ExactReal& beta() const { return beta_; }
  const std::vector<mp::BigReal>& coeffs() const { return coeffs_; }
  int precision() const { return precision_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Largest relative residual of the fit that produced the model (0 otherwise).
  const mp::BigReal& residual() const { return residual_; }
  void set_residual(mp::BigReal r) { residual_ = std::move(r); }

  /// 1/Gamma(beta) at the model precision plus guard digits.
  const mp::BigReal& inverse_gamma() const { return inv_gamma_; }

 private:
  mp::ExactReal beta_;
  std::vector<mp::BigReal> coeffs_;
  int precision_ = 0;
  mp::BigReal residual_;
  mp::BigReal inv_gamma_;
};

/// Least squares over the basis v^(beta-1+i)/Gamma(beta), i <= degree, by
/// Householder QR at `work_digits` (0: the sample precision plus 20).
/// Rows are weighted by v^(1-beta) so that the residual is measured on the
/// polynomial factor. Throws RankDeficient when the design has numerical
/// rank below degree+1, InvalidArgument for too few samples or v <= 0.
PowerLawPolynomial fit(const std::vector<std::pair<mp::BigReal, mp::BigReal>>& samples, const mp::ExactReal& beta,
                       int degree, int precision, int work_digits = 0);

/// Fit residual on the polynomial factor: max_i |G_i - model(v_i)| v_i^(1-beta)
/// divided by max_i |G_i| v_i^(1-beta).
mp::BigReal max_relative_residual(const PowerLawPolynomial& model,
                                  const std::vector<std::pair<mp::BigReal, mp::BigReal>>& samples);

/// Evaluated at v's precision. Requires v > 0.
mp::BigReal eval(const PowerLawPolynomial& model, const mp::BigReal& v);
/// d^order/dv^order of the model at v > 0, term by term.
mp::BigReal derivative(const PowerLawPolynomial& model, int order, const mp::BigReal& v);

/// s -> sum_i B_i (beta)_i s^(-beta-i), the exact Laplace transform.
invlap::LaplaceFunction laplace_dual(const PowerLawPolynomial& model);

/// n Chebyshev points of the first kind on [a, b], ascending.
std::vector<mp::BigReal> chebyshev_nodes(const mp::BigReal& a, const mp::BigReal& b, int n);

/// {"beta", "coeffs", "precision", "residual"} with decimal strings.
std::string to_json(const PowerLawPolynomial& model);
/// Throws ParseError on malformed input.
PowerLawPolynomial from_json(const std::string& text);

}  // namespace lapinv::fitpoly

#endif  // LAPINV_FITPOLY_HPP
