#include "lapinv/oracles/pade.hpp"

#include <utility>

namespace lapinv::oracles {

using mp::BigReal;

std::optional<PadeSolve> pade_by_linear_solve(const BigReal& beta, int twoN, std::string* why) {
  const int digits = beta.digits();
  const int n = twoN;
  const int m = twoN - 1;

  // c_k = 1/Gamma(beta+k) straight from MPFR, no recurrence.
  std::vector<BigReal> c;
  for (int k = 0; k <= m + n; ++k) {
    BigReal g(digits);
    const BigReal arg = beta + static_cast<long>(k);
    mpfr_gamma(g.raw(), arg.raw(), MPFR_RNDN);
    c.push_back(1L / g);
  }
  auto coeff = [&](int k) { return k < 0 ? BigReal(digits) : c[k]; };

  // Rows k = m+1 .. m+n of sum_{i=0}^{n} q_i c_{k-i} = 0 with q_0 = 1.
  std::vector<std::vector<BigReal>> a(n, std::vector<BigReal>(n + 1, BigReal(digits)));
  for (int r = 0; r < n; ++r) {
    const int k = m + 1 + r;
    for (int i = 1; i <= n; ++i) a[r][i - 1] = coeff(k - i);
    a[r][n] = -coeff(k);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (mp::abs(a[r][col]) > mp::abs(a[pivot][col])) pivot = r;
    }
    if (a[pivot][col].is_zero()) {
      if (why != nullptr) *why = "singular Padé system at column " + std::to_string(col);
      return std::nullopt;
    }
    std::swap(a[pivot], a[col]);
    for (int r = col + 1; r < n; ++r) {
      const BigReal f = a[r][col] / a[col][col];
      for (int j = col; j <= n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<BigReal> q(n + 1, BigReal(digits));
  q[0] = BigReal(1L, digits);
  for (int r = n - 1; r >= 0; --r) {
    BigReal s = a[r][n];
    for (int j = r + 1; j < n; ++j) s -= a[r][j] * q[j + 1];
    q[r + 1] = s / a[r][r];
  }
  PadeSolve out;
  out.denominator = q;
  for (int k = 0; k <= m; ++k) {
    BigReal s(digits);
    for (int i = 0; i <= std::min(k, n); ++i) s += q[i] * coeff(k - i);
    out.numerator.push_back(std::move(s));
  }
  return out;
}

}  // namespace lapinv::oracles
