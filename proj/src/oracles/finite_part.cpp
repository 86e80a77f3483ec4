#include "lapinv/oracles/finite_part.hpp"

namespace lapinv::oracles {

using mp::BigReal;

BigReal fp_series_oracle(const std::vector<BigReal>& coeffs, const BigReal& beta, const BigReal& v) {
  const int digits = std::max(beta.digits(), v.digits());
  BigReal sum(digits);
  for (size_t m = 0; m < coeffs.size(); ++m) {
    if (coeffs[m].is_zero()) continue;
    const BigReal e = beta.with_digits(digits) + static_cast<long>(m);
    sum += coeffs[m] * mp::exp(mp::log(v.with_digits(digits)) * e) / e;
  }
  return sum;
}

std::vector<BigReal> cos_series(int digits) {
  std::vector<BigReal> out;
  BigReal inv_fact(1L, digits);  // 1/(2n)!
  const BigReal stop = mp::ten_to_minus(digits + 5, digits);
  for (long n = 0; inv_fact > stop; ++n) {
    out.push_back(n % 2 == 0 ? inv_fact : -inv_fact);
    out.emplace_back(digits);
    inv_fact /= (2 * n + 1) * (2 * n + 2);
  }
  return out;
}

}  // namespace lapinv::oracles
