#include "lapinv/oracles/dglap.hpp"

#include <cmath>

#include "lapinv/oracles/special.hpp"

namespace lapinv::oracles {

using mp::BigComplex;
using mp::BigReal;

namespace {

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
  Matrix2 c;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  }
  return c;
}

double norm_inf(const Matrix2& a) {
  double n = 0;
  for (const auto& row : a) n = std::max(n, mp::abs(row[0]).to_double() + mp::abs(row[1]).to_double());
  return n;
}

}  // namespace

Matrix2 singlet_matrix(const BigComplex& s, int n_f) {
  const int d = s.digits();
  const BigReal eight_thirds = BigReal(8L, d) / 3L;
  const BigComplex h = digamma_oracle(s + 1L) + mp::euler_gamma(d);
  const BigComplex a = mp::inverse(s);
  const BigComplex b = mp::inverse(s + 1L);
  const BigComplex c = mp::inverse(s + 2L);
  const BigComplex e = mp::inverse(s + 3L);
  Matrix2 m;
  m[0][0] = 4L - eight_thirds * (b + c + 2L * h);
  m[0][1] = static_cast<long>(2 * n_f) * (b - 2L * c + 2L * e);
  m[1][0] = eight_thirds * (2L * a - 2L * b + c);
  m[1][1] = BigComplex(BigReal(static_cast<long>(33 - 2 * n_f), d) / 3L) + 12L * (a - 2L * b + c - e - h);
  return m;
}

Matrix2 matrix_exp_oracle(const BigComplex& s, const BigReal& tau, int n_f) {
  const int d = s.digits();
  const int work = d + 20;
  Matrix2 a = singlet_matrix(s.with_digits(work), n_f);
  const BigReal t = tau.with_digits(work);
  for (auto& row : a) {
    for (auto& x : row) x *= t;
  }
  const double n = norm_inf(a);
  const int squarings = n > 0.25 ? static_cast<int>(std::ceil(std::log2(n / 0.25))) : 0;
  const BigReal scale = mp::pow(BigReal(2L, work), static_cast<long>(-squarings));
  for (auto& row : a) {
    for (auto& x : row) x *= scale;
  }
  Matrix2 result;
  Matrix2 term;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      result[i][j] = BigComplex(BigReal(i == j ? 1L : 0L, work));
      term[i][j] = result[i][j];
    }
  }
  const double eps = std::pow(10.0, -work);
  for (long k = 1; k < 10 * work; ++k) {
    term = multiply(term, a);
    for (auto& row : term) {
      for (auto& x : row) x /= k;
    }
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) result[i][j] += term[i][j];
    }
    if (norm_inf(term) < eps) break;
  }
  for (int i = 0; i < squarings; ++i) result = multiply(result, result);
  for (auto& row : result) {
    for (auto& x : row) x = x.with_digits(d);
  }
  return result;
}

BigReal talbot_oracle(const std::function<BigComplex(const BigComplex&)>& F, const BigReal& t, int M) {
  const int d = t.digits();
  const BigReal r = BigReal(2L * M, d) / (t * 5L);
  const BigReal pi = mp::pi(d);
  BigReal sum = (F(BigComplex(r)) * mp::exp(r * t)).re() / 2L;
  for (int k = 1; k < M; ++k) {
    const BigReal theta = pi * static_cast<long>(k) / static_cast<long>(M);
    const BigReal cot = mp::cos(theta) / mp::sin(theta);
    const BigComplex s(r * theta * cot, r * theta);
    const BigReal sigma = theta + (theta * cot - 1L) * cot;
    const BigComplex factor(BigReal(1L, d), sigma);
    sum += (mp::exp(s * t) * F(s) * factor).re();
  }
  return sum * r / static_cast<long>(M);
}

}  // namespace lapinv::oracles
