#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <utility>

#include "lapinv/error.hpp"
#include "lapinv/hadamard.hpp"

namespace lapinv::hadamard {

using mp::BigReal;

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<BigReal, BigReal> legendre(int n, const BigReal& x) {
  BigReal p0(1L, x.digits());
  BigReal p1 = x;
  for (int j = 1; j < n; ++j) {
    BigReal p2 = (x * p1 * static_cast<long>(2 * j + 1) - p0 * static_cast<long>(j)) / static_cast<long>(j + 1);
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  BigReal dp = (x * p1 - p0) * static_cast<long>(n) / (x * x - 1L);
  return {std::move(p1), std::move(dp)};
}

GaussLegendre compute_rule(int n, int digits) {
  const int work = digits + 10;
  const BigReal tol = mp::ten_to_minus(work - 4, work);
  GaussLegendre rule;
  rule.nodes.assign(static_cast<size_t>(n), BigReal(digits));
  rule.weights.assign(static_cast<size_t>(n), BigReal(digits));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    BigReal x = BigReal::from_double(std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5)), work);
    BigReal dp(work);
    for (int iter = 0; iter < 100; ++iter) {
      auto [p, d] = legendre(n, x);
      const BigReal step = p / d;
      x -= step;
      dp = std::move(d);
      if (mp::abs(step) <= tol) {
        dp = legendre(n, x).second;
        break;
      }
    }
    const BigReal w = 2L / ((1L - x * x) * dp * dp);
    rule.nodes[static_cast<size_t>(i)] = (-x).with_digits(digits);
    rule.nodes[static_cast<size_t>(n - 1 - i)] = x.with_digits(digits);
    rule.weights[static_cast<size_t>(i)] = w.with_digits(digits);
    rule.weights[static_cast<size_t>(n - 1 - i)] = w.with_digits(digits);
  }
  if (n % 2 == 1) rule.nodes[static_cast<size_t>(n / 2)] = BigReal(digits);
  return rule;
}

int rule_order(int digits) { return std::clamp(digits / 3 + 12, 20, 64); }

struct Panel {
  BigReal a;
  BigReal b;
  BigReal value;
  BigReal l1;
};

Panel gauss_panel(const std::function<BigReal(const BigReal&)>& f, const BigReal& a, const BigReal& b,
                  const GaussLegendre& rule) {
  const BigReal half = (b - a) / 2L;
  const BigReal mid = (a + b) / 2L;
  BigReal sum(a.digits());
  BigReal l1(a.digits());
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const BigReal fx = f(mid + half * rule.nodes[i]);
    if (!fx.is_finite()) throw Error(ErrorKind::QuadratureFailure, "integrand is not finite");
    sum += rule.weights[i] * fx;
    l1 += rule.weights[i] * mp::abs(fx);
  }
  return {a, b, sum * half, l1 * mp::abs(half)};
}

}  // namespace

const GaussLegendre& gauss_legendre(int n, int digits) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<GaussLegendre>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, digits}];
  if (!slot) slot = std::make_unique<GaussLegendre>(compute_rule(n, digits));
  return *slot;
}

BigReal integrate(const std::function<BigReal(const BigReal&)>& f, const BigReal& a, const BigReal& b,
                  const QuadratureOptions& options, const std::vector<BigReal>& breakpoints) {
  const int digits = options.work_digits;
  const GaussLegendre& rule = gauss_legendre(rule_order(options.target_digits), digits);
  std::vector<BigReal> cuts{a.with_digits(digits)};
  for (const auto& x : breakpoints) {
    if (x > cuts.back() && x < b) cuts.push_back(x.with_digits(digits));
  }
  cuts.push_back(b.with_digits(digits));

  std::vector<Panel> pending;
  BigReal scale(digits);
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    pending.push_back(gauss_panel(f, cuts[i], cuts[i + 1], rule));
    scale += pending.back().l1;
  }
  if (scale.is_zero()) return scale;
  const BigReal tol = mp::ten_to_minus(options.target_digits + 1, digits) * scale;
  const BigReal min_width = mp::ten_to_minus(digits - 5, digits) * (mp::abs(a) + mp::abs(b));

  BigReal total(digits);
  int panels = 0;
  while (!pending.empty()) {
    Panel p = std::move(pending.back());
    pending.pop_back();
    const BigReal mid = (p.a + p.b) / 2L;
    Panel left = gauss_panel(f, p.a, mid, rule);
    Panel right = gauss_panel(f, mid, p.b, rule);
    const BigReal refined = left.value + right.value;
    if (mp::abs(refined - p.value) <= tol) {
      total += refined;
      continue;
    }
    if (++panels > options.max_panels || mp::abs(p.b - p.a) < min_width) {
      throw Error(ErrorKind::QuadratureFailure,
                  "adaptive Gauss-Legendre did not reach 1e-" + std::to_string(options.target_digits) +
                      " on [" + a.to_string(10) + ", " + b.to_string(10) + "]");
    }
    pending.push_back(std::move(left));
    pending.push_back(std::move(right));
  }
  return total;
}

}  // namespace lapinv::hadamard
