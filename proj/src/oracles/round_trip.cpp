#include "lapinv/oracles/round_trip.hpp"

#include <cmath>

#include "lapinv/error.hpp"
#include "lapinv/oracles/dglap.hpp"

namespace lapinv::oracles {

using fitpoly::PowerLawPolynomial;
using mp::BigComplex;
using mp::BigReal;
using mp::ExactReal;

namespace {

// sum_i B_i (beta)_i s^(-beta-i), summed here rather than through laplace_dual.
BigComplex transform(const PowerLawPolynomial& m, const BigComplex& s) {
  const int d = s.digits();
  const BigReal beta = m.beta().at(d);
  const BigComplex inv = mp::inverse(s);
  BigComplex acc(d);
  BigReal poch(1L, d);
  BigComplex p = mp::pow(s, -beta);
  for (size_t i = 0; i < m.coeffs().size(); ++i) {
    acc += p * (m.coeffs()[i].with_digits(d) * poch);
    poch *= beta + static_cast<long>(i);
    p *= inv;
  }
  return acc;
}

}  // namespace

BigReal evolved_oracle(int row, const PowerLawPolynomial& f0, const PowerLawPolynomial& g0, const BigReal& tau,
                       int n_f, const BigReal& v, int talbot_points) {
  const int work = talbot_points + 20;
  const BigReal t = tau.with_digits(work);
  auto F = [&](const BigComplex& s) {
    const Matrix2 m = matrix_exp_oracle(s, t.with_digits(s.digits()), n_f);
    const auto& r = m[static_cast<size_t>(row)];
    return r[0] * transform(f0, s) + r[1] * transform(g0, s);
  };
  return talbot_oracle(F, v.with_digits(work), talbot_points).with_digits(v.digits());
}

RoundTripResult devolution_round_trip(const PowerLawPolynomial& g0, const PowerLawPolynomial& f0,
                                      const RoundTripOptions& o) {
  const int p = o.kernel.precision;
  const auto nodes = fitpoly::chebyshev_nodes(BigReal::from_double(1e-3, p), BigReal(9L, p), o.nodes);
  const dglap::EvolutionProblem forward{g0, f0, o.tau, o.n_f, o.kernel, o.quad_digits};
  const auto evolved = dglap::evolve_gluon(forward, nodes);
  std::vector<std::pair<BigReal, BigReal>> gs;
  std::vector<std::pair<BigReal, BigReal>> fs;
  const BigReal tau = o.tau.at(p);
  for (const auto& pt : evolved.points) {
    if (!pt.value) throw Error(ErrorKind::EvaluatorFailure, "forward evolution failed: " + pt.error);
    gs.emplace_back(pt.v, *pt.value);
    fs.emplace_back(pt.v, evolved_oracle(0, f0, g0, tau, o.n_f, pt.v));
  }
  const ExactReal gluon_beta = ExactReal::integer(1) + ExactReal::integer(12) * o.tau;
  const ExactReal quark_beta = ExactReal::integer(1) + ExactReal::integer(16) * o.tau / ExactReal::integer(3);
  const PowerLawPolynomial g_mid = fitpoly::fit(gs, gluon_beta, o.degree, p);
  const PowerLawPolynomial f_mid = fitpoly::fit(fs, quark_beta, o.degree, p);

  const dglap::EvolutionProblem backward{g_mid, f_mid, -o.tau, o.n_f, o.kernel, o.quad_digits};
  const auto back = dglap::evolve_gluon(backward, o.check_points);
  RoundTripResult out;
  out.gluon_fit_residual = g_mid.residual().to_double();
  out.quark_fit_residual = f_mid.residual().to_double();
  for (const auto& pt : back.points) {
    if (!pt.value) throw Error(ErrorKind::EvaluatorFailure, "devolution failed: " + pt.error);
    const BigReal want = fitpoly::eval(g0, pt.v);
    const double e = (mp::abs(*pt.value - want) / mp::abs(want)).to_double();
    out.errors.push_back(e);
    out.worst = std::max(out.worst, e);
  }
  return out;
}

}  // namespace lapinv::oracles
