#pragma once

// Asymptotic numerical currents of a charge moving with fixed four-velocity v:
//
//   j_out/in(eta, m v; x) = int dtau theta(+-tau) eta(x - tau v)
//   j_as = j_out + j_in
//
// Position values are closed-form (Gaussian times erfc along the line), the
// Fourier transforms are the structured pairs
//
//   j_out/in_hat(q) = +-i eta_hat(q) / (v.q +- i0)
//                   = +-i eta_hat(q) PV 1/(v.q)  +  pi eta_hat(q) delta(v.q)
//   j_as_hat(q)     = 2 pi eta_hat(q) delta(v.q).
//
// The QED current is v^mu times the scalar one.

#include <functional>

#include "irscat/epsscan.hpp"
#include "irscat/minkowski.hpp"
#include "irscat/quadrature.hpp"
#include "irscat/testfunction.hpp"

namespace irscat {

enum class CurrentDirection { out, in, as };
enum class CurrentModel { scalar, qed };

struct CurrentSpec {
  TestFunction profile;
  OnShellMomentum momentum;  // p = m v
  CurrentDirection direction = CurrentDirection::out;
  CurrentModel model = CurrentModel::scalar;
};

namespace detail {
// int over the requested tau range of exp(-|x - a - tau v|_E^2 / (2 sigma^2)).
inline double gauss_line_integral(const FourVector& xa, const FourVector& v, double sigma,
                                  CurrentDirection dir) {
  const double C = v.euclid_norm2();
  const double B = xa.t * v.t + xa.x * v.x + xa.y * v.y + xa.z * v.z;
  const double A = xa.euclid_norm2();
  const double s2 = sigma * sigma;
  const double envelope = std::exp(-(A - B * B / C) / (2.0 * s2));
  if (dir == CurrentDirection::as) return std::sqrt(2.0 * pi * s2 / C) * envelope;
  const double arg = B / (sigma * std::sqrt(2.0 * C));
  const double half = std::sqrt(pi * s2 / (2.0 * C)) * envelope;
  return half * std::erfc(dir == CurrentDirection::out ? -arg : arg);
}
}  // namespace detail

// Scalar-model current at a position point (QED: multiply by v^mu).
inline double current_position(const TestFunction& eta, const FourVelocity& v,
                               CurrentDirection dir, const FourVector& x) {
  if (eta.is_bump()) throw std::invalid_argument("currents need the Gaussian family");
  double acc = 0.0;
  for (const auto& t : eta.terms()) {
    const double norm = 1.0 / std::pow(2.0 * pi * t.sigma * t.sigma, 2);
    acc += t.coeff * norm * detail::gauss_line_integral(x - t.a, v.u, t.sigma, dir);
  }
  return acc;
}

// Structured Fourier value: pv_coeff multiplies PV 1/(v.q), delta_weight
// multiplies delta(v.q).
struct CurrentFourier {
  cplx pv_coeff = 0.0;
  cplx delta_weight = 0.0;
};

inline CurrentFourier current_fourier(const TestFunction& eta, const FourVelocity& v,
                                      CurrentDirection dir, const FourVector& q) {
  const cplx eh = eta.eval(q, TFSpace::momentum);
  CurrentFourier f;
  switch (dir) {
    case CurrentDirection::out:
      f.pv_coeff = iu * eh;
      f.delta_weight = pi * eh;
      break;
    case CurrentDirection::in:
      f.pv_coeff = -iu * eh;
      f.delta_weight = pi * eh;
      break;
    case CurrentDirection::as:
      f.delta_weight = 2.0 * pi * eh;
      break;
  }
  return f;
}

// Pointwise Fourier value off the delta support (v.q != 0).
inline cplx current_fourier_pointwise(const TestFunction& eta, const FourVelocity& v,
                                      CurrentDirection dir, const FourVector& q) {
  const double vq = mdot(v.u, q);
  if (vq == 0.0) throw std::invalid_argument("current value on v.q = 0 is distributional");
  const CurrentFourier f = current_fourier(eta, v, dir, q);
  return f.pv_coeff / vq;
}

struct CurrentEvalResult {
  // For model=qed the value is value * v^mu; vector() spells that out.
  cplx value = 0.0;
  CurrentFourier fourier;  // populated for momentum-space evaluation
  CurrentModel model = CurrentModel::scalar;
  FourVelocity v;
  std::array<cplx, 4> vector() const {
    if (model != CurrentModel::qed) throw std::logic_error("scalar current has no index");
    return {value * v.u.t, value * v.u.x, value * v.u.y, value * v.u.z};
  }
};

inline CurrentEvalResult current_eval(const CurrentSpec& spec, const FourVector& point,
                                      TFSpace space) {
  CurrentEvalResult r;
  r.model = spec.model;
  r.v = spec.momentum.velocity();
  if (space == TFSpace::position) {
    r.value = current_position(spec.profile, r.v, spec.direction, point);
  } else {
    r.fourier = current_fourier(spec.profile, r.v, spec.direction, point);
    const double vq = mdot(r.v.u, point);
    r.value = (vq != 0.0 && spec.direction != CurrentDirection::as) ? r.fourier.pv_coeff / vq
                                                                    : cplx(0.0);
  }
  return r;
}

// (-i q_mu) j^mu_out(q) - eta_hat(q) evaluated off the delta (v.q != 0); the
// in-direction residual is (-i q_mu) j^mu_in(q) + eta_hat(q).
inline cplx current_divergence_residual(const TestFunction& eta, const FourVelocity& v,
                                        const FourVector& q, CurrentDirection dir) {
  if (dir == CurrentDirection::as)
    throw std::invalid_argument("divergence of the as-current is supported on v.q = 0 only");
  const double vq = mdot(v.u, q);
  if (vq == 0.0) throw std::invalid_argument("divergence residual requires v.q != 0");
  const cplx jq = current_fourier_pointwise(eta, v, dir, q);
  const cplx div = -iu * vq * jq;  // q_mu j^mu = (v.q) * scalar current
  const double sign = (dir == CurrentDirection::out) ? 1.0 : -1.0;
  return div - sign * eta.eval(q, TFSpace::momentum);
}

// lambda^3 m int dmu_1(u) |f(m u)|^2 j_dir(eta, m u; lambda v), evaluated with
// the exact substitution u_vec = v_vec + w_vec/lambda (the lambda^3 cancels
// against the measure), as an integral over w in [-W, W]^3.
inline double current_timelike_value(const TestFunction& eta,
                                     const std::function<cplx(const OnShellMomentum&)>& f,
                                     double mass, const FourVelocity& v, double lambda,
                                     CurrentDirection dir, int n_w = 20, double W = 9.0) {
  const Rule1D rw = gauss_legendre_ab(n_w, -W, W);
  const FourVector x = lambda * v.u;
  double acc = 0.0;
  for (std::size_t i = 0; i < rw.size(); ++i)
    for (std::size_t j = 0; j < rw.size(); ++j)
      for (std::size_t k = 0; k < rw.size(); ++k) {
        const double ux = v.u.x + rw.x[i] / lambda;
        const double uy = v.u.y + rw.x[j] / lambda;
        const double uz = v.u.z + rw.x[k] / lambda;
        const double u0 = std::sqrt(1.0 + ux * ux + uy * uy + uz * uz);
        const FourVelocity u(FourVector{u0, ux, uy, uz});
        const OnShellMomentum mu(mass, mass * ux, mass * uy, mass * uz);
        const double jval = current_position(eta, u, dir, x);
        if (jval == 0.0) continue;
        const double w3 = rw.w[i] * rw.w[j] * rw.w[k];
        acc += w3 * std::norm(f(mu)) * jval / (std::pow(2.0 * pi, 3) * 2.0 * u0);
      }
  return mass * acc;
}

inline double current_timelike_theory(const std::function<cplx(const OnShellMomentum&)>& f,
                                      double mass, const FourVelocity& v) {
  const OnShellMomentum mv(mass, mass * v.u.x, mass * v.u.y, mass * v.u.z);
  return mass / (2.0 * std::pow(2.0 * pi, 3)) * std::norm(f(mv));
}

// Scan over a list of lambdas (recorded as eps = 1/lambda, decreasing).
inline EpsScan current_timelike_limit(const TestFunction& eta,
                                      const std::function<cplx(const OnShellMomentum&)>& f,
                                      double mass, const FourVelocity& v,
                                      const std::vector<double>& lambdas,
                                      CurrentDirection dir = CurrentDirection::as) {
  EpsScan s;
  s.evaluator_id = "current_timelike_limit";
  for (double l : lambdas) {
    s.eps.push_back(1.0 / l);
    s.values.push_back(current_timelike_value(eta, f, mass, v, l, dir));
  }
  s.check_invariants();
  return s;
}

}  // namespace irscat
