#pragma once

// Two-point kernels in structured momentum-space form.  With the Fourier
// convention t(x) = int d^4k/(2pi)^4 exp(-i k.x) t_hat(k), every kernel here is
//
//   t_hat(k) = pv_coeff * PV 1/(m^2 - k^2)  +  delta_weight(k) * delta(k^2 - m^2),
//
// and the six kinds are fixed by their defining Fourier representations:
//
//   commutator  D_m      : delta 2 pi i sgn(k0),   no PV part
//   wightman    D_m^(+)  : delta 2 pi i theta(k0), no PV part
//   feynman     D^F      : delta  i pi,            PV coeff 1
//   retarded              : delta +i pi sgn(k0),   PV coeff 1
//   advanced              : delta -i pi sgn(k0),   PV coeff 1
//   dirac       D^D      : no delta part,          PV coeff 1
//
// Kernels are never evaluated pointwise as distributions; use sites consume
// the (delta, PV) decomposition inside quadratures.  The massless Dirac
// propagator additionally has the position-space form D_0^D(x) = delta(x^2)/4pi
// whose agreement with the PV representation is enforced by a mandatory test.

#include <functional>
#include <vector>

#include "irscat/minkowski.hpp"
#include "irscat/quadrature.hpp"
#include "irscat/testfunction.hpp"

namespace irscat {

enum class PropagatorKind { commutator, wightman, feynman, retarded, advanced, dirac };

struct PropagatorKernel {
  PropagatorKind kind;
  double mass = 0.0;
  cplx pv_coeff = 0.0;                           // multiplies PV 1/(m^2 - k^2)
  std::function<cplx(double)> delta_weight;      // multiplies delta(k^2 - m^2), arg k0

  cplx delta_part(double k0) const { return delta_weight ? delta_weight(k0) : cplx(0.0); }
};

inline PropagatorKernel propagator_kernel(PropagatorKind kind, double m) {
  if (m < 0.0) throw std::invalid_argument("propagator_kernel: mass must be >= 0");
  PropagatorKernel k;
  k.kind = kind;
  k.mass = m;
  const cplx two_pi_i = 2.0 * pi * iu;
  switch (kind) {
    case PropagatorKind::commutator:
      k.delta_weight = [two_pi_i](double k0) { return two_pi_i * (k0 >= 0 ? 1.0 : -1.0); };
      break;
    case PropagatorKind::wightman:
      k.delta_weight = [two_pi_i](double k0) { return two_pi_i * (k0 >= 0 ? 1.0 : 0.0); };
      break;
    case PropagatorKind::feynman:
      k.pv_coeff = 1.0;
      k.delta_weight = [](double) { return iu * pi; };
      break;
    case PropagatorKind::retarded:
      k.pv_coeff = 1.0;
      k.delta_weight = [](double k0) { return iu * pi * (k0 >= 0 ? 1.0 : -1.0); };
      break;
    case PropagatorKind::advanced:
      k.pv_coeff = 1.0;
      k.delta_weight = [](double k0) { return -iu * pi * (k0 >= 0 ? 1.0 : -1.0); };
      break;
    case PropagatorKind::dirac:
      k.pv_coeff = 1.0;
      break;
  }
  return k;
}

struct PVResult {
  cplx value = 0.0;
  double tol = 0.0;
};

// Principal value of int_a^b f(x)/(x - pole) dx by symmetric subtraction: on the
// largest window symmetric about the pole the odd part integrates to zero and
// the smooth difference quotient (f(x) - f(2 pole - x)) / (2 (x - pole)) remains;
// outside the window plain Gauss-Legendre applies.  A pole outside [a,b]
// degrades to plain quadrature.
template <class F>
PVResult pv_integrate(const F& f, double pole, double a, double b, int order = 64) {
  if (a >= b) throw std::invalid_argument("pv_integrate: empty interval");
  auto plain = [&](double lo, double hi) {
    cplx acc = 0.0;
    if (hi <= lo) return acc;
    const Rule1D r = gauss_legendre_ab(order, lo, hi);
    for (std::size_t i = 0; i < r.size(); ++i) acc += r.w[i] * f(r.x[i]) / (r.x[i] - pole);
    return acc;
  };
  PVResult out;
  if (pole <= a || pole >= b) {
    if (pole == a || pole == b) throw std::invalid_argument("pv_integrate: pole on boundary");
    const cplx v1 = plain(a, b);
    // refine once for the tolerance estimate
    const cplx v2 = plain(a, 0.5 * (a + b)) + plain(0.5 * (a + b), b);
    out.value = v2;
    out.tol = std::abs(v2 - v1);
    return out;
  }
  const double w = std::min(pole - a, b - pole);
  auto window = [&](int n) {
    // int_{pole-w}^{pole+w} f(x)/(x-pole) dx = int_0^w [f(pole+u) - f(pole-u)]/u du
    const Rule1D r = gauss_legendre_ab(n, 0.0, w);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const double u = r.x[i];
      acc += r.w[i] * (f(pole + u) - f(pole - u)) / u;
    }
    return acc;
  };
  const cplx w1 = window(order), w2 = window(2 * order);
  const cplx rest = plain(a, pole - w) + plain(pole + w, b);
  out.value = w2 + rest;
  out.tol = std::abs(w2 - w1);
  return out;
}

// Max residual of a kernel-level identity over a probe set of momenta.  The PV
// coefficients are constants; the delta weights are compared at probe k0
// values of both signs.
enum class KernelIdentity { feynman_split, dirac_average, ret_minus_adv_commutator };

inline double kernel_identity_residual(KernelIdentity which, double m = 1.0) {
  const auto F = propagator_kernel(PropagatorKind::feynman, m);
  const auto W = propagator_kernel(PropagatorKind::wightman, m);
  const auto R = propagator_kernel(PropagatorKind::retarded, m);
  const auto A = propagator_kernel(PropagatorKind::advanced, m);
  const auto D = propagator_kernel(PropagatorKind::dirac, m);
  const auto C = propagator_kernel(PropagatorKind::commutator, m);
  const std::vector<double> probes = {-2.7, -1.3, -0.41, 0.37, 0.92, 1.8, 3.6};
  double res = 0.0;
  auto upd = [&](cplx d) { res = std::max(res, std::abs(d)); };
  switch (which) {
    case KernelIdentity::feynman_split:
      upd(F.pv_coeff - (W.pv_coeff + A.pv_coeff));
      for (double k0 : probes) upd(F.delta_part(k0) - (W.delta_part(k0) + A.delta_part(k0)));
      break;
    case KernelIdentity::dirac_average:
      upd(D.pv_coeff - 0.5 * (R.pv_coeff + A.pv_coeff));
      for (double k0 : probes) upd(D.delta_part(k0) - 0.5 * (R.delta_part(k0) + A.delta_part(k0)));
      break;
    case KernelIdentity::ret_minus_adv_commutator:
      upd((R.pv_coeff - A.pv_coeff) - C.pv_coeff);
      for (double k0 : probes) upd((R.delta_part(k0) - A.delta_part(k0)) - C.delta_part(k0));
      break;
  }
  return res;
}

// Both sides of the mandatory sign cross-check for the massless Dirac kernel,
// smeared with an isotropic Gaussian of width sigma (position normalization
// (2 pi sigma^2)^-2):
//   position side  (1/4pi) int d^4x delta(x^2) G(x)            = 1/(8 pi^2 sigma^2)
//   momentum side  int d^4k/(2pi)^4 G_hat(-k) PV 1/(-k^2)
// with G_hat(k) = exp(-sigma^2 |k|_E^2/2).
inline double dirac0_position_smear(double sigma) { return 1.0 / (8.0 * pi * pi * sigma * sigma); }

inline PVResult dirac0_momentum_smear(double sigma, int n_radial = 160, int pv_order = 64) {
  // inner k0 integral at fixed r = |k|:  PV int dk0 exp(-s^2 k0^2/2) / (m^2=0 - k0^2 + r^2)
  // 1/(r^2 - k0^2) = [1/(k0 + r) - 1/(k0 - r)] / (2r)
  const double s2 = sigma * sigma;
  const double cut = 12.0 / sigma;
  PVResult out;
  double tol = 0.0;
  const Rule1D rr = gauss_legendre_ab(n_radial, 1e-6, cut);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < rr.size(); ++i) {
    const double r = rr.x[i];
    auto gk = [s2](double k0) { return cplx(std::exp(-0.5 * s2 * k0 * k0)); };
    const PVResult pm = pv_integrate(gk, -r, -cut - r, cut + r, pv_order);
    const PVResult pp = pv_integrate(gk, r, -cut - r, cut + r, pv_order);
    const cplx inner = (pm.value - pp.value) / (2.0 * r);
    tol = std::max(tol, pm.tol + pp.tol);
    acc += rr.w[i] * 4.0 * pi * r * r * std::exp(-0.5 * s2 * r * r) * inner;
  }
  out.value = acc / std::pow(2.0 * pi, 4);
  out.tol = tol;
  return out;
}

}  // namespace irscat
