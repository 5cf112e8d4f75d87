#pragma once

// The relativistic Coulomb phase
//
//   Phi_out/in(eta, eta', g, p1, p2)
//     = int d4x d4y g(x) g(y) D0^D(x-y) j_out/in(eta,p1;x) j_out/in(eta',p2;y)
//
// in the three computable representations the proof provides:
//
//  * the 1D divergent core (per tau2-branch, v2 rest frame)
//      sum_± 1/(8pi) int dtau1 theta(+-tau1-eps) theta(+-tau2^±-eps)
//            g(tau1 v1) g(tau2^± v2) / |tau1 vec(v1)|
//    whose log-fit against log(1/eps) recovers the universal coefficient
//      b = 1/(4pi) * ((v1.v2)^2 - 1)^(-1/2),
//
//  * the finite part for profile differences (eta_hat(0) = 0 or eta'_hat(0) = 0):
//    a 4D Gaussian-autocorrelation integral times a regularized 1D line
//    integral, exact in the adiabatic limit,
//
//  * the full cutoff value at fixed eps, either in the time representation
//    (Gaussian reductions leave a 2D tau grid with a closed-form angular
//    integral and a 1D radial quadrature) or in the momentum representation
//    (nested principal values, photon-like variable last).
//
// Everything is evaluated in the rest frame of v2; inputs are boosted in and
// the outputs are frame scalars.

#include <vector>

#include "irscat/currents.hpp"
#include "irscat/epsscan.hpp"
#include "irscat/minkowski.hpp"
#include "irscat/propagators.hpp"
#include "irscat/quadrature.hpp"
#include "irscat/ratefit.hpp"
#include "irscat/testfunction.hpp"

namespace irscat {

struct CoulombPhaseResult {
  double value = 0.0;
  double divergent_b = 0.0;   // populated by scan fits
  double finite_a = 0.0;
  double tolerance = 0.0;
};

// Universal divergence coefficient of Thm-type closed form.
inline double coulomb_b_theory(const FourVelocity& v1, const FourVelocity& v2) {
  const double w = mdot(v1.u, v2.u);
  if (w <= 1.0) throw std::invalid_argument("coulomb_b_theory: coinciding velocities");
  return 1.0 / (4.0 * pi * std::sqrt(w * w - 1.0));
}
inline double coulomb_b_theory(const OnShellMomentum& p1, const OnShellMomentum& p2) {
  return coulomb_b_theory(p1.velocity(), p2.velocity());
}

// Non-relativistic coefficient (1/4pi) m / |p1_vec - p2_vec|.
inline double coulomb_b_nonrel(const OnShellMomentum& p1, const OnShellMomentum& p2) {
  const double dx = p1.px - p2.px, dy = p1.py - p2.py, dz = p1.pz - p2.pz;
  const double d = std::sqrt(dx * dx + dy * dy + dz * dz);
  if (d == 0.0) throw std::invalid_argument("coulomb_b_nonrel: coinciding momenta");
  return p1.mass / (4.0 * pi * d);
}

namespace detail {

struct RestFrameKinematics {
  FourVelocity v1;  // boosted so that v2 = (1,0,0,0)
  double v1_spatial = 0.0;

  static RestFrameKinematics make(const OnShellMomentum& p1, const OnShellMomentum& p2) {
    if (p1.mass <= 0.0 || p2.mass <= 0.0)
      throw std::invalid_argument("Coulomb phase needs massive momenta");
    const auto B = LorentzBoost::to_rest_of(p2.velocity());
    RestFrameKinematics k;
    k.v1 = B.apply(p1.velocity());
    k.v1_spatial = k.v1.u.spatial_norm();
    if (k.v1_spatial < 1e-12)
      throw std::invalid_argument("Coulomb phase undefined for coinciding momenta");
    return k;
  }
};

}  // namespace detail

// One point of the 1D divergent core at cutoff eps (v2 rest frame; both
// tau2 branches; the switching function is evaluated in position space).
inline double coulomb_divergent_value(const TestFunction& g, const OnShellMomentum& p1,
                                      const OnShellMomentum& p2, double eps,
                                      CurrentDirection dir, int n_log = 400) {
  if (dir == CurrentDirection::as)
    throw std::invalid_argument("Coulomb phases are defined for out/in currents");
  const auto kin = detail::RestFrameKinematics::make(p1, p2);
  const FourVector v1 = kin.v1.u;
  const double vsp = kin.v1_spatial;
  const double sgn = (dir == CurrentDirection::out) ? 1.0 : -1.0;
  // tau2 branches tau2^± = tau1 (v1^0 ± |v1_vec|); for out both are positive
  // with tau1 > 0, so theta(tau2^± - eps) trims the lower end per branch.
  double acc = 0.0;
  for (double br : {1.0, -1.0}) {
    const double slope = v1.t + br * vsp;           // > 0
    const double lo = std::max(eps, eps / slope);   // theta constraints
    const double hi = 40.0 / std::min(1.0, eps * 40.0);  // generous; g cuts off
    // integrand g(tau1 v1) g(tau2 v2) / (tau1 vsp); log-spaced nodes
    const Rule1D rt = gauss_legendre_ab(n_log, std::log(lo), std::log(hi));
    double branch = 0.0;
    for (std::size_t i = 0; i < rt.size(); ++i) {
      const double tau1 = std::exp(rt.x[i]);
      const double tau2 = tau1 * slope;
      const double g1 = g.eval(sgn * tau1 * v1, TFSpace::position).real();
      const double g2 = g.eval(FourVector{sgn * tau2, 0, 0, 0}, TFSpace::position).real();
      branch += rt.w[i] * g1 * g2 / vsp;  // extra tau1 from the log measure cancels 1/tau1
    }
    acc += branch / (8.0 * pi);
  }
  return acc;
}

inline EpsScan coulomb_divergent_scan(const TestFunction& g, const OnShellMomentum& p1,
                                      const OnShellMomentum& p2,
                                      const std::vector<double>& eps_list,
                                      CurrentDirection dir = CurrentDirection::out) {
  EpsScan s;
  s.evaluator_id = "coulomb_divergent_scan";
  for (double e : eps_list) {
    s.eps.push_back(e);
    s.values.push_back(coulomb_divergent_value(g, p1, p2, e, dir));
  }
  s.check_invariants();
  return s;
}

namespace detail {

// Gaussian autocorrelation A(y) = int d4x eta(x) eta'(x -+ y) as a list of
// position-normalized Gaussian terms (weight, width^2 sum, center).
struct GaussBlob {
  double weight;   // multiplies (2 pi S)^-2 exp(-|y - c|^2/(2S))
  double S;        // sigma1^2 + sigma2^2
  FourVector c;
};

inline std::vector<GaussBlob> autocorrelation(const TestFunction& eta, const TestFunction& etap,
                                              CurrentDirection dir) {
  if (eta.is_bump() || etap.is_bump())
    throw std::invalid_argument("Coulomb phases need the Gaussian family");
  const double sgn = (dir == CurrentDirection::out) ? 1.0 : -1.0;
  std::vector<GaussBlob> out;
  for (const auto& t1 : eta.terms())
    for (const auto& t2 : etap.terms()) {
      GaussBlob b;
      b.S = t1.sigma * t1.sigma + t2.sigma * t2.sigma;
      // out: eta'(x - y) pairs center y = a1 - a2; in: eta'(x + y) flips it
      b.c = (t1.a - t2.a) * sgn;
      b.weight = t1.coeff * t2.coeff;
      out.push_back(b);
    }
  return out;
}

// Regularized line kernel
//   K(y) = sum_± int_0^inf dtau [ theta(tau2^±(tau,y)) / (2|y_vec + tau v1_vec|)
//                                 - theta(tau - 1) / (2 tau |v1_vec|) ]
// with tau2^±(tau,y) = y^0 + tau v1^0 ± |y_vec + tau v1_vec| (v2 rest frame).
// The counterterm normalization only shifts K by a y-independent constant,
// which drops against autocorrelations with vanishing total integral.
inline double line_kernel(const FourVector& y, const FourVector& v1, int n_tau = 96) {
  const double vsp = std::sqrt(v1.spatial_norm2());
  auto radial = [&](double tau) {
    const double rx = y.x + tau * v1.x, ry = y.y + tau * v1.y, rz = y.z + tau * v1.z;
    return std::sqrt(rx * rx + ry * ry + rz * rz);
  };
  // theta switch points: tau2^± vanish where (y + tau v1)^2 = 0 (Minkowski)
  std::vector<double> seams = {0.0};
  const double yv = mdot(y, v1), y2 = msq(y);
  const double disc = yv * yv - y2;
  if (disc >= 0.0) {
    for (double r : {-yv - std::sqrt(disc), -yv + std::sqrt(disc)})
      if (r > 0.0) seams.push_back(r);
  }
  const double T = std::max(4.0, 4.0 * (std::abs(y.t) + radial(0.0) + 1.0));
  seams.push_back(1.0);
  seams.push_back(T);
  std::sort(seams.begin(), seams.end());
  double acc = 0.0;
  for (double br : {1.0, -1.0}) {
    // finite segments with the theta factors resolved per segment midpoint
    for (std::size_t s = 0; s + 1 < seams.size(); ++s) {
      const double a = seams[s], b = seams[s + 1];
      if (b - a < 1e-14) continue;
      const Rule1D rt = gauss_legendre_ab(n_tau, a, b);
      for (std::size_t i = 0; i < rt.size(); ++i) {
        const double tau = rt.x[i];
        double f = 0.0;
        const double rad = radial(tau);
        const double tau2 = y.t + tau * v1.t + br * rad;
        if (tau2 > 0.0 && rad > 1e-300) f += 1.0 / (2.0 * rad);
        if (tau > 1.0) f -= 1.0 / (2.0 * tau * vsp);
        acc += rt.w[i] * f;
      }
    }
    // tail beyond T via s = 1/tau: int_0^{1/T} ds [1/(2|s y_vec + v1_vec|) - 1/(2 vsp)]/s,
    // smooth at s = 0; the theta factors are settled for tau >= T
    const Rule1D rs = gauss_legendre_ab(n_tau, 0.0, 1.0 / T);
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const double s = rs.x[i];
      const double rx = s * y.x + v1.x, ry = s * y.y + v1.y, rz = s * y.z + v1.z;
      const double n = std::sqrt(rx * rx + ry * ry + rz * rz);
      const double diff = (1.0 / (2.0 * n) - 1.0 / (2.0 * vsp));
      acc += rs.w[i] * (s > 0.0 ? diff / s
                                : -(y.x * v1.x + y.y * v1.y + y.z * v1.z) / (2.0 * vsp * vsp * vsp));
    }
  }
  return acc;
}

}  // namespace detail

// Finite Coulomb phase of a profile-difference pair (adiabatic limit done
// analytically); requires eta_hat(0) = 0 or eta'_hat(0) = 0 and p1 != p2.
inline CoulombPhaseResult coulomb_finite(const TestFunction& eta, const TestFunction& etap,
                                         const OnShellMomentum& p1, const OnShellMomentum& p2,
                                         CurrentDirection dir = CurrentDirection::out,
                                         int n_hermite = 12, int n_tau = 64) {
  if (eta.momentum_at_origin() != 0.0 && etap.momentum_at_origin() != 0.0)
    throw std::invalid_argument(
        "coulomb_finite: one of the profiles must carry eta_hat(0) = 0");
  const auto kin = detail::RestFrameKinematics::make(p1, p2);
  const auto blobs = detail::autocorrelation(eta, etap, dir);
  const Rule1D gh = gauss_hermite(n_hermite);
  CoulombPhaseResult out;
  double acc = 0.0;
  for (const auto& b : blobs) {
    if (b.weight == 0.0) continue;
    const double sig = std::sqrt(b.S);
    // 4D Gauss-Hermite around the blob center; weight includes the Gaussian
    double blob_acc = 0.0;
    for (std::size_t i0 = 0; i0 < gh.size(); ++i0)
      for (std::size_t i1 = 0; i1 < gh.size(); ++i1)
        for (std::size_t i2 = 0; i2 < gh.size(); ++i2)
          for (std::size_t i3 = 0; i3 < gh.size(); ++i3) {
            const double s2 = std::sqrt(2.0) * sig;
            const FourVector y{b.c.t + s2 * gh.x[i0], b.c.x + s2 * gh.x[i1],
                               b.c.y + s2 * gh.x[i2], b.c.z + s2 * gh.x[i3]};
            const double w = gh.w[i0] * gh.w[i1] * gh.w[i2] * gh.w[i3];
            blob_acc += w * detail::line_kernel(y, kin.v1.u, n_tau);
          }
    // Hermite weights carry exp(-t^2); the blob is (2 pi S)^-2 exp(-|y-c|^2/2S),
    // nodes y = c + sqrt(2) sig t absorb the exponent, jacobian (sqrt2 sig)^4:
    acc += b.weight * blob_acc * std::pow(std::sqrt(2.0) * sig, 4) / std::pow(2.0 * pi * b.S, 2);
  }
  out.value = acc / (4.0 * pi);
  // tolerance from a coarser Hermite pass
  if (n_hermite > 6) {
    const auto coarse = coulomb_finite(eta, etap, p1, p2, dir, n_hermite - 4, n_tau);
    out.tolerance = std::abs(out.value - coarse.value);
  }
  return out;
}

namespace detail {

// int d4z delta(z^2) exp(-((z0-c0)^2 + |z_vec - c_vec|^2)/(2S)) in closed form:
// resolving delta(z^2) over z0 = ±r and doing the angular integral leaves
// products of Gaussians in r integrable with erfc.
inline double cone_gauss_integral(double S, double c0, double rho) {
  const double sq = std::sqrt(S);
  rho = std::max(rho, 1e-9 * sq);
  double sum = 0.0;
  for (double s0 : {1.0, -1.0}) {
    const double A = s0 * c0;
    sum += std::exp(-(A - rho) * (A - rho) / (4.0 * S)) * std::erfc(-(A + rho) / (2.0 * sq)) -
           std::exp(-(A + rho) * (A + rho) / (4.0 * S)) * std::erfc(-(A - rho) / (2.0 * sq));
  }
  return (pi * S / rho) * (std::sqrt(pi * S) / 2.0) * sum;
}

}  // namespace detail

// Full cutoff value at fixed eps in the time representation: exact rewriting
// of the defining double spacetime integral.  For each pair of Gaussian terms
// the x,y integrals collapse to a closed-form light-cone overlap of the
// correlation Gaussian; the remaining tau2 integral concentrates in two
// cone windows that are integrated locally, and tau1 runs on a log grid under
// the g_eps envelope.
inline double coulomb_cutoff_time(const TestFunction& eta, const TestFunction& etap,
                                  const TestFunction& g, double eps, const OnShellMomentum& p1,
                                  const OnShellMomentum& p2,
                                  CurrentDirection dir = CurrentDirection::out, int n_tau1 = 160,
                                  int n_win = 24) {
  const auto kin = detail::RestFrameKinematics::make(p1, p2);
  const FourVector v1 = kin.v1.u, v2{1, 0, 0, 0};
  const TestFunction ge = scale_switching(g, eps);
  const double sgn = (dir == CurrentDirection::out) ? 1.0 : -1.0;

  // product g_term(x) * eta_term(x - v tau) as one Gaussian, linear in tau:
  //   width^2 w2, center mu(tau) = mu0 + beta tau, peak amp(tau)
  struct LineBlob {
    double w2;
    FourVector mu0, beta;
    // amplitude exp argument: -(|d0 + v tau|^2)/(2 (s1+s2)), d0 = cg - ae
    FourVector d0, v;
    double s12, amp0;
    double amp(double tau) const {
      return amp0 * std::exp(-(d0 + v * tau).euclid_norm2() / (2.0 * s12));
    }
    FourVector mu(double tau) const { return mu0 + beta * tau; }
  };
  auto make_blob = [](const GaussTerm& tg, const GaussTerm& te, const FourVector& v) {
    LineBlob b;
    const double s1 = tg.sigma * tg.sigma, s2 = te.sigma * te.sigma;
    b.s12 = s1 + s2;
    b.w2 = s1 * s2 / b.s12;
    b.mu0 = (tg.a * s2 + te.a * s1) / b.s12;
    b.beta = v * (s1 / b.s12);
    b.d0 = tg.a - te.a;
    b.v = v;
    b.amp0 = (tg.coeff / std::pow(2.0 * pi * s1, 2)) * (te.coeff / std::pow(2.0 * pi * s2, 2));
    return b;
  };

  double sigma_g = 0.0;
  for (const auto& t : ge.terms()) sigma_g = std::max(sigma_g, t.sigma);
  const double tau_hi = 40.0 * sigma_g;
  const double tau_lo = 1e-4;
  const Rule1D rlog = gauss_legendre_ab(n_tau1, std::log(tau_lo), std::log(tau_hi));
  const Rule1D rsmall = gauss_legendre_ab(12, 0.0, tau_lo);
  std::vector<double> t1x, t1w;
  for (std::size_t i = 0; i < rsmall.size(); ++i) {
    t1x.push_back(rsmall.x[i]);
    t1w.push_back(rsmall.w[i]);
  }
  for (std::size_t i = 0; i < rlog.size(); ++i) {
    t1x.push_back(std::exp(rlog.x[i]));
    t1w.push_back(rlog.w[i] * std::exp(rlog.x[i]));
  }
  const Rule1D rwin = gauss_legendre(n_win);

  double acc = 0.0;
  for (const auto& tg1 : ge.terms())
    for (const auto& te1 : eta.terms())
      for (const auto& tg2 : ge.terms())
        for (const auto& te2 : etap.terms()) {
          const LineBlob B1 = make_blob(tg1, te1, v1 * sgn);
          const LineBlob B2 = make_blob(tg2, te2, v2 * sgn);
          const double S = B1.w2 + B2.w2;
          const double halfwidth = 14.0 * std::sqrt(S) / std::abs(B2.beta.t);
          const double corr_norm = std::pow(2.0 * pi * B1.w2 * B2.w2 / S, 2);
          for (std::size_t i1 = 0; i1 < t1x.size(); ++i1) {
            const double tau1 = t1x[i1];
            const double a1 = B1.amp(tau1);
            if (std::abs(a1) < 1e-300) continue;
            const FourVector m1 = B1.mu(tau1);
            // zc(tau2) = m1 - mu2(tau2); spatial part is tau2-independent
            // because v2 is at rest, so the cone windows solve a linear equation
            const FourVector zc0 = m1 - B2.mu0;
            const double rho = FourVector{0.0, zc0.x, zc0.y, zc0.z}.spatial_norm();
            // windows around zc^0(tau2) = ±rho:  zc^0 = zc0.t - beta2^0 tau2
            std::vector<std::pair<double, double>> wins;
            for (double target : {rho, -rho}) {
              const double tc = (zc0.t - target) / B2.beta.t;
              const double lo = std::max(0.0, tc - halfwidth);
              const double hi = tc + halfwidth;
              if (hi > 0.0) wins.push_back({lo, hi});
            }
            std::sort(wins.begin(), wins.end());
            // merge overlaps
            std::vector<std::pair<double, double>> merged;
            for (const auto& w : wins) {
              if (!merged.empty() && w.first <= merged.back().second)
                merged.back().second = std::max(merged.back().second, w.second);
              else
                merged.push_back(w);
            }
            double inner = 0.0;
            for (const auto& w : merged)
              for (std::size_t k = 0; k < rwin.size(); ++k) {
                const double tau2 =
                    0.5 * (w.first + w.second) + 0.5 * (w.second - w.first) * rwin.x[k];
                const double wk = 0.5 * (w.second - w.first) * rwin.w[k];
                const double a2 = B2.amp(tau2);
                if (std::abs(a2) < 1e-300) continue;
                const double c0 = zc0.t - B2.beta.t * tau2;
                inner += wk * a2 * detail::cone_gauss_integral(S, c0, rho);
              }
            acc += t1w[i1] * a1 * corr_norm * inner / (4.0 * pi);
          }
        }
  return acc;
}

// Full cutoff value at fixed eps in the momentum representation: the photon
// variable is integrated last; each current denominator 1/(v.(q-s) ± i0) is a
// 1D principal value after the transverse Gaussian directions are integrated
// in closed form.  Axially symmetric inputs only (untranslated profiles).
inline double coulomb_cutoff_momentum(const TestFunction& eta, const TestFunction& etap,
                                      const TestFunction& g, double eps,
                                      const OnShellMomentum& p1, const OnShellMomentum& p2,
                                      CurrentDirection dir = CurrentDirection::out,
                                      int n_outer = 28, int pv_order = 40) {
  for (const auto* f : {&eta, &etap})
    for (const auto& t : f->terms())
      if (t.a.euclid_norm2() != 0.0)
        throw std::invalid_argument("coulomb_cutoff_momentum: untranslated profiles only");
  const auto kin = detail::RestFrameKinematics::make(p1, p2);
  const TestFunction ge = scale_switching(g, eps);
  const double sgn = (dir == CurrentDirection::out) ? 1.0 : -1.0;

  // F_i_hat(q) = int d4s/(2pi)^4 g_eps_hat(s) (±i) eta_hat(q-s) / (v.(q-s) ± i0).
  // With isotropic Gaussians the three Euclidean directions of s orthogonal to
  // vt = (v0, -v_vec) integrate in closed form; u = <vt,s>_E remains with the
  // simple pole at v.q - |vt| u = 0.
  auto Fhat = [&](const FourVelocity& v, const TestFunction& prof, const FourVector& q) -> cplx {
    const FourVector vt{v.u.t, -v.u.x, -v.u.y, -v.u.z};
    const double vt_norm = std::sqrt(vt.euclid_norm2());
    cplx total = 0.0;
    for (const auto& sg : ge.terms())
      for (const auto& se : prof.terms()) {
        const double A = sg.sigma * sg.sigma;  // g_eps term width^2 (momentum exp -A s^2/2)
        const double B = se.sigma * se.sigma;
        const double T = A + B;
        // exponent: -A|s|^2/2 - B|q-s|^2/2 = -T/2 |s - (B/T) q|^2 - (AB/2T)|q|^2
        const double pref =
            sg.coeff * se.coeff * std::exp(-0.5 * A * B / T * q.euclid_norm2());
        const FourVector s0 = q * (B / T);  // Gaussian center in s
        // transverse part: (2pi/T)^(3/2); longitudinal variable u along vt
        const double trans = std::pow(2.0 * pi / T, 1.5);
        const double u0 = (vt.t * s0.t + vt.x * s0.x + vt.y * s0.y + vt.z * s0.z) / vt_norm;
        const double su = 1.0 / std::sqrt(T);
        const double vq = mdot(v.u, q);
        // pole: v.q - vt_norm * u = 0  ->  u* = v.q / vt_norm
        const double ustar = vq / vt_norm;
        auto gu = [&](double u) {
          return cplx(std::exp(-0.5 * T * (u - u0) * (u - u0)));
        };
        const double lo = std::min(u0, ustar) - 10.0 * su - 1.0;
        const double hi = std::max(u0, ustar) + 10.0 * su + 1.0;
        // 1/(v.q - vt_norm u ± i0) = -1/vt_norm * 1/(u - u* ∓ i0)
        //                          = -1/vt_norm [ PV 1/(u-u*) ± i pi delta(u-u*) ]
        const PVResult pv = pv_integrate(gu, ustar, lo, hi, pv_order);
        const cplx one_over = -(pv.value + sgn * iu * pi * gu(ustar)) / vt_norm;
        total += pref * trans * (sgn * iu) * one_over / std::pow(2.0 * pi, 4);
      }
    return total;
  };

  // outer: int d4k/(2pi)^4 PV(1/(-k^2)) F1(-k) F2(k); axial symmetry around v1_vec
  const FourVelocity v2(FourVector{1, 0, 0, 0});
  const double kmax = 9.0;  // profile Gaussians cut the range
  const Rule1D rk = gauss_legendre_ab(n_outer, 1e-4, kmax);
  const Rule1D rc = gauss_legendre_ab(n_outer / 2 + 4, -1.0, 1.0);
  cplx acc = 0.0;
  for (std::size_t ik = 0; ik < rk.size(); ++ik) {
    const double kr = rk.x[ik];
    for (std::size_t ic = 0; ic < rc.size(); ++ic) {
      const double c = rc.x[ic], s = std::sqrt(std::max(0.0, 1.0 - c * c));
      // k_vec in the (v1,z) plane: phi integral gives 2 pi by axial symmetry
      auto integrand_k0 = [&](double k0) {
        const FourVector k{k0, kr * s, 0.0, kr * c};
        return Fhat(kin.v1, eta, -k) * Fhat(v2, etap, k);
      };
      // PV over k0: 1/(-k^2) = 1/((kr-k0)(kr+k0)) = [1/(k0+kr) - 1/(k0-kr)]/(2 kr)
      const double lim = kr + 14.0;
      const PVResult pvm = pv_integrate(integrand_k0, -kr, -lim, lim, pv_order);
      const PVResult pvp = pv_integrate(integrand_k0, kr, -lim, lim, pv_order);
      const cplx inner = (pvm.value - pvp.value) / (2.0 * kr);
      acc += rk.w[ik] * rc.w[ic] * (2.0 * pi) * kr * kr * inner;
    }
  }
  const cplx phi = acc / std::pow(2.0 * pi, 4);
  return phi.real();
}

}  // namespace irscat
