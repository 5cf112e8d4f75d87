#pragma once

// Value of a distribution at the origin through scaled mollifiers:
//   t(0) = lim_{eps->0} int d^4q/(2pi)^4 t(q) h(q) g_eps(q),
// with g_eps(q) = eps^-4 g_hat(q/eps) built from a switching function
// (normalized so that int d^4q g_hat(q)/(2pi)^4 = 1).  The value exists only
// when two independent mollifiers agree; the verdict records that comparison.
// Function-type distributions only; t must be locally integrable of
// polynomial growth, h a smooth function of polynomial growth.

#include <functional>

#include "irscat/epsscan.hpp"
#include "irscat/quadrature.hpp"
#include "irscat/testfunction.hpp"

namespace irscat {

using DistributionFn = std::function<cplx(const FourVector&)>;

// One scan point: int d^4q/(2pi)^4 g_hat(qbar) t(eps qbar) h(eps qbar) after
// the substitution q = eps qbar; Gauss-Hermite per Gaussian term of g.
inline cplx lojasiewicz_point(const DistributionFn& t, const DistributionFn& h,
                              const TestFunction& g, double eps, int order = 14) {
  if (g.is_bump()) throw std::invalid_argument("lojasiewicz_point: Gaussian mollifiers only");
  const Rule1D gh = gauss_hermite(order);
  cplx acc = 0.0;
  for (const auto& term : g.terms()) {
    const double s = 1.0 / term.sigma;  // momentum-space Gaussian width
    cplx sub = 0.0;
    for (std::size_t i0 = 0; i0 < gh.size(); ++i0)
      for (std::size_t i1 = 0; i1 < gh.size(); ++i1)
        for (std::size_t i2 = 0; i2 < gh.size(); ++i2)
          for (std::size_t i3 = 0; i3 < gh.size(); ++i3) {
            const double a = std::sqrt(2.0) * s;
            const FourVector q{a * gh.x[i0], a * gh.x[i1], a * gh.x[i2], a * gh.x[i3]};
            const double w = gh.w[i0] * gh.w[i1] * gh.w[i2] * gh.w[i3];
            cplx phase = 1.0;
            if (term.a.euclid_norm2() != 0.0) phase = std::exp(iu * mdot(q, term.a));
            sub += w * phase * t(q * eps) * h(q * eps);
          }
    const double jac = std::pow(std::sqrt(2.0) * s, 4);
    acc += term.coeff * jac * sub / std::pow(2.0 * pi, 4);
  }
  return acc;
}

struct LojasiewiczReport {
  EpsScan scan_a, scan_b;  // two independent mollifiers
  cplx value = 0.0;
  bool has_value = false;
  std::string verdict;
};

inline LojasiewiczReport lojasiewicz_value(const DistributionFn& t, const DistributionFn& h,
                                           const TestFunction& g_a, const TestFunction& g_b,
                                           const EpsGridSpec& spec, double tol = 5e-3) {
  LojasiewiczReport r;
  r.scan_a = eps_scan([&](double e) { return lojasiewicz_point(t, h, g_a, e); }, spec, true,
                      "lojasiewicz_a");
  r.scan_b = eps_scan([&](double e) { return lojasiewicz_point(t, h, g_b, e); }, spec, true,
                      "lojasiewicz_b");
  auto tail_converged = [&](const EpsScan& s, cplx& lim) {
    const std::size_t n = s.size();
    if (n < 3) return false;
    lim = s.values[n - 1];
    const double d1 = std::abs(s.values[n - 2] - lim);
    const double d2 = std::abs(s.values[n - 3] - s.values[n - 2]);
    const double scale = std::max(1.0, std::abs(lim));
    return d1 <= tol * scale && d1 <= d2 + tol * scale * 1e-2;
  };
  cplx la = 0.0, lb = 0.0;
  const bool ca = tail_converged(r.scan_a, la);
  const bool cb = tail_converged(r.scan_b, lb);
  if (!ca || !cb) {
    r.verdict = "no value (scan not convergent)";
    return r;
  }
  if (std::abs(la - lb) > tol * std::max(1.0, std::abs(la))) {
    r.verdict = "no Lojasiewicz value (mollifier-dependent)";
    return r;
  }
  r.has_value = true;
  r.value = 0.5 * (la + lb);
  r.verdict = "value exists";
  return r;
}

}  // namespace irscat
