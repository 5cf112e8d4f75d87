#pragma once

// Locality of the adiabatic limit: inserting a momentum-space cutoff chi == 1
// near the origin into the switching-function smearing changes every scanned
// norm superpolynomially, ||Psi_eps - Psi^chi_eps|| = O(eps^M) for all M.
// A flow participates by exposing the difference norm for a given cutoff
// radius (flows without a smearing hook cannot provide this and must refuse).

#include <functional>

#include "irscat/epsscan.hpp"
#include "irscat/ratefit.hpp"

namespace irscat {

// Smooth cutoff, == 1 for |q|_E <= r and == 0 beyond 2r.
struct SmearingCutoff {
  double radius = 1.0;
  double operator()(const FourVector& q) const {
    const double u = std::sqrt(q.euclid_norm2()) / radius;
    if (u <= 1.0) return 1.0;
    if (u >= 2.0) return 0.0;
    const double s = u - 1.0;  // C^1 smoothstep on [1,2]
    return 1.0 - s * s * (3.0 - 2.0 * s);
  }
};

struct LocalityReport {
  EpsScan scan;
  bool superpolynomial = false;
  std::string verdict;
};

// diff_norm(eps, radius) must return ||Psi_eps - Psi^chi_eps|| for the flow.
inline LocalityReport locality_check(const std::function<double(double, double)>& diff_norm,
                                     double chi_radius, const EpsGridSpec& spec) {
  LocalityReport rep;
  rep.scan = eps_scan([&](double e) { return cplx(diff_norm(e, chi_radius)); }, spec, true,
                      "locality_check");
  // superpolynomial verdict: on the scan tail every step must beat eps^4
  bool ok = true;
  const std::size_t n = rep.scan.size();
  bool all_zero = true;
  for (std::size_t i = n / 2; i + 1 < n; ++i) {
    const double v0 = std::abs(rep.scan.values[i]);
    const double v1 = std::abs(rep.scan.values[i + 1]);
    if (v0 == 0.0 && v1 == 0.0) continue;
    all_zero = false;
    const double ratio4 = std::pow(rep.scan.eps[i + 1] / rep.scan.eps[i], 4);
    if (!(v1 < v0 * ratio4)) ok = false;
  }
  if (std::abs(rep.scan.values[n / 2]) == 0.0 && all_zero) ok = true;
  rep.superpolynomial = ok;
  rep.verdict = ok ? "superpolynomial" : "fails superpolynomial decay";
  return rep;
}

}  // namespace irscat
