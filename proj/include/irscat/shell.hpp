#pragma once

// Mass-shell quadrature grids.  Nodes live on H_m = {p.p = m^2, p0 > 0}; the
// weights encode the invariant measure dmu_m(p) = d^3p / ((2pi)^3 2E(p)) over
// the configured radial/angular region, so
//   shell_integrate(grid, f)  ~  int dmu_m(p) f(p).

#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "irscat/minkowski.hpp"
#include "irscat/quadrature.hpp"

namespace irscat {

struct ShellRegion {
  double r_min = 0.0;   // radial |p| interval
  double r_max = 1.0;
  int n_radial = 8;     // Gauss-Legendre orders
  int n_costheta = 6;
  int n_phi = 6;
  double cos_min = -1.0, cos_max = 1.0;  // optional angular cap
};

struct MassShellGrid {
  double mass = 1.0;
  ShellRegion region;
  std::vector<OnShellMomentum> nodes;
  std::vector<double> weights;  // include (2pi)^-3 / (2E) density

  std::size_t size() const { return nodes.size(); }

  static MassShellGrid make(double mass, const ShellRegion& reg) {
    if (mass < 0.0) throw std::invalid_argument("MassShellGrid: mass must be >= 0");
    if (mass == 0.0 && reg.r_min <= 0.0)
      throw std::invalid_argument("MassShellGrid: massless shell needs r_min > 0");
    MassShellGrid g;
    g.mass = mass;
    g.region = reg;
    const Rule1D rr = gauss_legendre_ab(reg.n_radial, reg.r_min, reg.r_max);
    const Rule1D rc = gauss_legendre_ab(reg.n_costheta, reg.cos_min, reg.cos_max);
    const Rule1D rp = gauss_legendre_ab(reg.n_phi, 0.0, 2.0 * pi);
    g.nodes.reserve(rr.size() * rc.size() * rp.size());
    g.weights.reserve(g.nodes.capacity());
    for (std::size_t i = 0; i < rr.size(); ++i)
      for (std::size_t j = 0; j < rc.size(); ++j)
        for (std::size_t k = 0; k < rp.size(); ++k) {
          const double r = rr.x[i], c = rc.x[j], phi = rp.x[k];
          const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
          OnShellMomentum p(mass, r * s * std::cos(phi), r * s * std::sin(phi), r * c);
          const double w = rr.w[i] * rc.w[j] * rp.w[k] * r * r /
                           (std::pow(2.0 * pi, 3) * 2.0 * p.energy());
          g.nodes.push_back(p);
          g.weights.push_back(w);
        }
    return g;
  }

  // CSV node/weight dump consumed by the CLI --dump-grid flag.
  void dump_csv(std::ostream& os) const {
    os << "px,py,pz,e,weight\r\n";
    for (std::size_t i = 0; i < size(); ++i) {
      const auto& p = nodes[i];
      os << p.px << "," << p.py << "," << p.pz << "," << p.energy() << ","
         << weights[i] << "\r\n";
    }
  }
};

template <class F>
cplx shell_integrate(const MassShellGrid& g, const F& f) {
  cplx acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) acc += g.weights[i] * cplx(f(g.nodes[i]));
  return acc;
}

// Analytic shell volume of the region for the unit integrand; grid sanity check.
inline double shell_region_volume(double mass, double r_min, double r_max) {
  // int d^3p/((2pi)^3 2E) = 4pi/(8pi^3) int r^2/(2E) dr = 1/(4 pi^2) int r^2/E dr.
  if (mass == 0.0) return (r_max * r_max - r_min * r_min) / (8.0 * pi * pi);
  auto prim = [mass](double r) {
    const double e = std::sqrt(r * r + mass * mass);
    return 0.5 * (r * e - mass * mass * std::log(r + e));
  };
  return (prim(r_max) - prim(r_min)) / (4.0 * pi * pi);
}

}  // namespace irscat
