#pragma once

// Minkowski kinematics with signature (+,-,-,-).  Natural units, energies in
// units of the electron mass unless a run configures otherwise.

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace irscat {

using cplx = std::complex<double>;
inline constexpr double pi = 3.14159265358979323846;
inline constexpr cplx iu{0.0, 1.0};

struct FourVector {
  double t = 0.0, x = 0.0, y = 0.0, z = 0.0;

  constexpr FourVector() = default;
  constexpr FourVector(double t_, double x_, double y_, double z_)
      : t(t_), x(x_), y(y_), z(z_) {}

  double operator[](int mu) const {
    switch (mu) {
      case 0: return t;
      case 1: return x;
      case 2: return y;
      case 3: return z;
    }
    throw std::out_of_range("FourVector index");
  }

  FourVector operator+(const FourVector& o) const { return {t + o.t, x + o.x, y + o.y, z + o.z}; }
  FourVector operator-(const FourVector& o) const { return {t - o.t, x - o.x, y - o.y, z - o.z}; }
  FourVector operator-() const { return {-t, -x, -y, -z}; }
  FourVector operator*(double s) const { return {s * t, s * x, s * y, s * z}; }
  FourVector operator/(double s) const { return {t / s, x / s, y / s, z / s}; }

  double spatial_norm2() const { return x * x + y * y + z * z; }
  double spatial_norm() const { return std::sqrt(spatial_norm2()); }
  // Euclidean 4-norm squared, used by the Gaussian test-function family.
  double euclid_norm2() const { return t * t + x * x + y * y + z * z; }
};

inline FourVector operator*(double s, const FourVector& v) { return v * s; }

// Minkowski inner product a.b = a0 b0 - a1 b1 - a2 b2 - a3 b3.
inline double mdot(const FourVector& a, const FourVector& b) {
  return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

inline double msq(const FourVector& a) { return mdot(a, a); }

// Unit timelike vector, u.u = 1, u0 > 0.
struct FourVelocity {
  FourVector u{1.0, 0.0, 0.0, 0.0};

  FourVelocity() = default;
  explicit FourVelocity(const FourVector& v) : u(v) {
    if (u.t <= 0.0) throw std::invalid_argument("four-velocity must have u0 > 0");
    const double n = mdot(u, u);
    if (std::abs(n - 1.0) > 1e-12 * std::max(1.0, u.t * u.t))
      throw std::invalid_argument("four-velocity must satisfy u.u = 1");
  }
  // Normalizes (gamma, gamma*beta) built from a three-velocity beta, |beta| < 1.
  static FourVelocity from_three_velocity(double bx, double by, double bz) {
    const double b2 = bx * bx + by * by + bz * bz;
    if (b2 >= 1.0) throw std::invalid_argument("three-velocity must satisfy |beta| < 1");
    const double g = 1.0 / std::sqrt(1.0 - b2);
    return FourVelocity(FourVector{g, g * bx, g * by, g * bz});
  }

  double operator[](int mu) const { return u[mu]; }
};

// Point on the mass hyperboloid H_m (p.p = m^2, p0 > 0); the energy is derived
// from the spatial momentum so the shell constraint holds by construction.
struct OnShellMomentum {
  double mass = 1.0;
  double px = 0.0, py = 0.0, pz = 0.0;

  OnShellMomentum() = default;
  OnShellMomentum(double m, double px_, double py_, double pz_)
      : mass(m), px(px_), py(py_), pz(pz_) {
    if (m < 0.0) throw std::invalid_argument("mass must be >= 0");
    if (m == 0.0 && spatial_norm() == 0.0)
      throw std::invalid_argument("massless momentum needs |p| > 0");
  }

  double energy() const { return std::sqrt(mass * mass + px * px + py * py + pz * pz); }
  double spatial_norm2() const { return px * px + py * py + pz * pz; }
  double spatial_norm() const { return std::sqrt(spatial_norm2()); }
  FourVector vec() const { return {energy(), px, py, pz}; }
  // p = m v for m > 0.
  FourVelocity velocity() const {
    if (mass <= 0.0) throw std::invalid_argument("massless momenta have no four-velocity");
    return FourVelocity(vec() / mass);
  }
};

inline double mdot(const OnShellMomentum& a, const FourVector& b) { return mdot(a.vec(), b); }
inline double mdot(const FourVector& a, const OnShellMomentum& b) { return mdot(a, b.vec()); }
inline double mdot(const OnShellMomentum& a, const OnShellMomentum& b) { return mdot(a.vec(), b.vec()); }

inline double energy_on_shell(double m, double px, double py, double pz) {
  return std::sqrt(m * m + px * px + py * py + pz * pz);
}

// Pure boost that maps the rest frame of v onto the lab frame: boost(v) applied
// to (m,0,0,0) gives m*v.  boost_to_rest(v) is the inverse.
struct LorentzBoost {
  // Stored as the 4x4 matrix L^mu_nu.
  std::array<std::array<double, 4>, 4> L{};

  static LorentzBoost from_velocity(const FourVelocity& v) {
    LorentzBoost b;
    const double g = v.u.t;
    const double bx = v.u.x / g, by = v.u.y / g, bz = v.u.z / g;
    const double b2 = bx * bx + by * by + bz * bz;
    const double gm1 = (b2 > 0.0) ? (g - 1.0) / b2 : 0.0;
    b.L[0][0] = g;
    b.L[0][1] = b.L[1][0] = g * bx;
    b.L[0][2] = b.L[2][0] = g * by;
    b.L[0][3] = b.L[3][0] = g * bz;
    const double bv[3] = {bx, by, bz};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        b.L[i + 1][j + 1] = (i == j ? 1.0 : 0.0) + gm1 * bv[i] * bv[j];
    return b;
  }

  static LorentzBoost to_rest_of(const FourVelocity& v) {
    FourVelocity neg = v;
    neg.u.x = -neg.u.x;
    neg.u.y = -neg.u.y;
    neg.u.z = -neg.u.z;
    return from_velocity(neg);
  }

  FourVector apply(const FourVector& a) const {
    FourVector r;
    double in[4] = {a.t, a.x, a.y, a.z};
    double out[4] = {0, 0, 0, 0};
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) out[mu] += L[mu][nu] * in[nu];
    return {out[0], out[1], out[2], out[3]};
  }

  OnShellMomentum apply(const OnShellMomentum& p) const {
    const FourVector q = apply(p.vec());
    return OnShellMomentum(p.mass, q.x, q.y, q.z);
  }

  FourVelocity apply(const FourVelocity& v) const { return FourVelocity(apply(v.u)); }
};

}  // namespace irscat
