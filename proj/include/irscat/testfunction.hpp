#pragma once

// Profiles eta and switching functions g.  The library restricts test
// functions to a closed-form family: finite real combinations of translated
// isotropic Gaussians, so position and momentum duals are both exact and no
// numerical Fourier transform appears anywhere downstream.
//
// A single term with weight c, width sigma and translation a has
//   momentum dual   c * exp(i q.a) * exp(-sigma^2 |q|_E^2 / 2)      (q.a Minkowski)
//   position dual   c * (2 pi sigma^2)^-2 * exp(-|x-a|_E^2 / (2 sigma^2))
// where |.|_E is the Euclidean 4-norm.  Normalizations differ by kind and are
// stored exactly: profiles have eta_hat(0) = 1 (unit spacetime integral,
// weight c = 1), switching functions have g(0) = 1 in position space
// (equivalently int d^4q g_hat(q)/(2pi)^4 = 1, weight c = (2 pi sigma^2)^2),
// and profile differences have eta_hat(0) = 0.
//
// A momentum-space bump family (compact support) is available for
// support-sensitive checks; it has no closed-form position dual.

#include <stdexcept>
#include <utility>
#include <vector>

#include "irscat/minkowski.hpp"

namespace irscat {

enum class TFKind { profile, switching, profile_difference };
enum class TFSpace { position, momentum };

struct GaussTerm {
  double coeff = 1.0;
  double sigma = 1.0;
  FourVector a{};
};

class TestFunction {
 public:
  static TestFunction gaussian(TFKind kind, double sigma, FourVector a = {}) {
    if (sigma <= 0.0) throw std::invalid_argument("test function width must be > 0");
    TestFunction f;
    f.kind_ = kind;
    if (kind == TFKind::profile_difference)
      throw std::invalid_argument("build differences via TestFunction::difference");
    const double c =
        (kind == TFKind::switching) ? std::pow(2.0 * pi * sigma * sigma, 2) : 1.0;
    f.terms_ = {GaussTerm{c, sigma, a}};
    f.mom0_ = c;
    return f;
  }

  // Momentum-space bump, eta_hat(q) = exp(1 - 1/(1 - |q|^2/R^2)) inside |q|_E < R.
  static TestFunction bump_profile(double radius) {
    if (radius <= 0.0) throw std::invalid_argument("bump radius must be > 0");
    TestFunction f;
    f.kind_ = TFKind::profile;
    f.bump_radius_ = radius;
    f.mom0_ = 1.0;
    return f;
  }

  // eta - eta' with both normalized; the difference has momentum value 0 at q=0.
  static TestFunction difference(const TestFunction& eta, const TestFunction& etap) {
    if (eta.is_bump() || etap.is_bump())
      throw std::invalid_argument("difference: bump family not combinable");
    TestFunction f;
    f.kind_ = TFKind::profile_difference;
    f.terms_ = eta.terms_;
    for (GaussTerm t : etap.terms_) {
      t.coeff = -t.coeff;
      f.terms_.push_back(t);
    }
    f.mom0_ = eta.mom0_ - etap.mom0_;
    return f;
  }

  static TestFunction combination(TFKind kind,
                                  const std::vector<std::pair<double, TestFunction>>& parts) {
    TestFunction f;
    f.kind_ = kind;
    double m0 = 0.0;
    for (const auto& [c, g] : parts) {
      if (g.is_bump()) throw std::invalid_argument("combination: bump family not combinable");
      for (GaussTerm t : g.terms_) {
        t.coeff *= c;
        f.terms_.push_back(t);
        m0 += t.coeff;
      }
    }
    f.mom0_ = m0;
    // the kind's normalization must come out right: eta_hat(0) for profiles and
    // differences, the position value g(0) for switching functions
    const double have = (kind == TFKind::switching)
                            ? f.eval({0, 0, 0, 0}, TFSpace::position).real()
                            : m0;
    const double want = (kind == TFKind::profile_difference) ? 0.0 : 1.0;
    if (std::abs(have - want) > 1e-12)
      throw std::invalid_argument("combination: normalization must match the kind");
    if (kind == TFKind::profile) f.mom0_ = 1.0;
    if (kind == TFKind::profile_difference) f.mom0_ = 0.0;
    return f;
  }

  TestFunction translated(const FourVector& a) const {
    if (is_bump()) throw std::invalid_argument("translated: bump family is momentum-only");
    TestFunction f = *this;
    for (auto& t : f.terms_) t.a = t.a + a;
    return f;
  }

  // g_eps(x) = g(eps x); momentum dual eps^-4 g_hat(q/eps).  Switching kind only.
  TestFunction scaled(double eps) const {
    if (kind_ != TFKind::switching)
      throw std::invalid_argument("scaled: only switching functions are scaled");
    if (eps <= 0.0 || eps > 1.0) throw std::invalid_argument("scaled: eps must be in (0,1]");
    TestFunction f = *this;
    const double e4 = eps * eps * eps * eps;
    for (auto& t : f.terms_) {
      t.coeff /= e4;
      t.sigma /= eps;
      t.a = t.a / eps;
    }
    f.mom0_ /= e4;
    return f;
  }

  cplx eval(const FourVector& point, TFSpace space) const {
    if (is_bump()) {
      if (space == TFSpace::position)
        throw std::invalid_argument("bump family has no closed-form position dual");
      const double u2 = point.euclid_norm2() / (bump_radius_ * bump_radius_);
      if (u2 >= 1.0) return 0.0;
      return std::exp(1.0 - 1.0 / (1.0 - u2));
    }
    cplx acc = 0.0;
    if (space == TFSpace::momentum) {
      for (const auto& t : terms_) {
        const FourVector q = point;
        acc += t.coeff * std::exp(cplx(-0.5 * t.sigma * t.sigma * q.euclid_norm2(),
                                       mdot(q, t.a)));
      }
    } else {
      for (const auto& t : terms_) {
        const double s2 = t.sigma * t.sigma;
        const double norm = 1.0 / std::pow(2.0 * pi * s2, 2);
        acc += t.coeff * norm * std::exp(-(point - t.a).euclid_norm2() / (2.0 * s2));
      }
    }
    return acc;
  }

  TFKind kind() const { return kind_; }
  bool is_bump() const { return bump_radius_ > 0.0; }
  double bump_radius() const { return bump_radius_; }
  // eta_hat(0), stored analytically (exact 1/0 for profiles/differences).
  double momentum_at_origin() const { return mom0_; }
  // the kind's defining normalization, held exactly: eta_hat(0) = 1 for
  // profiles, g(0) = 1 for switching functions, 0 for differences
  double normalization() const { return kind_ == TFKind::profile_difference ? 0.0 : 1.0; }
  const std::vector<GaussTerm>& terms() const { return terms_; }

 private:
  TFKind kind_ = TFKind::profile;
  std::vector<GaussTerm> terms_;
  double bump_radius_ = 0.0;
  double mom0_ = 1.0;
};

inline TestFunction make_test_function(TFKind kind, double sigma, FourVector a = {}) {
  return TestFunction::gaussian(kind, sigma, a);
}

inline TestFunction scale_switching(const TestFunction& g, double eps) { return g.scaled(eps); }

inline cplx eval_test_function(const TestFunction& f, const FourVector& point, TFSpace space) {
  return f.eval(point, space);
}

}  // namespace irscat
