#pragma once

// 1D quadrature rules used throughout: Gauss-Legendre on [a,b], Gauss-Hermite
// for exp(-x^2/2)-weighted integrals, and a small adaptive Simpson fallback
// used mostly by test oracles.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "irscat/minkowski.hpp"

namespace irscat {

struct Rule1D {
  std::vector<double> x, w;
  std::size_t size() const { return x.size(); }
};

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
inline Rule1D gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  Rule1D r;
  r.x.resize(n);
  r.w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double xk = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * xk * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (xk * p0 - p1) / (xk * xk - 1.0);
      const double dx = p0 / pp;
      xk -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.x[i] = -xk;
    r.x[n - 1 - i] = xk;
    r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - xk * xk) * pp * pp);
  }
  return r;
}

inline Rule1D gauss_legendre_ab(int n, double a, double b) {
  Rule1D r = gauss_legendre(n);
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r.x[i] = c + h * r.x[i];
    r.w[i] *= h;
  }
  return r;
}

// Gauss-Hermite for weight exp(-x^2); golub-welsch-free Newton construction.
inline Rule1D gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: order must be >= 1");
  Rule1D r;
  r.x.resize(n);
  r.w.resize(n);
  const double sqrt_pi_quarter = std::pow(pi, -0.25);
  const int m = (n + 1) / 2;
  double xk = 0.0;
  for (int i = 0; i < m; ++i) {
    if (i == 0)
      xk = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    else if (i == 1)
      xk -= 1.14 * std::pow((double)n, 0.426) / xk;
    else if (i == 2)
      xk = 1.86 * xk - 0.86 * r.x[n - 1];
    else if (i == 3)
      xk = 1.91 * xk - 0.91 * r.x[n - 2];
    else
      xk = 2.0 * xk - r.x[n - i + 1];
    double pp = 0.0;
    for (int it = 0; it < 200; ++it) {
      double p0 = sqrt_pi_quarter, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = xk * std::sqrt(2.0 / (j + 1.0)) * p1 - std::sqrt((double)j / (j + 1.0)) * p2;
      }
      pp = std::sqrt(2.0 * n) * p1;
      const double dx = p0 / pp;
      xk -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.x[n - 1 - i] = xk;
    r.x[i] = -xk;
    r.w[i] = r.w[n - 1 - i] = 2.0 / (pp * pp);
  }
  return r;
}

// Nodes/weights for integrals of the form  int dx c*exp(-(x-mu)^2/(2 s^2)) f(x):
// sum_i w_i f(x_i) equals the integral exactly for polynomial f (weight included).
inline Rule1D gauss_hermite_scaled(int n, double mu, double sigma) {
  Rule1D r = gauss_hermite(n);
  const double a = std::sqrt(2.0) * sigma;
  for (std::size_t i = 0; i < r.size(); ++i) {
    r.x[i] = mu + a * r.x[i];
    r.w[i] *= a;  // picks up dx jacobian; weight exp(-(x-mu)^2/2s^2) is implied
  }
  return r;
}

namespace detail {
template <class F>
cplx simpson_adaptive_impl(const F& f, double a, double b, cplx fa, cplx fm, cplx fb,
                           double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const cplx flm = f(lm), frm = f(rm);
  const cplx whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const cplx d = left + right - whole;
  if (depth <= 0 || std::abs(d) < 15.0 * tol) return left + right + d / 15.0;
  return simpson_adaptive_impl(f, a, m, fa, flm, fm, tol / 2, depth - 1) +
         simpson_adaptive_impl(f, m, b, fm, frm, fb, tol / 2, depth - 1);
}
}  // namespace detail

// Adaptive Simpson; intended for test oracles and 1D helper integrals.
template <class F>
cplx integrate_adaptive(const F& f, double a, double b, double tol = 1e-12, int depth = 40) {
  const cplx fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return detail::simpson_adaptive_impl(f, a, b, fa, fm, fb, tol, depth);
}

}  // namespace irscat
