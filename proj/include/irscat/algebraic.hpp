#pragma once

// Algebraic identity validators on small complex matrices:
//   BCH    exp(A+B) = exp(A) exp(B) exp(-[A,B]/2)   when [A,[A,B]] = [B,[A,B]] = 0
//   Magnus aTexp(-i int A(t) dt)
//            = exp(-i int A) exp( (1/2) int int theta(t1-t2) [A(t1),A(t2)] )
//          for piecewise-constant A(t) with [A(t),[A(t'),A(t'')]] = 0,
// where the anti-time-ordered product places earlier factors to the left.

#include <stdexcept>
#include <vector>

#include "irscat/minkowski.hpp"

namespace irscat {

struct CMatrix {
  int n = 0;
  std::vector<cplx> a;  // row-major

  CMatrix() = default;
  explicit CMatrix(int n_) : n(n_), a(n_ * n_, cplx(0.0)) {}
  static CMatrix identity(int n) {
    CMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
  static CMatrix unit(int n, int i, int j) {
    CMatrix m(n);
    m(i, j) = 1.0;
    return m;
  }
  cplx& operator()(int i, int j) { return a[i * n + j]; }
  const cplx& operator()(int i, int j) const { return a[i * n + j]; }

  CMatrix operator+(const CMatrix& o) const {
    CMatrix r = *this;
    for (std::size_t k = 0; k < a.size(); ++k) r.a[k] += o.a[k];
    return r;
  }
  CMatrix operator-(const CMatrix& o) const {
    CMatrix r = *this;
    for (std::size_t k = 0; k < a.size(); ++k) r.a[k] -= o.a[k];
    return r;
  }
  CMatrix operator*(const CMatrix& o) const {
    CMatrix r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const cplx v = (*this)(i, k);
        if (v == cplx(0.0)) continue;
        for (int j = 0; j < n; ++j) r(i, j) += v * o(k, j);
      }
    return r;
  }
  CMatrix operator*(cplx s) const {
    CMatrix r = *this;
    for (auto& v : r.a) v *= s;
    return r;
  }
  double norm() const {
    double m = 0.0;
    for (const auto& v : a) m = std::max(m, std::abs(v));
    return m;
  }
};

inline CMatrix commutator(const CMatrix& x, const CMatrix& y) { return x * y - y * x; }

// Scaling-and-squaring Taylor exponential; matrices here are tiny.
inline CMatrix expm(const CMatrix& m) {
  int s = 0;
  double nrm = m.norm();
  while (nrm > 0.5) {
    nrm /= 2.0;
    ++s;
  }
  CMatrix x = m * cplx(std::pow(0.5, s));
  CMatrix sum = CMatrix::identity(m.n), term = CMatrix::identity(m.n);
  for (int k = 1; k <= 24; ++k) {
    term = term * x * cplx(1.0 / k);
    sum = sum + term;
    if (term.norm() < 1e-18) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

inline double bch_residual(const CMatrix& A, const CMatrix& B, double hypothesis_tol = 1e-12) {
  const CMatrix C = commutator(A, B);
  if (commutator(A, C).norm() > hypothesis_tol || commutator(B, C).norm() > hypothesis_tol)
    throw std::invalid_argument("bch_residual: [A,[A,B]] and [B,[A,B]] must vanish");
  const CMatrix lhs = expm(A + B);
  const CMatrix rhs = expm(A) * expm(B) * expm(C * cplx(-0.5));
  return (lhs - rhs).norm();
}

// Piecewise-constant family A(t) = steps[j].second on intervals of lengths
// steps[j].first covering [0, T].
inline double magnus_residual(const std::vector<std::pair<double, CMatrix>>& steps,
                              double hypothesis_tol = 1e-12) {
  if (steps.empty()) throw std::invalid_argument("magnus_residual: empty family");
  const int n = steps.front().second.n;
  for (const auto& s1 : steps)
    for (const auto& s2 : steps) {
      const CMatrix c = commutator(s1.second, s2.second);
      for (const auto& s3 : steps)
        if (commutator(s3.second, c).norm() > hypothesis_tol)
          throw std::invalid_argument("magnus_residual: commutators must be central");
    }
  // lhs: anti-time-ordered product, earlier factors to the left
  CMatrix lhs = CMatrix::identity(n);
  for (const auto& [dt, A] : steps) lhs = lhs * expm(A * cplx(0.0, -dt));
  // rhs: exp(-i int A) exp( (1/2) sum_{t1 > t2} [A(t1), A(t2)] dt1 dt2 )
  CMatrix total(n);
  for (const auto& [dt, A] : steps) total = total + A * cplx(dt);
  CMatrix corr(n);
  for (std::size_t j = 0; j < steps.size(); ++j) {
    for (std::size_t k = 0; k < j; ++k)
      corr = corr + commutator(steps[j].second, steps[k].second) *
                        cplx(steps[j].first * steps[k].first);
    // within one step [A,A] = 0
  }
  const CMatrix rhs = expm(total * cplx(0.0, -1.0)) * expm(corr * cplx(0.5));
  return (lhs - rhs).norm();
}

enum class AlgebraicIdentity { bch, magnus };

}  // namespace irscat
