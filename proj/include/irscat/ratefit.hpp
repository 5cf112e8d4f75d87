#pragma once

// Least-squares fits of eps-scan series in their linearizing coordinates:
//   power     |v| = C eps^alpha          (log-log linear)
//   log       Re v = a + b log(1/eps)
//   constant  v = c0
// plus a divergence detector that reports a lower-bound witness instead of
// fitted parameters (a non-vanishing series where vanishing is required).

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "irscat/epsscan.hpp"

namespace irscat {

enum class FitModel { power, log_model, constant, divergent };

inline const char* fit_model_name(FitModel m) {
  switch (m) {
    case FitModel::power: return "power";
    case FitModel::log_model: return "log";
    case FitModel::constant: return "constant";
    case FitModel::divergent: return "divergent";
  }
  return "?";
}

struct RateFit {
  FitModel model = FitModel::constant;
  double C = 0.0, alpha = 0.0;  // power: C eps^alpha
  double a = 0.0, b = 0.0;      // log: a + b log(1/eps)
  double c0 = 0.0;              // constant
  double witness = 0.0;         // divergent: min |v| over the scan tail
  double r2 = 0.0;
  double theory = std::numeric_limits<double>::quiet_NaN();
  double rel_err = std::numeric_limits<double>::quiet_NaN();
  std::string verdict;

  void compare_theory(double th) {
    theory = th;
    double fitted = 0.0;
    switch (model) {
      case FitModel::power: fitted = alpha; break;
      case FitModel::log_model: fitted = b; break;
      case FitModel::constant: fitted = c0; break;
      case FitModel::divergent: fitted = witness; break;
    }
    rel_err = std::abs(fitted - th) / std::max(1e-300, std::abs(th));
  }
};

namespace detail {
struct LinFit {
  double slope = 0.0, intercept = 0.0, r2 = 0.0;
};
inline LinFit linear_ls(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double det = n * sxx - sx * sx;
  if (std::abs(det) < 1e-14 * (n * sxx + sx * sx + 1e-300))
    throw std::invalid_argument("fit: degenerate design matrix");
  LinFit f;
  f.slope = (n * sxy - sx * sy) / det;
  f.intercept = (sy - f.slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double ym = sy / n;
  for (std::size_t i = 0; i < n; ++i) {
    const double fit = f.intercept + f.slope * x[i];
    ss_res += (y[i] - fit) * (y[i] - fit);
    ss_tot += (y[i] - ym) * (y[i] - ym);
  }
  f.r2 = (ss_tot > 0.0) ? std::max(0.0, 1.0 - ss_res / ss_tot) : 1.0;
  return f;
}
}  // namespace detail

inline RateFit fit(const EpsScan& scan, FitModel model) {
  if (scan.size() < 5) throw std::invalid_argument("fit: need at least 5 scan points");
  RateFit out;
  out.model = model;
  switch (model) {
    case FitModel::power: {
      std::vector<double> x, y;
      for (std::size_t i = 0; i < scan.size(); ++i) {
        const double v = std::abs(scan.values[i]);
        if (v <= 0.0) continue;  // exact zeros carry no slope information
        x.push_back(std::log(scan.eps[i]));
        y.push_back(std::log(v));
      }
      if (x.size() < 5) throw std::invalid_argument("fit: too many zero values for a power fit");
      const auto f = detail::linear_ls(x, y);
      out.alpha = f.slope;
      out.C = std::exp(f.intercept);
      out.r2 = f.r2;
      out.verdict = "power";
      break;
    }
    case FitModel::log_model: {
      std::vector<double> x, y;
      for (std::size_t i = 0; i < scan.size(); ++i) {
        x.push_back(std::log(1.0 / scan.eps[i]));
        y.push_back(scan.values[i].real());
      }
      const auto f = detail::linear_ls(x, y);
      out.b = f.slope;
      out.a = f.intercept;
      out.r2 = f.r2;
      out.verdict = "log";
      break;
    }
    case FitModel::constant: {
      double m = 0.0;
      for (const auto& v : scan.values) m += v.real();
      m /= scan.size();
      out.c0 = m;
      out.b = 0.0;
      double ss = 0.0, scale = 0.0;
      for (const auto& v : scan.values) {
        ss += (v.real() - m) * (v.real() - m);
        scale += v.real() * v.real();
      }
      out.r2 = (scale > 0.0) ? std::max(0.0, 1.0 - ss / scale) : 1.0;
      out.verdict = "constant";
      break;
    }
    case FitModel::divergent: {
      // witness: min |v| over the small-eps half of the scan; the verdict holds
      // when the series stays bounded below and does not decay with eps.
      const std::size_t half = scan.size() / 2;
      double wit = std::numeric_limits<double>::infinity();
      for (std::size_t i = half; i < scan.size(); ++i)
        wit = std::min(wit, std::abs(scan.values[i]));
      out.witness = wit;
      const double head = std::abs(scan.values.front());
      const double tail = std::abs(scan.values.back());
      out.verdict = (wit > 0.0 && tail >= 0.5 * head) ? "divergent" : "not-divergent";
      out.r2 = 0.0;
      break;
    }
  }
  return out;
}

// Convenience: classify a series that is required to vanish with eps.
// Returns a power fit when the series decays, otherwise the divergent record.
inline RateFit classify_vanishing(const EpsScan& scan) {
  RateFit dv = fit(scan, FitModel::divergent);
  try {
    RateFit pw = fit(scan, FitModel::power);
    if (pw.alpha > 0.1 && pw.r2 > 0.9 && dv.verdict != "divergent") return pw;
  } catch (const std::invalid_argument&) {
  }
  return dv;
}

}  // namespace irscat
