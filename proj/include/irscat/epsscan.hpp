#pragma once

// The eps-scan engine: evaluates an observable on a geometric grid of adiabatic
// parameters.  Scan points are independent and may be dispatched in parallel;
// results are identical to a serial run because each point is evaluated by the
// same pure code path and written to its own slot.

#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "irscat/minkowski.hpp"

namespace irscat {

struct EpsGridSpec {
  double eps_max = 1e-1;
  double eps_min = 1e-4;
  int points = 12;

  std::vector<double> grid() const {
    if (points < 1 || eps_min <= 0.0 || eps_max <= eps_min)
      throw std::invalid_argument("EpsGridSpec: need eps_max > eps_min > 0");
    std::vector<double> g(points);
    if (points == 1) {
      g[0] = eps_max;
      return g;
    }
    const double ratio = std::pow(eps_min / eps_max, 1.0 / (points - 1));
    if (!(ratio > 0.0 && ratio < 1.0)) throw std::invalid_argument("EpsGridSpec: bad ratio");
    for (int i = 0; i < points; ++i) g[i] = eps_max * std::pow(ratio, i);
    return g;
  }
};

struct EpsScan {
  std::vector<double> eps;  // strictly decreasing, all positive
  std::vector<cplx> values;
  std::string evaluator_id;
  std::map<std::string, std::string> metadata;  // test-function parameters, grids, ...

  std::size_t size() const { return eps.size(); }

  void check_invariants() const {
    for (std::size_t i = 0; i < eps.size(); ++i) {
      if (eps[i] <= 0.0) throw std::logic_error("EpsScan: eps must be positive");
      if (i && eps[i] >= eps[i - 1]) throw std::logic_error("EpsScan: eps must decrease");
    }
  }

  // CSV schema: eps,re,im,abs  (RFC-4180, CRLF line ends, no quoting needed)
  void write_csv(std::ostream& os) const {
    os << "eps,re,im,abs\r\n";
    for (std::size_t i = 0; i < size(); ++i)
      os << eps[i] << "," << values[i].real() << "," << values[i].imag() << ","
         << std::abs(values[i]) << "\r\n";
  }
};

inline EpsScan eps_scan(const std::function<cplx(double)>& evaluator, const EpsGridSpec& spec,
                        bool parallel = true, const std::string& id = "") {
  EpsScan s;
  s.eps = spec.grid();
  s.values.assign(s.eps.size(), cplx(0.0));
  s.evaluator_id = id;
  std::vector<std::string> errors(s.eps.size());
  auto run_point = [&](std::size_t i) {
    try {
      s.values[i] = evaluator(s.eps[i]);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  };
  if (parallel && s.eps.size() > 1) {
    const unsigned n_workers =
        std::min<unsigned>(std::thread::hardware_concurrency() ? std::thread::hardware_concurrency() : 2,
                           (unsigned)s.eps.size());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < n_workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < s.eps.size(); i += n_workers) run_point(i);
      });
    for (auto& t : pool) t.join();
  } else {
    for (std::size_t i = 0; i < s.eps.size(); ++i) run_point(i);
  }
  for (std::size_t i = 0; i < s.eps.size(); ++i)
    if (!errors[i].empty())
      throw std::runtime_error("eps_scan: evaluator failed at eps=" + std::to_string(s.eps[i]) +
                               ": " + errors[i]);
  s.check_invariants();
  return s;
}

}  // namespace irscat
