#include <catch2/catch_amalgamated.hpp>

#include "irscat/coulomb.hpp"

using namespace irscat;

namespace {
// pair with v1.v2 = w in the v2 rest frame, boosted to a generic lab frame
std::pair<OnShellMomentum, OnShellMomentum> pair_with_overlap(double w, bool boosted = false) {
  const double vsp = std::sqrt(w * w - 1.0);
  OnShellMomentum p1(1.0, 0.0, 0.0, vsp);
  OnShellMomentum p2(1.0, 0.0, 0.0, 0.0);
  if (boosted) {
    const auto B = LorentzBoost::from_velocity(FourVelocity::from_three_velocity(0.2, 0.1, -0.15));
    p1 = B.apply(p1);
    p2 = B.apply(p2);
  }
  return {p1, p2};
}
const TestFunction gsw = make_test_function(TFKind::switching, 1.0);
}  // namespace

TEST_CASE("divergent scan recovers the closed-form coefficient b") {
  // p1.p2/m^2 = 1.25 gives b = 1/(3 pi)
  const auto [p1, p2] = pair_with_overlap(1.25);
  CHECK(coulomb_b_theory(p1, p2) == Catch::Approx(1.0 / (3.0 * pi)).epsilon(1e-12));
  CHECK(1.0 / (3.0 * pi) == Catch::Approx(0.1061033).epsilon(1e-5));
  const auto scan = coulomb_divergent_scan(gsw, p1, p2, EpsGridSpec{}.grid());
  const auto f = fit(scan, FitModel::log_model);
  CHECK(f.b == Catch::Approx(1.0 / (3.0 * pi)).epsilon(0.02));
  CHECK(f.r2 > 0.999);
}

TEST_CASE("b is a frame scalar") {
  const auto [p1, p2] = pair_with_overlap(1.4, true);
  const auto scan = coulomb_divergent_scan(gsw, p1, p2, EpsGridSpec{}.grid());
  const auto f = fit(scan, FitModel::log_model);
  CHECK(f.b == Catch::Approx(coulomb_b_theory(p1, p2)).epsilon(0.02));
}

TEST_CASE("small-velocity reduction to the non-relativistic coefficient") {
  // |v_rel| ~ 0.1 in a frame where both particles move
  const auto va = FourVelocity::from_three_velocity(0.030, 0.0, 0.040);
  const auto vb = FourVelocity::from_three_velocity(-0.028, 0.0, -0.040);
  OnShellMomentum p1(1.0, va.u.x, va.u.y, va.u.z);
  OnShellMomentum p2(1.0, vb.u.x, vb.u.y, vb.u.z);
  const double b_rel = coulomb_b_theory(p1, p2);
  const double b_nr = coulomb_b_nonrel(p1, p2);
  CHECK(b_rel == Catch::Approx(b_nr).epsilon(0.015));
  // and the scan agrees with the closed form
  const auto scan = coulomb_divergent_scan(gsw, p1, p2, EpsGridSpec{}.grid());
  CHECK(fit(scan, FitModel::log_model).b == Catch::Approx(b_rel).epsilon(0.02));
}

TEST_CASE("two switching widths share b but not the offset a") {
  const auto [p1, p2] = pair_with_overlap(1.25);
  const auto g2 = make_test_function(TFKind::switching, 1.6);
  const auto f1 = fit(coulomb_divergent_scan(gsw, p1, p2, EpsGridSpec{}.grid()), FitModel::log_model);
  const auto f2 = fit(coulomb_divergent_scan(g2, p1, p2, EpsGridSpec{}.grid()), FitModel::log_model);
  CHECK(f1.b == Catch::Approx(f2.b).epsilon(0.02));
  CHECK(std::abs(f1.a - f2.a) > 0.01);
}

TEST_CASE("coinciding momenta are rejected") {
  OnShellMomentum p(1.0, 0.3, 0.0, 0.0);
  CHECK_THROWS(coulomb_divergent_value(gsw, p, p, 1e-2, CurrentDirection::out));
  CHECK_THROWS(coulomb_b_theory(p, p));
}

TEST_CASE("finite part vanishes on the (eta - eta_a, eta + eta_a) family") {
  const auto [p1, p2] = pair_with_overlap(1.3);
  const auto eta = make_test_function(TFKind::profile, 1.0);
  for (const FourVector a : {FourVector{0.6, 0.0, 0.0, 0.3}, FourVector{-0.4, 0.5, 0.0, 0.0}}) {
    const auto eta_a = eta.translated(a);
    const auto minus = TestFunction::difference(eta, eta_a);
    const auto plus = TestFunction::combination(
        TFKind::profile, {{0.5, eta}, {0.5, eta_a}});  // (eta+eta_a)/2, rescaled below
    // Phi is bilinear; evaluate with (eta - eta_a, (eta + eta_a)/2) and scale by 2
    const auto r = coulomb_finite(minus, plus, p1, p2, CurrentDirection::out);
    const double phi = 2.0 * r.value;
    INFO("phi = " << phi << " tol = " << r.tolerance);
    CHECK(std::abs(phi) <= std::max(5.0 * 2.0 * r.tolerance, 1e-8));
  }
}

TEST_CASE("finite part requires a vanishing normalization") {
  const auto [p1, p2] = pair_with_overlap(1.3);
  const auto eta = make_test_function(TFKind::profile, 1.0);
  const auto etap = make_test_function(TFKind::profile, 1.3);
  CHECK_THROWS(coulomb_finite(eta, etap, p1, p2));
}

TEST_CASE("generic difference profile: finite part matches the eps-scan extrapolation") {
  const auto [p1, p2] = pair_with_overlap(1.3);
  const auto eta = make_test_function(TFKind::profile, 1.0);
  const auto etap = make_test_function(TFKind::profile, 1.4);
  const auto diff = TestFunction::difference(eta, etap);
  const auto direct = coulomb_finite(diff, etap, p1, p2, CurrentDirection::out);
  // cutoff values along an eps ladder extrapolate to the finite part
  std::vector<double> eps_list = {0.2, 0.1, 0.05, 0.025};
  std::vector<double> vals;
  for (double e : eps_list)
    vals.push_back(coulomb_cutoff_time(diff, etap, gsw, e, p1, p2, CurrentDirection::out));
  // Richardson-free check: the ladder approaches the direct value
  const double d0 = std::abs(vals[0] - direct.value);
  const double d3 = std::abs(vals[3] - direct.value);
  INFO("direct=" << direct.value << " ladder end=" << vals[3] << " d0=" << d0 << " d3=" << d3);
  CHECK(d3 < 0.5 * d0);
  CHECK(d3 < 0.05 * std::max(0.05, std::abs(direct.value)));
}

TEST_CASE("cutoff value: momentum representation agrees with time representation") {
  const auto [p1, p2] = pair_with_overlap(1.25);
  const auto eta = make_test_function(TFKind::profile, 1.0);
  const auto etap = make_test_function(TFKind::profile, 1.3);
  const double eps = 0.1;
  const double t = coulomb_cutoff_time(eta, etap, gsw, eps, p1, p2, CurrentDirection::out);
  const double m = coulomb_cutoff_momentum(eta, etap, gsw, eps, p1, p2, CurrentDirection::out);
  INFO("time=" << t << " momentum=" << m);
  CHECK(m == Catch::Approx(t).epsilon(0.02));
}

TEST_CASE("cutoff value is symmetric under (p1,eta) <-> (p2,eta')") {
  const auto [p1, p2] = pair_with_overlap(1.25);
  const auto eta = make_test_function(TFKind::profile, 1.0);
  const auto etap = make_test_function(TFKind::profile, 1.3);
  const double a = coulomb_cutoff_time(eta, etap, gsw, 0.15, p1, p2, CurrentDirection::out);
  const double b = coulomb_cutoff_time(etap, eta, gsw, 0.15, p2, p1, CurrentDirection::out);
  CHECK(a == Catch::Approx(b).epsilon(5e-3));
}

TEST_CASE("cutoff scan reproduces the divergent-scan coefficient") {
  const auto [p1, p2] = pair_with_overlap(1.25);
  const auto eta = make_test_function(TFKind::profile, 1.0);
  std::vector<double> eps_list;
  for (double e = 0.2; e > 0.004; e *= 0.6) eps_list.push_back(e);
  EpsScan s;
  s.eps = eps_list;
  for (double e : eps_list)
    s.values.push_back(coulomb_cutoff_time(eta, eta, gsw, e, p1, p2, CurrentDirection::out));
  const auto f = fit(s, FitModel::log_model);
  INFO("fitted b = " << f.b);
  CHECK(f.b == Catch::Approx(1.0 / (3.0 * pi)).epsilon(0.06));
}
