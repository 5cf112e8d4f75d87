#include <catch2/catch_amalgamated.hpp>

#include "irscat/minkowski.hpp"
#include "irscat/shell.hpp"

using namespace irscat;

TEST_CASE("mdot matches the (+,-,-,-) signature") {
  CHECK(mdot(FourVector{2, 0, 0, 0}, FourVector{2, 0, 0, 0}) == 4.0);
  CHECK(mdot(FourVector{1, 1, 0, 0}, FourVector{1, 1, 0, 0}) == 0.0);
  OnShellMomentum p(1.0, 3.0, 0.0, 0.0);
  CHECK(mdot(p, p) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("on-shell invariant holds for every grid node") {
  const auto g = MassShellGrid::make(1.0, {0.1, 2.5, 6, 5, 5});
  for (const auto& p : g.nodes) {
    const double e2 = p.energy() * p.energy();
    CHECK(std::abs(mdot(p, p) - 1.0) <= 1e-12 * std::max(1.0, e2));
  }
  CHECK_THROWS(OnShellMomentum(0.0, 0.0, 0.0, 0.0));
  CHECK_THROWS(OnShellMomentum(-1.0, 1.0, 0.0, 0.0));
}

TEST_CASE("massless shell volume over a radial band") {
  // int dmu_0 over 1 <= |k| <= 2 equals (b^2-a^2)/(8 pi^2)
  const auto g = MassShellGrid::make(0.0, {1.0, 2.0, 10, 6, 6});
  const cplx v = shell_integrate(g, [](const OnShellMomentum&) { return 1.0; });
  const double exact = (4.0 - 1.0) / (8.0 * pi * pi);
  CHECK(exact == Catch::Approx(0.0379954).epsilon(1e-4));
  CHECK(v.real() == Catch::Approx(exact).epsilon(1e-12));
  CHECK(v.imag() == 0.0);
}

TEST_CASE("odd integrand on a symmetric region integrates to zero") {
  const auto g = MassShellGrid::make(1.0, {0.2, 1.7, 8, 6, 6});
  const cplx v = shell_integrate(g, [](const OnShellMomentum& p) { return p.pz; });
  CHECK(std::abs(v) < 1e-14);
}

TEST_CASE("massive shell volume against the 1D radial oracle") {
  const auto g = MassShellGrid::make(1.0, {0.0, 2.0, 12, 8, 8});
  const cplx v = shell_integrate(g, [](const OnShellMomentum&) { return 1.0; });
  // radial oracle: 1/(4 pi^2) int_0^2 r^2 / sqrt(r^2+1) dr
  const cplx oracle = integrate_adaptive(
      [](double r) { return cplx(r * r / std::sqrt(r * r + 1.0)); }, 0.0, 2.0, 1e-13);
  CHECK(v.real() == Catch::Approx(oracle.real() / (4.0 * pi * pi)).epsilon(1e-10));
  CHECK(v.real() == Catch::Approx(shell_region_volume(1.0, 0.0, 2.0)).epsilon(1e-10));
}

TEST_CASE("halving the radial step improves the quadrature error") {
  auto err = [](int nr) {
    const auto g = MassShellGrid::make(0.0, {0.5, 3.0, nr, 4, 4});
    const cplx v = shell_integrate(
        g, [](const OnShellMomentum& k) { return std::cos(3.0 * k.spatial_norm()); });
    const cplx exact = integrate_adaptive(
        [](double r) { return cplx(r * std::cos(3.0 * r)); }, 0.5, 3.0, 1e-14);
    return std::abs(v - exact.real() / (4.0 * pi * pi));
  };
  // Gauss-Legendre: doubling the order must do far better than one power of 2.
  CHECK(err(8) < err(4) / 2.0);
  CHECK(err(16) < 1e-10);
}

TEST_CASE("boosts preserve the shell and compose with rest-frame maps") {
  const auto v = FourVelocity::from_three_velocity(0.3, -0.1, 0.55);
  const auto B = LorentzBoost::from_velocity(v);
  const auto Binv = LorentzBoost::to_rest_of(v);
  OnShellMomentum p(1.0, 0.4, 0.2, -0.9);
  const auto q = B.apply(p);
  CHECK(std::abs(msq(q.vec()) - 1.0) < 1e-12);
  const auto back = Binv.apply(q);
  CHECK(back.px == Catch::Approx(p.px).margin(1e-12));
  CHECK(back.py == Catch::Approx(p.py).margin(1e-12));
  CHECK(back.pz == Catch::Approx(p.pz).margin(1e-12));
  // boost of the rest momentum gives m v
  OnShellMomentum rest(1.0, 0.0, 0.0, 0.0);
  const auto mv = B.apply(rest);
  CHECK(mv.vec().t == Catch::Approx(v.u.t).margin(1e-14));
  CHECK(mv.vec().z == Catch::Approx(v.u.z).margin(1e-14));
}

TEST_CASE("grid CSV dump has the documented header") {
  const auto g = MassShellGrid::make(0.0, {1.0, 2.0, 2, 2, 2});
  std::ostringstream os;
  g.dump_csv(os);
  CHECK(os.str().substr(0, 18) == "px,py,pz,e,weight\r");
}
