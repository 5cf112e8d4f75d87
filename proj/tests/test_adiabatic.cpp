#include <catch2/catch_amalgamated.hpp>

#include "irscat/algebraic.hpp"
#include "irscat/epsscan.hpp"
#include "irscat/locality.hpp"
#include "irscat/lojasiewicz.hpp"
#include "irscat/ratefit.hpp"

using namespace irscat;

TEST_CASE("eps grid is geometric and decreasing") {
  EpsGridSpec spec;
  const auto g = spec.grid();
  REQUIRE(g.size() == 12);
  CHECK(g.front() == Catch::Approx(1e-1));
  CHECK(g.back() == Catch::Approx(1e-4));
  for (std::size_t i = 1; i < g.size(); ++i)
    CHECK(g[i] / g[i - 1] == Catch::Approx(g[1] / g[0]).epsilon(1e-12));
  CHECK_THROWS(EpsGridSpec{1e-4, 1e-1, 12}.grid());
}

TEST_CASE("constant evaluator gives equal values; parallel == serial") {
  EpsGridSpec spec;
  auto f = [](double e) { return cplx(2.5, -0.5) + cplx(std::sin(1e3 * e)) * 0.0; };
  const auto par = eps_scan(f, spec, true);
  const auto ser = eps_scan(f, spec, false);
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par.values[i] == ser.values[i]);  // bit-for-bit
  }
}

TEST_CASE("evaluator failure reports the offending eps") {
  auto f = [](double e) -> cplx {
    if (e < 1e-3) throw std::runtime_error("boom");
    return cplx(e);
  };
  // the first grid point below 1e-3 is ~6.58e-4
  CHECK_THROWS_WITH(eps_scan(f, EpsGridSpec{}, false),
                    Catch::Matchers::ContainsSubstring("failed at eps=0.000658"));
}

TEST_CASE("synthetic fits recover parameters to 1e-6") {
  EpsGridSpec spec;
  const double b_true = 1.0 / (3.0 * pi);
  const auto logscan =
      eps_scan([&](double e) { return cplx(0.2 + b_true * std::log(1.0 / e)); }, spec);
  const auto lf = fit(logscan, FitModel::log_model);
  CHECK(lf.a == Catch::Approx(0.2).margin(1e-6));
  CHECK(lf.b == Catch::Approx(b_true).margin(1e-6));
  CHECK(lf.r2 > 1.0 - 1e-10);

  const auto powscan = eps_scan([](double e) { return cplx(3.0 * std::pow(e, 0.95)); }, spec);
  const auto pf = fit(powscan, FitModel::power);
  CHECK(pf.alpha == Catch::Approx(0.95).margin(1e-6));
  CHECK(pf.C == Catch::Approx(3.0).margin(1e-6));

  const auto cscan = eps_scan([](double) { return cplx(0.7); }, spec);
  const auto cf = fit(cscan, FitModel::constant);
  CHECK(cf.c0 == Catch::Approx(0.7));
  CHECK(cf.b == 0.0);

  const auto eps2 = eps_scan([](double e) { return cplx(e * e); }, spec);
  CHECK(fit(eps2, FitModel::power).alpha == Catch::Approx(2.0).margin(1e-6));
}

TEST_CASE("divergence detector carries a witness, not parameters") {
  EpsGridSpec spec;
  const auto grow = eps_scan([](double e) { return cplx(0.01 / e); }, spec);
  const auto d = fit(grow, FitModel::divergent);
  CHECK(d.verdict == "divergent");
  CHECK(d.witness > 0.0);
  const auto dec = eps_scan([](double e) { return cplx(e); }, spec);
  CHECK(fit(dec, FitModel::divergent).verdict == "not-divergent");
  CHECK(classify_vanishing(dec).model == FitModel::power);
  CHECK(classify_vanishing(grow).verdict == "divergent");
}

TEST_CASE("fit preconditions") {
  EpsScan tiny;
  tiny.eps = {0.1, 0.05, 0.02};
  tiny.values = {1.0, 1.0, 1.0};
  CHECK_THROWS(fit(tiny, FitModel::power));
}

TEST_CASE("Lojasiewicz value of a continuous distribution is t(0)") {
  auto t = [](const FourVector& q) { return cplx(std::cos(q.t) * std::exp(-0.2 * q.euclid_norm2()) + 1.5); };
  auto one = [](const FourVector&) { return cplx(1.0); };
  const auto gA = make_test_function(TFKind::switching, 1.0);
  const auto gB = make_test_function(TFKind::switching, 1.7);
  const auto rep = lojasiewicz_value(t, one, gA, gB, EpsGridSpec{1e-1, 1e-3, 8});
  REQUIRE(rep.has_value);
  CHECK(rep.value.real() == Catch::Approx(2.5).margin(1e-3));
}

TEST_CASE("polynomial factor h gives value h(0) t(0)") {
  auto t = [](const FourVector& q) { return cplx(1.0 / (1.0 + q.euclid_norm2())); };
  auto h = [](const FourVector& q) { return cplx(q.t); };  // h(0) = 0
  const auto gA = make_test_function(TFKind::switching, 1.0);
  const auto gB = make_test_function(TFKind::switching, 1.4);
  const auto rep = lojasiewicz_value(t, h, gA, gB, EpsGridSpec{1e-1, 1e-3, 8});
  REQUIRE(rep.has_value);
  CHECK(std::abs(rep.value) < 1e-6);
}

TEST_CASE("sgn(q0) has no Lojasiewicz value: mollifier dependence is flagged") {
  auto t = [](const FourVector& q) { return cplx(q.t >= 0.0 ? 1.0 : -1.0); };
  auto one = [](const FourVector&) { return cplx(1.0); };
  const auto gA = make_test_function(TFKind::switching, 1.0);
  // time-asymmetric mollifier: average of two time-shifted Gaussians, renormalized
  const auto shifted = make_test_function(TFKind::switching, 1.0, {0.8, 0, 0, 0});
  const double z0 = shifted.eval({0, 0, 0, 0}, TFSpace::position).real();
  const auto gB = TestFunction::combination(
      TFKind::switching, {{0.5, gA}, {0.5 / z0, shifted}});
  const auto rep = lojasiewicz_value(t, one, gA, gB, EpsGridSpec{1e-1, 1e-3, 8});
  CHECK_FALSE(rep.has_value);
  CHECK(rep.verdict == "no Lojasiewicz value (mollifier-dependent)");
  // each scan alone converges (values are eps-independent constants here)
  CHECK(std::abs(rep.scan_a.values.front() - rep.scan_a.values.back()) < 1e-10);
}

TEST_CASE("BCH residual vanishes for the nilpotent Heisenberg pair") {
  const auto A = CMatrix::unit(3, 0, 1);
  const auto B = CMatrix::unit(3, 1, 2);
  CHECK(bch_residual(A, B) <= 1e-12);
  // commuting A, B: exp(A+B) = exp(A)exp(B)
  const auto D1 = CMatrix::unit(3, 0, 0);
  const auto D2 = CMatrix::unit(3, 1, 1);
  CHECK(bch_residual(D1, D2) <= 1e-12);
  // hypothesis violation is rejected
  const auto X = CMatrix::unit(2, 0, 1), Y = CMatrix::unit(2, 1, 0);
  CHECK_THROWS(bch_residual(X, Y));
}

TEST_CASE("Magnus factorization for a 3-step Heisenberg family") {
  const auto A = CMatrix::unit(3, 0, 1);
  const auto B = CMatrix::unit(3, 1, 2);
  const auto Z = CMatrix::unit(3, 0, 2);  // central
  std::vector<std::pair<double, CMatrix>> steps = {
      {0.4, A * cplx(0.7) + B * cplx(0.1)},
      {0.9, B * cplx(1.3) + Z * cplx(0.5)},
      {0.7, A * cplx(-0.4) + B * cplx(0.2) + Z * cplx(1.0)}};
  CHECK(magnus_residual(steps) <= 1e-12);
  // direct ordered-product oracle at finer slicing must agree with the lhs
  CMatrix lhs = CMatrix::identity(3);
  for (const auto& [dt, M] : steps) {
    const int slices = 64;
    for (int s = 0; s < slices; ++s) lhs = lhs * expm(M * cplx(0.0, -dt / slices));
  }
  CMatrix coarse = CMatrix::identity(3);
  for (const auto& [dt, M] : steps) coarse = coarse * expm(M * cplx(0.0, -dt));
  CHECK((lhs - coarse).norm() < 1e-12);
}

TEST_CASE("locality verdicts: trivial cutoff, decaying flow, leaky control") {
  EpsGridSpec spec{1e-1, 1e-3, 8};
  // chi == 1: difference identically zero
  const auto zero = locality_check([](double, double) { return 0.0; }, 1.0, spec);
  CHECK(zero.superpolynomial);
  // Gaussian-tail difference: superpolynomial
  const auto gauss = locality_check(
      [](double e, double r) { return std::exp(-r * r / (e * e)); }, 1.0, spec);
  CHECK(gauss.superpolynomial);
  // deliberate far-support leakage decaying like eps^2: must fail
  const auto leaky =
      locality_check([](double e, double) { return e * e; }, 1.0, spec);
  CHECK_FALSE(leaky.superpolynomial);
}
