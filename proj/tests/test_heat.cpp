#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hypgreen/heat_green.hpp"
#include "hypgreen/special.hpp"

using namespace hypgreen;
using namespace hypgreen::heat;

namespace {
constexpr double kPi = std::numbers::pi;

double rel_err(double a, double b) { return std::fabs(a - b) / std::fabs(b); }
}  // namespace

TEST_CASE("descent operator algebra") {
  HeatExpr g = HeatExpr::gaussian();
  SUBCASE("p = 0 is the identity") {
    HeatExpr same = apply_descent_operator(g, 0);
    CHECK(same.terms() == g.terms());
  }
  SUBCASE("one application to the Gaussian") {
    HeatExpr d = apply_descent_operator(g, 1);
    CHECK(d.size() == 1);
    CHECK(d.coefficient({1, 1, 0, 1}) == 0.5);
    double t = 0.7, rho = 1.3;
    CHECK(d.evaluate(t, rho) ==
          doctest::Approx(rho / (2 * t) / std::sinh(rho) * std::exp(-rho * rho / (4 * t))).epsilon(1e-14));
  }
  SUBCASE("matches finite differences") {
    HeatExpr e = apply_descent_operator(HeatExpr::rho_csch_gaussian(), 2);
    HeatExpr e1 = apply_descent_operator(e, 1);
    double t = 0.9, rho = 1.1, h = 1e-5;
    double fd = -(e.evaluate(t, rho + h) - e.evaluate(t, rho - h)) / (2 * h) / std::sinh(rho);
    CHECK(e1.evaluate(t, rho) == doctest::Approx(fd).epsilon(1e-8));
  }
  CHECK_THROWS_AS(apply_descent_operator(g, -1), DomainError);
}

TEST_CASE("iterated descent of csch against its trigonometric integral") {
  auto cfg = quad::QuadConfig::relative(1e-13);
  for (int m = 1; m <= 5; ++m) {
    HeatExpr lhs = apply_descent_operator(HeatExpr::csch(), m - 1);
    for (double rho : {0.3, 0.5, 1.0, 2.0, 4.0}) {
      auto f = [&](double t) { return std::pow(std::cosh(rho) + std::cos(t), m - 1); };
      double integral = quad::require(quad::integrate_finite(f, 0, kPi, cfg), "rhs");
      double rhs = special::gamma(m) / kPi * std::pow(std::sinh(rho), 1 - 2 * m) * integral;
      CAPTURE(m);
      CAPTURE(rho);
      CHECK(rel_err(lhs.evaluate(1.0, rho), rhs) < 1e-9);
    }
  }
}

TEST_CASE("three-dimensional heat kernel closed form") {
  for (double t : {0.01, 0.3, 1.0, 7.0})
    for (double rho : {0.05, 0.5, 2.0, 10.0}) {
      double exact = std::pow(4 * kPi * t, -1.5) * rho / std::sinh(rho) * std::exp(-t - rho * rho / (4 * t));
      double v = heat_kernel(Dimension(3), HeatQuery(t, rho));
      if (exact == 0)
        CHECK(v == 0);
      else
        CHECK(rel_err(v, exact) < 1e-12);
    }
  CHECK_THROWS_AS(HeatQuery(0, 1), DomainError);
  CHECK_THROWS_AS(HeatQuery(1, 0), DomainError);
}

TEST_CASE("stochastic completeness") {
  auto cfg = quad::QuadConfig::relative(1e-9);
  for (int n : {2, 3, 4, 5})
    for (double t : {0.1, 1.0}) {
      Dimension dim(n);
      auto f = [&](double rho) {
        return heat_kernel(dim, HeatQuery(t, rho)) * std::pow(std::sinh(rho), n - 1);
      };
      double mass = special::surface_measure(n - 1) *
                    quad::require(quad::integrate_semiinf(f, 0, cfg.with_decay(1)), "mass");
      CAPTURE(n);
      CAPTURE(t);
      CHECK(std::fabs(mass - 1) < 1e-6);
    }
}

TEST_CASE("even kernel: both integral forms agree at m = 2") {
  Dimension dim(4);
  auto cfg = kernel_config();
  for (double t : {0.2, 1.5})
    for (double rho : {0.3, 1.0, 3.0}) {
      const HeatExpr& e2 = odd_kernel_expr(2);
      auto g = [&](double r) { return e2.evaluate(t, r); };
      double first = std::pow(2 * kPi, -2.5) / std::sqrt(t) / std::sqrt(2.0) *
                     quad::require(quad::integrate_descent(g, RadialPoint(rho), 2.8, cfg), "first");
      CHECK(rel_err(heat_kernel_reduced(dim, HeatQuery(t, rho)), first) < 1e-10);
    }
}

TEST_CASE("heat kernel descent between dimensions") {
  auto cfg = kernel_config();
  for (int n : {2, 3, 4})
    for (double t : {0.3, 2.0})
      for (double rho : {0.2, 1.0, 2.5}) {
        Dimension lo(n), hi(n + 1);
        auto g = [&](double r) { return heat_kernel(hi, HeatQuery(t, r)); };
        double desc = std::exp((2 * n - 1) * t / 4) *
                      quad::require(quad::integrate_descent(g, RadialPoint(rho), n / 2.0 + 0.2, cfg), "d");
        CAPTURE(n);
        CAPTURE(t);
        CAPTURE(rho);
        CHECK(rel_err(desc, heat_kernel(lo, HeatQuery(t, rho))) < 1e-8);
      }
}

TEST_CASE("Legendre-route resolvent closed forms") {
  Dimension d3(3), d5(5);
  CHECK(rel_err(resolvent_legendre(d3, ResolventQuery::from_nu(d3, 1), RadialPoint(1)),
                std::exp(-1.0) / (4 * kPi * std::sinh(1.0))) < 1e-12);
  for (double rho : {0.01, 0.5, 3.0}) {
    CHECK(rel_err(resolvent_legendre(d3, ResolventQuery::from_nu(d3, 0), RadialPoint(rho)),
                  1 / (4 * kPi * std::sinh(rho))) < 1e-12);
    CHECK(rel_err(resolvent_legendre(d5, ResolventQuery::from_nu(d5, 1), RadialPoint(rho)),
                  1 / (8 * kPi * kPi * std::pow(std::sinh(rho), 3))) < 1e-12);
  }
  CHECK(ResolventQuery::from_lambda(d3, 0).nu == 1.0);
  CHECK(ResolventQuery::from_lambda(d3, 0).theta() == 0.5);
  CHECK_THROWS_AS(ResolventQuery::from_lambda(d3, -1.01), DomainError);
  CHECK_THROWS_AS(resolvent_heat(d3, -1.01, RadialPoint(1)), DomainError);
  CHECK_THROWS_AS(resolvent_legendre(Dimension(2), ResolventQuery::from_nu(Dimension(2), 1), RadialPoint(1)),
                  DomainError);
}

TEST_CASE("Legendre route equals the phase-stripped Q form") {
  // G = (2 pi)^{-n/2} sinh^{-(n-2)/2} Q~^{(n-2)/2}_{nu - 1/2}(cosh rho)
  for (int n : {3, 4, 5, 6})
    for (double nu : {0.0, 0.7, 2.0}) {
      Dimension dim(n);
      double rho = 0.8;
      double q = special::legendre_q_trig(special::LegendreArgs::from_rho(nu - 0.5, 0.5 * (n - 2), rho));
      double expect = std::pow(2 * kPi, -0.5 * n) * std::pow(std::sinh(rho), -0.5 * (n - 2)) * q;
      CHECK(rel_err(resolvent_legendre(dim, ResolventQuery::from_nu(dim, nu), RadialPoint(rho)), expect) < 1e-10);
    }
}

TEST_CASE("time-integral route against the Legendre route") {
  SUBCASE("n = 3") {
    Dimension d(3);
    double a = resolvent_heat(d, 0, RadialPoint(1));
    double b = resolvent_legendre(d, ResolventQuery::from_lambda(d, 0), RadialPoint(1));
    CHECK(rel_err(a, b) < 1e-8);
    double lam = -1 + 1e-6;
    a = resolvent_heat(d, lam, RadialPoint(1));
    b = resolvent_legendre(d, ResolventQuery::from_lambda(d, lam), RadialPoint(1));
    CHECK(std::isfinite(a));
    CHECK(rel_err(a, b) < 1e-8);
    // spectral-gap endpoint itself
    a = resolvent_heat(d, -1, RadialPoint(0.5));
    CHECK(rel_err(a, 1 / (4 * kPi * std::sinh(0.5))) < 1e-8);
  }
  SUBCASE("grid") {
    for (int n : {3, 4, 5}) {
      Dimension d(n);
      double endpoint = -0.25 * (n - 1) * (n - 1);
      for (double lam : {endpoint + 1e-6, 0.0, 1.0, 5.0})
        for (double rho : {0.1, 0.5, 1.0, 2.0, 5.0}) {
          double a = resolvent_heat(d, lam, RadialPoint(rho));
          double b = resolvent_legendre(d, ResolventQuery::from_lambda(d, lam), RadialPoint(rho));
          CAPTURE(n);
          CAPTURE(lam);
          CAPTURE(rho);
          CHECK(rel_err(a, b) < 1e-6);
        }
    }
  }
}

TEST_CASE("resolvent descent between dimensions") {
  auto cfg = kernel_config();
  for (int n : {3, 4})
    for (double lam : {0.0, 2.0})
      for (double rho : {0.3, 1.0, 2.0}) {
        Dimension lo(n), hi(n + 1);
        auto qhi = ResolventQuery::from_lambda(hi, lam - (2 * n - 1) / 4.0);
        auto g = [&](double r) { return resolvent_legendre(hi, qhi, RadialPoint(r), cfg); };
        double desc = quad::require(quad::integrate_descent(g, RadialPoint(rho), n / 2.0, cfg), "d");
        double direct = resolvent_legendre(lo, ResolventQuery::from_lambda(lo, lam), RadialPoint(rho));
        CHECK(rel_err(desc, direct) < 1e-6);
      }
}

TEST_CASE("resolvent monotonicity") {
  for (int n : {3, 4, 5, 6, 7}) {
    Dimension d(n);
    double endpoint = -0.25 * (n - 1) * (n - 1);
    double prev_lam = INFINITY;
    for (double lam : {endpoint, endpoint + 0.5, 0.0, 1.0, 10.0}) {
      double prev_rho = INFINITY;
      for (double rho : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        double v = resolvent_legendre(d, ResolventQuery::from_lambda(d, lam), RadialPoint(rho));
        CHECK(v > 0);
        CHECK(v < prev_rho);
        prev_rho = v;
      }
      double v1 = resolvent_legendre(d, ResolventQuery::from_lambda(d, lam), RadialPoint(1));
      CHECK(v1 < prev_lam);
      prev_lam = v1;
    }
  }
}

TEST_CASE("series evaluation of the descent expressions") {
  // reference values: high-precision numerical u-derivatives of the seeds, u = cosh rho
  struct Ref {
    int p;
    double rho;
    bool rho_csch;
    double value;
  };
  const Ref refs[] = {{2, 0.25, false, 0.08097051112880891}, {2, 0.25, true, 0.44168882560690283},
                      {4, 0.4, false, 0.091521187078637092}, {4, 0.4, true, 0.97988444894138484},
                      {6, 0.25, false, 0.4208198571053271},  {6, 0.25, true, 7.0229192251346818},
                      {6, 0.4, true, 5.9834129508073904}};
  for (const auto& r : refs) {
    CAPTURE(r.p);
    CAPTURE(r.rho);
    CHECK(descent_series_value(r.rho_csch, r.p, 3.0, r.rho) == doctest::Approx(r.value).epsilon(1e-14));
  }
  SUBCASE("agrees with the closed form away from the origin") {
    for (int p = 0; p <= 6; ++p)
      for (double t : {0.5, 3.0}) {
        double a = descent_series_value(true, p, t, 0.9);
        double b = apply_descent_operator(HeatExpr::rho_csch_gaussian(), p).evaluate(t, 0.9);
        CHECK(std::fabs(a - b) <= 1e-11 * std::fabs(b));
      }
  }
  SUBCASE("limit at the origin") {
    // D exp(-rho^2/4t) = rho csch(rho) exp(-rho^2/4t) / (2t) -> 1/(2t)
    CHECK(descent_series_value(false, 1, 0.7, 1e-7) == doctest::Approx(1 / 1.4).epsilon(1e-12));
  }
}
