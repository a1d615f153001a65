#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hypgreen/quadrature.hpp"
#include "hypgreen/special.hpp"

using namespace hypgreen;
using namespace hypgreen::special;

namespace {
constexpr double kPi = std::numbers::pi;

bool rel_close(double a, double b, double tol) { return std::fabs(a - b) <= tol * std::fabs(b); }
}  // namespace

TEST_CASE("gamma machinery") {
  CHECK(special::gamma(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-15));
  CHECK(special::gamma(5) == 24.0);
  CHECK(special::gamma(4.5) == doctest::Approx(105.0 / 16.0 * std::sqrt(kPi)).epsilon(1e-15));
  CHECK(special::gamma(-0.5) == doctest::Approx(-2 * std::sqrt(kPi)).epsilon(1e-15));
  CHECK(special::gamma(0.3) == doctest::Approx(std::tgamma(0.3)).epsilon(1e-14));
  CHECK_THROWS_AS(special::gamma(0.0), DomainError);
  CHECK_THROWS_AS(special::gamma(-3.0), DomainError);
  CHECK(log_gamma(-1.5).sign == 1);
  CHECK(log_gamma(-0.5).sign == -1);
  // ratio of huge gammas falls back to log space
  CHECK(gamma_ratio({300.5}, {299.5}) == doctest::Approx(299.5).epsilon(1e-12));
  CHECK(binomial(7, 3) == 35.0);
}

TEST_CASE("surface measure") {
  CHECK(surface_measure(1) == doctest::Approx(2 * kPi).epsilon(1e-15));
  CHECK(surface_measure(2) == doctest::Approx(4 * kPi).epsilon(1e-15));
  CHECK(surface_measure(3) == doctest::Approx(2 * kPi * kPi).epsilon(1e-15));
  CHECK(surface_measure(5) == doctest::Approx(std::pow(kPi, 3)).epsilon(1e-15));
  CHECK_THROWS_AS(surface_measure(0), DomainError);
}

TEST_CASE("Riesz normalization") {
  CHECK(riesz_gamma(Dimension(3), 2) == doctest::Approx(4 * kPi).epsilon(1e-14));
  CHECK(riesz_gamma(Dimension(5), 4) == doctest::Approx(16 * kPi * kPi).epsilon(1e-14));
  CHECK(riesz_gamma(Dimension(4), 2) == doctest::Approx(4 * kPi * kPi).epsilon(1e-14));
  CHECK_THROWS_AS(riesz_gamma(Dimension(4), 4), DomainError);
  CHECK_THROWS_AS(riesz_gamma(Dimension(4), 0), DomainError);
  for (int n = 3; n <= 64; ++n)
    for (double a : {0.5, 1.0, 0.5 * n, n - 0.5}) {
      double v = riesz_gamma(Dimension(n), a);
      CHECK(std::isfinite(v));
      CHECK(v > 0);
    }
}

TEST_CASE("Sobolev constants") {
  CHECK(sobolev_const(Dimension(3), 1) ==
        doctest::Approx(0.75 * std::pow(2 * kPi * kPi, 2.0 / 3.0)).epsilon(1e-14));
  CHECK(sobolev_const(Dimension(5), 2) ==
        doctest::Approx(105.0 / 16.0 * std::pow(kPi, 12.0 / 5.0)).epsilon(1e-14));
  double omega4 = 8 * kPi * kPi / 3;
  CHECK(sobolev_const(Dimension(4), 1) == doctest::Approx(2 * std::sqrt(omega4)).epsilon(1e-14));
  CHECK_THROWS_AS(sobolev_const(Dimension(4), 2), DomainError);
}

TEST_CASE("HLS constant") {
  CHECK(hls_const(Dimension(5), 1) ==
        doctest::Approx(16.0 / 105.0 * std::pow(32 / std::sqrt(kPi), 0.8)).epsilon(1e-14));
  double prev = 0;
  for (int j = 1; j <= 8; ++j) {
    double v = hls_const(Dimension(5), 5 - std::pow(10.0, -j));
    CHECK(v > prev);
    prev = v;
  }
  CHECK(prev > 1e6);
  for (int n : {5, 7, 9}) {
    Dimension d(n);
    double lhs = sobolev_const(d, (n - 1) / 2) * hls_const(d, 1);
    CHECK(rel_close(lhs, riesz_gamma(d, n - 1), 1e-12));
  }
}

TEST_CASE("trigonometric beta integral") {
  CHECK(beta_trig(1, 0) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(beta_trig(0, 0) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(beta_trig(1, 1) == doctest::Approx(2).epsilon(1e-15));
  CHECK_THROWS_AS(beta_trig(0, -1), DomainError);
  CHECK_THROWS_AS(beta_trig(-1, 0.5), DomainError);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uq(-0.5, 4.0), up(0.0, 1.0);
  auto cfg = quad::QuadConfig::relative(1e-13);
  for (int i = 0; i < 20; ++i) {
    double q = uq(rng);
    double p = -0.5 * (q + 1) + 0.3 + 3 * up(rng);
    // 1 + cos t = 2 cos^2(t/2); the half next to pi is reflected onto [0, pi/2]
    auto f = [=](double t) {
      double c = std::cos(0.5 * t);
      return std::exp(p * std::log(2.0) + 2 * p * std::log(c) + q * std::log(std::sin(t)));
    };
    auto g = [=](double s) {
      double h = std::sin(0.5 * s);
      return std::exp(p * std::log(2.0) + 2 * p * std::log(h) + q * std::log(std::sin(s)));
    };
    double direct =
        quad::require(quad::integrate_finite(f, 0, kPi / 2, cfg, quad::Endpoints::singular_left), "beta") +
        quad::require(quad::integrate_finite(g, 0, kPi / 2, cfg, quad::Endpoints::singular_left), "beta");
    CAPTURE(p);
    CAPTURE(q);
    CHECK(rel_close(beta_trig(p, q), direct, 1e-10));
  }
}

TEST_CASE("Legendre Q representations") {
  const double half_ln3 = 0.5 * std::log(3.0);
  SUBCASE("degree zero closed form") {
    auto args = LegendreArgs::from_z(0, 0, 2);
    CHECK(rel_close(legendre_q_trig(args), half_ln3, 1e-12));
    CHECK(rel_close(legendre_q_exp(args), half_ln3, 1e-10));
  }
  SUBCASE("half-integer degree agreement") {
    auto args = LegendreArgs::from_z(0.5, 0, 2);
    CHECK(rel_close(legendre_q_exp(args), legendre_q_trig(args), 1e-10));
  }
  SUBCASE("Q_1 closed form") {
    // Q_1(z) = z/2 ln((z+1)/(z-1)) - 1
    double z = 3;
    double exact = z / 2 * std::log((z + 1) / (z - 1)) - 1;
    CHECK(rel_close(legendre_q_trig(LegendreArgs::from_z(1, 0, z)), exact, 1e-12));
  }
  SUBCASE("random agreement on the joint validity region") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unu(0.0, 3.0), umu(0.0, 1.0), urho(0.05, 4.0);
    for (int i = 0; i < 50; ++i) {
      double nu = unu(rng);
      double mu_lo = std::max(-nu - 1 + 0.05, -2.5);
      double mu = mu_lo + (0.45 - mu_lo) * umu(rng);
      auto args = LegendreArgs::from_rho(nu, mu, urho(rng));
      CAPTURE(nu);
      CAPTURE(mu);
      CAPTURE(args.z);
      double t = legendre_q_trig(args), e = legendre_q_exp(args);
      CHECK(std::fabs(t - e) <= 1e-9 * std::fabs(t));
    }
  }
  SUBCASE("exponential decay in the degree") {
    double rho = 1.3;
    auto lq = [&](double nu) { return std::log(legendre_q_exp(LegendreArgs::from_rho(nu, 0, rho))); };
    double slope = (lq(40) - lq(20)) / 20;
    CHECK(slope == doctest::Approx(-rho).epsilon(0.05));
  }
  SUBCASE("validity flags") {
    CHECK_THROWS_AS(legendre_q_exp(LegendreArgs::from_z(1, 0.5, 2)), DomainError);
    CHECK_THROWS_AS(legendre_q_trig(LegendreArgs::from_z(-1.5, 0, 2)), DomainError);
    CHECK_THROWS_AS(LegendreArgs::from_z(0, 0, 1), DomainError);
  }
}

namespace {

// Both sides of the order-raising identity
// int_rho^inf sinh^{lam+1} r (cosh r - cosh rho)^{mu-1} Q^{-lam}_nu(cosh r) dr
//   = Gamma(mu) sinh^{lam+mu} rho Q^{-lam-mu}_nu(cosh rho)
struct IndexRaising {
  double lhs, rhs;
};

IndexRaising index_raising(double nu, double lam, double mu, double rho) {
  auto cfg = quad::QuadConfig::relative(1e-12);
  auto q = [&](double r, double order) {
    return legendre_q_exp(LegendreArgs::from_rho(nu, order, r), cfg);
  };
  // (cosh(rho + s) - cosh rho) / s
  auto ratio = [&](double s) {
    return s > 0 ? 2 * std::sinh(rho + 0.5 * s) * std::sinh(0.5 * s) / s : std::sinh(rho);
  };
  auto f = [&](double s) {
    double r = rho + s;
    return std::pow(std::sinh(r), lam + 1) * std::pow(ratio(s) * s, mu - 1) * q(r, -lam);
  };
  // s = u^{1/mu} removes s^{mu-1}
  auto head = [&](double u) {
    double s = std::pow(u, 1 / mu);
    return std::pow(std::sinh(rho + s), lam + 1) * std::pow(ratio(s), mu - 1) * q(rho + s, -lam) / mu;
  };
  auto cfg2 = quad::QuadConfig::relative(1e-10);
  double a = quad::require(quad::integrate_finite(head, 0, 1, cfg2, quad::Endpoints::singular_left), "h");
  double b = quad::require(quad::integrate_semiinf(f, 1, cfg2.with_decay(nu + 1 - lam - mu)), "t");
  double rhs = special::gamma(mu) * std::pow(std::sinh(rho), lam + mu) * q(rho, -lam - mu);
  return {a + b, rhs};
}

}  // namespace

TEST_CASE("order-raising identity") {
  struct P {
    double nu, lam, mu, rho;
  };
  const P points[] = {{1, 0.5, 0.5, 1},  {1, 0.5, 0.5, 0.3}, {2, 0.5, 0.5, 2},   {1.5, 0.25, 0.5, 1},
                      {1, 0.5, 0.75, 1}, {2, 1, 0.5, 0.7},   {2.5, 0.5, 1, 1.5}, {1.2, 0.3, 0.6, 0.5},
                      {3, 1.5, 0.5, 1},  {0.8, 0.2, 0.4, 2.5}};
  for (const auto& p : points) {
    CAPTURE(p.nu);
    CAPTURE(p.lam);
    CAPTURE(p.mu);
    CAPTURE(p.rho);
    auto r = index_raising(p.nu, p.lam, p.mu, p.rho);
    CHECK(std::fabs(r.lhs - r.rhs) <= 1e-7 * std::fabs(r.rhs));
  }
  SUBCASE("mu = 1/2 through the descent integral") {
    double nu = 1, lam = 0.5, rho = 1;
    auto cfg = quad::QuadConfig::relative(1e-12);
    auto g = [&](double r) {
      return std::pow(std::sinh(r), lam) * legendre_q_exp(LegendreArgs::from_rho(nu, -lam, r), cfg);
    };
    double lhs = quad::require(quad::integrate_descent(g, RadialPoint(rho), nu + 1 - lam, cfg), "d") /
                 std::sqrt(2.0);
    CHECK(rel_close(lhs, 0.42269509390453157, 1e-9));
  }
}
