#include "hypgreen/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace hypgreen::special {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_integer(double x) { return std::floor(x) == x; }

// Exact recursion for integer and half-integer arguments of moderate size.
bool gamma_by_recursion(double x, double& out) {
  if (std::fabs(x) > 170.0 || !is_integer(2.0 * x)) return false;
  double base = is_integer(x) ? 1.0 : 0.5;
  double value = is_integer(x) ? 1.0 : std::sqrt(kPi);
  if (x >= base) {
    for (double y = base; y < x; y += 1.0) value *= y;
  } else {
    for (double y = x; y < base; y += 1.0) value /= y;
  }
  out = value;
  return true;
}

void check_pole(double x) {
  if (x <= 0.0 && is_integer(x))
    throw DomainError("gamma function pole at x = " + std::to_string(x));
}

}  // namespace

SignedLog log_gamma(double x) {
  check_pole(x);
  double exact;
  if (gamma_by_recursion(x, exact) && std::isfinite(exact) && exact != 0.0)
    return {std::log(std::fabs(exact)), exact < 0.0 ? -1 : 1};
  int sign = 1;
  double lg = lgamma_r(x, &sign);
  return {lg, sign};
}

double gamma(double x) {
  check_pole(x);
  double exact;
  if (gamma_by_recursion(x, exact)) return exact;
  return std::tgamma(x);
}

double gamma_ratio(std::initializer_list<double> num, std::initializer_list<double> den) {
  double direct = 1.0;
  bool ok = true;
  for (double x : num) {
    double g = gamma(x);
    if (!std::isfinite(g)) ok = false;
    direct *= g;
  }
  for (double x : den) {
    double g = gamma(x);
    if (!std::isfinite(g) || g == 0.0) ok = false;
    direct /= g;
  }
  if (ok && std::isfinite(direct) && direct != 0.0) return direct;
  double log_abs = 0.0;
  int sign = 1;
  for (double x : num) {
    SignedLog s = log_gamma(x);
    log_abs += s.log_abs;
    sign *= s.sign;
  }
  for (double x : den) {
    SignedLog s = log_gamma(x);
    log_abs -= s.log_abs;
    sign *= s.sign;
  }
  return sign * std::exp(log_abs);
}

double binomial(int n, int j) {
  if (j < 0 || j > n) return 0.0;
  double out = 1.0;
  for (int i = 1; i <= j; ++i) out = out * (n - j + i) / i;
  return out;
}

double surface_measure(int n) {
  if (n < 1) throw DomainError("surface_measure requires n >= 1");
  double h = 0.5 * (n + 1);
  double g = gamma(h);
  double p = std::pow(kPi, h);
  if (std::isfinite(g) && std::isfinite(p)) return 2.0 * p / g;
  return 2.0 * std::exp(h * std::log(kPi) - log_gamma(h).log_abs);
}

double riesz_gamma(const Dimension& dim, double alpha) {
  const double n = dim.n();
  if (!(alpha > 0.0 && alpha < n)) throw DomainError("riesz_gamma requires 0 < alpha < n");
  double scale = std::exp(0.5 * n * std::log(kPi) + alpha * std::numbers::ln2);
  return scale * gamma_ratio({0.5 * alpha}, {0.5 * (n - alpha)});
}

double sobolev_const(const Dimension& dim, int k) {
  const double n = dim.n();
  if (k < 1 || 2 * k >= dim.n()) throw DomainError("sobolev_const requires 1 <= k < n/2");
  return gamma_ratio({0.5 * (n + 2 * k)}, {0.5 * (n - 2 * k)}) *
         std::pow(surface_measure(dim.n()), 2.0 * k / n);
}

double hls_const(const Dimension& dim, double lambda) {
  const double n = dim.n();
  if (!(lambda > 0.0 && lambda < n)) throw DomainError("hls_const requires 0 < lambda < n");
  return std::pow(kPi, 0.5 * lambda) * gamma_ratio({0.5 * (n - lambda)}, {n - 0.5 * lambda}) *
         std::pow(gamma_ratio({0.5 * n}, {n}), -1.0 + lambda / n);
}

double beta_trig(double p, double q) {
  if (!(q > -1.0) || !(p > -0.5 * (q + 1.0)))
    throw DomainError("beta_trig requires q > -1 and p > -(q+1)/2");
  return std::pow(2.0, p + q) *
         gamma_ratio({p + 0.5 * (q + 1.0), 0.5 * (q + 1.0)}, {p + q + 1.0});
}

LegendreArgs LegendreArgs::from_z(double nu, double mu, double z) {
  if (!(z > 1.0)) throw DomainError("Legendre argument requires z > 1");
  return {nu, mu, z, z - 1.0};
}

LegendreArgs LegendreArgs::from_rho(double nu, double mu, double rho) {
  RadialPoint r(rho);
  double s = std::sinh(0.5 * r.rho);
  return {nu, mu, std::cosh(r.rho), 2.0 * s * s};
}

double LegendreArgs::rho() const { return 2.0 * std::asinh(std::sqrt(0.5 * zm1)); }

double trig_power_integral(double zm1, double e1, double e2, const quad::QuadConfig& cfg) {
  // int_0^pi (zm1 + 1 + cos t)^e1 (sin t)^e2 dt, split at pi/2 and reflected so that
  // both endpoints t = 0 and t = pi are approached from an exactly represented zero
  auto near_zero = [=](double t) {
    double c = std::cos(0.5 * t);
    return std::pow(zm1 + 2.0 * c * c, e1) * std::pow(std::sin(t), e2);
  };
  auto near_pi = [=](double s) {
    double h = std::sin(0.5 * s);
    return std::pow(zm1 + 2.0 * h * h, e1) * std::pow(std::sin(s), e2);
  };
  bool smooth = e2 >= 0.0 && is_integer(e2);
  auto ends = smooth ? quad::Endpoints::regular : quad::Endpoints::singular_left;
  double a = quad::require(quad::integrate_finite(near_zero, 0.0, 0.5 * kPi, cfg, ends),
                           "trigonometric integral");
  double b = quad::require(
      quad::integrate_finite(near_pi, 0.0, 0.5 * kPi, cfg, quad::Endpoints::singular_left),
      "trigonometric integral");
  return a + b;
}

double legendre_q_trig(const LegendreArgs& args, const quad::QuadConfig& cfg) {
  if (!args.trig_valid())
    throw DomainError("trigonometric Legendre representation requires nu > -1 and nu + mu + 1 > 0");
  const double nu = args.nu, mu = args.mu;
  double z2m1 = args.zm1 * (args.zm1 + 2.0);
  double pref = std::pow(2.0, -nu - 1.0) * gamma_ratio({nu + mu + 1.0}, {nu + 1.0}) *
                std::pow(z2m1, -0.5 * mu);
  return pref * trig_power_integral(args.zm1, mu - nu - 1.0, 2.0 * nu + 1.0, cfg);
}

double legendre_q_exp(const LegendreArgs& args, const quad::QuadConfig& cfg) {
  if (!args.exp_valid())
    throw DomainError("exponential Legendre representation requires nu + mu + 1 > 0 and mu < 1/2");
  const double nu = args.nu, mu = args.mu;
  const double rho = args.rho();
  // cosh(rho + s) - cosh(rho) = 2 sinh(rho + s/2) sinh(s/2)
  auto f = [=](double s) {
    double d = 2.0 * std::sinh(rho + 0.5 * s) * std::sinh(0.5 * s);
    return std::exp(-(nu + 0.5) * s) * std::pow(d, -mu - 0.5);
  };
  // s = u^2 leaves u^{-2 mu} at the origin
  auto head = [&](double u) { return 2.0 * u * f(u * u); };
  double near = quad::require(
      quad::integrate_finite(head, 0.0, 1.0, cfg, quad::Endpoints::singular_left),
      "exponential Legendre head");
  double far = quad::require(quad::integrate_semiinf(f, 1.0, cfg.with_decay(nu + mu + 1.0)),
                             "exponential Legendre tail");
  double pref = std::sqrt(0.5 * kPi) * std::pow(std::sinh(rho), mu) / gamma(0.5 - mu) *
                std::exp(-(nu + 0.5) * rho);
  return pref * (near + far);
}

}  // namespace hypgreen::special
