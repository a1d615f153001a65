#include "hypgreen/heat_green.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

#include "hypgreen/special.hpp"

namespace hypgreen::heat {

namespace {

constexpr double kPi = std::numbers::pi;

const HeatExpr& cached(std::map<int, HeatExpr>& cache, std::mutex& mu, int m,
                       const HeatExpr& seed, int power) {
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, apply_descent_operator(seed, power)).first;
  return it->second;
}

double gap(const Dimension& dim) {
  double h = 0.5 * (dim.n() - 1);
  return h * h;
}

// t^{-1/2} prefactor of the odd kernel, 2^{-m-1} pi^{-m-1/2}
double odd_prefactor(int m) { return std::pow(2.0, -m - 1) * std::pow(kPi, -m - 0.5); }

// (2 pi)^{-(n+1)/2} / 2 / sqrt 2, the sqrt 2 undoing the one inside integrate_descent
double even_prefactor(int n) { return std::pow(2.0 * kPi, -0.5 * (n + 1)) / (2.0 * std::sqrt(2.0)); }

double even_decay(int m) { return 2.0 * m - 1.2; }

enum class Seed { gaussian, rho_csch_gaussian };

// Taylor coefficients in w = cosh(rho) - 1 of rho^2 and of rho / sinh(rho).
struct SeedCoeffs {
  static constexpr int kTerms = 96;
  double rho_sq[kTerms];
  double rho_csch[kTerms];
  SeedCoeffs() {
    rho_sq[0] = 0.0;
    rho_sq[1] = 2.0;
    rho_csch[0] = 1.0;
    for (int k = 1; k + 1 < kTerms; ++k)
      rho_sq[k + 1] = rho_sq[k] * (-2.0 * k * k) / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
    for (int k = 0; k + 1 < kTerms; ++k) rho_csch[k + 1] = rho_csch[k] * -(k + 1.0) / (2.0 * k + 3.0);
  }
};

const SeedCoeffs& seed_coeffs() {
  static const SeedCoeffs c;
  return c;
}

// D = -d/dw, so D^p seed is a signed p-th derivative of the seed's w-series.
// Free of the rho^{-2p} cancellation of the closed form; used for small rho.
double series_descent(Seed seed, int p, double t, double rho) {
  const SeedCoeffs& sc = seed_coeffs();
  double sh = std::sinh(0.5 * rho);
  double w = 2.0 * sh * sh;
  // terms beyond k are below rounding: (w/2)^j j^p < 1e-18 and the exponential series has converged
  int need = p + 10 + static_cast<int>(std::ceil((42.0 + 4.0 * p) / -std::log(0.5 * w)));
  const int k = std::min(SeedCoeffs::kTerms, std::max(p + 28, need));
  double inv4t = 0.25 / t;
  double e[SeedCoeffs::kTerms], f[SeedCoeffs::kTerms];
  e[0] = 1.0;
  for (int j = 1; j < k; ++j) {
    double acc = 0.0;
    for (int i = 1; i <= j; ++i) acc += i * (-sc.rho_sq[i] * inv4t) * e[j - i];
    e[j] = acc / j;
  }
  for (int j = 0; j < k; ++j) {
    if (seed == Seed::gaussian) {
      f[j] = e[j];
    } else {
      double acc = 0.0;
      for (int i = 0; i <= j; ++i) acc += sc.rho_csch[i] * e[j - i];
      f[j] = acc;
    }
  }
  double result = 0.0;
  for (int j = k - 1 - p; j >= 0; --j) {
    double fall = 1.0;
    for (int i = 1; i <= p; ++i) fall *= j + i;
    result = result * w + f[j + p] * fall;
  }
  return p % 2 == 0 ? result : -result;
}

// t^{-1} coefficient of D^m exp(-rho^2/4t): (-1)^{m+1} (d/dw)^m rho^2 / 4
double odd_order_one(int m, double rho) {
  if (rho > 1.0) return odd_kernel_expr(m).evaluate_order(1, rho);
  const SeedCoeffs& sc = seed_coeffs();
  double sh = std::sinh(0.5 * rho);
  double w = 2.0 * sh * sh;
  double result = 0.0;
  for (int j = SeedCoeffs::kTerms - 1 - m; j >= 0; --j) {
    double fall = 1.0;
    for (int i = 1; i <= m; ++i) fall *= j + i;
    result = result * w + sc.rho_sq[j + m] * fall;
  }
  return (m % 2 == 0 ? -0.25 : 0.25) * result;
}

bool use_series(double t, double rho) { return rho <= 1.0 && rho * rho <= 8.0 * t; }

double odd_kernel_value(int m, double t, double rho) {
  if (use_series(t, rho)) return series_descent(Seed::gaussian, m, t, rho);
  return odd_kernel_expr(m).evaluate(t, rho);
}

double even_kernel_value(int m, double t, double rho) {
  if (use_series(t, rho)) return series_descent(Seed::rho_csch_gaussian, m - 1, t, rho);
  if (std::isinf(t)) return even_kernel_expr(m).evaluate_order(0, rho);
  return even_kernel_expr(m).evaluate(t, rho);
}

}  // namespace

double descent_series_value(bool rho_csch_seed, int p, double t, double rho) {
  return series_descent(rho_csch_seed ? Seed::rho_csch_gaussian : Seed::gaussian, p, t, rho);
}

HeatQuery::HeatQuery(double t_, double rho_) : t(t_), rho(rho_) {
  if (!(t_ > 0.0) || !std::isfinite(t_)) throw DomainError("heat query requires t > 0");
  RadialPoint check(rho_);
}

ResolventQuery ResolventQuery::from_lambda(const Dimension& dim, double lambda) {
  double nu2 = lambda + gap(dim);
  if (!(nu2 >= 0.0))
    throw DomainError("resolvent requires lambda >= -(n-1)^2/4 (spectral gap)");
  return {lambda, std::sqrt(nu2)};
}

ResolventQuery ResolventQuery::from_nu(const Dimension& dim, double nu) {
  if (!(nu >= 0.0)) throw DomainError("resolvent requires nu >= 0");
  return {nu * nu - gap(dim), nu};
}

const HeatExpr& odd_kernel_expr(int m) {
  static std::map<int, HeatExpr> cache;
  static std::mutex mu;
  if (m < 0) throw DomainError("odd kernel index must be nonnegative");
  return cached(cache, mu, m, HeatExpr::gaussian(), m);
}

const HeatExpr& even_kernel_expr(int m) {
  static std::map<int, HeatExpr> cache;
  static std::mutex mu;
  if (m < 1) throw DomainError("even kernel index must be positive");
  return cached(cache, mu, m, HeatExpr::rho_csch_gaussian(), m - 1);
}

double heat_kernel_reduced(const Dimension& dim, const HeatQuery& q, const quad::QuadConfig& cfg) {
  if (dim.odd()) {
    int m = (dim.n() - 1) / 2;
    return odd_prefactor(m) / std::sqrt(q.t) * odd_kernel_value(m, q.t, q.rho);
  }
  int m = dim.n() / 2;
  double t = q.t;
  auto g = [&](double r) { return even_kernel_value(m, t, r); };
  double integral = quad::require(
      quad::integrate_descent(g, RadialPoint(q.rho), even_decay(m), cfg), "even heat kernel");
  return even_prefactor(dim.n()) * std::pow(t, -1.5) * integral;
}

double heat_kernel(const Dimension& dim, const HeatQuery& q, const quad::QuadConfig& cfg) {
  return std::exp(-gap(dim) * q.t) * heat_kernel_reduced(dim, q, cfg);
}

double resolvent_legendre(const Dimension& dim, const ResolventQuery& q, RadialPoint rho,
                          const quad::QuadConfig& cfg) {
  if (dim.n() < 3) throw DomainError("resolvent_legendre requires n >= 3");
  const double n = dim.n(), nu = q.nu;
  double s = std::sinh(0.5 * rho.rho);
  double zm1 = 2.0 * s * s;
  double pref = std::pow(2.0 * kPi, -0.5 * n) *
                special::gamma_ratio({0.5 * (n - 1) + nu}, {nu + 0.5}) /
                std::pow(2.0, nu + 0.5) * std::pow(std::sinh(rho.rho), 2.0 - n);
  return pref * special::trig_power_integral(zm1, 0.5 * (n - 3) - nu, 2.0 * nu, cfg);
}

double resolvent_heat(const Dimension& dim, double lambda, RadialPoint rho,
                      const quad::QuadConfig& cfg) {
  if (dim.n() < 3) throw DomainError("resolvent_heat requires n >= 3");
  const ResolventQuery q = ResolventQuery::from_lambda(dim, lambda);
  const double nu2 = q.nu * q.nu;
  quad::QuadConfig inner = cfg;
  inner.rel_tol = 0.1 * cfg.rel_tol;

  // exp(-lambda t) h_n = exp(-nu^2 t) h~_n; integrate in s = ln t
  auto integrand = [&](double s) {
    double t = std::exp(s);
    double damp = std::exp(-nu2 * t);
    if (damp == 0.0) return 0.0;
    return t * damp * heat_kernel_reduced(dim, HeatQuery(t, rho.rho), inner);
  };
  const double big_t = 1e8;
  double s_lo = std::log(rho.rho * rho.rho / (4.0 * 700.0));
  double s_hi = std::log(big_t);
  // unit panels across the Gaussian onset, wider ones on the smooth remainder
  std::vector<double> breaks;
  for (double s = s_lo; s < s_hi; s += (s < s_lo + 8.0 ? 1.0 : 2.5)) breaks.push_back(s);
  breaks.push_back(s_hi);
  double body = quad::require(quad::integrate_piecewise(integrand, breaks, cfg), "resolvent time integral");

  // beyond T the kernel is C t^{-3/2} up to relative O((1 + rho^2)/T) corrections
  double c;
  if (dim.odd()) {
    int m = (dim.n() - 1) / 2;
    c = odd_prefactor(m) * odd_order_one(m, rho.rho);
  } else {
    int m = dim.n() / 2;
    auto g = [&](double r) { return even_kernel_value(m, INFINITY, r); };
    c = even_prefactor(dim.n()) *
        quad::require(quad::integrate_descent(g, rho, even_decay(m), inner), "resolvent tail");
  }
  double tail = 0.0;
  if (nu2 * big_t < 700.0) {
    double nu = q.nu;
    tail = c * (2.0 / std::sqrt(big_t) * std::exp(-nu2 * big_t) -
                2.0 * nu * std::sqrt(kPi) * std::erfc(nu * std::sqrt(big_t)));
  }
  return body + tail;
}

}  // namespace hypgreen::heat
