#include "hypgreen/mazya.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypgreen/numeric.hpp"
#include "hypgreen/special.hpp"

namespace hypgreen::mazya {

namespace {

double coeff(double beta, int j) { return special::gamma_ratio({j + beta}, {j + 1.0, beta}); }

double taylor_sum(double beta, int k, double x) {
  double out = 0.0, term = 1.0;
  for (int j = 0; j < k; ++j) {
    out += term;
    term *= x * (j + beta) / (j + 1.0);
  }
  return out;
}

double one_minus_sq(double r) { return (1.0 - r) * (1.0 + r); }

// (2/(delta^2+eps))^beta * taylor_tail(x), x = (delta^2 - r^2)/(delta^2 + eps)
double bracket(const TrialFamily& fam, double r) {
  const double d2e = fam.delta * fam.delta + fam.eps;
  const double x = (fam.delta - r) * (fam.delta + r) / d2e;
  return std::pow(2.0 / d2e, fam.beta()) * taylor_tail(fam.beta(), fam.k.k, x, (fam.eps + r * r) / d2e);
}

std::vector<double> radial_breaks(double eps, double delta) {
  std::vector<double> out{0.0};
  for (double b = std::sqrt(eps); b < 0.5 * delta; b *= 4.0) out.push_back(b);
  out.push_back(delta);
  return out;
}

// omega_{n-1} int_0^delta f(r) r^{n-1} dr
double radial(const TrialFamily& fam, const std::function<double(double)>& f,
              const quad::QuadConfig& cfg, const char* what) {
  const int n = fam.n.n();
  auto integrand = [&](double r) { return f(r) * std::pow(r, n - 1); };
  auto breaks = radial_breaks(fam.eps, fam.delta);
  return special::surface_measure(n - 1) *
         quad::require(quad::integrate_piecewise(integrand, breaks, cfg), what);
}

double bubble_const(const TrialFamily& fam) {
  const int n = fam.n.n(), k = fam.k.k;
  return special::gamma_ratio({0.5 * (n + 2 * k)}, {0.5 * (n - 2 * k)});
}

}  // namespace

TrialFamily::TrialFamily(Dimension n_, GjmsOrder k_, double eps_, double delta_)
    : n(n_), k(k_), eps(eps_), delta(delta_) {
  k.check(n);
  if (k.k < 2) throw DomainError("trial family requires k >= 2");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("trial family requires eps > 0");
  if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("trial family requires 0 < delta <= 1");
}

double taylor_coeff(const Dimension& n, GjmsOrder k, int j) {
  k.check(n);
  if (j < 0) throw DomainError("taylor_coeff requires j >= 0");
  return coeff(0.5 * (n.n() - 2 * k.k), j);
}

double taylor_tail(double beta, int k, double x) { return taylor_tail(beta, k, x, 1.0 - x); }

double taylor_tail(double beta, int k, double x, double one_minus_x) {
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("taylor_tail requires 0 <= x < 1");
  if (x >= 0.5) return std::pow(one_minus_x, -beta) - taylor_sum(beta, k, x);
  double term = coeff(beta, k) * std::pow(x, k);
  CompensatedSum sum;
  for (int j = k; term != 0.0; ++j) {
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum.value())) break;
    term *= x * (j + beta) / (j + 1.0);
  }
  return sum.value();
}

double trial_u(const TrialFamily& fam, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("trial functions require 0 <= r < 1");
  return std::pow(0.5 * one_minus_sq(r) * 2.0 / (fam.eps + r * r), fam.beta());
}

double trial_f(const TrialFamily& fam, double r) {
  if (fam.which() != Family::f) throw DomainError("trial_f requires delta < 1");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("trial functions require 0 <= r < 1");
  if (r >= fam.delta) return 0.0;
  return std::pow(0.5 * one_minus_sq(r), fam.beta()) * bracket(fam, r);
}

double trial_g(const TrialFamily& fam, double r) {
  if (fam.which() != Family::g) throw DomainError("trial_g requires delta = 1");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("trial functions require 0 <= r < 1");
  return std::pow(0.5 * one_minus_sq(r), fam.beta()) * bracket(fam, r);
}

double flat_pk_bubble(const Dimension& n, GjmsOrder k, double eps, double r) {
  k.check(n);
  if (!(eps > 0.0)) throw DomainError("flat_pk_bubble requires eps > 0");
  const double c = special::gamma_ratio({0.5 * (n.n() + 2 * k.k)}, {0.5 * (n.n() - 2 * k.k)});
  return std::pow(eps, k.k) * c * std::pow(2.0 / (eps + r * r), 0.5 * (n.n() + 2 * k.k));
}

double bubble_mass(const Dimension& n) {
  // r = tan(theta): 2^n omega_{n-1} int_0^{pi/2} (sin theta cos theta)^{n-1} d theta
  const int d = n.n();
  auto f = [d](double th) { return std::pow(0.5 * std::sin(2.0 * th), d - 1); };
  double v = quad::require(quad::integrate_finite(f, 0.0, 0.5 * std::numbers::pi, radial_config()),
                           "bubble mass");
  return std::pow(2.0, d) * special::surface_measure(d - 1) * v;
}

EnergyResult energy_quadratic(const TrialFamily& fam, const quad::QuadConfig& cfg) {
  const int n = fam.n.n(), k = fam.k.k;
  const double c = bubble_const(fam);
  auto f = [&](double r) { return std::pow(2.0 / (fam.eps + r * r), 0.5 * (n + 2 * k)) * bracket(fam, r); };
  EnergyResult out{};
  out.exact = std::pow(fam.eps, k) * c * radial(fam, f, cfg, "energy");
  out.closed_upper = std::pow(fam.eps, k - 0.5 * n) * c * special::surface_measure(n);
  return out;
}

double l2_mass(const TrialFamily& fam, const quad::QuadConfig& cfg) {
  const int k = fam.k.k;
  auto f = [&](double r) {
    double b = bracket(fam, r);
    return b * b * std::pow(2.0 / one_minus_sq(r), 2 * k);
  };
  return radial(fam, f, cfg, "L2 mass");
}

double l2_mass_g_limit(const Dimension& n, GjmsOrder k, const quad::QuadConfig& cfg) {
  return std::pow(2.0, n.n()) * special::surface_measure(n.n() - 1) * lambda_bound_integral(n, k, cfg);
}

MassBounds lq_mass_lower(const TrialFamily& fam, const quad::QuadConfig& cfg) {
  const int n = fam.n.n(), k = fam.k.k;
  const double p = 2.0 * n / (n - 2 * k);
  const double d2e = fam.delta * fam.delta + fam.eps;
  const double lead_scale = std::pow(2.0 / d2e, fam.beta());
  MassBounds out{};
  out.exact = radial(fam, [&](double r) { return std::pow(std::fabs(bracket(fam, r)), p); }, cfg,
                     "Lq mass");
  out.leading = radial(fam, [&](double r) { return std::pow(2.0 / (fam.eps + r * r), n); }, cfg,
                       "Lq leading term");
  out.correction =
      p * radial(
              fam,
              [&](double r) {
                double x = (fam.delta - r) * (fam.delta + r) / d2e;
                return std::pow(2.0 / (fam.eps + r * r), 0.5 * (n + 2 * k)) * lead_scale *
                       taylor_sum(fam.beta(), k, x);
              },
              cfg, "Lq correction term");
  out.lower = out.leading - out.correction;
  return out;
}

namespace {
void check_window(const Dimension& n, GjmsOrder k) {
  if (k.k < 2 || n.n() < 2 * k.k + 2 || n.n() >= 4 * k.k)
    throw DomainError("lambda bound requires k >= 2 and 2k+2 <= n < 4k, got n=" +
                      std::to_string(n.n()) + " k=" + std::to_string(k.k));
}
}  // namespace

double lambda_bound_integral(const Dimension& n, GjmsOrder k, const quad::QuadConfig& cfg) {
  check_window(n, k);
  const int d = n.n(), kk = k.k;
  const double beta = 0.5 * (d - 2 * kk);
  auto f = [=](double r) {
    if (r == 0.0) return 0.0;
    double y = one_minus_sq(r);
    double scaled;  // bracket * r^{(n-1)/2}
    if (y >= 0.5) {
      // r^{2k-n} (1 - r^{n-2k} sum a_j y^j) without forming r^{2k-n}
      scaled = std::pow(r, 2 * kk - 0.5 * (d + 1)) * (1.0 - std::pow(r, 2.0 * beta) * taylor_sum(beta, kk, y));
    } else {
      scaled = taylor_tail(beta, kk, y) * std::pow(r, 0.5 * (d - 1));
    }
    return scaled * scaled / std::pow(y, 2 * kk);
  };
  return quad::require(quad::integrate_finite(f, 0.0, 1.0, cfg, quad::Endpoints::singular_left),
                       "lambda bound integral");
}

double lambda_lower_bound(const Dimension& n, GjmsOrder k, const quad::QuadConfig& cfg) {
  check_window(n, k);
  const int d = n.n(), kk = k.k;
  const double beta = 0.5 * (d - 2 * kk);
  double asum = 0.0;
  for (int j = 0; j < kk; ++j) asum += coeff(beta, j);
  double num = special::gamma(0.5 * d) * special::gamma(kk) * asum;
  double den = std::pow(2.0, 0.5 * (d + 2 * kk)) * special::gamma(beta) * lambda_bound_integral(n, k, cfg);
  return -num / den;
}

double lambda_lower_bound_closed(GjmsOrder k) {
  if (k.k < 2) throw DomainError("closed lambda bound requires k >= 2");
  double fact = special::gamma(k.k + 1.0);
  return -(k.k - 1.0) * fact * fact / std::pow(2.0, 2 * k.k);
}

FitResult exponent_fit(const std::vector<std::pair<double, double>>& points, FitMode mode) {
  if (points.size() < 3) throw DomainError("exponent_fit requires at least 3 points");
  double lo = points.front().first, hi = lo;
  std::vector<double> xs, ys;
  for (auto [eps, v] : points) {
    if (!(eps > 0.0) || !std::isfinite(v)) throw DomainError("exponent_fit requires eps > 0 and finite values");
    if (mode == FitMode::power && !(v > 0.0))
      throw DomainError("exponent_fit power mode requires positive values");
    lo = std::min(lo, eps);
    hi = std::max(hi, eps);
    xs.push_back(mode == FitMode::power ? std::log(eps) : -std::log(eps));
    ys.push_back(mode == FitMode::power ? std::log(v) : v);
  }
  if (hi / lo < 100.0) throw DomainError("exponent_fit requires eps to span at least two decades");
  const double m = double(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i] / m;
    my += ys[i] / m;
  }
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  FitResult out{};
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double res = ys[i] - (out.intercept + out.slope * xs[i]);
    ss_res += res * res;
    out.max_residual = std::max(out.max_residual, std::fabs(res));
  }
  out.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return out;
}

}  // namespace hypgreen::mazya
