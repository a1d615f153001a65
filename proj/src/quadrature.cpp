#include "hypgreen/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "hypgreen/numeric.hpp"

namespace hypgreen::quad {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 21-point Kronrod extension of the 10-point Gauss rule.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525867, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a, b;
  double value, error, floor;
  double excess() const { return error - floor; }
};

struct RuleResult {
  double value, error, floor;
  bool finite;
};

RuleResult gauss_kronrod(const Integrand& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  double resk = fc * kWgk[10];
  double resg = 0.0;
  double resabs = std::fabs(resk);
  std::array<double, 10> f1{}, f2{};
  for (int j = 0; j < 10; ++j) {
    double dx = h * kXgk[j];
    f1[j] = f(c - dx);
    f2[j] = f(c + dx);
    double s = f1[j] + f2[j];
    resk += kWgk[j] * s;
    resabs += kWgk[j] * (std::fabs(f1[j]) + std::fabs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * s;
  }
  double mean = 0.5 * resk;
  double resasc = kWgk[10] * std::fabs(fc - mean);
  for (int j = 0; j < 10; ++j)
    resasc += kWgk[j] * (std::fabs(f1[j] - mean) + std::fabs(f2[j] - mean));

  RuleResult out;
  out.value = resk * h;
  resabs *= std::fabs(h);
  resasc *= std::fabs(h);
  double err = std::fabs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  out.floor = 50.0 * kEps * resabs;
  out.error = std::max(err, out.floor);
  out.finite = std::isfinite(out.value) && std::isfinite(out.error);
  return out;
}

QuadResult adaptive_gk(const Integrand& f, double a, double b, const QuadConfig& cfg) {
  QuadResult res;
  auto cmp = [](const Segment& x, const Segment& y) { return x.excess() < y.excess(); };
  std::vector<Segment> heap;
  RuleResult first = gauss_kronrod(f, a, b);
  res.evaluations = 21;
  if (!first.finite) {
    res.value = first.value;
    res.error = std::numeric_limits<double>::infinity();
    res.converged = false;
    return res;
  }
  heap.push_back({a, b, first.value, first.error, first.floor});

  while (true) {
    CompensatedSum total, err, floor;
    for (const auto& s : heap) {
      total += s.value;
      err += s.error;
      floor += s.floor;
    }
    res.value = total.value();
    res.error = err.value();
    double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(res.value));
    if (res.error <= tol) return res;
    // remaining error is rounding in the rule sums
    if (res.error - floor.value() <= 0.5 * tol) return res;
    if (static_cast<int>(heap.size()) >= cfg.max_subdivisions) {
      res.converged = false;
      return res;
    }
    std::pop_heap(heap.begin(), heap.end(), cmp);
    Segment worst = heap.back();
    heap.pop_back();
    double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) || worst.excess() <= 0.0) {
      heap.push_back(worst);
      std::push_heap(heap.begin(), heap.end(), cmp);
      res.converged = false;
      return res;
    }
    RuleResult left = gauss_kronrod(f, worst.a, mid);
    RuleResult right = gauss_kronrod(f, mid, worst.b);
    res.evaluations += 42;
    if (!left.finite || !right.finite) {
      res.value = std::numeric_limits<double>::quiet_NaN();
      res.error = std::numeric_limits<double>::infinity();
      res.converged = false;
      return res;
    }
    heap.push_back({worst.a, mid, left.value, left.error, left.floor});
    std::push_heap(heap.begin(), heap.end(), cmp);
    heap.push_back({mid, worst.b, right.value, right.error, right.floor});
    std::push_heap(heap.begin(), heap.end(), cmp);
  }
}

// Tanh-sinh on [a, b]. Node positions are formed from the distance to the nearest
// endpoint so that points close to a = 0 keep full relative precision.
QuadResult tanh_sinh(const Integrand& f, double a, double b, const QuadConfig& cfg) {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  constexpr double kTmax = 6.5;
  constexpr int kMaxLevel = 12;
  const double half = 0.5 * (b - a);
  QuadResult res;

  CompensatedSum sum, abs_sum;
  auto add_node = [&](double t) {
    double u = kHalfPi * std::sinh(t);
    double ch = std::cosh(u);
    double w = half * kHalfPi * std::cosh(t) / (ch * ch);
    if (!(w > 0.0)) return;
    double dist = (b - a) / (1.0 + std::exp(2.0 * u));
    if (!(dist > 1e-150 * (b - a))) return;
    for (int side = -1; side <= 1; side += 2) {
      double x = side < 0 ? a + dist : b - dist;
      if (!(x > a && x < b)) continue;
      double v = w * f(x);
      ++res.evaluations;
      sum += v;
      abs_sum += std::fabs(v);
    }
  };
  auto add_center = [&]() {
    double v = half * kHalfPi * f(0.5 * (a + b));
    ++res.evaluations;
    sum += v;
    abs_sum += std::fabs(v);
  };

  double h = 1.0;
  add_center();
  for (int j = 1; j * h <= kTmax; ++j) add_node(j * h);
  double prev = h * sum.value();
  for (int level = 1; level <= kMaxLevel; ++level) {
    h *= 0.5;
    for (int j = 1; j * h <= kTmax; j += 2) add_node(j * h);
    double cur = h * sum.value();
    double diff = std::fabs(cur - prev);
    double floor = 50.0 * kEps * h * abs_sum.value();
    res.value = cur;
    res.error = std::max(diff, floor);
    if (!std::isfinite(cur)) {
      res.converged = false;
      return res;
    }
    double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(cur));
    if (level >= 3 && (diff <= tol || diff <= floor)) return res;
    prev = cur;
  }
  res.converged = false;
  return res;
}

void accumulate(QuadResult& into, const QuadResult& part, CompensatedSum& total) {
  total += part.value;
  into.value = total.value();
  into.error += part.error;
  into.evaluations += part.evaluations;
  into.converged = into.converged && part.converged;
}

}  // namespace

void QuadConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw DomainError("quadrature tolerances must be positive");
  if (max_subdivisions < 1) throw DomainError("max_subdivisions must be at least 1");
  if (!(tail_cutoff_decay > 0.0)) throw DomainError("tail decay rate must be positive");
}

QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadConfig& cfg,
                            Endpoints ends) {
  cfg.validate();
  if (!(a < b)) throw DomainError("integrate_finite requires a < b");
  if (ends == Endpoints::regular) return adaptive_gk(f, a, b, cfg);
  if (ends == Endpoints::singular_both) return tanh_sinh(f, a, b, cfg);
  // one singular endpoint: tanh-sinh on a short piece next to it, Gauss-Kronrod elsewhere
  double w = 0.5 * (b - a);
  if (ends == Endpoints::singular_left) {
    QuadResult near = tanh_sinh(f, a, a + w, cfg);
    QuadResult far = adaptive_gk(f, a + w, b, cfg);
    QuadResult out;
    CompensatedSum total;
    accumulate(out, near, total);
    accumulate(out, far, total);
    return out;
  }
  QuadResult far = adaptive_gk(f, a, b - w, cfg);
  QuadResult near = tanh_sinh(f, b - w, b, cfg);
  QuadResult out;
  CompensatedSum total;
  accumulate(out, far, total);
  accumulate(out, near, total);
  return out;
}

QuadResult integrate_piecewise(const Integrand& f, std::span<const double> breaks,
                               const QuadConfig& cfg) {
  if (breaks.size() < 2) throw DomainError("integrate_piecewise requires at least two breakpoints");
  QuadResult out;
  CompensatedSum total;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i] < breaks[i + 1])) throw DomainError("breakpoints must be increasing");
    accumulate(out, integrate_finite(f, breaks[i], breaks[i + 1], cfg), total);
  }
  return out;
}

namespace {

QuadResult semiinf_panels(const Integrand& f, double a, const QuadConfig& cfg, int dyadic_levels) {
  const double c = cfg.tail_cutoff_decay;
  const double cutoff = a + std::max(30.0, -std::log(cfg.abs_tol) / c);
  const double w = std::clamp(3.0 / c, 0.25, 8.0);
  const double q = std::exp(-c * w);

  QuadResult out;
  CompensatedSum total;
  QuadConfig panel_cfg = cfg;

  // dyadic panels resolve structure next to a
  double lo = a;
  for (int j = dyadic_levels; j >= 1; --j) {
    double hi = a + std::ldexp(w, -j);
    accumulate(out, adaptive_gk(f, lo, hi, panel_cfg), total);
    lo = hi;
  }
  int uniform = 0;
  double bound = std::numeric_limits<double>::infinity();
  while (lo < cutoff) {
    double hi = std::min(lo + w, cutoff);
    panel_cfg.abs_tol = std::max(cfg.abs_tol, 0.1 * cfg.rel_tol * std::fabs(out.value));
    QuadResult panel = adaptive_gk(f, lo, hi, panel_cfg);
    accumulate(out, panel, total);
    lo = hi;
    ++uniform;
    if (!std::isfinite(out.value)) {
      out.converged = false;
      return out;
    }
    bound = std::fabs(panel.value) * q / (1.0 - q);
    double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(out.value));
    if (uniform >= 1 && out.value != 0.0 && bound <= 0.5 * tol) {
      out.error += bound;
      return out;
    }
  }
  // reached the cutoff: acceptable only if the last panel was already negligible
  out.error += bound;
  out.converged = out.converged && out.error <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(out.value));
  return out;
}

}  // namespace

QuadResult integrate_semiinf(const Integrand& f, double a, const QuadConfig& cfg) {
  cfg.validate();
  return semiinf_panels(f, a, cfg, 10);
}

QuadResult integrate_descent(const Integrand& g, RadialPoint rho_pt, double g_decay,
                             const QuadConfig& cfg, int panel_split) {
  cfg.validate();
  if (!(g_decay > 0.5)) throw DomainError("integrate_descent requires g decay rate > 1/2");
  if (panel_split < 1) throw DomainError("panel_split must be at least 1");
  const double rho = rho_pt.rho;
  const double s0 = std::sinh(0.5 * rho);
  const double s0sq = s0 * s0;

  // r(t) = 2 asinh(sqrt(sinh^2(rho/2) + t^2)) keeps full precision for small t
  auto mapped = [&](double t) {
    double r = 2.0 * std::asinh(std::sqrt(s0sq + t * t));
    return 4.0 * g(r);
  };

  const double span = 4.0;
  const double r1 = rho + span;
  const double t1 = std::sqrt(std::sinh(0.5 * (r1 + rho)) * std::sinh(0.5 * span));

  std::vector<double> breaks{0.0};
  for (double t = std::ldexp(s0, -6); t < t1; t *= 2.0) breaks.push_back(t);
  breaks.push_back(t1);

  QuadResult out;
  CompensatedSum total;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    double lo = breaks[i], hi = breaks[i + 1];
    double step = (hi - lo) / panel_split;
    for (int p = 0; p < panel_split; ++p) {
      double a = lo + p * step;
      double b = p + 1 == panel_split ? hi : lo + (p + 1) * step;
      accumulate(out, adaptive_gk(mapped, a, b, cfg), total);
    }
  }

  auto tail = [&](double r) {
    double gv = g(r);
    if (gv == 0.0) return 0.0;
    double weight = std::exp(0.5 * r) * (-std::expm1(-2.0 * r)) /
                    std::sqrt(-std::expm1(-(r + rho)) * -std::expm1(-(r - rho)));
    return weight * gv;
  };
  QuadConfig tail_cfg = cfg.with_decay(g_decay - 0.5);
  tail_cfg.abs_tol = std::max(cfg.abs_tol, 0.1 * cfg.rel_tol * std::fabs(out.value));
  tail_cfg.validate();
  accumulate(out, semiinf_panels(tail, r1, tail_cfg, 0), total);
  return out;
}

double require(const QuadResult& r, const std::string& context) {
  if (!r.converged || !std::isfinite(r.value))
    throw QuadratureError(context + ": quadrature did not converge (estimate " +
                              std::to_string(r.value) + ", error " + std::to_string(r.error) + ")",
                          r);
  return r.value;
}

}  // namespace hypgreen::quad
