#include "hypgreen/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "hypgreen/gjms_green.hpp"
#include "hypgreen/heat_expr.hpp"
#include "hypgreen/heat_green.hpp"
#include "hypgreen/mazya.hpp"
#include "hypgreen/special.hpp"
#include "hypgreen/symbols.hpp"

namespace hypgreen::verify {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double rel_err(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

using Sample = std::function<double()>;

// Largest residual over samples evaluated under the policy; failures count as infinite.
double max_residual(const std::vector<Sample>& samples, sweep::ExecPolicy policy) {
  std::vector<double> res(samples.size(), kInf);
  sweep::for_each_index(
      samples.size(),
      [&](std::size_t i) {
        try {
          double r = samples[i]();
          res[i] = std::isnan(r) ? kInf : r;
        } catch (const std::exception&) {
          res[i] = kInf;
        }
      },
      policy);
  double out = 0.0;
  for (double r : res) out = std::max(out, r);
  return out;
}

struct Builder {
  const Options& opts;
  std::vector<Check>& out;

  void add(const std::string& group, const std::string& name, double tol, const std::vector<Sample>& s) {
    double t = opts.tol.value_or(tol);
    double r = max_residual(s, opts.policy);
    out.push_back({name, group, r, t, s.size(), r <= t});
  }
};

std::vector<double> geometric(double lo, double hi, int count) {
  return sweep::GridSpec{lo, hi, count, sweep::Spacing::geometric}.points();
}

void resolvents(Builder& b) {
  std::vector<Sample> s;
  for (int n : {3, 4, 5, 6}) {
    double endpoint = -0.25 * (n - 1) * (n - 1);
    for (double lam : {endpoint + 1e-6, 0.0, 1.0, 5.0})
      for (double rho : {0.1, 0.5, 1.0, 2.0, 5.0})
        s.push_back([=] {
          Dimension d(n);
          return rel_err(heat::resolvent_heat(d, lam, RadialPoint(rho)),
                         heat::resolvent_legendre(d, heat::ResolventQuery::from_lambda(d, lam), RadialPoint(rho)));
        });
  }
  b.add("resolvents", "resolvent_cross_route", 1e-6, s);
  s.clear();
  for (double nu : {0.0, 0.5, 1.0, 2.0})
    for (double rho : {0.5, 1.0, 3.0})
      s.push_back([=] {
        Dimension d(3);
        double v = heat::resolvent_legendre(d, heat::ResolventQuery::from_nu(d, nu), RadialPoint(rho));
        return rel_err(v, std::exp(-nu * rho) / (4 * kPi * std::sinh(rho)));
      });
  b.add("resolvents", "resolvent_n3_closed_form", 1e-10, s);
}

void products(Builder& b) {
  std::vector<Sample> s;
  for (int n = 3; n <= 11; ++n)
    for (Shift sh : {Shift::zero, Shift::half})
      for (int k0 = 0; k0 <= n / 2; ++k0) {
        ProductSpec spec{k0, sh, 1};
        try {
          spec.check(Dimension(n));
        } catch (const DomainError&) {
          continue;
        }
        for (double rho : {0.05, 0.7, 4.0})
          s.push_back([=] {
            Dimension d(n);
            double nu = k0 + spec.sigma_value();
            return rel_err(gjms::product_green(d, spec, RadialPoint(rho)),
                           heat::resolvent_legendre(d, heat::ResolventQuery::from_nu(d, nu), RadialPoint(rho),
                                                    quad::QuadConfig::relative(1e-13)));
          });
      }
  b.add("products", "product_resolvent_consistency", 1e-9, s);
  s.clear();
  for (double rho : geometric(1e-2, 20, 10)) {
    s.push_back([=] {
      double h = 0.5 * rho;
      double closed = 1.0 / (16 * kPi * kPi * std::pow(std::cosh(h), 3) * 2 * std::sinh(h));
      return rel_err(gjms::product_green(Dimension(5), {0, Shift::zero, 2}, RadialPoint(rho)), closed);
    });
    for (int n : {7, 9})
      s.push_back([=] {
        return rel_err(gjms::product_green(Dimension(n), {0, Shift::zero, (n - 1) / 2}, RadialPoint(rho)),
                       gjms::top_product_kernel(Dimension(n), RadialPoint(rho)));
      });
  }
  b.add("products", "top_product_kernel", 1e-12, s);
}

void telescoping(Builder& b) {
  std::vector<Sample> s;
  for (int n = 3; n <= 11; ++n)
    for (Shift sh : {Shift::zero, Shift::half})
      for (int k0 = 0; k0 <= 5; ++k0)
        for (int l = 1; l <= 5; ++l) {
          ProductSpec spec{k0, sh, l};
          if (!gjms::telescoping_valid(Dimension(n), spec)) continue;
          for (double rho : geometric(1e-2, 20, 10))
            s.push_back([=] { return gjms::telescoping_residual(Dimension(n), spec, RadialPoint(rho)); });
        }
  b.add("telescoping", "telescoping_identity", 1e-10, s);
}

void bound(Builder& b) {
  std::vector<Sample> s, eq;
  auto rhos = sweep::GridSpec{}.points();
  for (int n = 3; n <= 12; ++n)
    for (int k = 1; 2 * k < n; ++k)
      for (double rho : rhos) {
        s.push_back([=] {
          Dimension d(n);
          double bnd = gjms::pk_green_bound(d, GjmsOrder(k), RadialPoint(rho));
          return std::max(0.0, -(bnd - gjms::pk_green(d, GjmsOrder(k), RadialPoint(rho))) / bnd);
        });
        if (n % 2 == 0 && k == 1)
          eq.push_back([=] {
            Dimension d(n);
            return rel_err(gjms::pk_green_sum(d, GjmsOrder(1), RadialPoint(rho)),
                           gjms::pk_green_bound(d, GjmsOrder(1), RadialPoint(rho)));
          });
      }
  b.add("bound", "pk_bound_gap_nonnegative", 1e-13, s);
  b.add("bound", "pk_bound_equality_k1", 1e-13, eq);
}

void legendre(Builder& b) {
  struct P {
    double nu, lam, mu, rho;
  };
  const P points[] = {{1, 0.5, 0.5, 1},  {1, 0.5, 0.5, 0.3}, {2, 0.5, 0.5, 2},   {1.5, 0.25, 0.5, 1},
                      {1, 0.5, 0.75, 1}, {2, 1, 0.5, 0.7},   {2.5, 0.5, 1, 1.5}, {1.2, 0.3, 0.6, 0.5},
                      {3, 1.5, 0.5, 1},  {0.8, 0.2, 0.4, 2.5}};
  std::vector<Sample> s;
  for (const auto& p : points)
    s.push_back([=] {
      auto r = index_raising(p.nu, p.lam, p.mu, p.rho);
      return rel_err(r.lhs, r.rhs);
    });
  b.add("legendre", "index_raising", 1e-7, s);
  s.clear();
  for (int m = 1; m <= 5; ++m)
    for (double rho : {0.3, 0.5, 1.0, 2.0, 4.0})
      s.push_back([=] {
        auto lhs = heat::apply_descent_operator(heat::HeatExpr::csch(), m - 1).evaluate(1.0, rho);
        auto f = [&](double t) { return std::pow(std::cosh(rho) + std::cos(t), m - 1); };
        double integral = quad::require(quad::integrate_finite(f, 0, kPi, quad::QuadConfig::relative(1e-13)), "csch");
        return rel_err(lhs, special::gamma(m) / kPi * std::pow(std::sinh(rho), 1 - 2 * m) * integral);
      });
  b.add("legendre", "csch_descent_identity", 1e-9, s);
  s.clear();
  for (double p : {-0.2, 0.0, 0.5, 1.0, 2.5})
    for (double q : {-0.5, 0.0, 1.0, 3.0})
      s.push_back([=] {
        // (1 + cos t)^p = (2 cos^2(t/2))^p, sin t = 2 sin(t/2) cos(t/2), t = 2u; the half
        // near u = pi/2 is reflected so both singular endpoints sit at an exact zero
        auto f = [&](double c, double sn) { return 2.0 * std::exp(p * std::log(2 * c * c) + q * std::log(2 * sn * c)); };
        auto cfg = quad::QuadConfig::relative(1e-13);
        double v =
            quad::require(quad::integrate_finite([&](double u) { return f(std::cos(u), std::sin(u)); }, 0, 0.25 * kPi,
                                                 cfg, quad::Endpoints::singular_left),
                          "beta lower half") +
            quad::require(quad::integrate_finite([&](double w) { return f(std::sin(w), std::cos(w)); }, 0, 0.25 * kPi,
                                                 cfg, quad::Endpoints::singular_left),
                          "beta upper half");
        return rel_err(special::beta_trig(p, q), v);
      });
  b.add("legendre", "beta_trig_closed_form", 1e-10, s);
  s.clear();
  for (double nu : {0.0, 0.5, 1.3, 2.0})
    for (double mu : {-0.7, 0.0, 0.3})
      for (double rho : {0.4, 1.5})
        s.push_back([=] {
          auto a = special::LegendreArgs::from_rho(nu, mu, rho);
          auto cfg = quad::QuadConfig::relative(1e-12);
          return rel_err(special::legendre_q_exp(a, cfg), special::legendre_q_trig(a, cfg));
        });
  b.add("legendre", "legendre_representations", 1e-9, s);
}

void descent(Builder& b) {
  std::vector<Sample> s;
  for (int n : {2, 4})
    for (double t : {0.3, 2.0})
      for (double rho : {0.2, 1.0, 2.5})
        s.push_back([=] {
          Dimension lo(n), hi(n + 1);
          auto g = [&](double r) { return heat::heat_kernel(hi, heat::HeatQuery(t, r)); };
          double d = std::exp((2 * n - 1) * t / 4) *
                     quad::require(quad::integrate_descent(g, RadialPoint(rho), n / 2.0 + 0.2, heat::kernel_config()),
                                   "heat descent");
          return rel_err(d, heat::heat_kernel(lo, heat::HeatQuery(t, rho)));
        });
  b.add("descent", "heat_descent", 1e-6, s);
  s.clear();
  for (int n : {3, 4})
    for (double lam : {0.0, 2.0})
      for (double rho : {0.3, 1.0, 2.0})
        s.push_back([=] {
          Dimension lo(n), hi(n + 1);
          auto qhi = heat::ResolventQuery::from_lambda(hi, lam - (2 * n - 1) / 4.0);
          auto g = [&](double r) { return heat::resolvent_legendre(hi, qhi, RadialPoint(r), heat::kernel_config()); };
          double d = quad::require(quad::integrate_descent(g, RadialPoint(rho), n / 2.0, heat::kernel_config()),
                                   "resolvent descent");
          return rel_err(d, heat::resolvent_legendre(lo, heat::ResolventQuery::from_lambda(lo, lam), RadialPoint(rho)));
        });
  b.add("descent", "resolvent_descent", 1e-6, s);
  s.clear();
  for (int n : {5, 7, 9, 11})
    for (int k = 1; 2 * k < n; ++k)
      for (double rho : {0.02, 0.8, 5.0})
        s.push_back([=] {
          Dimension upper(n + 1);
          auto g = [&](double r) { return gjms::pk_green(upper, GjmsOrder(k), RadialPoint(r)); };
          double pushed = quad::require(
              quad::integrate_descent(g, RadialPoint(rho), (n + 1) / 2.0, quad::QuadConfig::relative(1e-12)),
              "pk descent");
          return rel_err(gjms::pk_green(Dimension(n), GjmsOrder(k), RadialPoint(rho)), pushed);
        });
  b.add("descent", "pk_descent_consistency", 1e-9, s);
}

void symbol_checks(Builder& b) {
  std::vector<Sample> s;
  for (int n = 5; n <= 15; n += 2)
    s.push_back([=] {
      double worst = 0.0;
      for (int i = 0; i <= 1000; ++i) {
        double lam = i == 500 ? 0.0 : -50.0 + 0.1 * i;
        auto c = symbols::symbol_inequality(Dimension(n), symbols::SpectralPoint(lam));
        if (lam == 0.0) {
          worst = std::max({worst, std::fabs(c.lhs), std::fabs(c.rhs), std::fabs(c.rhs_printed)});
          continue;
        }
        // strict inequality off lambda = 0: any lhs <= rhs is a full violation
        if (!(c.lhs > c.rhs) || !(c.lhs > c.rhs_printed)) worst = kInf;
      }
      return worst;
    });
  b.add("symbols", "symbol_inequality", 0.0, s);
  s.clear();
  s.push_back([] {
    auto c = symbols::symbol_inequality(Dimension(5), symbols::SpectralPoint(1.0));
    return std::max(std::fabs(c.lhs - 11.0 / 16), std::fabs(c.rhs - 5.0 / 16));
  });
  b.add("symbols", "symbol_spot_value", 1e-15, s);
}

void lambda_checks(Builder& b) {
  std::vector<Sample> s{
      [] { return std::fabs(mazya::lambda_lower_bound(Dimension(6), GjmsOrder(2)) + 0.25); },
      [] { return std::fabs(mazya::lambda_lower_bound(Dimension(8), GjmsOrder(3)) + 1.125); },
      [] { return std::fabs(mazya::lambda_lower_bound(Dimension(10), GjmsOrder(4)) - mazya::lambda_lower_bound_closed(GjmsOrder(4))); }};
  b.add("lambda", "lambda_closed_values", 1e-8, s);
  s.clear();
  for (const auto& row : sweep::lambda_table(5, sweep::ExecPolicy::serial))
    s.push_back([row] {
      if (!row.error.empty()) return kInf;
      return row.bound > row.neg_hardy && row.bound < 0.0 ? 0.0 : kInf;
    });
  b.add("lambda", "lambda_strict_ordering", 0.0, s);
}

void asymptotics(Builder& b) {
  const auto& eps = b.opts.eps_sweep;
  std::vector<Sample> s;
  auto slope_residual = [eps](int which) {
    return [eps, which] {
      std::vector<std::pair<double, double>> pts;
      for (double e : eps) {
        auto fam = mazya::TrialFamily::f_family(Dimension(9), GjmsOrder(2), e);
        double v = which == 0 ? mazya::l2_mass(fam)
                   : which == 1 ? mazya::energy_quadratic(fam).exact
                                : mazya::lq_mass_lower(fam).exact;
        pts.emplace_back(e, v);
      }
      const double expected[] = {-0.5, -2.5, -4.5};
      return std::fabs(mazya::exponent_fit(pts).slope / expected[which] - 1.0);
    };
  };
  for (int w = 0; w < 3; ++w) s.push_back(slope_residual(w));
  b.add("asymptotics", "power_law_orders", 0.05, s);
  s.clear();
  s.push_back([eps] {
    std::vector<std::pair<double, double>> pts;
    for (double e : eps)
      pts.emplace_back(e, mazya::l2_mass(mazya::TrialFamily::f_family(Dimension(8), GjmsOrder(2), e)));
    return 1.0 - mazya::exponent_fit(pts, mazya::FitMode::log).r_squared;
  });
  b.add("asymptotics", "logarithmic_order", 1e-3, s);
}

void duality(Builder& b) {
  std::vector<Sample> s;
  for (int n : {5, 7, 9})
    s.push_back([=] {
      Dimension d(n);
      return rel_err(special::sobolev_const(d, (n - 1) / 2) * special::hls_const(d, 1.0),
                     special::riesz_gamma(d, n - 1.0));
    });
  b.add("duality", "sobolev_hls_duality", 1e-10, s);
}

}  // namespace

const std::vector<std::string>& groups() {
  static const std::vector<std::string> names{"resolvents", "products", "telescoping", "bound",
                                              "legendre",   "descent",  "symbols",     "lambda",
                                              "asymptotics", "duality"};
  return names;
}

std::vector<Check> run_battery(const Options& opts) {
  for (const auto& g : opts.only)
    if (std::find(groups().begin(), groups().end(), g) == groups().end())
      throw DomainError("unknown verification group '" + g + "'");
  if (opts.tol && !(*opts.tol >= 0.0)) throw DomainError("tolerance override must be >= 0");
  auto wanted = [&](const std::string& g) {
    return opts.only.empty() || std::find(opts.only.begin(), opts.only.end(), g) != opts.only.end();
  };
  std::vector<Check> out;
  Builder b{opts, out};
  const std::pair<const char*, void (*)(Builder&)> table[] = {
      {"resolvents", resolvents}, {"products", products}, {"telescoping", telescoping},
      {"bound", bound},           {"legendre", legendre}, {"descent", descent},
      {"symbols", symbol_checks}, {"lambda", lambda_checks}, {"asymptotics", asymptotics},
      {"duality", duality}};
  for (auto [name, fn] : table)
    if (wanted(name)) fn(b);
  return out;
}

IndexRaising index_raising(double nu, double lam, double mu, double rho) {
  auto cfg = quad::QuadConfig::relative(1e-12);
  auto q = [&](double r, double order) {
    return special::legendre_q_exp(special::LegendreArgs::from_rho(nu, order, r), cfg);
  };
  // (cosh(rho + s) - cosh rho) / s
  auto ratio = [&](double s) { return s > 0 ? 2 * std::sinh(rho + 0.5 * s) * std::sinh(0.5 * s) / s : std::sinh(rho); };
  auto tail = [&](double s) {
    double r = rho + s;
    return std::pow(std::sinh(r), lam + 1) * std::pow(ratio(s) * s, mu - 1) * q(r, -lam);
  };
  // s = u^{1/mu} absorbs s^{mu-1} on [0, 1]
  auto head = [&](double u) {
    double s = std::pow(u, 1 / mu);
    return std::pow(std::sinh(rho + s), lam + 1) * std::pow(ratio(s), mu - 1) * q(rho + s, -lam) / mu;
  };
  auto outer = quad::QuadConfig::relative(1e-10);
  double a = quad::require(quad::integrate_finite(head, 0, 1, outer, quad::Endpoints::singular_left), "index raising head");
  double b = quad::require(quad::integrate_semiinf(tail, 1, outer.with_decay(nu + 1 - lam - mu)), "index raising tail");
  double rhs = special::gamma(mu) * std::pow(std::sinh(rho), lam + mu) * q(rho, -lam - mu);
  return {a + b, rhs};
}

}  // namespace hypgreen::verify
