#include "hypgreen/heat_expr.hpp"

#include <cmath>

#include "hypgreen/numeric.hpp"
#include "hypgreen/types.hpp"

namespace hypgreen::heat {

namespace {

struct LogTrig {
  double log_rho, log_csch, log_coth;
};

LogTrig log_trig(double rho) {
  double q = std::exp(-2.0 * rho);
  double one_minus_q = -std::expm1(-2.0 * rho);
  return {std::log(rho), std::log(2.0) - rho - std::log(one_minus_q),
          std::log1p(q) - std::log(one_minus_q)};
}

}  // namespace

HeatExpr HeatExpr::gaussian() {
  HeatExpr out(true);
  out.add({0, 0, 0, 0}, 1.0);
  return out;
}

HeatExpr HeatExpr::csch() {
  HeatExpr out(false);
  out.add({0, 1, 0, 0}, 1.0);
  return out;
}

HeatExpr HeatExpr::rho_csch_gaussian() {
  HeatExpr out(true);
  out.add({1, 1, 0, 0}, 1.0);
  return out;
}

void HeatExpr::add(const Monomial& mono, double c) {
  if (c == 0.0) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
    return;
  }
  it->second += c;
  if (it->second == 0.0) terms_.erase(it);
}

HeatExpr HeatExpr::derivative() const {
  HeatExpr out(gaussian_);
  for (const auto& [mono, c] : terms_) {
    auto [a, b, d, e] = mono;
    if (a > 0) out.add({a - 1, b, d, e}, a * c);
    if (b > 0) out.add({a, b, d + 1, e}, -b * c);
    if (d > 0) out.add({a, b + 2, d - 1, e}, -d * c);
    if (gaussian_) out.add({a + 1, b, d, e + 1}, -0.5 * c);
  }
  return out;
}

HeatExpr HeatExpr::times_csch() const {
  HeatExpr out(gaussian_);
  for (const auto& [mono, c] : terms_) out.add({mono[0], mono[1] + 1, mono[2], mono[3]}, c);
  return out;
}

HeatExpr HeatExpr::scaled(double s) const {
  HeatExpr out(gaussian_);
  for (const auto& [mono, c] : terms_) out.add(mono, s * c);
  return out;
}

double HeatExpr::evaluate(double t, double rho) const {
  LogTrig lt = log_trig(rho);
  double log_t = std::log(t);
  double gauss = gaussian_ ? -rho * rho / (4.0 * t) : 0.0;
  CompensatedSum sum;
  for (const auto& [mono, c] : terms_) {
    auto [a, b, d, e] = mono;
    double lv = std::log(std::fabs(c)) + a * lt.log_rho + b * lt.log_csch + d * lt.log_coth -
                e * log_t + gauss;
    sum += std::copysign(std::exp(lv), c);
  }
  return sum.value();
}

double HeatExpr::evaluate_order(int order, double rho) const {
  LogTrig lt = log_trig(rho);
  CompensatedSum sum;
  for (const auto& [mono, c] : terms_) {
    auto [a, b, d, e] = mono;
    if (e != order) continue;
    double lv = std::log(std::fabs(c)) + a * lt.log_rho + b * lt.log_csch + d * lt.log_coth;
    sum += std::copysign(std::exp(lv), c);
  }
  return sum.value();
}

double HeatExpr::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? 0.0 : it->second;
}

HeatExpr apply_descent_operator(const HeatExpr& expr, int p) {
  if (p < 0) throw DomainError("descent operator power must be nonnegative");
  HeatExpr out = expr;
  for (int i = 0; i < p; ++i) out = out.derivative().times_csch().scaled(-1.0);
  return out;
}

}  // namespace hypgreen::heat
