#pragma once

#include <array>
#include <cstddef>
#include <map>

namespace hypgreen::heat {

// Exponents (a, b, d, e) of rho^a csch^b(rho) coth^d(rho) t^{-e}.
using Monomial = std::array<int, 4>;

// Finite sum  sum c * rho^a csch^b coth^d t^{-e} [* exp(-rho^2 / 4t)].
// The Gaussian factor is shared by all terms. Closed under d/drho and under
// multiplication by csch, hence under D = -(1/sinh rho) d/drho.
class HeatExpr {
 public:
  static HeatExpr gaussian();
  static HeatExpr csch();
  static HeatExpr rho_csch_gaussian();

  HeatExpr derivative() const;
  HeatExpr times_csch() const;
  HeatExpr scaled(double c) const;

  double evaluate(double t, double rho) const;
  // Sum of the t^{-e} terms with the Gaussian factor replaced by 1.
  double evaluate_order(int e, double rho) const;

  double coefficient(const Monomial& mono) const;
  const std::map<Monomial, double>& terms() const { return terms_; }
  bool has_gaussian() const { return gaussian_; }
  std::size_t size() const { return terms_.size(); }

 private:
  HeatExpr(bool gaussian) : gaussian_(gaussian) {}
  void add(const Monomial& mono, double c);

  std::map<Monomial, double> terms_;
  bool gaussian_;
};

// (-(1/sinh rho) d/drho)^p expr
HeatExpr apply_descent_operator(const HeatExpr& expr, int p);

}  // namespace hypgreen::heat
