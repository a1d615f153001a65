#pragma once

#include "hypgreen/heat_expr.hpp"
#include "hypgreen/quadrature.hpp"
#include "hypgreen/types.hpp"

namespace hypgreen::heat {

struct HeatQuery {
  double t;
  double rho;
  HeatQuery(double t_, double rho_);
};

// lambda >= -(n-1)^2/4 with nu = sqrt(lambda + (n-1)^2/4).
struct ResolventQuery {
  double lambda;
  double nu;

  static ResolventQuery from_lambda(const Dimension& dim, double lambda);
  static ResolventQuery from_nu(const Dimension& dim, double nu);
  double theta() const { return nu - 0.5; }
};

inline quad::QuadConfig kernel_config() { return quad::QuadConfig::relative(1e-12); }

// D^m exp(-rho^2/4t), D = -(1/sinh rho) d/drho; cached per m.
const HeatExpr& odd_kernel_expr(int m);
// D^{m-1} (rho csch rho exp(-rho^2/4t)); cached per m >= 1.
const HeatExpr& even_kernel_expr(int m);

// D^p applied to exp(-rho^2/4t) (or to rho csch(rho) exp(-rho^2/4t)) through the
// Taylor series in cosh(rho) - 1. Accurate for rho <= 1 and rho^2 <= 8t.
double descent_series_value(bool rho_csch_seed, int p, double t, double rho);

// Heat kernel h_n(t, rho) of Delta_H.
double heat_kernel(const Dimension& dim, const HeatQuery& q,
                   const quad::QuadConfig& cfg = kernel_config());

// exp((n-1)^2 t / 4) h_n(t, rho), free of the spectral-gap factor.
double heat_kernel_reduced(const Dimension& dim, const HeatQuery& q,
                           const quad::QuadConfig& cfg = kernel_config());

// Green's function of (lambda - Delta_H) from the Legendre closed form (n >= 3).
double resolvent_legendre(const Dimension& dim, const ResolventQuery& q, RadialPoint rho,
                          const quad::QuadConfig& cfg = kernel_config());

// Same Green's function as the time integral of exp(-lambda t) h_n(t, rho).
double resolvent_heat(const Dimension& dim, double lambda, RadialPoint rho,
                      const quad::QuadConfig& cfg = quad::QuadConfig::relative(1e-9));

}  // namespace hypgreen::heat
