#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "hypgreen/quadrature.hpp"
#include "hypgreen/types.hpp"

namespace hypgreen::gjms {

inline quad::QuadConfig descent_config() { return quad::QuadConfig::relative(1e-14); }

// Green's function of (k^2 - (n-1)^2/4 - Delta_H), n = 2m+1, 0 <= k <= m-1.
double single_green_int_odd(const Dimension& dim, int k, RadialPoint rho);

// Green's function of prod_{j<l} ((k0+j+sigma)^2 - (n-1)^2/4 - Delta_H).
// sigma = 0: odd n, closed form. sigma = 1/2: even n closed form; odd n = 2m-1 as the
// descent integral of the dimension-2m closed form, one basis integral per power.
double product_green(const Dimension& dim, const ProductSpec& spec, RadialPoint rho,
                     const quad::QuadConfig& cfg = descent_config());

// sqrt 2 int_rho^inf sinh r (cosh r - cosh rho)^{-1/2} sinh^{2p}(r/2) sinh^{2-2m}(r) dr
double descent_basis_integral(int m, int p, RadialPoint rho,
                              const quad::QuadConfig& cfg = descent_config());

// Product with k0 = 0, l = (n-1)/2 for odd n >= 5:
// 1 / (gamma_n(n-1) cosh^{n-2}(rho/2) 2 sinh(rho/2)).
double top_product_kernel(const Dimension& dim, RadialPoint rho);

// Green's function of P_k, 1 <= k < n/2.
double pk_green(const Dimension& dim, GjmsOrder k, RadialPoint rho,
                const quad::QuadConfig& cfg = descent_config());

// Binomial-sum form of P_k^{-1} for every 1 <= k < n/2, including k = 1
// (pk_green uses the two-term closed form there).
double pk_green_sum(const Dimension& dim, GjmsOrder k, RadialPoint rho,
                    const quad::QuadConfig& cfg = descent_config());

// (1/gamma_n(2k)) [(2 sinh(rho/2))^{2k-n} - (2 cosh(rho/2))^{2k-n}]
double pk_green_bound(const Dimension& dim, GjmsOrder k, RadialPoint rho);

// Coefficients of sinh^{2j+2m-2}(rho/2) in bound - P_k^{-1}, even n = 2m, j = 0..k-1
// (common factor 4^{k-1} / (gamma_n(2k) sinh^{2m-2} rho) removed).
std::vector<double> bound_gap_coeffs(const Dimension& dim, GjmsOrder k);

// |c (G_{k0,l} - G_{k0+1,l}) - G_{k0,l+1}| / G_{k0,l+1}, with c = 1/((2 k0 + 2 sigma + l) l).
double telescoping_residual(const Dimension& dim, const ProductSpec& spec, RadialPoint rho,
                            const quad::QuadConfig& cfg = descent_config());

// Whether (k0, l) admits the telescoping step: (k0+1, l) and (k0, l+1) are both valid.
bool telescoping_valid(const Dimension& dim, const ProductSpec& spec);

struct GreenTable {
  int n;
  std::variant<ProductSpec, GjmsOrder> spec;
  std::vector<std::pair<double, double>> samples;

  bool positive_decreasing() const;
};

}  // namespace hypgreen::gjms
