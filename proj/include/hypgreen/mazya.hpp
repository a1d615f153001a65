#pragma once

#include <utility>
#include <vector>

#include "hypgreen/quadrature.hpp"
#include "hypgreen/types.hpp"

namespace hypgreen::mazya {

inline quad::QuadConfig radial_config() { return quad::QuadConfig::relative(1e-11); }

enum class Family { f, g };

// Bubble profile concentrated at the origin, with the k-term Taylor block subtracted
// inside r < delta. delta = 1 is the g-family, delta < 1 the f-family.
struct TrialFamily {
  Dimension n;
  GjmsOrder k;
  double eps;
  double delta;

  TrialFamily(Dimension n_, GjmsOrder k_, double eps_, double delta_);
  static TrialFamily f_family(Dimension n, GjmsOrder k, double eps, double delta = 0.5) {
    return {n, k, eps, delta};
  }
  static TrialFamily g_family(Dimension n, GjmsOrder k, double eps) { return {n, k, eps, 1.0}; }

  Family which() const { return delta < 1.0 ? Family::f : Family::g; }
  double beta() const { return 0.5 * (n.n() - 2 * k.k); }
};

// Gamma(j + beta) / (Gamma(j+1) Gamma(beta)), beta = (n-2k)/2
double taylor_coeff(const Dimension& n, GjmsOrder k, int j);

// (1-x)^{-beta} - sum_{j<k} a_j x^j for 0 <= x < 1, summed as the series tail for small x.
double taylor_tail(double beta, int k, double x);
// Same, with 1 - x supplied by the caller when it is known more accurately than x.
double taylor_tail(double beta, int k, double x, double one_minus_x);

double trial_u(const TrialFamily& fam, double r);
double trial_f(const TrialFamily& fam, double r);
double trial_g(const TrialFamily& fam, double r);

// (-Delta)^k of (2/(eps+r^2))^{(n-2k)/2} on R^n
double flat_pk_bubble(const Dimension& n, GjmsOrder k, double eps, double r);

// int_{R^n} (2/(1+|x|^2))^n dx by radial quadrature
double bubble_mass(const Dimension& n);

struct EnergyResult {
  double exact;        // eps^k c int_{B_delta} u^{(n+2k)/(n-2k)} phi dV
  double closed_upper;  // eps^{k-n/2} c omega_n
};
EnergyResult energy_quadratic(const TrialFamily& fam, const quad::QuadConfig& cfg = radial_config());

double l2_mass(const TrialFamily& fam, const quad::QuadConfig& cfg = radial_config());

// eps -> 0 limit of the g-family L^2 mass: 2^n omega_{n-1} I(n, k).
double l2_mass_g_limit(const Dimension& n, GjmsOrder k, const quad::QuadConfig& cfg = radial_config());

struct MassBounds {
  double exact;       // int |phi|^{2n/(n-2k)} dV
  double lower;       // leading - correction
  double leading;     // int_{B_delta} (2/(eps+r^2))^n dx
  double correction;  // linearization term
};
MassBounds lq_mass_lower(const TrialFamily& fam, const quad::QuadConfig& cfg = radial_config());

// int_0^1 [r^{2k-n} - sum_j a_j (1-r^2)^j]^2 r^{n-1} (1-r^2)^{-2k} dr
double lambda_bound_integral(const Dimension& n, GjmsOrder k,
                             const quad::QuadConfig& cfg = radial_config());

// Requires 2 <= k and 2k+2 <= n < 4k.
double lambda_lower_bound(const Dimension& n, GjmsOrder k,
                          const quad::QuadConfig& cfg = radial_config());

// -(k-1)(k!)^2 / 2^{2k}, the n = 2k+2 value
double lambda_lower_bound_closed(GjmsOrder k);

enum class FitMode {
  power,  // ln value = intercept + slope ln eps
  log,    // value = intercept + slope ln(1/eps)
};

struct FitResult {
  double slope;
  double intercept;
  double r_squared;
  double max_residual;
};

FitResult exponent_fit(const std::vector<std::pair<double, double>>& points,
                       FitMode mode = FitMode::power);

}  // namespace hypgreen::mazya
