#pragma once

#include <initializer_list>

#include "hypgreen/quadrature.hpp"
#include "hypgreen/types.hpp"

namespace hypgreen::special {

struct SignedLog {
  double log_abs;
  int sign;
  double value() const { return sign * std::exp(log_abs); }
};

// log|Gamma(x)| with sign; throws DomainError at the poles x = 0, -1, -2, ...
SignedLog log_gamma(double x);

// Gamma(x); exact recursion from Gamma(1/2) and Gamma(1) for half-integer and
// integer arguments, log-gamma otherwise.
double gamma(double x);

// prod Gamma(num_i) / prod Gamma(den_i), falling back to log space on overflow.
double gamma_ratio(std::initializer_list<double> num, std::initializer_list<double> den);

double binomial(int n, int j);

// omega_n = 2 pi^{(n+1)/2} / Gamma((n+1)/2), the area of the unit n-sphere.
double surface_measure(int n);

// gamma_n(alpha) = pi^{n/2} 2^alpha Gamma(alpha/2) / Gamma((n-alpha)/2)
double riesz_gamma(const Dimension& dim, double alpha);

// S_{n,k} = Gamma((n+2k)/2) / Gamma((n-2k)/2) * omega_n^{2k/n}
double sobolev_const(const Dimension& dim, int k);

// Sharp HLS constant for the kernel (2 sinh(rho/2))^{-lambda}.
double hls_const(const Dimension& dim, double lambda);

// Closed form of int_0^pi (1 + cos t)^p (sin t)^q dt.
double beta_trig(double p, double q);

struct LegendreArgs {
  double nu;
  double mu;
  double z;
  double zm1;  // z - 1, kept separately for accuracy near z = 1

  static LegendreArgs from_z(double nu, double mu, double z);
  static LegendreArgs from_rho(double nu, double mu, double rho);

  bool trig_valid() const { return nu > -1.0 && nu + mu + 1.0 > 0.0; }
  bool exp_valid() const { return nu + mu + 1.0 > 0.0 && mu < 0.5; }
  double rho() const;
};

// int_0^pi (z + cos t)^e1 (sin t)^e2 dt with z = 1 + zm1.
double trig_power_integral(double zm1, double e1, double e2, const quad::QuadConfig& cfg);

// Phase-stripped Legendre function of the second kind, exp(-i pi mu) Q_nu^mu(z),
// from the trigonometric integral representation.
double legendre_q_trig(const LegendreArgs& args, const quad::QuadConfig& cfg = {});

// Same function from the exponential representation (mu < 1/2).
double legendre_q_exp(const LegendreArgs& args, const quad::QuadConfig& cfg = {});

}  // namespace hypgreen::special
