#include "hypgreen/gjms_green.hpp"

#include <cmath>
#include <numbers>

#include "hypgreen/numeric.hpp"
#include "hypgreen/special.hpp"

namespace hypgreen::gjms {

namespace {

constexpr double kPi = std::numbers::pi;

using special::gamma_ratio;

double log_sinh(double x) { return x + std::log(-std::expm1(-2.0 * x)) - std::numbers::ln2; }

}  // namespace

double single_green_int_odd(const Dimension& dim, int k, RadialPoint rho) {
  if (!dim.odd() || dim.n() < 3) throw DomainError("single_green_int_odd requires odd n >= 3");
  const int m = (dim.n() - 1) / 2;
  if (k < 0 || k > m - 1) throw DomainError("single_green_int_odd requires 0 <= k <= (n-3)/2");
  double s2 = std::pow(std::sinh(0.5 * rho.rho), 2);
  CompensatedSum sum;
  for (int j = 0; j <= m - k - 1; ++j)
    sum += gamma_ratio({double(m + k), double(m - k), m - j - 0.5},
                       {j + 1.0, double(m - k - j), double(m + k - j)}) *
           std::pow(s2, j);
  return sum.value() / (4.0 * std::pow(kPi, m + 0.5) * std::pow(std::sinh(rho.rho), 2 * m - 1));
}

double descent_basis_integral(int m, int p, RadialPoint rho, const quad::QuadConfig& cfg) {
  if (m < 2 || p < 0 || p > 2 * m - 3)
    throw DomainError("descent basis integral requires m >= 2 and 0 <= p <= 2m-3");
  auto g = [=](double r) {
    return std::exp(2.0 * p * log_sinh(0.5 * r) - (2.0 * m - 2.0) * log_sinh(r));
  };
  return quad::require(quad::integrate_descent(g, rho, 2.0 * m - 2.0 - p, cfg),
                       "descent basis integral");
}

double product_green(const Dimension& dim, const ProductSpec& spec, RadialPoint rho,
                     const quad::QuadConfig& cfg) {
  spec.check(dim);
  const int k = spec.k0, l = spec.l;
  if (spec.sigma == Shift::zero) {
    const int m = (dim.n() - 1) / 2;
    double s2 = std::pow(std::sinh(0.5 * rho.rho), 2);
    CompensatedSum sum;
    for (int j = 0; j <= m - k - l; ++j)
      sum += gamma_ratio({double(m + k), double(m - k - l + 1), m - j - l + 0.5},
                         {j + 1.0, double(m - k - l - j + 1), double(m + k - j)}) *
             std::pow(s2, j + l - 1);
    return sum.value() / (4.0 * special::gamma(l) * std::pow(kPi, m + 0.5) *
                          std::pow(std::sinh(rho.rho), 2 * m - 1));
  }
  const int m = dim.even() ? dim.n() / 2 : (dim.n() + 1) / 2;
  auto coeff = [&](int j) {
    return gamma_ratio({double(m + k), double(m - k - l), double(m - j - l)},
                       {j + 1.0, double(m - k - l - j), double(m + k - j)});
  };
  const double pref = 1.0 / (4.0 * special::gamma(l) * std::pow(kPi, m));
  CompensatedSum sum;
  if (dim.even()) {
    double s2 = std::pow(std::sinh(0.5 * rho.rho), 2);
    for (int j = 0; j <= m - 1 - k - l; ++j) sum += coeff(j) * std::pow(s2, j + l - 1);
    return pref * sum.value() / std::pow(std::sinh(rho.rho), 2 * m - 2);
  }
  for (int j = 0; j <= m - 1 - k - l; ++j)
    sum += coeff(j) * descent_basis_integral(m, j + l - 1, rho, cfg);
  return pref * sum.value();
}

double top_product_kernel(const Dimension& dim, RadialPoint rho) {
  if (!dim.odd() || dim.n() < 5) throw DomainError("top_product_kernel requires odd n >= 5");
  const int n = dim.n();
  double half = 0.5 * rho.rho;
  return 1.0 / (special::riesz_gamma(dim, n - 1) * std::pow(std::cosh(half), n - 2) * 2.0 *
                std::sinh(half));
}

double pk_green_bound(const Dimension& dim, GjmsOrder k, RadialPoint rho) {
  k.check(dim);
  const double q = dim.n() - 2 * k.k;
  const double half = 0.5 * rho.rho;
  // a^{-q} - b^{-q} = a^{-q} (1 - tanh^q(rho/2)), tanh(rho/2) = 1 - 2/(e^rho + 1)
  double log_tanh = std::log1p(-2.0 / (std::exp(rho.rho) + 1.0));
  double first = std::exp(-q * (std::numbers::ln2 + log_sinh(half)));
  return first * -std::expm1(q * log_tanh) / special::riesz_gamma(dim, 2.0 * k.k);
}

double pk_green_sum(const Dimension& dim, GjmsOrder k, RadialPoint rho, const quad::QuadConfig& cfg) {
  k.check(dim);
  if (dim.n() < 3) throw DomainError("pk_green requires n >= 3");
  const int m = dim.even() ? dim.n() / 2 : (dim.n() + 1) / 2;
  const double scale = std::pow(4.0, k.k - 1) / special::riesz_gamma(Dimension(2 * m), 2.0 * k.k);
  CompensatedSum sum;
  if (dim.even()) {
    double s2 = std::pow(std::sinh(0.5 * rho.rho), 2);
    for (int j = 0; j <= m - 1 - k.k; ++j)
      sum += special::binomial(m - 1, j) * std::pow(s2, j + k.k - 1);
    return scale * sum.value() / std::pow(std::sinh(rho.rho), 2 * m - 2);
  }
  for (int j = 0; j <= m - 1 - k.k; ++j)
    sum += special::binomial(m - 1, j) * descent_basis_integral(m, j + k.k - 1, rho, cfg);
  return scale * sum.value();
}

double pk_green(const Dimension& dim, GjmsOrder k, RadialPoint rho, const quad::QuadConfig& cfg) {
  k.check(dim);
  if (dim.n() < 3) throw DomainError("pk_green requires n >= 3");
  if (k.k == 1) return pk_green_bound(dim, k, rho);
  return pk_green_sum(dim, k, rho, cfg);
}

std::vector<double> bound_gap_coeffs(const Dimension& dim, GjmsOrder k) {
  k.check(dim);
  if (!dim.even()) throw DomainError("bound_gap_coeffs requires even n");
  const int m = dim.n() / 2;
  std::vector<double> out;
  for (int j = 0; j < k.k; ++j)
    out.push_back((gamma_ratio({double(m)}, {double(m - k.k + j + 1)}) -
                   gamma_ratio({double(k.k)}, {j + 1.0})) /
                  special::gamma(k.k - j));
  return out;
}

bool telescoping_valid(const Dimension& dim, const ProductSpec& spec) {
  try {
    spec.check(dim);
    ProductSpec next_k0{spec.k0 + 1, spec.sigma, spec.l};
    ProductSpec next_l{spec.k0, spec.sigma, spec.l + 1};
    next_k0.check(dim);
    next_l.check(dim);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

double telescoping_residual(const Dimension& dim, const ProductSpec& spec, RadialPoint rho,
                            const quad::QuadConfig& cfg) {
  if (!telescoping_valid(dim, spec))
    throw DomainError("telescoping step requires (k0+1, l) and (k0, l+1) to be valid");
  double g = product_green(dim, spec, rho, cfg);
  double g_shift = product_green(dim, {spec.k0 + 1, spec.sigma, spec.l}, rho, cfg);
  double g_long = product_green(dim, {spec.k0, spec.sigma, spec.l + 1}, rho, cfg);
  double c = 1.0 / ((2.0 * spec.k0 + 2.0 * spec.sigma_value() + spec.l) * spec.l);
  return std::fabs(c * (g - g_shift) - g_long) / std::fabs(g_long);
}

bool GreenTable::positive_decreasing() const {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i].second > 0.0)) return false;
    if (i > 0 && !(samples[i].second < samples[i - 1].second)) return false;
  }
  return true;
}

}  // namespace hypgreen::gjms
