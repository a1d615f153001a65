#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>

#include "hypgreen/types.hpp"

namespace hypgreen::quad {

struct QuadConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
  double tail_cutoff_decay = 1.0;  // exponential decay rate hint for semi-infinite ranges

  void validate() const;
  // Purely relative accuracy target; the absolute floor sits near the underflow range.
  static QuadConfig relative(double rel_tol) {
    QuadConfig out;
    out.rel_tol = rel_tol;
    out.abs_tol = 1e-300;
    return out;
  }
  QuadConfig with_decay(double c) const {
    QuadConfig out = *this;
    out.tail_cutoff_decay = c;
    return out;
  }
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
  long evaluations = 0;
};

// Carries the best available estimate when an integral fails to converge.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadResult best)
      : std::runtime_error(what), best_(best) {}
  const QuadResult& best() const { return best_; }

 private:
  QuadResult best_;
};

enum class Endpoints { regular, singular_left, singular_right, singular_both };

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod (21 points) on [a, b]; tanh-sinh when an endpoint
// singularity is declared. Nodes are never placed on a declared singular endpoint.
QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadConfig& cfg = {},
                            Endpoints ends = Endpoints::regular);

// Sum of integrate_finite over consecutive breakpoints.
QuadResult integrate_piecewise(const Integrand& f, std::span<const double> breaks,
                               const QuadConfig& cfg = {});

// [a, inf) by paneling; cfg.tail_cutoff_decay is the decay rate c of f.
QuadResult integrate_semiinf(const Integrand& f, double a, const QuadConfig& cfg = {});

// sqrt(2) int_rho^inf sinh r (cosh r - cosh rho)^{-1/2} g(r) dr, computed as
// 4 int_0^inf g(r(t)) dt with cosh r(t) = cosh rho + 2 t^2. g_decay is the
// exponential decay rate of g and must exceed 1/2. Each geometric panel of the
// substitution variable is split into panel_split equal pieces.
QuadResult integrate_descent(const Integrand& g, RadialPoint rho, double g_decay,
                             const QuadConfig& cfg = {}, int panel_split = 1);

// Returns r.value, or throws QuadratureError naming the context.
double require(const QuadResult& r, const std::string& context);

}  // namespace hypgreen::quad
