#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypgreen/sweep.hpp"

namespace hypgreen::verify {

struct Check {
  std::string name;
  std::string group;
  double max_residual;
  double tolerance;
  std::size_t samples;
  bool pass;
};

struct Options {
  std::vector<std::string> only;  // group names; empty runs every group
  std::optional<double> tol;      // replaces every per-check tolerance
  std::vector<double> eps_sweep{1e-4, 3e-5, 1e-5, 3e-6, 1e-6, 3e-7, 1e-7};
  sweep::ExecPolicy policy = sweep::ExecPolicy::parallel;
};

// resolvents, products, telescoping, bound, legendre, descent, symbols, lambda, asymptotics, duality
const std::vector<std::string>& groups();

// Throws DomainError on an unknown group name.
std::vector<Check> run_battery(const Options& opts = {});

struct IndexRaising {
  double lhs;
  double rhs;
};

// int_rho^inf sinh^{lam+1} r (cosh r - cosh rho)^{mu-1} Q~_nu^{-lam}(cosh r) dr
//   = Gamma(mu) sinh^{lam+mu} rho Q~_nu^{-lam-mu}(cosh rho)
IndexRaising index_raising(double nu, double lam, double mu, double rho);

}  // namespace hypgreen::verify
