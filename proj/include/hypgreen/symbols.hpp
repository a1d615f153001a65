#pragma once

#include "hypgreen/types.hpp"

namespace hypgreen::symbols {

struct SpectralPoint {
  double lambda;
  explicit SpectralPoint(double l) : lambda(l) {
    if (!std::isfinite(l)) throw DomainError("spectral point requires finite lambda");
  }
};

// How each factor (k0+j+sigma)^2 - (n-1)^2/4 - Delta_H is turned into a scalar.
enum class SymbolReading {
  eigenvalue,  // (k0+j+sigma)^2 + lambda^2/4
  printed,     // ((k0+j+sigma)^2 + lambda^2)/4
};

// ((n-1)^2 + lambda^2)/4
double laplace_symbol(const Dimension& dim, SpectralPoint p);

// prod_{j=1}^k ((2j-1)^2 + lambda^2)/4
double gjms_symbol(const Dimension& dim, GjmsOrder k, SpectralPoint p);

// prod_{i=1}^k (2i-1)^2/4
double hardy_product_const(GjmsOrder k);

double product_symbol(const ProductSpec& spec, const Dimension& dim, SpectralPoint p,
                      SymbolReading reading = SymbolReading::eigenvalue);

struct SymbolComparison {
  double lhs;
  double rhs;          // eigenvalue reading
  double rhs_printed;  // printed reading
  bool holds;
  bool holds_printed;
};

// lhs = gjms_symbol(m) - hardy_product_const(m), rhs = product_symbol(0, 0, m), m = (n-1)/2.
SymbolComparison symbol_inequality(const Dimension& dim, SpectralPoint p);

}  // namespace hypgreen::symbols
