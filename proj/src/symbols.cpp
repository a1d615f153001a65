#include "hypgreen/symbols.hpp"

namespace hypgreen::symbols {

double laplace_symbol(const Dimension& dim, SpectralPoint p) {
  double a = dim.n() - 1.0;
  return 0.25 * (a * a + p.lambda * p.lambda);
}

double gjms_symbol(const Dimension& dim, GjmsOrder k, SpectralPoint p) {
  k.check(dim);
  double out = 1.0;
  for (int j = 1; j <= k.k; ++j) {
    double a = 2.0 * j - 1.0;
    out *= 0.25 * (a * a + p.lambda * p.lambda);
  }
  return out;
}

double hardy_product_const(GjmsOrder k) {
  double out = 1.0;
  for (int i = 1; i <= k.k; ++i) {
    double a = 2.0 * i - 1.0;
    out *= 0.25 * a * a;
  }
  return out;
}

double product_symbol(const ProductSpec& spec, const Dimension& dim, SpectralPoint p,
                      SymbolReading reading) {
  spec.check(dim);
  double out = 1.0, l2 = p.lambda * p.lambda;
  for (int j = 0; j < spec.l; ++j) {
    double a = spec.k0 + j + spec.sigma_value();
    out *= reading == SymbolReading::eigenvalue ? a * a + 0.25 * l2 : 0.25 * (a * a + l2);
  }
  return out;
}

SymbolComparison symbol_inequality(const Dimension& dim, SpectralPoint p) {
  if (!dim.odd() || dim.n() < 5) throw DomainError("symbol inequality requires odd n >= 5");
  const int m = (dim.n() - 1) / 2;
  GjmsOrder k(m);
  ProductSpec spec{0, Shift::zero, m};
  SymbolComparison out{};
  out.lhs = gjms_symbol(dim, k, p) - hardy_product_const(k);
  out.rhs = product_symbol(spec, dim, p, SymbolReading::eigenvalue);
  out.rhs_printed = product_symbol(spec, dim, p, SymbolReading::printed);
  out.holds = out.lhs >= out.rhs;
  out.holds_printed = out.lhs >= out.rhs_printed;
  return out;
}

}  // namespace hypgreen::symbols
