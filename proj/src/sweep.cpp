#include "hypgreen/sweep.hpp"

#include <cmath>
#include <exception>
#include <limits>

#include "hypgreen/mazya.hpp"
#include "hypgreen/symbols.hpp"

namespace hypgreen::sweep {

void GridSpec::validate() const {
  if (count < 2) throw DomainError("grid requires at least 2 points");
  if (!(min > 0.0) || !(max > min) || !std::isfinite(max))
    throw DomainError("grid requires 0 < min < max < inf");
}

std::vector<double> GridSpec::points() const {
  validate();
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    double f = double(i) / (count - 1);
    out[i] = spacing == Spacing::geometric ? min * std::pow(max / min, f) : min + (max - min) * f;
  }
  out.back() = max;
  return out;
}

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body, ExecPolicy policy) {
  std::vector<std::exception_ptr> errors(count);
  const long long n = static_cast<long long>(count);
  if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    for (long long i = 0; i < n; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<Outcome> evaluate_grid(const std::vector<double>& xs, const std::function<double(double)>& f,
                                   ExecPolicy policy) {
  std::vector<Outcome> out(xs.size());
  for_each_index(
      xs.size(),
      [&](std::size_t i) {
        try {
          out[i].value = f(xs[i]);
        } catch (const std::exception& e) {
          out[i].value = std::numeric_limits<double>::quiet_NaN();
          out[i].error = e.what();
        }
      },
      policy);
  return out;
}

std::vector<GreenRow> green_table(const Dimension& n, GjmsOrder k, const std::vector<double>& rhos,
                                  ExecPolicy policy) {
  k.check(n);
  if (n.n() < 3) throw DomainError("green table requires n >= 3");
  std::vector<GreenRow> out(rhos.size());
  for_each_index(
      rhos.size(),
      [&](std::size_t i) {
        RadialPoint p(rhos[i]);
        GreenRow& row = out[i];
        row.rho = rhos[i];
        row.pk = gjms::pk_green(n, k, p);
        row.bound = gjms::pk_green_bound(n, k, p);
        row.gap = row.bound - row.pk;
        row.rel_gap = row.gap / row.bound;
      },
      policy);
  return out;
}

gjms::GreenTable product_table(const Dimension& n, const ProductSpec& spec, const std::vector<double>& rhos,
                               ExecPolicy policy) {
  spec.check(n);
  gjms::GreenTable out{n.n(), spec, std::vector<std::pair<double, double>>(rhos.size())};
  for_each_index(
      rhos.size(),
      [&](std::size_t i) { out.samples[i] = {rhos[i], gjms::product_green(n, spec, RadialPoint(rhos[i]))}; },
      policy);
  return out;
}

std::vector<LambdaRow> lambda_table(int k_max, ExecPolicy policy) {
  if (k_max < 2) throw DomainError("lambda table requires k_max >= 2");
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<LambdaRow> out;
  for (int k = 2; k <= k_max; ++k)
    for (int n = 2 * k + 2; n < 4 * k; ++n) out.push_back({n, k, nan, nan, nan, {}});
  for_each_index(
      out.size(),
      [&](std::size_t i) {
        LambdaRow& row = out[i];
        GjmsOrder k(row.k);
        row.neg_hardy = -symbols::hardy_product_const(k);
        if (row.n == 2 * row.k + 2) row.closed = mazya::lambda_lower_bound_closed(k);
        try {
          row.bound = mazya::lambda_lower_bound(Dimension(row.n), k);
        } catch (const std::exception& e) {
          row.error = e.what();
        }
      },
      policy);
  return out;
}

}  // namespace hypgreen::sweep
