#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hypgreen/gjms_green.hpp"
#include "hypgreen/types.hpp"

namespace hypgreen::sweep {

enum class Spacing { geometric, linear };
enum class ExecPolicy { serial, parallel };

struct GridSpec {
  double min = 1e-2;
  double max = 20.0;
  int count = 40;
  Spacing spacing = Spacing::geometric;

  void validate() const;
  std::vector<double> points() const;
};

// Runs body(i) for i in [0, count). Exceptions are captured per index; after the loop
// the one from the lowest index is rethrown, so both policies fail identically.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body,
                    ExecPolicy policy = ExecPolicy::parallel);

struct Outcome {
  double value = 0.0;
  std::string error;
  bool ok() const { return error.empty(); }
};

// f at every point; a throwing evaluation yields an Outcome carrying the message.
std::vector<Outcome> evaluate_grid(const std::vector<double>& xs,
                                   const std::function<double(double)>& f,
                                   ExecPolicy policy = ExecPolicy::parallel);

struct GreenRow {
  double rho;
  double pk;
  double bound;
  double gap;      // bound - pk
  double rel_gap;  // gap / bound
};

std::vector<GreenRow> green_table(const Dimension& n, GjmsOrder k, const std::vector<double>& rhos,
                                  ExecPolicy policy = ExecPolicy::parallel);

gjms::GreenTable product_table(const Dimension& n, const ProductSpec& spec,
                               const std::vector<double>& rhos,
                               ExecPolicy policy = ExecPolicy::parallel);

struct LambdaRow {
  int n;
  int k;
  double bound;         // NaN when error is set
  double neg_hardy;     // -prod (2i-1)^2/4
  double closed;        // NaN unless n = 2k+2
  std::string error;
};

// Every (n, k) with 2 <= k <= k_max and 2k+2 <= n < 4k, ordered by k then n.
std::vector<LambdaRow> lambda_table(int k_max, ExecPolicy policy = ExecPolicy::parallel);

}  // namespace hypgreen::sweep
