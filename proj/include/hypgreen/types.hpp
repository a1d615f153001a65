#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace hypgreen {

// Invalid parameter combination; the message names the violated precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Parity { even, odd };

class Dimension {
 public:
  explicit Dimension(int n) : n_(n) {
    if (n < 2) throw DomainError("dimension n must satisfy n >= 2, got " + std::to_string(n));
  }
  int n() const { return n_; }
  Parity parity() const { return n_ % 2 == 0 ? Parity::even : Parity::odd; }
  bool odd() const { return n_ % 2 != 0; }
  bool even() const { return n_ % 2 == 0; }
  int half_floor() const { return n_ / 2; }
  int half_ceil() const { return (n_ + 1) / 2; }

 private:
  int n_;
};

// Order k of the GJMS operator P_k; 1 <= k < n/2 is checked against a Dimension.
struct GjmsOrder {
  int k;
  explicit GjmsOrder(int k_) : k(k_) {
    if (k_ < 1) throw DomainError("GJMS order must satisfy k >= 1, got " + std::to_string(k_));
  }
  void check(const Dimension& dim) const {
    if (2 * k >= dim.n())
      throw DomainError("GJMS order must satisfy k < n/2, got n=" + std::to_string(dim.n()) +
                        " k=" + std::to_string(k));
  }
};

enum class Shift { zero, half };

// prod_{j=0}^{l-1} ((k0 + j + sigma)^2 - (n-1)^2/4 - Delta_H)
struct ProductSpec {
  int k0 = 0;
  Shift sigma = Shift::zero;
  int l = 1;

  double sigma_value() const { return sigma == Shift::half ? 0.5 : 0.0; }
  void check(const Dimension& dim) const;
};

inline void ProductSpec::check(const Dimension& dim) const {
  auto fail = [&](const std::string& why) {
    throw DomainError("invalid product spec (n=" + std::to_string(dim.n()) +
                      ", k0=" + std::to_string(k0) + ", sigma=" +
                      (sigma == Shift::half ? "1/2" : "0") + ", l=" + std::to_string(l) +
                      "): " + why);
  };
  if (dim.n() < 3) fail("requires n >= 3");
  if (k0 < 0) fail("requires k0 >= 0");
  if (l < 1) fail("requires l >= 1");
  if (sigma == Shift::zero) {
    if (dim.even()) fail("sigma = 0 requires odd n");
    int m = (dim.n() - 1) / 2;
    if (k0 + l > m) fail("sigma = 0 requires k0 + l <= (n-1)/2");
  } else {
    // even n = 2m directly, odd n = 2m-1 through descent from 2m
    int m = dim.even() ? dim.n() / 2 : (dim.n() + 1) / 2;
    if (k0 + l > m - 1) fail("sigma = 1/2 requires k0 + l <= m - 1");
  }
}

struct RadialPoint {
  double rho;
  explicit RadialPoint(double r) : rho(r) {
    if (!(r > 0.0) || !std::isfinite(r))
      throw DomainError("radial point requires finite rho > 0, got " + std::to_string(r));
  }
};

}  // namespace hypgreen
