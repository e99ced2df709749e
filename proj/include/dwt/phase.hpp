#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>

#include "dwt/errors.hpp"

namespace dwt {

/// An exact root of unity exp(2*pi*i * num/order), stored in lowest terms
/// with 0 <= num < order. Multiplication is addition of fractions mod 1;
/// there is no floating point anywhere in this class except value().
class Phase {
public:
  Phase() : num_(0), order_(1) {}

  Phase(std::int64_t num, std::int64_t order) {
    if (order <= 0) throw UsageError("phase order must be positive");
    num %= order;
    if (num < 0) num += order;
    std::int64_t g = std::gcd(num, order);
    num_ = num / g;
    order_ = order / g;
  }

  static Phase one() { return Phase(); }
  static Phase minus_one() { return Phase(1, 2); }
  static Phase root_of_unity(std::int64_t num, std::int64_t order) { return Phase(num, order); }

  std::int64_t num() const { return num_; }
  std::int64_t order() const { return order_; }
  bool is_one() const { return num_ == 0; }

  Phase operator*(const Phase& o) const {
    std::int64_t l = lcm_checked(order_, o.order_);
    return Phase(num_ * (l / order_) + o.num_ * (l / o.order_), l);
  }

  Phase& operator*=(const Phase& o) { return *this = *this * o; }

  Phase inverse() const { return Phase(order_ - num_, order_); }
  Phase conj() const { return inverse(); }

  Phase operator/(const Phase& o) const { return *this * o.inverse(); }

  Phase pow(std::int64_t k) const {
    std::int64_t e = ((k % order_) + order_) % order_;
    return Phase(num_ * e, order_);
  }

  bool operator==(const Phase& o) const { return num_ == o.num_ && order_ == o.order_; }
  bool operator!=(const Phase& o) const { return !(*this == o); }

  std::complex<double> value() const {
    const double t = 2.0 * 3.14159265358979323846 * static_cast<double>(num_) /
                     static_cast<double>(order_);
    return {std::cos(t), std::sin(t)};
  }

  /// Numerator rescaled to a common order n (n must be a multiple of order()).
  std::int64_t numerator_at_order(std::int64_t n) const {
    return num_ * (n / order_);
  }

private:
  static std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
    std::int64_t l = a / std::gcd(a, b) * b;
    if (l > kMaxOrder) throw ResourceError("phase order overflow beyond configured bound");
    return l;
  }

  static constexpr std::int64_t kMaxOrder = 10000000;

  std::int64_t num_;
  std::int64_t order_;
};

}  // namespace dwt
