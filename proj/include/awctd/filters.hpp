#pragma once

// Filter coefficients of the Deslauriers-Dubuc interpolating family of
// order N: Lagrangian midpoint prediction weights (lifting predict), the
// matching update weights and the derivative filter of the scaling function
// sampled at the integers.

#include <array>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "awctd/errors.hpp"
#include "awctd/rational.hpp"

namespace awctd {

/// Exact weights w_l, l = -(order-1)..order, such that sum_l w_l q(l) = q(1/2)
/// for every polynomial q of degree <= 2*order-1.
inline std::vector<Rational> lagrange_midpoint_weights_exact(int order) {
  if (order < 1) throw ConfigError("lagrange_midpoint_weights: order must be >= 1, got " + std::to_string(order));
  std::vector<Rational> w;
  w.reserve(static_cast<std::size_t>(2 * order));
  for (int l = -(order - 1); l <= order; ++l) {
    Rational prod(1);
    for (int k = -(order - 1); k <= order; ++k) {
      if (k == l) continue;
      prod *= Rational(1 - 2 * k, 2) / Rational(l - k);
    }
    w.push_back(prod);
  }
  return w;
}

inline std::vector<double> lagrange_midpoint_weights(int order) {
  std::vector<double> out;
  for (const Rational &r : lagrange_midpoint_weights_exact(order)) out.push_back(r.to_double());
  return out;
}

namespace detail {

// Derivative of the order-N interpolating scaling function at i = 1, 2, ...,
// oriented so that f'(0) ~ sum_i c_i (f(i) - f(-i)).
inline std::vector<Rational> derivative_filter_table(int order) {
  switch (order) {
  case 2:
    return {Rational(2, 3), Rational(-1, 12)};
  case 3:
    return {Rational(272, 365), Rational(-53, 365), Rational(16, 1095), Rational(1, 2920)};
  case 4:
    return {Rational(39296, 49553), Rational(-76113, 396424), Rational(1664, 49553),
            Rational(-2645, 1189272), Rational(-128, 743295), Rational(1, 1189272)};
  default:
    throw ConfigError("unsupported wavelet order N=" + std::to_string(order) + " (supported: 2, 3, 4)");
  }
}

} // namespace detail

/// Immutable per-order filter set shared by the transforms, closures and stencils.
class FilterBank {
public:
  int order() const noexcept { return order_; }

  /// 2N prediction weights for the even neighbours at relative positions
  /// l = -(N-1)..N of an odd point (normalized to the coarse spacing).
  std::span<const double> predict_weights() const noexcept { return predict_; }
  std::span<const Rational> predict_weights_exact() const noexcept { return predict_exact_; }

  /// Update weights s_l applied to the normalized details. Numerically equal to
  /// the prediction weights; since d = (odd - prediction) / 2 this is the
  /// classical lifting update P^T / 2 on raw residuals, which preserves the
  /// integral of the represented field.
  std::span<const double> update_weights() const noexcept { return update_; }

  /// One-sided derivative filter values for i = 1..3(N-1); the value at 0 is 0
  /// and the value at -i is the negative of the value at i.
  std::span<const double> deriv_filter() const noexcept { return deriv_; }
  std::span<const Rational> deriv_filter_exact() const noexcept { return deriv_exact_; }

  int deriv_length() const noexcept { return static_cast<int>(deriv_.size()); }

  /// Antisymmetric derivative coefficient multiplying f(m' + offset).
  double deriv_tap(int offset) const noexcept {
    if (offset == 0 || std::abs(offset) > deriv_length()) return 0.0;
    const double v = deriv_[static_cast<std::size_t>(std::abs(offset) - 1)];
    return offset > 0 ? v : -v;
  }

  /// Finest-index offset of the i-th prediction tap from an odd point whose
  /// fine spacing is h. Offsets are odd multiples of h in [-(2N-1)h, (2N-1)h].
  int predict_offset(int i, int h) const noexcept { return (2 * i - 2 * order_ + 1) * h; }

  int stencil_size() const noexcept { return 2 * order_; }

  /// sum_{l>=0} |DD'_N(l)|, the filter mass entering the CFL bound.
  double deriv_abs_sum() const noexcept {
    double s = 0.0;
    for (double v : deriv_) s += std::abs(v);
    return s;
  }

  friend FilterBank build_filter_bank(int order);

private:
  int order_ = 0;
  std::vector<Rational> predict_exact_;
  std::vector<double> predict_;
  std::vector<double> update_;
  std::vector<Rational> deriv_exact_;
  std::vector<double> deriv_;
};

inline FilterBank build_filter_bank(int order) {
  FilterBank bank;
  bank.deriv_exact_ = detail::derivative_filter_table(order); // throws for unsupported orders
  bank.order_ = order;
  bank.predict_exact_ = lagrange_midpoint_weights_exact(order);
  for (const Rational &r : bank.predict_exact_) {
    bank.predict_.push_back(r.to_double());
    bank.update_.push_back(r.to_double());
  }
  for (const Rational &r : bank.deriv_exact_) bank.deriv_.push_back(r.to_double());
  return bank;
}

} // namespace awctd
