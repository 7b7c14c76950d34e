#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "awctd/filters.hpp"
#include "awctd/solver.hpp"

using namespace awctd;

namespace {

// Lagrange weights at x = 0 for nodes x_i = i - N + 1/2 (i = 0..2N-1), by
// solving the Vandermonde system sum_i w_i x_i^k = [k == 0] directly.
std::vector<double> vandermonde_midpoint_weights(int order) {
  const int n = 2 * order;
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) a[k][i] = std::pow(i - order + 0.5, k);
    a[k][n] = k == 0 ? 1.0 : 0.0;
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (int k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = a[i][n] / a[i][i];
  return w;
}

} // namespace

TEST(Filters, CubicMidpointWeights) {
  const auto w = lagrange_midpoint_weights_exact(2);
  ASSERT_EQ(w.size(), 4u);
  EXPECT_EQ(w[0], Rational(-1, 16));
  EXPECT_EQ(w[1], Rational(9, 16));
  EXPECT_EQ(w[2], Rational(9, 16));
  EXPECT_EQ(w[3], Rational(-1, 16));
}

TEST(Filters, MidpointWeightsMatchVandermondeSolve) {
  for (int order = 1; order <= 4; ++order) {
    const auto got = lagrange_midpoint_weights(order);
    const auto want = vandermonde_midpoint_weights(order);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-13) << "order " << order;
  }
}

TEST(Filters, MidpointWeightsSumToOne) {
  for (int order = 1; order <= 6; ++order) {
    Rational s;
    for (const Rational &r : lagrange_midpoint_weights_exact(order)) s += r;
    EXPECT_EQ(s, Rational(1));
  }
}

TEST(Filters, UpdateWeightsEqualPrediction) {
  const FilterBank bank = build_filter_bank(2);
  const std::vector<double> want{-1.0 / 16, 9.0 / 16, 9.0 / 16, -1.0 / 16};
  ASSERT_EQ(bank.update_weights().size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(bank.update_weights()[i], want[i]);
}

TEST(Filters, DerivativeTableValues) {
  const FilterBank b2 = build_filter_bank(2);
  ASSERT_EQ(b2.deriv_length(), 2);
  EXPECT_EQ(b2.deriv_filter_exact()[0], Rational(2, 3));
  EXPECT_EQ(b2.deriv_filter_exact()[1], Rational(-1, 12));
  const FilterBank b4 = build_filter_bank(4);
  ASSERT_EQ(b4.deriv_length(), 6);
  EXPECT_EQ(b4.deriv_filter_exact()[0], Rational(39296, 49553));
  EXPECT_EQ(b4.deriv_filter_exact()[5], Rational(1, 1189272));
  EXPECT_EQ(build_filter_bank(3).deriv_length(), 4);
}

TEST(Filters, DerivativeTapIsAntisymmetric) {
  const FilterBank bank = build_filter_bank(3);
  EXPECT_EQ(bank.deriv_tap(0), 0.0);
  for (int i = 1; i <= bank.deriv_length(); ++i) EXPECT_EQ(bank.deriv_tap(-i), -bank.deriv_tap(i));
  EXPECT_EQ(bank.deriv_tap(bank.deriv_length() + 1), 0.0);
}

// First moment: sum_i c_i (i - (-i)) = 1 exactly, i.e. d/dx x = 1.
TEST(Filters, DerivativeFirstMomentIsOne) {
  for (int order = 2; order <= 4; ++order) {
    const FilterBank bank = build_filter_bank(order);
    Rational m;
    for (int i = 1; i <= bank.deriv_length(); ++i) m += Rational(2 * i) * bank.deriv_filter_exact()[i - 1];
    EXPECT_EQ(m, Rational(1)) << "order " << order;
  }
}

TEST(Filters, DerivativeReproducesMonomials) {
  for (int order = 2; order <= 4; ++order) {
    const FilterBank bank = build_filter_bank(order);
    for (int k = 1; k <= 2 * order - 1; ++k)
      for (int x0 = -3; x0 <= 5; ++x0) {
        double acc = 0.0;
        for (int i = 1; i <= bank.deriv_length(); ++i)
          acc += bank.deriv_tap(i) * (std::pow(x0 + i, k) - std::pow(x0 - i, k));
        const double exact = k * std::pow(x0, k - 1);
        EXPECT_NEAR(acc, exact, 1e-10 * std::max(1.0, std::abs(exact))) << "N=" << order << " k=" << k;
      }
  }
}

TEST(Filters, UnsupportedOrdersRejected) {
  EXPECT_THROW(build_filter_bank(1), ConfigError);
  EXPECT_THROW(build_filter_bank(5), ConfigError);
  EXPECT_THROW(lagrange_midpoint_weights(0), ConfigError);
}

TEST(Filters, PredictOffsetsAreSymmetricOddMultiples) {
  const FilterBank bank = build_filter_bank(4);
  EXPECT_EQ(bank.stencil_size(), 8);
  EXPECT_EQ(bank.predict_offset(0, 2), -14);
  EXPECT_EQ(bank.predict_offset(7, 2), 14);
  EXPECT_EQ(bank.predict_offset(3, 1), -1);
  EXPECT_EQ(bank.predict_offset(4, 1), 1);
}

TEST(Filters, CflBoundForCubicFilter) {
  // Sum |DD'| = 2/3 + 1/12 = 3/4, so c dt / delta = 1 / (sqrt 2 * 3/4).
  const FilterBank bank = build_filter_bank(2);
  EXPECT_NEAR(bank.deriv_abs_sum(), 0.75, 1e-15);
  EXPECT_NEAR(cfl_max_dt(1.0, bank, 1.0), 0.9428090415820634, 1e-12);
}

TEST(Filters, CflBoundForOrderFour) {
  const FilterBank bank = build_filter_bank(4);
  const double s = 39296.0 / 49553 + 76113.0 / 396424 + 1664.0 / 49553 + 2645.0 / 1189272 + 128.0 / 743295 +
                   1.0 / 1189272;
  EXPECT_NEAR(bank.deriv_abs_sum(), s, 1e-15);
  EXPECT_NEAR(s, 1.0209858, 1e-7);
}
