#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "awctd/adaptive_grid.hpp"
#include "awctd/derivatives.hpp"

using namespace awctd;

TEST(Derivatives, CubicOnUnitGrid) {
  // domain length 2^j_max makes the finest spacing 1, so x^3 -> 3 x^2 at x = 1
  const FilterBank bank = build_filter_bank(2);
  const DyadicGrid grid(2, 5);
  const int n = grid.size();
  FieldArray f(n);
  for (int iz = 0; iz < n; ++iz)
    for (int ix = 0; ix < n; ++ix) f(ix, iz) = std::pow(ix - 16.0, 3);
  const GridMask full = GridMask::full(grid);
  const FieldArray d = diff_x(f, full, LevelMap(n, 5), bank, 32.0);
  EXPECT_NEAR(d(17, 10), 3.0, 1e-12);
  EXPECT_NEAR(d(16, 10), 0.0, 1e-12);
  EXPECT_NEAR(d(20, 3), 48.0, 1e-11);
  const FieldArray dz = diff_z(f, full, LevelMap(n, 5), bank, 32.0);
  EXPECT_NEAR(dz(17, 10), 0.0, 1e-12);
}

TEST(Derivatives, ExactForPolynomialsOfDegreeBelowTwoN) {
  for (int order = 2; order <= 4; ++order) {
    const FilterBank bank = build_filter_bank(order);
    const DyadicGrid grid(2, 6);
    const int n = grid.size();
    const int k = 2 * order - 1;
    FieldArray f(n);
    for (int iz = 0; iz < n; ++iz)
      for (int ix = 0; ix < n; ++ix) f(ix, iz) = std::pow((iz - 32) / 32.0, k);
    const FieldArray d = diff_z(f, GridMask::full(grid), LevelMap(n, 6), bank, 2.0);
    for (int iz = 16; iz <= 48; ++iz) EXPECT_NEAR(d(5, iz), k * std::pow((iz - 32) / 32.0, k - 1), 1e-10);
  }
}

TEST(Derivatives, SpatialConvergenceOrder) {
  // error of d/dx sin on refined grids falls like h^{2N}
  const FilterBank bank = build_filter_bank(2);
  double prev = 0.0;
  for (int j = 5; j <= 7; ++j) {
    const DyadicGrid grid(2, j);
    const int n = grid.size();
    FieldArray f(n);
    for (int iz = 0; iz < n; ++iz)
      for (int ix = 0; ix < n; ++ix) f(ix, iz) = std::sin(2.0 * std::numbers::pi * ix / (n - 1));
    const FieldArray d = diff_x(f, GridMask::full(grid), LevelMap(n, j), bank, 1.0);
    double err = 0.0;
    for (int ix = n / 4; ix <= 3 * n / 4; ++ix)
      err = std::max(err, std::abs(d(ix, 0) - 2.0 * std::numbers::pi * std::cos(2.0 * std::numbers::pi * ix / (n - 1))));
    if (prev > 0.0) {
      EXPECT_NEAR(std::log2(prev / err), 4.0, 0.3);
    }
    prev = err;
  }
}

// A point at density level j0 uses the same arithmetic as a full-grid
// derivative on the level-j0 subsampled grid.
TEST(Derivatives, CoarseLevelUsesSubsampledStencil) {
  const FilterBank bank = build_filter_bank(3);
  const DyadicGrid fine(2, 6), coarse(2, 4);
  FieldArray f(fine.size()), g(coarse.size());
  for (int iz = 0; iz < fine.size(); ++iz)
    for (int ix = 0; ix < fine.size(); ++ix) f(ix, iz) = std::cos(0.11 * ix) * std::exp(-0.01 * iz);
  for (int iz = 0; iz < coarse.size(); ++iz)
    for (int ix = 0; ix < coarse.size(); ++ix) g(ix, iz) = f(4 * ix, 4 * iz);
  LevelMap lv(fine.size(), 4);
  const FieldArray df = diff_x(f, GridMask::full(fine), lv, bank, 3.0);
  const FieldArray dg = diff_x(g, GridMask::full(coarse), LevelMap(coarse.size(), 4), bank, 3.0);
  for (int iz = 0; iz < coarse.size(); ++iz)
    for (int ix = 0; ix < coarse.size(); ++ix) EXPECT_DOUBLE_EQ(df(4 * ix, 4 * iz), dg(ix, iz));
}

TEST(Derivatives, ZeroOutsideMaskAndSupport) {
  const FilterBank bank = build_filter_bank(2);
  const DyadicGrid grid(2, 4);
  const int n = grid.size();
  FieldArray f(n, 1.0);
  for (int ix = 0; ix < n; ++ix) f(ix, 8) = ix;
  GridMask mask(grid);
  mask.insert(8, 8);
  LevelMap lv(n, kUnmaskedLevel);
  lv(8, 8) = 4;
  const FieldArray d = diff_x(f, mask, lv, bank, 16.0);
  // the taps at 6, 7, 9 and 10 are unmasked and read 0
  EXPECT_EQ(d(8, 8), 0.0);
  EXPECT_EQ(d(9, 8), 0.0);
  GridMask support = GridMask::full(grid);
  const FieldArray d2 = diff_x(f, mask, lv, bank, 16.0, &support);
  EXPECT_NEAR(d2(8, 8), 1.0, 1e-14);
}
