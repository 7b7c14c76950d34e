#pragma once

#include <cmath>
#include <vector>

#include "awctd/dyadic_grid.hpp"
#include "awctd/filters.hpp"
#include "awctd/wavelet_transform.hpp"

namespace awctd {

/// Widths of the adjacent zone: `levels` is the level band |j' - j|, `space`
/// the index band |2^{j'-j} m - m'| on each axis.
struct AdjacentZone {
  int levels = 1;
  int space = 1;
};

/// Grows the mask by the adjacent zone of every point that holds a detail
/// coefficient. Coarsest-lattice points carry only scaling coefficients and
/// spawn no zone.
///
/// For a point of native level j at finest index (ix, iz), the level-j' points
/// with |2^{j'-j} m - m'| <= M are exactly the level-j' lattice points within
/// M * spacing(j') of ix, so the zone is enumerated directly in finest indices.
inline GridMask add_adjacent_zone(const GridMask &mask, AdjacentZone zone = {}) {
  const DyadicGrid &grid = mask.grid();
  const int n = grid.size();
  GridMask out = mask;
  for (int iz = 0; iz < n; ++iz)
    for (int ix = 0; ix < n; ++ix) {
      if (!mask(ix, iz) || grid.is_coarsest(ix, iz)) continue;
      const int j = grid.native_level(ix, iz);
      const int lo = std::max(grid.j_min, j - zone.levels);
      const int hi = std::min(grid.j_max, j + zone.levels);
      for (int jp = lo; jp <= hi; ++jp) {
        const int s = grid.spacing(jp);
        const int reach = zone.space * s;
        // level-j' lattice points t with |t - ix| <= reach
        const int x0 = std::max(0, (ix - reach + s - 1) / s * s);
        const int z0 = std::max(0, (iz - reach + s - 1) / s * s);
        for (int tz = z0; tz <= std::min(n - 1, iz + reach); tz += s)
          for (int tx = x0; tx <= std::min(n - 1, ix + reach); tx += s) out.insert(tx, tz);
      }
    }
  return out;
}

/// Adds every point read by the transform stencil of every masked detail,
/// transitively, so that both FWT and IWT are well defined on the result.
inline GridMask reconstruction_check(const GridMask &mask, const FilterBank &bank) {
  const DyadicGrid &grid = mask.grid();
  const int n = grid.size();
  GridMask out = mask;
  std::vector<std::pair<int, int>> work;
  for (int iz = 0; iz < n; ++iz)
    for (int ix = 0; ix < n; ++ix)
      if (mask(ix, iz) && !grid.is_coarsest(ix, iz)) work.emplace_back(ix, iz);
  while (!work.empty()) {
    const auto [ix, iz] = work.back();
    work.pop_back();
    for_each_transform_tap(grid, bank, ix, iz, [&](int tx, int tz) {
      if (out.insert(tx, tz) && !grid.is_coarsest(tx, tz)) work.emplace_back(tx, tz);
    });
  }
  return out;
}

inline constexpr int kUnmaskedLevel = -1;

namespace detail {

inline int level_from_distance(const DyadicGrid &grid, int distance) {
  if (distance <= 0) return grid.j_min; // no neighbour on this axis
  const int lvl = grid.j_max - static_cast<int>(std::lround(std::log2(static_cast<double>(distance))));
  return std::clamp(lvl, grid.j_min, grid.j_max);
}

} // namespace detail

/// Density level of each masked point: max of the x-level and z-level, where
/// the axis level is j_max - log2(distance to the nearest masked point on the
/// same row/column, in finest-grid units). Unmasked entries are kUnmaskedLevel.
inline LevelMap compute_levels(const GridMask &mask) {
  const DyadicGrid &grid = mask.grid();
  const int n = grid.size();
  LevelMap levels(n, kUnmaskedLevel);
  std::vector<int> nearest(static_cast<std::size_t>(n));

  // Generic 1D pass: fills nearest[] with distance to the nearest other masked entry (0 if none).
  auto sweep = [&](auto &&is_set) {
    int last = -1;
    for (int i = 0; i < n; ++i) {
      nearest[i] = 0;
      if (!is_set(i)) continue;
      if (last >= 0) nearest[i] = i - last;
      last = i;
    }
    last = -1;
    for (int i = n - 1; i >= 0; --i) {
      if (!is_set(i)) continue;
      if (last >= 0 && (nearest[i] == 0 || last - i < nearest[i])) nearest[i] = last - i;
      last = i;
    }
  };

  for (int iz = 0; iz < n; ++iz) {
    sweep([&](int i) { return mask(i, iz); });
    for (int ix = 0; ix < n; ++ix)
      if (mask(ix, iz)) levels(ix, iz) = detail::level_from_distance(grid, nearest[ix]);
  }
  for (int ix = 0; ix < n; ++ix) {
    sweep([&](int i) { return mask(ix, i); });
    for (int iz = 0; iz < n; ++iz)
      if (mask(ix, iz)) levels(ix, iz) = std::max(levels(ix, iz), detail::level_from_distance(grid, nearest[iz]));
  }
  return levels;
}

/// Calls fn(tx, tz) for every in-range derivative tap of the point (ix, iz) at
/// density level `level`, along both axes.
template <class Fn>
void for_each_derivative_tap(const DyadicGrid &grid, const FilterBank &bank, int ix, int iz, int level, Fn &&fn) {
  const int s = grid.spacing(level);
  const int n = grid.size();
  for (int i = 1; i <= bank.deriv_length(); ++i) {
    const int d = i * s;
    if (ix - d >= 0) fn(ix - d, iz);
    if (ix + d < n) fn(ix + d, iz);
    if (iz - d >= 0) fn(ix, iz - d);
    if (iz + d < n) fn(ix, iz + d);
  }
}

/// Adds the derivative-stencil taps of every masked point at its density
/// level, then closes the result under the transform stencils.
inline GridMask extend_for_derivatives(const GridMask &mask, const LevelMap &levels, const FilterBank &bank) {
  const DyadicGrid &grid = mask.grid();
  const int n = grid.size();
  GridMask out = mask;
  for (int iz = 0; iz < n; ++iz)
    for (int ix = 0; ix < n; ++ix) {
      if (!mask(ix, iz)) continue;
      for_each_derivative_tap(grid, bank, ix, iz, levels(ix, iz), [&](int tx, int tz) { out.insert(tx, tz); });
    }
  return reconstruction_check(out, bank);
}

/// Fills the points of new_mask that are not in old_mask from the wavelet
/// representation on old_mask (FWT on old_mask, IWT on new_mask with the new
/// details read as zero). Every other entry of `field` is left untouched.
inline void interpolate_missing(FieldArray &field, const GridMask &old_mask, const GridMask &new_mask,
                                const FilterBank &bank) {
  const DyadicGrid &grid = old_mask.grid();
  const int n = grid.size();
  bool any_missing = false;
  for (int iz = 0; iz < n && !any_missing; ++iz)
    for (int ix = 0; ix < n; ++ix)
      if (new_mask(ix, iz) && !old_mask(ix, iz)) {
        any_missing = true;
        break;
      }
  if (!any_missing) return;

  CoeffPyramid pyr(field, grid);
  fwt_full(pyr, old_mask, bank);
  iwt_full(pyr, new_mask, bank);
  for (int iz = 0; iz < n; ++iz)
    for (int ix = 0; ix < n; ++ix)
      if (new_mask(ix, iz) && !old_mask(ix, iz)) field(ix, iz) = pyr.data(ix, iz);
}

} // namespace awctd
