#pragma once

// Normalized 2D lifted interpolating wavelet transform, in place on the
// finest-grid array. Between levels j+1 and j (fine spacing h):
//
//   d1 at (odd, even), d2 at (even, odd), d3 at (odd, odd) multiples of h,
//   c  at (even, even), i.e. on the level-j lattice.
//
// Taps outside the array or outside the mask read as zero.

#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "awctd/dyadic_grid.hpp"
#include "awctd/errors.hpp"
#include "awctd/filters.hpp"

namespace awctd {

enum class CoeffState { physical, wavelet };

struct CoeffPyramid {
  FieldArray data;
  DyadicGrid grid;
  CoeffState state = CoeffState::physical;

  CoeffPyramid() = default;
  CoeffPyramid(FieldArray values, DyadicGrid g, CoeffState s = CoeffState::physical)
      : data(std::move(values)), grid(g), state(s) {
    if (data.size() != grid.size())
      throw ContractViolation("CoeffPyramid: array size " + std::to_string(data.size()) +
                              " does not match grid size " + std::to_string(grid.size()));
  }
};

enum class DetailKind { none, x_detail, z_detail, xz_detail };

/// Which detail coefficient (if any) the point stores after a full FWT, and at
/// which transform level. Coarsest-lattice points hold scaling coefficients.
struct PointRole {
  DetailKind kind = DetailKind::none;
  int level = 0; // detail level j; the point lies on the level j+1 lattice
  int fine_spacing = 0;
};

inline PointRole point_role(const DyadicGrid &grid, int ix, int iz) noexcept {
  const int native = grid.native_level(ix, iz);
  if (native == grid.j_min) return {DetailKind::none, grid.j_min, grid.spacing(grid.j_min)};
  const int h = grid.spacing(native);
  const bool odd_x = (ix / h) % 2 == 1;
  const bool odd_z = (iz / h) % 2 == 1;
  const DetailKind kind = odd_x && odd_z ? DetailKind::xz_detail : odd_x ? DetailKind::x_detail : DetailKind::z_detail;
  return {kind, native - 1, h};
}

/// Calls fn(tx, tz) for every in-range point read by the FWT/IWT formula of
/// the detail stored at (ix, iz).
template <class Fn>
void for_each_transform_tap(const DyadicGrid &grid, const FilterBank &bank, int ix, int iz, Fn &&fn) {
  const PointRole role = point_role(grid, ix, iz);
  if (role.kind == DetailKind::none) return;
  const int h = role.fine_spacing;
  const int n = grid.size();
  const int taps = bank.stencil_size();
  auto emit = [&](int tx, int tz) {
    if (tx >= 0 && tz >= 0 && tx < n && tz < n) fn(tx, tz);
  };
  if (role.kind == DetailKind::x_detail || role.kind == DetailKind::xz_detail)
    for (int i = 0; i < taps; ++i) emit(ix + bank.predict_offset(i, h), iz);
  if (role.kind == DetailKind::z_detail || role.kind == DetailKind::xz_detail)
    for (int k = 0; k < taps; ++k) emit(ix, iz + bank.predict_offset(k, h));
  if (role.kind == DetailKind::xz_detail)
    for (int i = 0; i < taps; ++i)
      for (int k = 0; k < taps; ++k) emit(ix + bank.predict_offset(i, h), iz + bank.predict_offset(k, h));
}

/// First masked detail point whose transform stencil reaches an unmasked point.
inline std::optional<std::pair<int, int>> find_unclosed_point(const GridMask &mask, const FilterBank &bank) {
  const DyadicGrid &grid = mask.grid();
  const int n = grid.size();
  for (int iz = 0; iz < n; ++iz)
    for (int ix = 0; ix < n; ++ix) {
      if (!mask(ix, iz) || grid.is_coarsest(ix, iz)) continue;
      bool closed = true;
      for_each_transform_tap(grid, bank, ix, iz, [&](int tx, int tz) { closed = closed && mask(tx, tz); });
      if (!closed) return std::pair{ix, iz};
    }
  return std::nullopt;
}

namespace detail {

inline void check_level(const DyadicGrid &grid, int level, const char *op) {
  if (level < grid.j_min || level > grid.j_max - 1)
    throw ContractViolation(std::string(op) + ": level " + std::to_string(level) + " outside [" +
                            std::to_string(grid.j_min) + ", " + std::to_string(grid.j_max - 1) + "]");
}

inline void check_shapes(const CoeffPyramid &p, const GridMask &mask, const char *op) {
  if (!(p.grid == mask.grid()))
    throw ContractViolation(std::string(op) + ": pyramid and mask live on different grids");
}

inline void check_closed(const GridMask &mask, const FilterBank &bank, const char *op) {
  if (auto bad = find_unclosed_point(mask, bank))
    throw ContractViolation(std::string(op) + ": mask not closed under the transform stencil at point (" +
                            std::to_string(bad->first) + ", " + std::to_string(bad->second) + ")");
}

// Stencil sums over the 2N prediction taps around (ix, iz), fine spacing h.
struct TapReader {
  const FieldArray &data;
  const GridMask &mask;
  const FilterBank &bank;
  int h;

  double value(int ix, int iz) const noexcept { return mask.contains(ix, iz) ? data(ix, iz) : 0.0; }

  double along_x(int ix, int iz) const noexcept {
    const auto w = bank.predict_weights();
    double s = 0.0;
    for (int i = 0; i < bank.stencil_size(); ++i) s += w[i] * value(ix + bank.predict_offset(i, h), iz);
    return s;
  }
  double along_z(int ix, int iz) const noexcept {
    const auto w = bank.predict_weights();
    double s = 0.0;
    for (int k = 0; k < bank.stencil_size(); ++k) s += w[k] * value(ix, iz + bank.predict_offset(k, h));
    return s;
  }
  double tensor(int ix, int iz) const noexcept {
    const auto w = bank.predict_weights();
    double s = 0.0;
    for (int i = 0; i < bank.stencil_size(); ++i) s += w[i] * along_z(ix + bank.predict_offset(i, h), iz);
    return s;
  }
  // Update sums: detail at offset -off_i carries weight s_i.
  double update(int ix, int iz) const noexcept {
    const auto u = bank.update_weights();
    const int taps = bank.stencil_size();
    double sx = 0.0, sz = 0.0, sxz = 0.0;
    for (int i = 0; i < taps; ++i) {
      const int ox = -bank.predict_offset(i, h);
      sx += u[i] * value(ix + ox, iz);
      sz += u[i] * value(ix, iz + ox);
      double inner = 0.0;
      for (int k = 0; k < taps; ++k) inner += u[k] * value(ix + ox, iz - bank.predict_offset(k, h));
      sxz += u[i] * inner;
    }
    return sx + sz + sxz;
  }
};

} // namespace detail

/// One analysis step from level j+1 values to level-j c and d^1, d^2, d^3.
inline void fwt_step(CoeffPyramid &pyramid, int level, const GridMask &mask, const FilterBank &bank) {
  detail::check_level(pyramid.grid, level, "fwt_step");
  detail::check_shapes(pyramid, mask, "fwt_step");
  const int h = pyramid.grid.spacing(level + 1);
  const int n = pyramid.grid.size();
  FieldArray &a = pyramid.data;
  const detail::TapReader rd{a, mask, bank, h};

  // d3 reads only non-(odd,odd) positions, so it is computed first while the
  // (odd,even) and (even,odd) entries still hold level j+1 values.
  for (int iz = h; iz < n; iz += 2 * h)
    for (int ix = h; ix < n; ix += 2 * h)
      if (mask(ix, iz)) a(ix, iz) = 0.25 * (a(ix, iz) - rd.along_x(ix, iz) - rd.along_z(ix, iz) + rd.tensor(ix, iz));
  for (int iz = 0; iz < n; iz += 2 * h)
    for (int ix = h; ix < n; ix += 2 * h)
      if (mask(ix, iz)) a(ix, iz) = 0.5 * (a(ix, iz) - rd.along_x(ix, iz));
  for (int iz = h; iz < n; iz += 2 * h)
    for (int ix = 0; ix < n; ix += 2 * h)
      if (mask(ix, iz)) a(ix, iz) = 0.5 * (a(ix, iz) - rd.along_z(ix, iz));
  for (int iz = 0; iz < n; iz += 2 * h)
    for (int ix = 0; ix < n; ix += 2 * h)
      if (mask(ix, iz)) a(ix, iz) += rd.update(ix, iz);
}

/// One synthesis step from level-j coefficients back to level j+1 values;
/// exact inverse of fwt_step on the same mask.
inline void iwt_step(CoeffPyramid &pyramid, int level, const GridMask &mask, const FilterBank &bank) {
  detail::check_level(pyramid.grid, level, "iwt_step");
  detail::check_shapes(pyramid, mask, "iwt_step");
  const int h = pyramid.grid.spacing(level + 1);
  const int n = pyramid.grid.size();
  FieldArray &a = pyramid.data;
  const detail::TapReader rd{a, mask, bank, h};

  for (int iz = 0; iz < n; iz += 2 * h)
    for (int ix = 0; ix < n; ix += 2 * h)
      if (mask(ix, iz)) a(ix, iz) -= rd.update(ix, iz);
  for (int iz = 0; iz < n; iz += 2 * h)
    for (int ix = h; ix < n; ix += 2 * h)
      if (mask(ix, iz)) a(ix, iz) = 2.0 * a(ix, iz) + rd.along_x(ix, iz);
  for (int iz = h; iz < n; iz += 2 * h)
    for (int ix = 0; ix < n; ix += 2 * h)
      if (mask(ix, iz)) a(ix, iz) = 2.0 * a(ix, iz) + rd.along_z(ix, iz);
  for (int iz = h; iz < n; iz += 2 * h)
    for (int ix = h; ix < n; ix += 2 * h)
      if (mask(ix, iz)) a(ix, iz) = 4.0 * a(ix, iz) + rd.along_x(ix, iz) + rd.along_z(ix, iz) - rd.tensor(ix, iz);
}

namespace detail {
inline void zero_outside(FieldArray &a, const GridMask &mask) {
  auto &v = a.raw();
  const auto &b = mask.bits().raw();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!b[i]) v[i] = 0.0;
}
} // namespace detail

/// Full decomposition j_max-1 down to j_min. Entries outside the mask are zeroed first.
inline void fwt_full(CoeffPyramid &pyramid, const GridMask &mask, const FilterBank &bank) {
  detail::check_shapes(pyramid, mask, "fwt_full");
  if (pyramid.state != CoeffState::physical) throw ContractViolation("fwt_full: pyramid is not in physical state");
  detail::check_closed(mask, bank, "fwt_full");
  detail::zero_outside(pyramid.data, mask);
  for (int j = pyramid.grid.j_max - 1; j >= pyramid.grid.j_min; --j) fwt_step(pyramid, j, mask, bank);
  pyramid.state = CoeffState::wavelet;
}

/// Full reconstruction j_min up to j_max-1; coefficients outside the mask count as zero
/// and the result is zero outside the mask.
inline void iwt_full(CoeffPyramid &pyramid, const GridMask &mask, const FilterBank &bank) {
  detail::check_shapes(pyramid, mask, "iwt_full");
  if (pyramid.state != CoeffState::wavelet) throw ContractViolation("iwt_full: pyramid is not in wavelet state");
  detail::check_closed(mask, bank, "iwt_full");
  detail::zero_outside(pyramid.data, mask);
  for (int j = pyramid.grid.j_min; j < pyramid.grid.j_max; ++j) iwt_step(pyramid, j, mask, bank);
  pyramid.state = CoeffState::physical;
}

/// Drops every normalized detail with |d| < zeta and returns the thinned mask:
/// the coarsest lattice plus the points of surviving details within `mask`.
inline GridMask threshold_coeffs(CoeffPyramid &pyramid, const GridMask &mask, double zeta) {
  if (!(zeta >= 0.0)) throw ConfigError("threshold zeta must be >= 0, got " + std::to_string(zeta));
  if (pyramid.state != CoeffState::wavelet) throw ContractViolation("threshold_coeffs: pyramid is not in wavelet state");
  detail::check_shapes(pyramid, mask, "threshold_coeffs");
  const DyadicGrid &grid = pyramid.grid;
  GridMask thinned(grid);
  const int n = grid.size();
  for (int iz = 0; iz < n; ++iz)
    for (int ix = 0; ix < n; ++ix) {
      if (!mask(ix, iz) || grid.is_coarsest(ix, iz)) continue;
      double &d = pyramid.data(ix, iz);
      if (std::abs(d) < zeta)
        d = 0.0;
      else
        thinned.insert(ix, iz);
    }
  return thinned;
}

} // namespace awctd
