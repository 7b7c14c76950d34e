#pragma once

#include <cmath>

#include "awctd/dyadic_grid.hpp"
#include "awctd/filters.hpp"

namespace awctd {

enum class Axis { x, z };

/// d/dx or d/dz on the adaptive grid. Each masked point Q uses the derivative
/// filter at its own density level j0, i.e. taps spaced 2^{j_max - j0} finest
/// cells apart and the prefactor 2^{j0} / domain_length. Taps outside
/// `support` (default: `mask`) or outside the array read 0, and the result is
/// 0 outside the mask.
inline FieldArray differentiate(Axis axis, const FieldArray &field, const GridMask &mask, const LevelMap &levels,
                                const FilterBank &bank, double domain_length, const GridMask *support = nullptr) {
  const DyadicGrid &grid = mask.grid();
  const int n = grid.size();
  const auto coeff = bank.deriv_filter();
  FieldArray out(n, 0.0);
  const GridMask &valid = support ? *support : mask;
  auto value = [&](int ix, int iz) { return valid.contains(ix, iz) ? field(ix, iz) : 0.0; };
  for (int iz = 0; iz < n; ++iz)
    for (int ix = 0; ix < n; ++ix) {
      if (!mask(ix, iz)) continue;
      const int j0 = levels(ix, iz);
      const int s = grid.spacing(j0);
      double acc = 0.0;
      for (int i = 1; i <= bank.deriv_length(); ++i) {
        const int d = i * s;
        acc += axis == Axis::x ? coeff[i - 1] * (value(ix + d, iz) - value(ix - d, iz))
                               : coeff[i - 1] * (value(ix, iz + d) - value(ix, iz - d));
      }
      out(ix, iz) = std::ldexp(acc, j0) / domain_length;
    }
  return out;
}

inline FieldArray diff_x(const FieldArray &field, const GridMask &mask, const LevelMap &levels,
                         const FilterBank &bank, double domain_length, const GridMask *support = nullptr) {
  return differentiate(Axis::x, field, mask, levels, bank, domain_length, support);
}

inline FieldArray diff_z(const FieldArray &field, const GridMask &mask, const LevelMap &levels,
                         const FilterBank &bank, double domain_length, const GridMask *support = nullptr) {
  return differentiate(Axis::z, field, mask, levels, bank, domain_length, support);
}

} // namespace awctd
