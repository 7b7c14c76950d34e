#pragma once

// Dense storage shared by fields, masks and level maps. Every array lives on
// the finest dyadic grid: (2^j_max + 1) points per axis, index ix along x and
// iz along z. Storage is row-major with one row per z index.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "awctd/errors.hpp"

namespace awctd {

template <class T>
class Array2D {
public:
  Array2D() = default;
  explicit Array2D(int size, T fill = T{})
      : size_(size), data_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), fill) {}

  int size() const noexcept { return size_; }
  std::size_t element_count() const noexcept { return data_.size(); }

  bool in_range(int ix, int iz) const noexcept {
    return ix >= 0 && iz >= 0 && ix < size_ && iz < size_;
  }

  T &operator()(int ix, int iz) noexcept { return data_[index(ix, iz)]; }
  const T &operator()(int ix, int iz) const noexcept { return data_[index(ix, iz)]; }

  /// Zero-extended read: taps outside the array return T{}.
  T at_or_zero(int ix, int iz) const noexcept { return in_range(ix, iz) ? (*this)(ix, iz) : T{}; }

  void fill(T value) { std::fill(data_.begin(), data_.end(), value); }

  std::vector<T> &raw() noexcept { return data_; }
  const std::vector<T> &raw() const noexcept { return data_; }

  friend bool operator==(const Array2D &, const Array2D &) = default;

private:
  std::size_t index(int ix, int iz) const noexcept {
    return static_cast<std::size_t>(iz) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(ix);
  }

  int size_ = 0;
  std::vector<T> data_;
};

/// Point values on the finest grid, entry (ix, iz) at (x_{j_max,ix}, z_{j_max,iz}).
using FieldArray = Array2D<double>;

/// Level bookkeeping for a dyadic grid with coarsest level j_min and finest j_max.
struct DyadicGrid {
  int j_min = 3;
  int j_max = 7;

  DyadicGrid() = default;
  DyadicGrid(int coarsest, int finest) : j_min(coarsest), j_max(finest) {
    if (coarsest < 0 || finest > 20 || coarsest >= finest) {
      throw ConfigError("dyadic grid requires 0 <= j_min < j_max <= 20, got j_min=" + std::to_string(coarsest) +
                        ", j_max=" + std::to_string(finest));
    }
  }

  int size() const noexcept { return (1 << j_max) + 1; }

  /// Distance in finest-grid index units between neighbours of level `level`.
  int spacing(int level) const noexcept { return 1 << (j_max - level); }

  /// The coarsest level whose lattice contains (ix, iz); j_min for coarsest-lattice points.
  int native_level(int ix, int iz) const noexcept {
    const int tx = ix == 0 ? j_max : std::countr_zero(static_cast<unsigned>(ix));
    const int tz = iz == 0 ? j_max : std::countr_zero(static_cast<unsigned>(iz));
    return std::max(j_min, j_max - std::min(tx, tz));
  }

  bool on_lattice(int ix, int iz, int level) const noexcept {
    const int s = spacing(level);
    return ix % s == 0 && iz % s == 0;
  }

  bool is_coarsest(int ix, int iz) const noexcept { return on_lattice(ix, iz, j_min); }

  friend bool operator==(const DyadicGrid &, const DyadicGrid &) = default;
};

/// Boolean membership of finest-grid points in the adaptive grid.
class GridMask {
public:
  GridMask() = default;

  /// All-false mask except the coarsest lattice, which is always present.
  explicit GridMask(DyadicGrid grid) : grid_(grid), bits_(grid.size(), 0) {
    const int s = grid_.spacing(grid_.j_min);
    for (int iz = 0; iz < bits_.size(); iz += s)
      for (int ix = 0; ix < bits_.size(); ix += s) bits_(ix, iz) = 1;
  }

  static GridMask coarsest(DyadicGrid grid) { return GridMask(grid); }

  static GridMask full(DyadicGrid grid) {
    GridMask m(grid);
    m.bits_.fill(1);
    return m;
  }

  const DyadicGrid &grid() const noexcept { return grid_; }
  int size() const noexcept { return bits_.size(); }

  bool contains(int ix, int iz) const noexcept { return bits_.in_range(ix, iz) && bits_(ix, iz) != 0; }
  bool operator()(int ix, int iz) const noexcept { return bits_(ix, iz) != 0; }

  /// Returns true when the point was newly added.
  bool insert(int ix, int iz) noexcept {
    if (!bits_.in_range(ix, iz) || bits_(ix, iz)) return false;
    bits_(ix, iz) = 1;
    return true;
  }

  /// Coarsest-lattice points cannot be removed.
  void erase(int ix, int iz) noexcept {
    if (!grid_.is_coarsest(ix, iz)) bits_(ix, iz) = 0;
  }

  std::size_t cardinality() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.raw().begin(), bits_.raw().end(), std::uint8_t{1}));
  }

  double compression_rate() const noexcept {
    return static_cast<double>(cardinality()) / static_cast<double>(bits_.element_count());
  }

  bool is_subset_of(const GridMask &other) const noexcept {
    const auto &a = bits_.raw();
    const auto &b = other.bits_.raw();
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] && !b[i]) return false;
    return true;
  }

  const Array2D<std::uint8_t> &bits() const noexcept { return bits_; }

  friend bool operator==(const GridMask &, const GridMask &) = default;

private:
  DyadicGrid grid_;
  Array2D<std::uint8_t> bits_;
};

/// Per-point density level; only meaningful at masked points.
using LevelMap = Array2D<int>;

} // namespace awctd
