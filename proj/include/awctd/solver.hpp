#pragma once

// TM_y Maxwell time stepping (H_x, H_z, E_y) on the adaptive wavelet grid.
//
//   dHx/dt =  (1/mu0) dEy/dz
//   dHz/dt = -(1/mu0) dEy/dx
//   dEy/dt =  (1/(eps0 eps_r)) (dHx/dz - dHz/dx)
//
// E is sampled at integer steps, H at half-integer steps, all on the same
// spatial points. The TE_y system is the dual obtained by swapping the roles
// of E and H (and eps0 eps_r with -mu0); it is not implemented here.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "awctd/adaptive_grid.hpp"
#include "awctd/derivatives.hpp"
#include "awctd/dyadic_grid.hpp"
#include "awctd/errors.hpp"
#include "awctd/filters.hpp"
#include "awctd/wavelet_transform.hpp"

namespace awctd {

struct PhysicalConstants {
  static constexpr double eps0 = 8.8541878128e-12; // F/m
  static constexpr double mu0 = 1.25663706212e-6;  // H/m
  static double c() { return 1.0 / std::sqrt(eps0 * mu0); }
  static double eta0() { return std::sqrt(mu0 / eps0); }
};

/// Largest stable step for a uniform mesh of size `delta` (same units as c*dt).
inline double cfl_max_dt(double delta, const FilterBank &bank, double c) {
  return delta / (std::numbers::sqrt2 * c * bank.deriv_abs_sum());
}

enum class BoundaryKind {
  none, ///< zero-extension only
  pec,  ///< E_y = 0 on the outermost ring
  pml   ///< graded split-field absorbing layer backed by a PEC outer ring
};

struct BoundaryConfig {
  BoundaryKind kind = BoundaryKind::pml;
  double width_frac = 0.25; ///< layer width as a fraction of the domain length
  int grade = 3;
  double reflection = 1e-6;
};

/// Initial data. `gaussian` and `zero` build E_y at t = 0 with H = 0 at t = 0;
/// `fields` supplies explicit arrays, with H either at t = 0 or at t = -dt/2.
struct InitialCondition {
  enum class Kind { gaussian, zero, fields };
  enum class HTime { at_zero, at_minus_half };

  Kind kind = Kind::gaussian;
  double sigma_um = 1.0 / (4.0 * std::numbers::sqrt2);
  double center_x_um = 0.0;
  double center_z_um = 0.0;

  FieldArray ey, hx, hz; ///< used when kind == fields
  HTime h_time = HTime::at_zero;
};

enum class TimeStepPolicy { enforce_cfl, unchecked };

struct SimulationConfig {
  double domain_length_um = 6.0;
  int j_min = 3;
  int j_max = 9;
  int order = 4;
  double zeta = 5e-4;
  /// Fraction of the CFL bound; unset means dt = delta / (1.6 c).
  std::optional<double> dt_factor;
  long steps = 1000;
  BoundaryConfig boundary;
  double eps_r = 1.0;
  std::optional<FieldArray> eps_r_map;
  InitialCondition initial;
  AdjacentZone zone;

  DyadicGrid grid() const { return DyadicGrid(j_min, j_max); }
  double domain_length_m() const { return domain_length_um * 1e-6; }
  double finest_spacing_m() const { return domain_length_m() / static_cast<double>(1 << j_max); }

  double resolved_dt_factor(const FilterBank &bank) const {
    if (dt_factor) return *dt_factor;
    return std::numbers::sqrt2 * bank.deriv_abs_sum() / 1.6;
  }

  void validate(TimeStepPolicy policy = TimeStepPolicy::enforce_cfl) const {
    auto fail = [](const std::string &key, const std::string &what) { throw ConfigError(key + ": " + what); };
    if (!(domain_length_um > 0.0)) fail("domain_length_um", "must be > 0");
    if (j_min < 0) fail("jmin", "must be >= 0");
    if (j_max > 16) fail("jmax", "must be <= 16");
    if (j_min >= j_max) fail("jmin", "must be < jmax (got jmin=" + std::to_string(j_min) + ", jmax=" + std::to_string(j_max) + ")");
    if (order < 2 || order > 4) fail("order", "must be 2, 3 or 4");
    if (!(zeta >= 0.0)) fail("zeta", "must be >= 0");
    if (dt_factor) {
      if (!(*dt_factor > 0.0)) fail("dt_factor", "must be > 0");
      if (policy == TimeStepPolicy::enforce_cfl && *dt_factor > 1.0)
        fail("dt_factor", "exceeds the CFL bound (must be <= 1)");
    }
    if (steps < 0) fail("steps", "must be >= 0");
    if (!(boundary.width_frac >= 0.0 && boundary.width_frac < 0.5)) fail("pml_width_frac", "must be in [0, 0.5)");
    if (boundary.grade < 0) fail("pml_grade", "must be >= 0");
    if (!(boundary.reflection > 0.0 && boundary.reflection < 1.0)) fail("pml_reflection", "must be in (0, 1)");
    if (!(eps_r >= 1.0)) fail("eps_r", "must be >= 1");
    const int n = (1 << j_max) + 1;
    if (eps_r_map) {
      if (eps_r_map->size() != n) fail("eps_r", "map size does not match the grid");
      for (double v : eps_r_map->raw())
        if (!(v >= 1.0)) fail("eps_r", "map values must be >= 1");
    }
    const double half = domain_length_um / 2.0;
    switch (initial.kind) {
    case InitialCondition::Kind::gaussian:
      if (!(initial.sigma_um > 0.0)) fail("sigma_um", "must be > 0");
      if (std::abs(initial.center_x_um) > half || std::abs(initial.center_z_um) > half)
        fail("center", "must lie inside the domain");
      break;
    case InitialCondition::Kind::fields:
      if (initial.ey.size() != n || initial.hx.size() != n || initial.hz.size() != n)
        fail("initial", "field arrays do not match the grid size");
      break;
    case InitialCondition::Kind::zero:
      break;
    }
  }
};

/// Complete time-stepping state. Masks follow the adaptation pipeline:
/// Mask0 (thinned + adjacent zone + reconstruction check) within Mask1
/// (E-derivative closure) within Mask2 (H-derivative closure); pMask0 is
/// Mask0 of the previous step.
struct FieldState {
  FieldArray ey, hx, hz;
  FieldArray ey_x, ey_z; ///< split parts of E_y inside the absorbing layer
  GridMask p_mask0, mask0, mask1, mask2;
  LevelMap level0, level1;
  long k = 0;
  double t = 0.0;
  /// H already holds t + dt/2 (Euler half-step start); the next update skips the H advance.
  bool h_leads = false;
};

/// Precomputed per-run context: grid, filters, time step, material and layer profiles.
class Simulation {
public:
  explicit Simulation(SimulationConfig config, TimeStepPolicy policy = TimeStepPolicy::enforce_cfl)
      : config_(std::move(config)) {
    config_.validate(policy);
    bank_ = build_filter_bank(config_.order);
    grid_ = config_.grid();
    n_ = grid_.size();
    length_ = config_.domain_length_m();
    delta_ = config_.finest_spacing_m();
    dt_ = config_.resolved_dt_factor(bank_) * cfl_max_dt(delta_, bank_, PhysicalConstants::c());
    if (policy == TimeStepPolicy::enforce_cfl && dt_ > cfl_max_dt(delta_, bank_, PhysicalConstants::c()) * (1.0 + 1e-12))
      throw ConfigError("dt_factor: time step exceeds the CFL bound");
    eps_ = config_.eps_r_map ? *config_.eps_r_map : FieldArray(n_, config_.eps_r);
    build_layer_profile();
  }

  const SimulationConfig &config() const noexcept { return config_; }
  const FilterBank &bank() const noexcept { return bank_; }
  const DyadicGrid &grid() const noexcept { return grid_; }
  int size() const noexcept { return n_; }
  double dt() const noexcept { return dt_; }
  double delta() const noexcept { return delta_; }
  double domain_length() const noexcept { return length_; }

  double x_of(int ix) const noexcept { return -0.5 * length_ + ix * delta_; }
  double z_of(int iz) const noexcept { return -0.5 * length_ + iz * delta_; }

  bool has_layer() const noexcept { return config_.boundary.kind == BoundaryKind::pml && layer_cells_ > 0; }
  int layer_cells() const noexcept { return has_layer() ? layer_cells_ : 0; }
  double layer_rate(int i) const noexcept { return rate_[static_cast<std::size_t>(i)]; }
  bool in_layer(int ix, int iz) const noexcept { return rate_[ix] > 0.0 || rate_[iz] > 0.0; }

  /// Interior region Omega (everything outside the absorbing layer).
  bool in_omega(int ix, int iz) const noexcept {
    const int d = layer_cells();
    return ix >= d && iz >= d && ix <= n_ - 1 - d && iz <= n_ - 1 - d;
  }
  /// Half-width of Omega in metres.
  double omega_half_width() const noexcept { return 0.5 * length_ - layer_cells() * delta_; }

  FieldState initialize() const {
    FieldState s;
    const InitialCondition &ic = config_.initial;
    s.ey = FieldArray(n_, 0.0);
    s.hx = FieldArray(n_, 0.0);
    s.hz = FieldArray(n_, 0.0);
    switch (ic.kind) {
    case InitialCondition::Kind::gaussian: {
      const double sigma = ic.sigma_um * 1e-6;
      const double cx = ic.center_x_um * 1e-6, cz = ic.center_z_um * 1e-6;
      for (int iz = 0; iz < n_; ++iz)
        for (int ix = 0; ix < n_; ++ix) {
          const double dx = x_of(ix) - cx, dz = z_of(iz) - cz;
          s.ey(ix, iz) = std::exp(-(dx * dx + dz * dz) / (2.0 * sigma * sigma));
        }
      break;
    }
    case InitialCondition::Kind::fields:
      s.ey = ic.ey;
      s.hx = ic.hx;
      s.hz = ic.hz;
      break;
    case InitialCondition::Kind::zero:
      break;
    }
    s.p_mask0 = s.mask0 = s.mask1 = s.mask2 = GridMask::full(grid_);
    s.level0 = s.level1 = LevelMap(n_, grid_.j_max);
    pin_boundary(s.ey);
    s.ey_x = FieldArray(n_, 0.0);
    s.ey_z = FieldArray(n_, 0.0);
    for (std::size_t i = 0; i < s.ey.raw().size(); ++i) s.ey_x.raw()[i] = s.ey_z.raw()[i] = 0.5 * s.ey.raw()[i];

    const bool h_at_zero = ic.kind != InitialCondition::Kind::fields || ic.h_time == InitialCondition::HTime::at_zero;
    if (h_at_zero) {
      // Explicit Euler half-step: H(dt/2) = H(0) + (dt/2) dH/dt(0).
      const FieldArray dez = diff_z(s.ey, s.mask1, s.level1, bank_, length_);
      const FieldArray dex = diff_x(s.ey, s.mask1, s.level1, bank_, length_);
      const double k = 0.5 * dt_ / PhysicalConstants::mu0;
      for (std::size_t i = 0; i < s.hx.raw().size(); ++i) {
        s.hx.raw()[i] += k * dez.raw()[i];
        s.hz.raw()[i] -= k * dex.raw()[i];
      }
      s.h_leads = true;
    }
    check_finite(s, 0);
    return s;
  }

  /// Grid adaptation for the next step from the current E_y.
  void adapt_step(FieldState &s) const {
    s.p_mask0 = s.mask0;
    CoeffPyramid pyr(std::move(s.ey), grid_);
    fwt_full(pyr, s.mask0, bank_);
    const GridMask thinned = threshold_coeffs(pyr, s.mask0, config_.zeta);
    s.mask0 = reconstruction_check(add_adjacent_zone(thinned, config_.zone), bank_);
    s.level0 = compute_levels(s.mask0);
    s.mask1 = extend_for_derivatives(s.mask0, s.level0, bank_);
    s.level1 = compute_levels(s.mask1);
    s.mask2 = extend_for_derivatives(s.mask1, s.level1, bank_);
    iwt_full(pyr, s.mask2, bank_);
    s.ey = std::move(pyr.data);
  }

  /// Leapfrog update of H on Mask1 and E on Mask0.
  ///
  /// E_y needs no separate interpolation onto Mask0: the IWT in adapt_step
  /// already reconstructed it on Mask2, which contains Mask0.
  void update_step(FieldState &s) const {
    if (!s.h_leads) {
      interpolate_missing(s.hx, s.p_mask0, s.mask1, bank_);
      interpolate_missing(s.hz, s.p_mask0, s.mask1, bank_);
      const FieldArray dez = diff_z(s.ey, s.mask1, s.level1, bank_, length_, &s.mask2);
      const FieldArray dex = diff_x(s.ey, s.mask1, s.level1, bank_, length_, &s.mask2);
      advance_h(s, dez, dex);
    } else {
      interpolate_missing(s.hx, s.p_mask0, s.mask1, bank_);
      interpolate_missing(s.hz, s.p_mask0, s.mask1, bank_);
      s.h_leads = false;
    }
    const FieldArray dhx_dz = diff_z(s.hx, s.mask0, s.level0, bank_, length_, &s.mask1);
    const FieldArray dhz_dx = diff_x(s.hz, s.mask0, s.level0, bank_, length_, &s.mask1);
    advance_e(s, dhx_dz, dhz_dx);
    apply_boundary(s);
    s.k += 1;
    s.t += dt_;
    check_finite(s, s.k);
  }

  void step(FieldState &s) const {
    adapt_step(s);
    update_step(s);
  }

  /// Reference integrator: identical update arithmetic on the full grid, no thresholding.
  void full_grid_step(FieldState &s) const {
    if (s.mask0.cardinality() != s.mask0.bits().element_count()) {
      s.p_mask0 = s.mask0 = s.mask1 = s.mask2 = GridMask::full(grid_);
      s.level0 = s.level1 = LevelMap(n_, grid_.j_max);
    }
    s.p_mask0 = s.mask0;
    update_step(s);
  }

  /// Forces the PEC condition E_y = 0 on the outermost ring (PEC and PML modes).
  void apply_boundary(FieldState &s) const {
    if (config_.boundary.kind == BoundaryKind::none) return;
    pin_boundary(s.ey);
    if (has_layer()) {
      pin_boundary(s.ey_x);
      pin_boundary(s.ey_z);
    }
  }

private:
  void build_layer_profile() {
    rate_.assign(static_cast<std::size_t>(n_), 0.0);
    layer_cells_ = 0;
    if (config_.boundary.kind != BoundaryKind::pml) {
      fill_coefficients();
      return;
    }
    const double width = config_.boundary.width_frac * length_;
    layer_cells_ = static_cast<int>(std::lround(width / delta_));
    if (layer_cells_ > 0) {
      const double d = layer_cells_ * delta_;
      const int m = config_.boundary.grade;
      // Matched electric/magnetic loss rate sigma/eps0 = sigma*/mu0 (1/s).
      const double rate_max = -(m + 1) * PhysicalConstants::c() * std::log(config_.boundary.reflection) / (2.0 * d);
      for (int i = 0; i < n_; ++i) {
        const double depth = std::max({0.0, (layer_cells_ - i) * delta_, (i - (n_ - 1 - layer_cells_)) * delta_});
        rate_[static_cast<std::size_t>(i)] = depth > 0.0 ? rate_max * std::pow(depth / d, m) : 0.0;
      }
    }
    fill_coefficients();
  }

  void fill_coefficients() {
    decay_.resize(rate_.size());
    gain_.resize(rate_.size());
    for (std::size_t i = 0; i < rate_.size(); ++i) {
      const double r = 0.5 * rate_[i] * dt_;
      decay_[i] = (1.0 - r) / (1.0 + r);
      gain_[i] = 1.0 / (1.0 + r);
    }
  }

  void pin_boundary(FieldArray &a) const {
    if (config_.boundary.kind == BoundaryKind::none) return;
    for (int i = 0; i < n_; ++i) {
      a(i, 0) = 0.0;
      a(i, n_ - 1) = 0.0;
      a(0, i) = 0.0;
      a(n_ - 1, i) = 0.0;
    }
  }

  void advance_h(FieldState &s, const FieldArray &dez, const FieldArray &dex) const {
    const double k = dt_ / PhysicalConstants::mu0;
    for (int iz = 0; iz < n_; ++iz)
      for (int ix = 0; ix < n_; ++ix) {
        if (!s.mask1(ix, iz)) continue;
        s.hx(ix, iz) = decay_[iz] * s.hx(ix, iz) + gain_[iz] * k * dez(ix, iz);
        s.hz(ix, iz) = decay_[ix] * s.hz(ix, iz) - gain_[ix] * k * dex(ix, iz);
      }
  }

  void advance_e(FieldState &s, const FieldArray &dhx_dz, const FieldArray &dhz_dx) const {
    const double k0 = dt_ / PhysicalConstants::eps0;
    const bool layer = has_layer();
    for (int iz = 0; iz < n_; ++iz)
      for (int ix = 0; ix < n_; ++ix) {
        if (!s.mask0(ix, iz)) continue;
        const double k = k0 / eps_(ix, iz);
        if (layer && in_layer(ix, iz)) {
          double &ex = s.ey_x(ix, iz);
          double &ez = s.ey_z(ix, iz);
          if (s.p_mask0(ix, iz)) {
            // Re-sync the split parts with E_y after thresholding/reconstruction.
            const double mismatch = s.ey(ix, iz) - (ex + ez);
            ex += 0.5 * mismatch;
            ez += 0.5 * mismatch;
          } else {
            ex = ez = 0.5 * s.ey(ix, iz);
          }
          ex = decay_[ix] * ex - gain_[ix] * k * dhz_dx(ix, iz);
          ez = decay_[iz] * ez + gain_[iz] * k * dhx_dz(ix, iz);
          s.ey(ix, iz) = ex + ez;
        } else {
          s.ey(ix, iz) += k * (dhx_dz(ix, iz) - dhz_dx(ix, iz));
        }
      }
  }

  void check_finite(const FieldState &s, long step) const {
    for (int iz = 0; iz < n_; ++iz)
      for (int ix = 0; ix < n_; ++ix) {
        if (s.mask0(ix, iz) && !std::isfinite(s.ey(ix, iz)))
          throw InstabilityError(step, "non-finite E_y at (" + std::to_string(ix) + ", " + std::to_string(iz) + ")");
        if (s.mask1(ix, iz) && !(std::isfinite(s.hx(ix, iz)) && std::isfinite(s.hz(ix, iz))))
          throw InstabilityError(step, "non-finite H at (" + std::to_string(ix) + ", " + std::to_string(iz) + ")");
      }
  }

  SimulationConfig config_;
  FilterBank bank_;
  DyadicGrid grid_;
  int n_ = 0;
  double length_ = 0.0;
  double delta_ = 0.0;
  double dt_ = 0.0;
  FieldArray eps_;
  int layer_cells_ = 0;
  std::vector<double> rate_, decay_, gain_;
};

} // namespace awctd
