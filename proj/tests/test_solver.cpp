#include <gtest/gtest.h>

#include <cmath>

#include "awctd/solver.hpp"

using namespace awctd;

namespace {

SimulationConfig small_config() {
  SimulationConfig c;
  c.j_min = 3;
  c.j_max = 6;
  c.steps = 20;
  return c;
}

double max_abs(const FieldArray &a) {
  double m = 0.0;
  for (double v : a.raw()) m = std::max(m, std::abs(v));
  return m;
}

} // namespace

TEST(Config, Validation) {
  SimulationConfig c = small_config();
  EXPECT_NO_THROW(c.validate());
  c.j_min = 6;
  EXPECT_THROW(c.validate(), ConfigError);
  c = small_config();
  c.zeta = -1.0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = small_config();
  c.dt_factor = 1.2;
  EXPECT_THROW(c.validate(), ConfigError);
  EXPECT_NO_THROW(c.validate(TimeStepPolicy::unchecked));
  c = small_config();
  c.order = 5;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Config, DefaultTimeStepIsDeltaOverOnePointSixC) {
  const Simulation sim(small_config());
  EXPECT_NEAR(sim.dt(), sim.delta() / (1.6 * PhysicalConstants::c()), 1e-12 * sim.dt());
}

TEST(Boundary, LayerWidthIsQuarterOfDomain) {
  SimulationConfig c = small_config();
  c.j_max = 7;
  const Simulation sim(c);
  EXPECT_NEAR(sim.layer_cells() * sim.delta(), 1.5e-6, 1e-15);
  EXPECT_NEAR(sim.omega_half_width(), 1.5e-6, 1e-15);
  EXPECT_TRUE(sim.in_omega(64, 64));
  EXPECT_FALSE(sim.in_omega(10, 64));
  EXPECT_EQ(sim.layer_rate(64), 0.0);
  EXPECT_GT(sim.layer_rate(0), sim.layer_rate(10));
}

TEST(Solver, InitialGaussianAndHalfStep) {
  const Simulation sim(small_config());
  const FieldState s = sim.initialize();
  EXPECT_DOUBLE_EQ(s.ey(32, 32), 1.0);
  EXPECT_TRUE(s.h_leads);
  // Hx(dt/2) = (dt / 2 mu0) dEy/dz: antisymmetric about the centre
  EXPECT_NEAR(s.hx(32, 30), -s.hx(32, 34), 1e-20);
  EXPECT_GT(max_abs(s.hx), 0.0);
  EXPECT_EQ(s.mask0, GridMask::full(sim.grid()));
}

TEST(Solver, ZeroThresholdMatchesFullGrid) {
  SimulationConfig c = small_config();
  c.zeta = 0.0;
  const Simulation sim(c);
  FieldState a = sim.initialize();
  FieldState f = a;
  for (int k = 0; k < 15; ++k) {
    sim.step(a);
    sim.full_grid_step(f);
  }
  double d = 0.0;
  for (std::size_t i = 0; i < a.ey.raw().size(); ++i) d = std::max(d, std::abs(a.ey.raw()[i] - f.ey.raw()[i]));
  EXPECT_LE(d, 1e-12);
  EXPECT_EQ(a.k, 15);
  EXPECT_NEAR(a.t, 15 * sim.dt(), 1e-25);
}

TEST(Solver, ZeroFieldCollapsesToCoarsestClosure) {
  SimulationConfig c = small_config();
  c.initial.kind = InitialCondition::Kind::zero;
  const Simulation sim(c);
  FieldState s = sim.initialize();
  sim.step(s);
  EXPECT_EQ(s.mask0, GridMask::coarsest(sim.grid()));
  EXPECT_EQ(max_abs(s.ey), 0.0);
}

TEST(Solver, MaskChainHoldsEveryStep) {
  const Simulation sim(small_config());
  FieldState s = sim.initialize();
  for (int k = 0; k < 20; ++k) {
    sim.step(s);
    ASSERT_TRUE(s.mask0.is_subset_of(s.mask1));
    ASSERT_TRUE(s.mask1.is_subset_of(s.mask2));
    ASSERT_FALSE(find_unclosed_point(s.mask0, sim.bank()).has_value());
  }
}

TEST(Boundary, PecMatchesNoBoundaryWhilePulseIsFar) {
  SimulationConfig c = small_config();
  c.j_max = 7;
  c.boundary.kind = BoundaryKind::pec;
  c.initial.sigma_um = 0.15;
  SimulationConfig open = c;
  open.boundary.kind = BoundaryKind::none;
  const Simulation a(c), b(open);
  FieldState sa = a.initialize(), sb = b.initialize();
  for (int k = 0; k < 10; ++k) {
    a.full_grid_step(sa);
    b.full_grid_step(sb);
  }
  for (std::size_t i = 0; i < sa.ey.raw().size(); ++i) ASSERT_NEAR(sa.ey.raw()[i], sb.ey.raw()[i], 1e-14);
}

TEST(Boundary, PecPinsOuterRing) {
  SimulationConfig c = small_config();
  c.boundary.kind = BoundaryKind::pec;
  c.initial.center_x_um = 2.8;
  const Simulation sim(c);
  FieldState s = sim.initialize();
  for (int k = 0; k < 5; ++k) sim.full_grid_step(s);
  for (int i = 0; i < sim.size(); ++i) {
    EXPECT_EQ(s.ey(sim.size() - 1, i), 0.0);
    EXPECT_EQ(s.ey(i, 0), 0.0);
  }
}

// One-way plane pulse: Hx = -Ey / eta0 travels towards +z.
TEST(Physics, PlanePulseTravelsTowardsPositiveZ) {
  SimulationConfig c = small_config();
  c.boundary.kind = BoundaryKind::none;
  const DyadicGrid g = c.grid();
  const int n = g.size();
  const double L = c.domain_length_m(), delta = c.finest_spacing_m();
  const double sigma = 0.2e-6, z0 = -1.0e-6;
  const FilterBank bank = build_filter_bank(c.order);
  const double dt = c.resolved_dt_factor(bank) * cfl_max_dt(delta, bank, PhysicalConstants::c());
  c.initial.kind = InitialCondition::Kind::fields;
  c.initial.h_time = InitialCondition::HTime::at_minus_half;
  c.initial.ey = c.initial.hx = c.initial.hz = FieldArray(n, 0.0);
  for (int iz = 0; iz < n; ++iz)
    for (int ix = 0; ix < n; ++ix) {
      const double z = -0.5 * L + iz * delta;
      const double zh = z + 0.5 * PhysicalConstants::c() * dt;
      c.initial.ey(ix, iz) = std::exp(-(z - z0) * (z - z0) / (2 * sigma * sigma));
      c.initial.hx(ix, iz) = -std::exp(-(zh - z0) * (zh - z0) / (2 * sigma * sigma)) / PhysicalConstants::eta0();
    }
  const Simulation sim(c);
  FieldState s = sim.initialize();
  EXPECT_FALSE(s.h_leads);
  for (int k = 0; k < 30; ++k) sim.full_grid_step(s);
  int peak = 0;
  for (int iz = 0; iz < n; ++iz)
    if (s.ey(n / 2, iz) > s.ey(n / 2, peak)) peak = iz;
  const double moved = (peak - (z0 + 0.5 * L) / delta) * delta;
  EXPECT_NEAR(moved, 30 * PhysicalConstants::c() * dt, 1.5 * delta);
  EXPECT_GT(s.ey(n / 2, peak), 0.9);
}

TEST(Stability, BeyondCflTripsInstability) {
  SimulationConfig c = small_config();
  c.dt_factor = 1.5;
  EXPECT_THROW(Simulation{c}, ConfigError);
  const Simulation sim(c, TimeStepPolicy::unchecked);
  FieldState s = sim.initialize();
  EXPECT_THROW(
      {
        for (int k = 0; k < 2000; ++k) sim.full_grid_step(s);
      },
      InstabilityError);
}

TEST(Stability, BelowCflStaysBounded) {
  SimulationConfig c = small_config();
  c.dt_factor = 0.99;
  const Simulation sim(c);
  FieldState s = sim.initialize();
  for (int k = 0; k < 300; ++k) sim.full_grid_step(s);
  EXPECT_LE(max_abs(s.ey), 1.0);
}

// Reflection from the layer, measured against a twice larger open domain with
// the same spacing: inside Omega the two runs differ only by what the layer sends back.
// The larger domain's own edge echo reaches Omega after about 250 steps.
TEST(Physics, PmlReflectionBelowOnePercent) {
  SimulationConfig c = small_config();
  c.j_max = 7;
  c.zeta = 0.0;
  SimulationConfig ref = c;
  ref.j_max = 8;
  ref.domain_length_um = 12.0;
  ref.boundary.kind = BoundaryKind::none;
  const Simulation a(c), b(ref);
  ASSERT_DOUBLE_EQ(a.delta(), b.delta());
  ASSERT_DOUBLE_EQ(a.dt(), b.dt());
  FieldState sa = a.initialize(), sb = b.initialize();
  const int n = a.size(), off = (b.size() - n) / 2;
  double incident = 0.0, reflected = 0.0;
  for (int k = 0; k < 220; ++k) {
    a.full_grid_step(sa);
    b.full_grid_step(sb);
    for (int iz = 0; iz < n; ++iz)
      for (int ix = 0; ix < n; ++ix) {
        if (!a.in_omega(ix, iz)) continue;
        const double e = sb.ey(ix + off, iz + off);
        const int d = a.layer_cells();
        if (ix == d || iz == d || ix == n - 1 - d || iz == n - 1 - d) incident = std::max(incident, std::abs(e));
        reflected = std::max(reflected, std::abs(sa.ey(ix, iz) - e));
      }
  }
  EXPECT_GT(incident, 0.05);
  EXPECT_LE(reflected, 0.01 * incident);
}
