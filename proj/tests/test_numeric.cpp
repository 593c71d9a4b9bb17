// Floating-point verification: grid evaluation, the two PDE residual
// methods, the finite-difference error envelope, and the traveling-wave
// identity.

#include <doctest.h>

#include <cmath>

#include "fkdv/numeric_verify.hpp"

using namespace fkdv;

namespace {

ClosedFormSolution u6_sk() {
  return closed_form(family_table()[2], Branch::Tanh, -1.0, FkdvParams::preset("sk"));
}

ClosedFormSolution u5_sk() {
  // Family 3 on the trigonometric branch: tan^2 with pole lattice.
  return closed_form(family_table()[2], Branch::Tan, 1.0, FkdvParams::preset("sk"));
}

}  // namespace

TEST_SUITE("numeric-verify") {

TEST_CASE("grid evaluation reproduces the closed form") {
  const auto sol = u6_sk();
  GridSpec grid;
  grid.nx = 2001;
  const auto samples = eval_solution(sol, grid);
  REQUIRE(samples.size() == 2001);
  CHECK(samples[1000].x == 0.0);
  CHECK(samples[1000].u == doctest::Approx(8.0));
  CHECK(samples.front().u == doctest::Approx(-4.0).epsilon(1e-7));
  for (const auto& s : samples) CHECK_FALSE(s.masked);
}

TEST_CASE("pole masking marks a bounded fraction of a singular grid") {
  const auto sol = u5_sk();
  REQUIRE_FALSE(sol.poles.empty());
  GridSpec grid;
  const auto samples = eval_solution(sol, grid);
  int masked = 0;
  for (const auto& s : samples) {
    if (s.masked) {
      ++masked;
      CHECK(std::isnan(s.u));
    } else {
      CHECK(std::isfinite(s.u));
    }
  }
  CHECK(masked > 0);
  CHECK(masked < static_cast<int>(samples.size()) / 2);
}

TEST_CASE("analytic residual vanishes to near roundoff") {
  GridSpec grid;
  for (const auto& sol : {u6_sk(), u5_sk()}) {
    const auto report = pde_residual_riccati(sol, grid);
    CHECK(report.max_term_magnitude > 1);
    CHECK(report.max_abs_residual <= 1e-8 * report.max_term_magnitude);
  }
}

TEST_CASE("zero field has zero residual") {
  ClosedFormSolution zero = u6_sk();
  zero.a0 = zero.a2 = zero.b2 = 0.0;
  zero.poles.clear();
  const auto report = pde_residual_riccati(zero, GridSpec{});
  CHECK(report.max_abs_residual == 0.0);
}

TEST_CASE("finite-difference oracle agrees within its envelope at h = 0.05") {
  GridSpec grid;
  const auto fd = pde_residual_fd(u6_sk(), grid, 0.05);
  CHECK(fd.h == 0.05);
  CHECK(fd.within_envelope);
  // Far from poles the documented bound is the 1e-2 absolute floor.
  CHECK(fd.max_discrepancy_far <= 1e-2);
  CHECK(fd.max_envelope >= fd.max_discrepancy);
}

TEST_CASE("halving h shrinks the truncation error like an 8th-order method") {
  GridSpec grid;
  const auto coarse = pde_residual_fd(u6_sk(), grid, 0.1);
  const auto fine = pde_residual_fd(u6_sk(), grid, 0.05);
  REQUIRE(fine.max_discrepancy_far > 0);
  const double ratio = coarse.max_discrepancy_far / fine.max_discrepancy_far;
  // 2^8 = 256 when truncation-dominated; leave room for the roundoff
  // floor on the fine grid and cross-term variation.
  CHECK(ratio > 60.0);
  CHECK(ratio < 1100.0);
}

TEST_CASE("stencil spans touching a pole are masked, not evaluated") {
  const auto sol = u5_sk();
  GridSpec grid;
  const auto fd = pde_residual_fd(sol, grid, 0.05);
  const auto analytic = pde_residual_riccati(sol, grid);
  CHECK(fd.report.masked_fraction > analytic.masked_fraction);
  CHECK(fd.report.masked_fraction < 0.5);
  CHECK(fd.within_envelope);
}

TEST_CASE("traveling-wave identity holds to 1e-10 on sampled points") {
  for (const auto& sol : {u6_sk(), u5_sk()}) {
    const auto points = sample_unmasked_points(sol, 0.3, 100, 42);
    REQUIRE(points.size() == 100);
    CHECK(traveling_wave_check(sol, 0.3, points) <= 1e-10);
    CHECK(traveling_wave_check(sol, 0.0, points) == 0.0);
  }
}

TEST_CASE("sampling is deterministic and respects pole clearance") {
  const auto sol = u5_sk();
  const auto a = sample_unmasked_points(sol, 0.3, 50, 7);
  const auto b = sample_unmasked_points(sol, 0.3, 50, 7);
  CHECK(a == b);
  const auto c = sample_unmasked_points(sol, 0.3, 50, 8);
  CHECK(a != c);
  for (const auto& [x, t] : a) {
    const double xi = x + sol.lambda * t;
    CHECK(nearest_pole_distance(sol, xi) > 2 * default_epsilon(sol.k));
  }
}

TEST_CASE("wrong wave speed fails both probes") {
  // A field propagating at lambda + 1 leaves a v'-sized PDE residual,
  // far above the certification band.
  ClosedFormSolution wrong = u6_sk();
  wrong.lambda += 1.0;
  const auto report = pde_residual_riccati(wrong, GridSpec{});
  CHECK(report.max_abs_residual > 1.0);

  // Claiming lambda + 1 for the spatial shift of the true field breaks
  // the identity at first order in delta.
  const auto sol = u6_sk();
  const auto points = sample_unmasked_points(sol, 0.3, 100, 42);
  CHECK(traveling_wave_check(sol, 0.3, points, sol.lambda + 1.0) > 0.05);
  CHECK(traveling_wave_check(sol, 0.3, points, sol.lambda) <= 1e-10);
}

TEST_CASE("all five branch functions satisfy the closure equation") {
  CHECK(riccati_branch_residual(Branch::Tan, 1.0) <= 1e-10);
  CHECK(riccati_branch_residual(Branch::Cot, 1.0) <= 1e-10);
  CHECK(riccati_branch_residual(Branch::Tanh, -1.0) <= 1e-10);
  CHECK(riccati_branch_residual(Branch::Coth, -1.0) <= 1e-10);
  CHECK(riccati_branch_residual(Branch::Rational, 0.0) <= 1e-10);
  // Also at a non-unit wavenumber on both signs.
  CHECK(riccati_branch_residual(Branch::Tan, 2.25) <= 1e-10);
  CHECK(riccati_branch_residual(Branch::Tanh, -2.25) <= 1e-10);
}

TEST_CASE("central difference weights satisfy the moment conditions") {
  // First derivative, 6th order (r = 3): the classical coefficients.
  const auto w1 = central_fd_weights(1, 3);
  REQUIRE(w1.size() == 7);
  CHECK(w1[0] == doctest::Approx(-1.0 / 60));
  CHECK(w1[1] == doctest::Approx(3.0 / 20));
  CHECK(w1[2] == doctest::Approx(-3.0 / 4));
  CHECK(w1[3] == doctest::Approx(0.0));

  // Second derivative, minimal width: the 3-point Laplacian.
  const auto w2 = central_fd_weights(2, 1);
  CHECK(w2[0] == doctest::Approx(1.0));
  CHECK(w2[1] == doctest::Approx(-2.0));
  CHECK(w2[2] == doctest::Approx(1.0));

  // Moment conditions for the working fifth-derivative stencil.
  const auto w5 = central_fd_weights(5, 6);
  for (unsigned n = 0; n <= 12; ++n) {
    double moment = 0;
    for (int i = -6; i <= 6; ++i)
      moment += w5[static_cast<size_t>(i + 6)] * std::pow(double(i), double(n));
    double factorial = 1;
    for (unsigned j = 2; j <= n; ++j) factorial *= j;
    CHECK(moment == doctest::Approx(n == 5 ? factorial : 0.0).epsilon(1e-9));
  }
}

TEST_CASE("the twelve printed solutions certify numerically for one preset") {
  GridSpec grid;
  for (const auto& sol : printed_catalog(FkdvParams::preset("ito"))) {
    CAPTURE(sol.label);
    const auto report = pde_residual_riccati(sol, grid);
    CHECK(report.max_abs_residual <= 1e-8 * report.max_term_magnitude);
    const auto fd = pde_residual_fd(sol, grid, 0.05);
    CHECK(fd.within_envelope);
    CHECK(fd.max_discrepancy_far <= 1e-2);
  }
}

}  // TEST_SUITE
