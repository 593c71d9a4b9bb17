#ifndef FKDV_NUMERIC_VERIFY_HPP
#define FKDV_NUMERIC_VERIFY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "fkdv/solution_forms.hpp"

namespace fkdv {

/// Space-time sampling description. epsilon < 0 selects the default
/// pole-exclusion radius for the solution's k.
struct GridSpec {
  double x_min = -10.0;
  double x_max = 10.0;
  int nx = 2001;
  std::vector<double> t_values{0.0};
  double epsilon = -1.0;
};

struct FieldSample {
  double x = 0;
  double t = 0;
  double u = 0;  // NaN when masked
  bool masked = false;
};

/// u(x,t) = v(x + lambda*t) on the grid; samples within epsilon of a pole
/// (in xi) are masked and never evaluated.
std::vector<FieldSample> eval_solution(const ClosedFormSolution& sol, const GridSpec& grid);

struct ResidualReport {
  double max_abs_residual = 0;
  double masked_fraction = 0;
  const char* method = "";
  /// Largest magnitude of any single term of the PDE over the unmasked
  /// points; the scale against which the residual is judged.
  double max_term_magnitude = 0;
};

/// Residual of u_t + omega*u_xxxxx + alpha*u*u_xxx + beta*u_x*u_xx +
/// gamma*u^2*u_x with every derivative evaluated analytically through the
/// Riccati chain (u_t = lambda*v', u_x^(n) = v^(n)).
ResidualReport pde_residual_riccati(const ClosedFormSolution& sol, const GridSpec& grid);

struct FdReport {
  ResidualReport report;  // method = "finite-difference"
  double h = 0;
  /// Max |fd residual - analytic residual| over FD-unmasked points, and
  /// the largest documented error envelope allowed at any point.
  double max_discrepancy = 0;
  double max_envelope = 0;
  /// True when the discrepancy stayed inside the per-point envelope
  /// everywhere.
  bool within_envelope = false;
  /// Max discrepancy restricted to points at least distance 2 from every
  /// pole (all points when the solution has no poles); the envelope floor
  /// (1e-2 absolute at h = 0.05) should bound this directly.
  double max_discrepancy_far = 0;
};

/// Residual with all derivatives replaced by 13-point central finite
/// differences (8th order and better); u itself is evaluated directly.
/// The time derivative uses step h / max(1, |lambda|). Points whose
/// stencil span contains a pole are masked. The per-point error envelope
/// is documented in the README: atol 1e-2 plus a safety factor times the
/// Taylor-series truncation and roundoff bounds of each stencil.
FdReport pde_residual_fd(const ClosedFormSolution& sol, const GridSpec& grid, double h);

/// max |u(x, t + delta) - u(x + lambda*delta, t)| over the sample points.
double traveling_wave_check(const ClosedFormSolution& sol, double delta,
                            const std::vector<std::pair<double, double>>& points);

/// Same deviation but shifting x by claimed_lambda*delta while the field
/// keeps its own speed: a probe for wrong wave-speed claims, which show
/// up at first order as |v'|*delta.
double traveling_wave_check(const ClosedFormSolution& sol, double delta,
                            const std::vector<std::pair<double, double>>& points,
                            double claimed_lambda);

/// Deterministic unmasked (x,t) samples for traveling-wave checks; both
/// (x, t+delta) and (x + lambda*delta, t) stay clear of poles.
std::vector<std::pair<double, double>> sample_unmasked_points(const ClosedFormSolution& sol,
                                                              double delta, int count,
                                                              std::uint64_t seed);

/// Central finite-difference weights on nodes -r..r for derivative order
/// m (Fornberg's algorithm), scaled for step 1 (divide by h^m to use).
std::vector<double> central_fd_weights(unsigned m, unsigned r);

/// max |phi'(xi) - (k + phi(xi)^2)| with phi' from a 7-point 6th-order
/// central difference at step h, over sample points with pole distance
/// >= the given clearance.
double riccati_branch_residual(Branch branch, double k, double h = 1e-2,
                               double clearance = 1.0);

}  // namespace fkdv

#endif  // FKDV_NUMERIC_VERIFY_HPP
