#ifndef FKDV_SOLVER_HPP
#define FKDV_SOLVER_HPP

#include <array>
#include <vector>

#include "fkdv/families.hpp"
#include "fkdv/params.hpp"
#include "fkdv/rational.hpp"

namespace fkdv {

/// Arithmetic used by the cascade. Auto upgrades to exact rational
/// arithmetic when the parameters are rational and the discriminant
/// (2*alpha+beta)^2 - 40*gamma*omega is a perfect rational square (all
/// five presets qualify); Exact demands that and throws otherwise.
enum class SolveMode { Auto, Floating, Exact };

/// One solution of the restricted system (a1 = b1 = 0) at concrete
/// parameters. residual_norm is the max absolute value over all 15
/// equations of the order-2 system after substitution; the solver only
/// returns tuples with residual_norm <= 1e-9 * residual_scale.
struct SolutionTuple {
  double a0 = 0;
  double a2 = 0;
  double b2 = 0;
  double lambda = 0;
  double residual_norm = 0;
  /// 1..6 when the tuple matches a family-table evaluation (either A
  /// root) componentwise to 1e-12; 0 when unattributed.
  int family_id = 0;
  /// True when the tuple was produced by the exact cascade; exact_values
  /// then holds (a0, a2, b2, lambda) as rationals and residual_norm is an
  /// exact zero check.
  bool exact = false;
  std::array<Rational, 4> exact_values{};
};

struct SolveResult {
  std::vector<SolutionTuple> tuples;  // deduplicated, sorted by (a2, b2, a0, lambda)
  bool exact_path = false;            // cascade ran in exact rational arithmetic
  bool degenerate = false;            // zero discriminant: the quadratic roots coalesce
  double residual_scale = 0;          // largest monomial magnitude seen while checking
};

/// Cascade solver for the restricted system at numeric parameters:
/// (i) the power-7 equation 2*gamma*a2^3 + (24*alpha+12*beta)*a2^2 +
/// 720*omega*a2 = 0 gives a2 (the zero root is kept only as "no phi^2
/// term"); (ii) the power-5 equation, linear in a0, gives a0 (the mirror
/// power -5 equation is used when a2 = 0); (iii) the first equation with
/// a nonzero lambda coefficient gives lambda; (iv) each a2 root pairs
/// with b2 = 0 or with its own reflection image b2 = k^2*a2, and the
/// pure phi^-2 candidates (a2 = 0) take b2 from the mirrored power -7
/// equation's roots; (v) each candidate tuple is
/// substituted into all 15 equations and kept only when the residual
/// norm passes. Throws std::invalid_argument when gamma, omega, or k is
/// zero and NegativeDiscriminant when the quadratic has no real root.
SolveResult solve_restricted(const FkdvParams& params, const Rational& k,
                             SolveMode mode = SolveMode::Auto);

/// Convenience overload: the double is converted exactly to a rational.
SolveResult solve_restricted(const FkdvParams& params, double k,
                             SolveMode mode = SolveMode::Auto);

}  // namespace fkdv

#endif  // FKDV_SOLVER_HPP
