#ifndef FKDV_BALANCE_HPP
#define FKDV_BALANCE_HPP

#include <array>
#include <vector>

#include "fkdv/phi_poly.hpp"
#include "fkdv/riccati.hpp"

namespace fkdv {

/// Result of degree balancing: the ansatz order m together with the top
/// phi-degrees (3m+1, 2m+3, m+5) of the competing terms gamma*v^2*v',
/// alpha*v*v''' (equivalently beta*v'*v''), and omega*v^(5).
struct BalanceReport {
  unsigned m = 0;
  std::array<int, 3> degrees{};
};

/// Searches m = 1, 2, ... and returns the unique order at which at least
/// two of the three term degrees coincide (they all meet at m = 2,
/// degree 7). Degrees are measured on the actual ansatz residual terms,
/// not from the closed-form exponents.
BalanceReport balance();

/// The degree triple at a given order (exposed for direct inspection).
std::array<int, 3> balance_degrees(unsigned m);

/// One coefficient equation per phi-power of a residual.
struct Equation {
  int power = 0;
  MultiPoly lhs;  // polynomial in {k, lambda, a0, a1, a2, b1, b2, alpha, beta, gamma, omega}
};

/// Coefficient equations ordered by descending phi-power.
struct EquationSystem {
  std::vector<Equation> entries;

  const MultiPoly* find(int power) const;
};

/// Equates every phi-power coefficient of the residual to zero. Each
/// coefficient must be a genuine polynomial (constant denominator after
/// canonicalization); a non-constant denominator throws std::logic_error.
EquationSystem extract_system(const PhiPoly& residual);

/// Rebuilds sum_j lhs_j * phi^j from the extracted entries (used to check
/// that extraction loses nothing).
PhiPoly reassemble(const EquationSystem& system);

/// The extracted system of the fully symbolic order-2 general ansatz
/// (a0, a1, a2, b1, b2 all free): 15 equations, powers 7 down to -7.
/// Built once and cached.
const EquationSystem& order2_general_system();

}  // namespace fkdv

#endif  // FKDV_BALANCE_HPP
