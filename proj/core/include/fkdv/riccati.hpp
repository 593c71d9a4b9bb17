#ifndef FKDV_RICCATI_HPP
#define FKDV_RICCATI_HPP

#include "fkdv/params.hpp"
#include "fkdv/phi_poly.hpp"

namespace fkdv {

/// Formal xi-derivative under the closure rule phi' = k + phi^2:
/// d(phi^n)/dxi = n*k*phi^{n-1} + n*phi^{n+1} for every integer n.
PhiPoly riccati_derive(const PhiPoly& p);

/// n-fold iterate of riccati_derive.
PhiPoly riccati_derive(const PhiPoly& p, unsigned order);

/// The traveling-wave ansatz a0 + sum_{i=1..m} (a_i*phi^i + b_i*phi^-i)
/// with symbolic coefficients; general = false drops the odd coefficients
/// (a1 = b1 = 0), giving a0 + a2*phi^2 + b2*phi^-2 at m = 2.
/// m must be 1 or 2: the symbol universe is fixed. Throws
/// std::invalid_argument otherwise.
PhiPoly build_ansatz(unsigned m, bool general);

/// Residual of the traveling-wave ODE
///   gamma*v^2*v' + alpha*v*v''' + lambda*v' + beta*v'*v'' + omega*v^(5)
/// with lambda kept as a polynomial symbol.
PhiPoly ode_residual(const PhiPoly& v, const FkdvParams& params);

}  // namespace fkdv

#endif  // FKDV_RICCATI_HPP
