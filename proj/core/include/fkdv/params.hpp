#ifndef FKDV_PARAMS_HPP
#define FKDV_PARAMS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fkdv/ext_scalar.hpp"

namespace fkdv {

/// Coefficients (alpha, beta, gamma, omega) of the fifth-order equation
///   u_t + omega*u_xxxxx + alpha*u*u_xxx + beta*u_x*u_xx + gamma*u^2*u_x = 0.
/// Either fully symbolic (each field is its own symbol) or exact rational
/// numbers. gamma != 0 and omega != 0 are enforced for numeric values.
struct FkdvParams {
  ExtScalar alpha;
  ExtScalar beta;
  ExtScalar gamma;
  ExtScalar omega;
  std::string preset_name;  // "kk", "sk", "cdg", "lax", "ito", "custom", or "symbolic"

  static FkdvParams symbolic();
  /// Named special cases: kk=(10,25,20,1), sk=(5,5,5,1), cdg=(30,30,180,1),
  /// lax=(10,20,30,1), ito=(3,6,2,1). Throws std::invalid_argument for an
  /// unknown name.
  static FkdvParams preset(const std::string& name);
  /// Exact rational coefficients; throws std::invalid_argument when
  /// gamma = 0 or omega = 0.
  static FkdvParams custom(Rational alpha, Rational beta, Rational gamma, Rational omega);

  static const std::vector<std::string>& preset_names();

  bool is_numeric() const;
  /// (alpha, beta, gamma, omega) as exact rationals; throws
  /// std::logic_error when the params are symbolic.
  std::array<Rational, 4> numeric_values() const;
};

}  // namespace fkdv

#endif  // FKDV_PARAMS_HPP
