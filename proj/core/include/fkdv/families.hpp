#ifndef FKDV_FAMILIES_HPP
#define FKDV_FAMILIES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fkdv/balance.hpp"
#include "fkdv/params.hpp"

namespace fkdv {

/// The derived constants of the solution table. A generates the quadratic
/// extension (A^2 = 2*(2*alpha+beta)*A - 40*gamma*omega);
/// B = (12*gamma*omega - A*beta)/(8*gamma); C = (3*A - 10*beta)*omega/(2*A).
struct AbcConstants {
  ExtScalar A;
  ExtScalar B;
  ExtScalar C;
};

/// Symbolic A/B/C (A is the extension generator).
AbcConstants abc_constants();

/// Thrown when numeric evaluation of A is requested with
/// (2*alpha+beta)^2 - 40*gamma*omega < 0 (A would be complex).
struct NegativeDiscriminant : std::domain_error {
  explicit NegativeDiscriminant(const std::string& what) : std::domain_error(what) {}
};

/// Exact numeric A/B/C for rational parameters. A is the principal root
/// 2*alpha + beta + sqrt((2*alpha+beta)^2 - 40*gamma*omega); the second
/// root is its conjugate 2*(2*alpha+beta) - A. Returns nullopt when the
/// discriminant is positive but not a perfect square (A irrational);
/// throws NegativeDiscriminant when it is negative.
struct AbcValues {
  Rational A;
  Rational B;
  Rational C;
};
std::optional<AbcValues> abc_values_exact(const FkdvParams& params, bool principal_root = true);

/// Floating-point A/B/C (principal root); throws NegativeDiscriminant.
struct AbcValuesDouble {
  double A;
  double B;
  double C;
};
AbcValuesDouble abc_values_double(const FkdvParams& params, bool principal_root = true);

/// One row of the solution table: the coefficient tuple
/// (a0, a2, b2, lambda) as exact functions of alpha, beta, gamma, omega,
/// k, and A, solving the order-2 system with a1 = b1 = 0.
struct SolutionFamily {
  int id = 0;  // 1..6
  ExtScalar a0;
  ExtScalar a2;
  ExtScalar b2;
  ExtScalar lambda;
};

/// The six coefficient families. lambda is not hard-coded: it is solved
/// from the first equation of the extracted system that is linear in
/// lambda after substituting (a0, a2, b2), and every returned family is
/// certified by verify_family against the full system.
const std::vector<SolutionFamily>& family_table();

/// Per-equation outcome of substituting a family into the full order-2
/// system with fully symbolic alpha, beta, gamma, omega, k.
struct EquationStatus {
  int power = 0;
  bool zero = false;
  std::string residual;  // canonical text of a nonzero residual, else "0"
};

struct FamilyCertificate {
  int family_id = 0;
  bool verified = false;                  // all equations exactly zero
  std::vector<EquationStatus> equations;  // descending power
  std::string lambda_text;                // canonical lambda expression
  std::string lambda_form;                // matching closed form, e.g. "16*B*k^2", or ""
};

/// Substitutes the family (with a1 = b1 = 0) into all 15 equations of the
/// general order-2 system and reports per-equation exact zero/nonzero
/// status. A nonzero entry is a finding, not an error.
FamilyCertificate verify_family(const SolutionFamily& family);

/// Identifies lambda among {16*B*k^2, 256*B*k^2, 16*C*k^2, 256*C*k^2}
/// by exact extension-field equality; empty string when none match.
std::string identify_lambda_form(const ExtScalar& lambda);

/// Full symbol binding for numeric evaluation of family expressions:
/// alpha..omega from params, the given k, and A as the selected root.
/// Exact variant requires a perfect-square discriminant.
std::array<Rational, kSymbolCount> rational_point(const FkdvParams& params, const Rational& k,
                                                  const Rational& a_value);
std::array<double, kSymbolCount> double_point(const FkdvParams& params, double k, double a_value);

/// Numeric (a0, a2, b2, lambda) for one family at one parameter point.
struct FamilyValues {
  int family_id = 0;
  double a0 = 0;
  double a2 = 0;
  double b2 = 0;
  double lambda = 0;
};
FamilyValues evaluate_family(const SolutionFamily& family, const FkdvParams& params, double k,
                             bool principal_root = true);
/// Exact variant; requires rational params with perfect-square discriminant.
std::array<Rational, 4> evaluate_family_exact(const SolutionFamily& family,
                                              const FkdvParams& params, const Rational& k,
                                              bool principal_root = true);

}  // namespace fkdv

#endif  // FKDV_FAMILIES_HPP
