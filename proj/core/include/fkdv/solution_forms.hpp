#ifndef FKDV_SOLUTION_FORMS_HPP
#define FKDV_SOLUTION_FORMS_HPP

#include <string>
#include <vector>

#include "fkdv/families.hpp"

namespace fkdv {

/// Solution branches of phi' = k + phi^2:
///   Tan      phi =  sqrt(k)*tan(sqrt(k)*xi)        (k > 0)
///   Cot      phi = -sqrt(k)*cot(sqrt(k)*xi)        (k > 0)
///   Tanh     phi = -sqrt(-k)*tanh(sqrt(-k)*xi)     (k < 0)
///   Coth     phi = -sqrt(-k)*coth(sqrt(-k)*xi)     (k < 0)
///   CschForm same function as Tanh; tags solutions whose phi^-2 part is
///            conventionally written with csch^2 (via coth^2 = 1+csch^2)
///   Rational phi = -1/xi                           (k = 0)
enum class Branch { Tan, Cot, Tanh, Coth, CschForm, Rational };

const char* branch_name(Branch b);
bool branch_matches_k(Branch b, double k);

/// phi(xi) for the branch; may return +-infinity at poles.
double phi_value(Branch b, double k, double xi);

/// A singularity lattice in xi: points offset + n*spacing (all integers n)
/// when spacing > 0, or the single point offset when spacing == 0.
struct PoleLattice {
  double offset = 0;
  double spacing = 0;
};

/// A fully numeric closed-form traveling wave
///   u(x,t) = a0 + a2*phi(xi)^2 + b2*phi(xi)^-2,  xi = x + lambda*t.
struct ClosedFormSolution {
  int family_id = 0;
  Branch branch = Branch::Tanh;
  double k = 0;
  FkdvParams params;
  double A = 0;  // extension root used for the coefficients
  double a0 = 0, a2 = 0, b2 = 0, lambda = 0;
  std::vector<PoleLattice> poles;  // active singularities of u in xi
  std::string label;               // "u1".."u12" for catalog entries, else ""
};

/// Composes family coefficients with a Riccati branch. The pole list
/// contains the branch's phi-infinity lattice when a2 != 0 and its
/// phi-zero lattice when b2 != 0 (u is finite at inactive lattices).
/// Throws std::invalid_argument when the branch is incompatible with the
/// sign of k.
ClosedFormSolution closed_form(const SolutionFamily& family, Branch branch, double k,
                               const FkdvParams& params, bool principal_root = true);

/// Distance from xi to the nearest pole of the solution (+infinity when
/// the solution has no poles).
double nearest_pole_distance(const ClosedFormSolution& sol, double xi);

/// Default pole-exclusion radius: 1e-2 * pi/sqrt(|k|) (1e-2 for k = 0).
double default_epsilon(double k);

/// The twelve printed solutions for one parameter set: families 1..6,
/// each at the trigonometric branch with k = +1 (odd labels u1, u3, ...)
/// and the hyperbolic branch with k = -1 (even labels u2, u4, ...).
/// Families 1 and 2 carry only the phi^-2 term, so their hyperbolic
/// entries are tagged CschForm.
std::vector<ClosedFormSolution> printed_catalog(const FkdvParams& params,
                                                bool principal_root = true);

}  // namespace fkdv

#endif  // FKDV_SOLUTION_FORMS_HPP
