#include "fkdv/solution_forms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fkdv {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Distance from xi to the nearest point of the lattice.
double lattice_distance(const PoleLattice& lattice, double xi) {
  if (lattice.spacing == 0) return std::abs(xi - lattice.offset);
  const double r = std::remainder(xi - lattice.offset, lattice.spacing);
  return std::abs(r);
}

}  // namespace

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::Tan: return "tan";
    case Branch::Cot: return "cot";
    case Branch::Tanh: return "tanh";
    case Branch::Coth: return "coth";
    case Branch::CschForm: return "csch-form";
    case Branch::Rational: return "rational";
  }
  return "?";
}

bool branch_matches_k(Branch b, double k) {
  switch (b) {
    case Branch::Tan:
    case Branch::Cot: return k > 0;
    case Branch::Tanh:
    case Branch::Coth:
    case Branch::CschForm: return k < 0;
    case Branch::Rational: return k == 0;
  }
  return false;
}

double phi_value(Branch b, double k, double xi) {
  switch (b) {
    case Branch::Tan: {
      const double s = std::sqrt(k);
      return s * std::tan(s * xi);
    }
    case Branch::Cot: {
      const double s = std::sqrt(k);
      return -s / std::tan(s * xi);
    }
    case Branch::Tanh:
    case Branch::CschForm: {
      const double s = std::sqrt(-k);
      return -s * std::tanh(s * xi);
    }
    case Branch::Coth: {
      const double s = std::sqrt(-k);
      return -s / std::tanh(s * xi);
    }
    case Branch::Rational: return -1.0 / xi;
  }
  return 0;
}

namespace {

// phi = infinity lattice (u singular there iff a2 != 0).
bool phi_infinity_lattice(Branch b, double k, PoleLattice& out) {
  switch (b) {
    case Branch::Tan: {
      const double period = kPi / std::sqrt(k);
      out = {period / 2, period};
      return true;
    }
    case Branch::Cot: {
      const double period = kPi / std::sqrt(k);
      out = {0, period};
      return true;
    }
    case Branch::Tanh:
    case Branch::CschForm: return false;  // |phi| < sqrt(-k) on the real line
    case Branch::Coth:
    case Branch::Rational: out = {0, 0}; return true;
  }
  return false;
}

// phi = 0 lattice (u singular there iff b2 != 0).
bool phi_zero_lattice(Branch b, double k, PoleLattice& out) {
  switch (b) {
    case Branch::Tan: {
      const double period = kPi / std::sqrt(k);
      out = {0, period};
      return true;
    }
    case Branch::Cot: {
      const double period = kPi / std::sqrt(k);
      out = {period / 2, period};
      return true;
    }
    case Branch::Tanh:
    case Branch::CschForm: out = {0, 0}; return true;
    case Branch::Coth:
    case Branch::Rational: return false;  // |phi| >= sqrt(-k) > 0, resp. phi != 0
  }
  return false;
}

}  // namespace

ClosedFormSolution closed_form(const SolutionFamily& family, Branch branch, double k,
                               const FkdvParams& params, bool principal_root) {
  if (!branch_matches_k(branch, k))
    throw std::invalid_argument(std::string("closed_form: branch ") + branch_name(branch) +
                                " requires " +
                                (branch == Branch::Rational ? "k = 0"
                                 : (branch == Branch::Tan || branch == Branch::Cot) ? "k > 0"
                                                                                    : "k < 0"));
  ClosedFormSolution sol;
  sol.family_id = family.id;
  sol.branch = branch;
  sol.k = k;
  sol.params = params;
  const FamilyValues values = evaluate_family(family, params, k, principal_root);
  sol.A = abc_values_double(params, principal_root).A;
  sol.a0 = values.a0;
  sol.a2 = values.a2;
  sol.b2 = values.b2;
  sol.lambda = values.lambda;
  PoleLattice lattice;
  if (sol.a2 != 0 && phi_infinity_lattice(branch, k, lattice)) sol.poles.push_back(lattice);
  if (sol.b2 != 0 && phi_zero_lattice(branch, k, lattice)) sol.poles.push_back(lattice);
  return sol;
}

double nearest_pole_distance(const ClosedFormSolution& sol, double xi) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& lattice : sol.poles) d = std::min(d, lattice_distance(lattice, xi));
  return d;
}

double default_epsilon(double k) {
  if (k == 0) return 1e-2;
  return 1e-2 * kPi / std::sqrt(std::abs(k));
}

std::vector<ClosedFormSolution> printed_catalog(const FkdvParams& params, bool principal_root) {
  std::vector<ClosedFormSolution> catalog;
  for (const auto& family : family_table()) {
    ClosedFormSolution trig = closed_form(family, Branch::Tan, 1.0, params, principal_root);
    trig.label = "u" + std::to_string(2 * family.id - 1);
    catalog.push_back(std::move(trig));

    const Branch hyper = family.a2.is_zero() ? Branch::CschForm : Branch::Tanh;
    ClosedFormSolution hyp = closed_form(family, hyper, -1.0, params, principal_root);
    hyp.label = "u" + std::to_string(2 * family.id);
    catalog.push_back(std::move(hyp));
  }
  return catalog;
}

}  // namespace fkdv
