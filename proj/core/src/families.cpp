#include "fkdv/families.hpp"

#include <cmath>
#include <stdexcept>

#include "fkdv/riccati.hpp"

namespace fkdv {

namespace {

ExtScalar sym(Symbol s) { return ExtScalar::symbol(s); }

/// Solve the first equation that is linear in lambda with a nonzero
/// lambda coefficient after substituting the field values.
ExtScalar solve_lambda(const ExtScalar& a0, const ExtScalar& a2, const ExtScalar& b2) {
  const Bindings fields{{Symbol::A0, a0}, {Symbol::A1, ExtScalar::zero()},
                        {Symbol::A2, a2}, {Symbol::B1, ExtScalar::zero()},
                        {Symbol::B2, b2}};
  for (const auto& entry : order2_general_system().entries) {
    const ExtScalar e = substitute(entry.lhs, fields);
    if (e.num().degree(Symbol::Lambda) > 1)
      throw std::logic_error("solve_lambda: equation not linear in lambda");
    const MultiPoly c1 = e.num().coefficient_of(Symbol::Lambda, 1);
    if (c1.is_zero()) continue;
    const MultiPoly c0 = e.num().coefficient_of(Symbol::Lambda, 0);
    return ExtScalar(-c0, c1);
  }
  throw std::logic_error("solve_lambda: no equation with a lambda term survived substitution");
}

SolutionFamily make_family(int id, ExtScalar a0, ExtScalar a2, ExtScalar b2) {
  ExtScalar lambda = solve_lambda(a0, a2, b2);
  return {id, std::move(a0), std::move(a2), std::move(b2), std::move(lambda)};
}

Rational trace_value(const std::array<Rational, 4>& v) {
  return 2 * v[0] + v[1];  // 2*alpha + beta
}

Rational discriminant_value(const std::array<Rational, 4>& v) {
  const Rational s = trace_value(v);
  return s * s - 40 * v[2] * v[3];
}

}  // namespace

AbcConstants abc_constants() {
  const ExtScalar A = sym(Symbol::A);
  const ExtScalar beta = sym(Symbol::Beta);
  const ExtScalar gamma = sym(Symbol::Gamma);
  const ExtScalar omega = sym(Symbol::Omega);
  const ExtScalar B =
      (ExtScalar::from_int(12) * gamma * omega - A * beta) / (ExtScalar::from_int(8) * gamma);
  const ExtScalar C = (ExtScalar::from_int(3) * A - ExtScalar::from_int(10) * beta) * omega /
                      (ExtScalar::from_int(2) * A);
  return {A, B, C};
}

std::optional<AbcValues> abc_values_exact(const FkdvParams& params, bool principal_root) {
  const auto v = params.numeric_values();
  const Rational disc = discriminant_value(v);
  if (disc < 0)
    throw NegativeDiscriminant("A is complex: (2*alpha+beta)^2 - 40*gamma*omega = " +
                               rational_to_string(disc) + " < 0");
  const auto root = rational_sqrt_exact(disc);
  if (!root) return std::nullopt;
  const Rational A = principal_root ? trace_value(v) + *root : trace_value(v) - *root;
  if (A == 0) throw std::domain_error("abc_values_exact: selected root A = 0");
  const Rational B = (12 * v[2] * v[3] - A * v[1]) / (8 * v[2]);
  const Rational C = (3 * A - 10 * v[1]) * v[3] / (2 * A);
  return AbcValues{A, B, C};
}

AbcValuesDouble abc_values_double(const FkdvParams& params, bool principal_root) {
  const auto v = params.numeric_values();
  const Rational disc = discriminant_value(v);
  if (disc < 0)
    throw NegativeDiscriminant("A is complex: (2*alpha+beta)^2 - 40*gamma*omega = " +
                               rational_to_string(disc) + " < 0");
  const double root = std::sqrt(rational_to_double(disc));
  const double trace = rational_to_double(trace_value(v));
  const double A = principal_root ? trace + root : trace - root;
  const double beta = rational_to_double(v[1]);
  const double gamma = rational_to_double(v[2]);
  const double omega = rational_to_double(v[3]);
  return {A, (12 * gamma * omega - A * beta) / (8 * gamma), (3 * A - 10 * beta) * omega / (2 * A)};
}

const std::vector<SolutionFamily>& family_table() {
  static const std::vector<SolutionFamily> table = [] {
    const ExtScalar A = sym(Symbol::A);
    const ExtScalar k = sym(Symbol::K);
    const ExtScalar gamma = sym(Symbol::Gamma);
    const ExtScalar omega = sym(Symbol::Omega);
    const ExtScalar zero = ExtScalar::zero();

    const ExtScalar a0_A = -(ExtScalar::from_int(2) * A * k) / gamma;
    const ExtScalar a0_w = -(ExtScalar::from_int(80) * k * omega) / A;
    const ExtScalar a2_A = -(ExtScalar::from_int(3) * A) / gamma;
    const ExtScalar a2_w = -(ExtScalar::from_int(120) * omega) / A;
    const ExtScalar b2_A = a2_A * k * k;  // -3*A*k^2/gamma
    const ExtScalar b2_w = a2_w * k * k;  // -120*k^2*omega/A

    std::vector<SolutionFamily> t;
    t.push_back(make_family(1, a0_A, zero, b2_A));
    t.push_back(make_family(2, a0_w, zero, b2_w));
    t.push_back(make_family(3, a0_A, a2_A, zero));
    t.push_back(make_family(4, a0_w, a2_w, zero));
    t.push_back(make_family(5, a0_A, a2_A, b2_A));
    t.push_back(make_family(6, a0_w, a2_w, b2_w));
    return t;
  }();
  return table;
}

FamilyCertificate verify_family(const SolutionFamily& family) {
  const Bindings bindings{{Symbol::A0, family.a0},    {Symbol::A1, ExtScalar::zero()},
                          {Symbol::A2, family.a2},    {Symbol::B1, ExtScalar::zero()},
                          {Symbol::B2, family.b2},    {Symbol::Lambda, family.lambda}};
  FamilyCertificate cert;
  cert.family_id = family.id;
  cert.verified = true;
  cert.lambda_text = family.lambda.to_string();
  cert.lambda_form = identify_lambda_form(family.lambda);
  for (const auto& entry : order2_general_system().entries) {
    const ExtScalar e = substitute(entry.lhs, bindings);
    EquationStatus status;
    status.power = entry.power;
    status.zero = e.is_zero();
    status.residual = e.to_string();
    if (!status.zero) cert.verified = false;
    cert.equations.push_back(std::move(status));
  }
  return cert;
}

std::string identify_lambda_form(const ExtScalar& lambda) {
  const AbcConstants abc = abc_constants();
  const ExtScalar k2 = sym(Symbol::K) * sym(Symbol::K);
  const std::pair<ExtScalar, const char*> candidates[] = {
      {ExtScalar::from_int(16) * abc.B * k2, "16*B*k^2"},
      {ExtScalar::from_int(256) * abc.B * k2, "256*B*k^2"},
      {ExtScalar::from_int(16) * abc.C * k2, "16*C*k^2"},
      {ExtScalar::from_int(256) * abc.C * k2, "256*C*k^2"},
  };
  for (const auto& [value, label] : candidates) {
    if (lambda == value) return label;
  }
  return "";
}

std::array<Rational, kSymbolCount> rational_point(const FkdvParams& params, const Rational& k,
                                                  const Rational& a_value) {
  const auto v = params.numeric_values();
  std::array<Rational, kSymbolCount> point{};
  point[static_cast<std::size_t>(Symbol::Alpha)] = v[0];
  point[static_cast<std::size_t>(Symbol::Beta)] = v[1];
  point[static_cast<std::size_t>(Symbol::Gamma)] = v[2];
  point[static_cast<std::size_t>(Symbol::Omega)] = v[3];
  point[static_cast<std::size_t>(Symbol::K)] = k;
  point[static_cast<std::size_t>(Symbol::A)] = a_value;
  return point;
}

std::array<double, kSymbolCount> double_point(const FkdvParams& params, double k, double a_value) {
  const auto v = params.numeric_values();
  std::array<double, kSymbolCount> point{};
  point[static_cast<std::size_t>(Symbol::Alpha)] = rational_to_double(v[0]);
  point[static_cast<std::size_t>(Symbol::Beta)] = rational_to_double(v[1]);
  point[static_cast<std::size_t>(Symbol::Gamma)] = rational_to_double(v[2]);
  point[static_cast<std::size_t>(Symbol::Omega)] = rational_to_double(v[3]);
  point[static_cast<std::size_t>(Symbol::K)] = k;
  point[static_cast<std::size_t>(Symbol::A)] = a_value;
  return point;
}

FamilyValues evaluate_family(const SolutionFamily& family, const FkdvParams& params, double k,
                             bool principal_root) {
  const auto point = double_point(params, k, abc_values_double(params, principal_root).A);
  return {family.id, family.a0.eval_double(point), family.a2.eval_double(point),
          family.b2.eval_double(point), family.lambda.eval_double(point)};
}

std::array<Rational, 4> evaluate_family_exact(const SolutionFamily& family,
                                              const FkdvParams& params, const Rational& k,
                                              bool principal_root) {
  const auto abc = abc_values_exact(params, principal_root);
  if (!abc)
    throw std::logic_error("evaluate_family_exact: discriminant is not a perfect square");
  const auto point = rational_point(params, k, abc->A);
  return {family.a0.eval_rational(point), family.a2.eval_rational(point),
          family.b2.eval_rational(point), family.lambda.eval_rational(point)};
}

}  // namespace fkdv
