#include "fkdv/balance.hpp"

#include <stdexcept>

namespace fkdv {

namespace {

// Top phi-degrees of the three competing residual terms for the order-m
// ansatz, measured by actually differentiating a full ansatz. To probe
// orders beyond the fixed symbol universe, the ansatz a0 + a1*phi^m is
// used as a stand-in with the correct top power.
std::array<int, 3> term_degrees(unsigned m) {
  PhiPoly v = PhiPoly::constant(ExtScalar::symbol(Symbol::A0));
  v.add(static_cast<int>(m), ExtScalar::symbol(Symbol::A1));
  const PhiPoly d1 = riccati_derive(v);
  const PhiPoly d3 = riccati_derive(d1, 2);
  const PhiPoly d5 = riccati_derive(d3, 2);
  return {(v * v * d1).max_power(), (v * d3).max_power(), d5.max_power()};
}

}  // namespace

std::array<int, 3> balance_degrees(unsigned m) { return term_degrees(m); }

BalanceReport balance() {
  for (unsigned m = 1; m <= 8; ++m) {
    const auto deg = term_degrees(m);
    if (deg[0] == deg[1] || deg[0] == deg[2] || deg[1] == deg[2]) return {m, deg};
  }
  throw std::logic_error("balance: no order matched in 1..8");
}

const MultiPoly* EquationSystem::find(int power) const {
  for (const auto& e : entries) {
    if (e.power == power) return &e.lhs;
  }
  return nullptr;
}

EquationSystem extract_system(const PhiPoly& residual) {
  EquationSystem system;
  // PhiPoly stores coefficients in ascending power; emit descending.
  for (auto it = residual.coeffs().rbegin(); it != residual.coeffs().rend(); ++it) {
    const ExtScalar& c = it->second;
    if (!c.den().is_constant())
      throw std::logic_error("extract_system: coefficient of phi^" + std::to_string(it->first) +
                             " is not polynomial: " + c.to_string());
    const Rational den = c.den().constant_value();
    system.entries.push_back({it->first, c.num() * (Rational(1) / den)});
  }
  return system;
}

PhiPoly reassemble(const EquationSystem& system) {
  PhiPoly out;
  for (const auto& e : system.entries) out.add(e.power, ExtScalar::from_poly(e.lhs));
  return out;
}

const EquationSystem& order2_general_system() {
  static const EquationSystem system =
      extract_system(ode_residual(build_ansatz(2, true), FkdvParams::symbolic()));
  return system;
}

}  // namespace fkdv
