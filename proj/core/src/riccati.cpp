#include "fkdv/riccati.hpp"

#include <stdexcept>

namespace fkdv {

PhiPoly riccati_derive(const PhiPoly& p) {
  const ExtScalar k = ExtScalar::symbol(Symbol::K);
  PhiPoly out;
  for (const auto& [power, c] : p.coeffs()) {
    if (power == 0) continue;
    const ExtScalar n = ExtScalar::from_int(power);
    out.add(power - 1, n * k * c);
    out.add(power + 1, n * c);
  }
  return out;
}

PhiPoly riccati_derive(const PhiPoly& p, unsigned order) {
  PhiPoly out = p;
  for (unsigned i = 0; i < order; ++i) out = riccati_derive(out);
  return out;
}

PhiPoly build_ansatz(unsigned m, bool general) {
  if (m < 1 || m > 2)
    throw std::invalid_argument("build_ansatz: m must be 1 or 2 (fixed symbol universe)");
  PhiPoly v = PhiPoly::constant(ExtScalar::symbol(Symbol::A0));
  if (general && m >= 1) {
    v.add(1, ExtScalar::symbol(Symbol::A1));
    v.add(-1, ExtScalar::symbol(Symbol::B1));
  }
  if (m >= 2) {
    v.add(2, ExtScalar::symbol(Symbol::A2));
    v.add(-2, ExtScalar::symbol(Symbol::B2));
  }
  return v;
}

PhiPoly ode_residual(const PhiPoly& v, const FkdvParams& params) {
  const PhiPoly d1 = riccati_derive(v);
  const PhiPoly d2 = riccati_derive(d1);
  const PhiPoly d3 = riccati_derive(d2);
  const PhiPoly d5 = riccati_derive(d3, 2);
  const ExtScalar lambda = ExtScalar::symbol(Symbol::Lambda);
  return params.gamma * (v * v * d1) + params.alpha * (v * d3) + lambda * d1 +
         params.beta * (d1 * d2) + params.omega * d5;
}

}  // namespace fkdv
