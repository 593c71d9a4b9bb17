#include "fkdv/phi_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace fkdv {

PhiPoly PhiPoly::constant(ExtScalar c) { return monomial(0, std::move(c)); }

PhiPoly PhiPoly::monomial(int power, ExtScalar c) {
  PhiPoly p;
  if (!c.is_zero()) p.coeffs_.emplace(power, std::move(c));
  return p;
}

const PhiPoly& PhiPoly::zero() {
  static const PhiPoly v;
  return v;
}

int PhiPoly::min_power() const {
  if (coeffs_.empty()) throw std::logic_error("PhiPoly: zero polynomial has no min power");
  return coeffs_.begin()->first;
}

int PhiPoly::max_power() const {
  if (coeffs_.empty()) throw std::logic_error("PhiPoly: zero polynomial has no max power");
  return coeffs_.rbegin()->first;
}

const ExtScalar& PhiPoly::coefficient(int power) const {
  auto it = coeffs_.find(power);
  return it == coeffs_.end() ? ExtScalar::zero() : it->second;
}

void PhiPoly::add(int power, const ExtScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

PhiPoly PhiPoly::operator-() const {
  PhiPoly out;
  for (const auto& [p, c] : coeffs_) out.coeffs_.emplace(p, -c);
  return out;
}

PhiPoly& PhiPoly::operator+=(const PhiPoly& other) {
  for (const auto& [p, c] : other.coeffs_) add(p, c);
  return *this;
}

PhiPoly& PhiPoly::operator-=(const PhiPoly& other) {
  for (const auto& [p, c] : other.coeffs_) add(p, -c);
  return *this;
}

PhiPoly operator*(const PhiPoly& lhs, const PhiPoly& rhs) {
  PhiPoly out;
  for (const auto& [pl, cl] : lhs.coeffs_) {
    for (const auto& [pr, cr] : rhs.coeffs_) out.add(pl + pr, cl * cr);
  }
  return out;
}

PhiPoly operator*(const ExtScalar& scale, const PhiPoly& p) {
  PhiPoly out;
  for (const auto& [power, c] : p.coeffs_) out.add(power, scale * c);
  return out;
}

PhiPoly PhiPoly::substitute_coeffs(const Bindings& bindings) const {
  PhiPoly out;
  for (const auto& [power, c] : coeffs_) out.add(power, substitute(c, bindings));
  return out;
}

PhiPoly PhiPoly::reflect_phi() const {
  const ExtScalar k = ExtScalar::symbol(Symbol::K);
  PhiPoly out;
  for (const auto& [power, c] : coeffs_) {
    ExtScalar kpow = power >= 0 ? k.pow(static_cast<unsigned>(power))
                                : ExtScalar::one() / k.pow(static_cast<unsigned>(-power));
    out.add(-power, c * kpow);
  }
  return out;
}

std::string PhiPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")";
    if (it->first != 0) {
      os << "*phi";
      if (it->first != 1) os << "^" << it->first;
    }
  }
  return os.str();
}

}  // namespace fkdv
