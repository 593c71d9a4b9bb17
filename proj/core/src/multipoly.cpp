#include "fkdv/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fkdv {

std::optional<Symbol> symbol_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kSymbolCount; ++i) {
    if (kSymbolNames[i] == name) return static_cast<Symbol>(i);
  }
  return std::nullopt;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::is_unit() const {
  for (auto e : exp) {
    if (e != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < kSymbolCount; ++i) {
    out.exp[i] = static_cast<std::uint16_t>(exp[i] + other.exp[i]);
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < kSymbolCount; ++i) {
    out.exp[i] = static_cast<std::uint16_t>(exp[i] - other.exp[i]);
  }
  return out;
}

bool Monomial::divides(const Monomial& d, const Monomial& n) {
  for (std::size_t i = 0; i < kSymbolCount; ++i)
    if (d.exp[i] > n.exp[i]) return false;
  return true;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t i = 0; i < kSymbolCount; ++i) {
    out.exp[i] = std::min(a.exp[i], b.exp[i]);
  }
  return out;
}

bool MonomialGradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.total_degree();
  const unsigned db = b.total_degree();
  if (da != db) return da > db;
  return a.exp > b.exp;  // lexicographic over the fixed symbol order
}

MultiPoly::MultiPoly(const Monomial& m, Rational coeff) {
  if (coeff != 0) terms_.emplace(m, std::move(coeff));
}

MultiPoly MultiPoly::constant(Rational value) {
  MultiPoly p;
  if (value != 0) p.terms_.emplace(Monomial{}, std::move(value));
  return p;
}

MultiPoly MultiPoly::symbol(Symbol s, unsigned power) {
  if (power == 0) return one();
  Monomial m;
  m.exp[static_cast<std::size_t>(s)] = static_cast<std::uint16_t>(power);
  MultiPoly p;
  p.terms_.emplace(m, Rational(1));
  return p;
}

MultiPoly MultiPoly::term(Rational coeff,
                          std::initializer_list<std::pair<Symbol, unsigned>> factors) {
  if (coeff == 0) return zero();
  Monomial m;
  for (const auto& [s, e] : factors) {
    m.exp[static_cast<std::size_t>(s)] =
        static_cast<std::uint16_t>(m.exp[static_cast<std::size_t>(s)] + e);
  }
  MultiPoly p;
  p.terms_.emplace(m, std::move(coeff));
  return p;
}

const MultiPoly& MultiPoly::zero() {
  static const MultiPoly z;
  return z;
}

const MultiPoly& MultiPoly::one() {
  static const MultiPoly o = constant(Rational(1));
  return o;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

unsigned MultiPoly::degree(Symbol s) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(s));
  return d;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

void MultiPoly::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  MultiPoly out;
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) {
      out.add_term(ml * mr, cl * cr);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scale;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = one();
  for (unsigned i = 0; i < exponent; ++i) result *= *this;
  return result;
}

Rational MultiPoly::content() const {
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    num_gcd = gcd(num_gcd, numerator(c));
    den_lcm = lcm(den_lcm, denominator(c));
  }
  if (num_gcd == 0) return Rational(0);
  return Rational(num_gcd, den_lcm);
}

Rational MultiPoly::leading_coefficient() const {
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

Monomial MultiPoly::monomial_gcd() const {
  if (terms_.empty()) return Monomial{};
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      g.exp[i] = std::min(g.exp[i], m.exp[i]);
    }
  }
  return g;
}

MultiPoly MultiPoly::divided_by_monomial(const Monomial& m) const {
  MultiPoly out;
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono / m, c);
  return out;
}

MultiPoly MultiPoly::coefficient_of(Symbol s, unsigned power) const {
  const auto idx = static_cast<std::size_t>(s);
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.exp[idx] == power) {
      Monomial stripped = m;
      stripped.exp[idx] = 0;
      out.terms_.emplace(stripped, c);
    }
  }
  return out;
}

Rational MultiPoly::eval_rational(const std::array<Rational, kSymbolCount>& values) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      for (unsigned e = 0; e < m.exp[i]; ++e) v *= values[i];
    }
    sum += v;
  }
  return sum;
}

double MultiPoly::eval_double(const std::array<double, kSymbolCount>& values) const {
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double v = rational_to_double(c);
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      for (unsigned e = 0; e < m.exp[i]; ++e) v *= values[i];
    }
    sum += v;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const bool unit_monomial = m.is_unit();
    const bool unit_coeff = magnitude == 1;
    if (!unit_coeff || unit_monomial) out << rational_to_string(magnitude);
    bool need_star = !unit_coeff || unit_monomial;
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      if (m.exp[i] == 0) continue;
      if (need_star) out << "*";
      out << kSymbolNames[i];
      if (m.exp[i] > 1) out << "^" << m.exp[i];
      need_star = true;
    }
  }
  return out.str();
}

std::optional<MultiPoly> divided_exactly(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) return std::nullopt;
  MultiPoly quotient;
  MultiPoly remainder = num;
  const auto& den_lead = *den.terms().begin();
  while (!remainder.is_zero()) {
    // Leading terms must divide at every step for an exact quotient.
    const auto& rem_lead = *remainder.terms().begin();
    if (!Monomial::divides(den_lead.first, rem_lead.first)) return std::nullopt;
    const MultiPoly step(rem_lead.first / den_lead.first, rem_lead.second / den_lead.second);
    quotient += step;
    remainder -= step * den;
  }
  return quotient;
}

}  // namespace fkdv
