#ifndef FKDV_MULTIPOLY_HPP
#define FKDV_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "fkdv/rational.hpp"
#include "fkdv/symbol.hpp"

namespace fkdv {

/// Exponent vector over the fixed symbol universe.
struct Monomial {
  std::array<std::uint16_t, kSymbolCount> exp{};

  unsigned exponent(Symbol s) const { return exp[static_cast<std::size_t>(s)]; }
  unsigned total_degree() const;
  bool is_unit() const;  // all exponents zero

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; caller guarantees other divides *this.
  Monomial operator/(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

  /// Componentwise minimum (largest common divisor of two monomials).
  static Monomial gcd(const Monomial& a, const Monomial& b);

  /// True when `d` divides `n` componentwise.
  static bool divides(const Monomial& d, const Monomial& n);
};

/// Graded lexicographic order (total degree first, then lex over the fixed
/// symbol order), descending. Used as the map comparator so iteration
/// always yields the leading term first; equal polynomials therefore have
/// identical representations.
struct MonomialGradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial over Rational in the fixed symbol universe.
/// Invariant: no stored coefficient is zero.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialGradedLexGreater>;

  MultiPoly() = default;  // the zero polynomial
  MultiPoly(const Monomial& m, Rational coeff);

  static MultiPoly constant(Rational value);
  static MultiPoly symbol(Symbol s, unsigned power = 1);
  static MultiPoly term(Rational coeff,
                        std::initializer_list<std::pair<Symbol, unsigned>> factors);
  static const MultiPoly& zero();
  static const MultiPoly& one();

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The value of a constant polynomial (0 for the zero polynomial).
  /// Throws std::logic_error if the polynomial is not constant.
  Rational constant_value() const;

  unsigned degree(Symbol s) const;
  unsigned total_degree() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& coeff);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& scale);
  friend MultiPoly operator*(MultiPoly lhs, const Rational& scale) {
    lhs *= scale;
    return lhs;
  }
  friend MultiPoly operator*(const Rational& scale, MultiPoly rhs) {
    rhs *= scale;
    return rhs;
  }
  MultiPoly pow(unsigned exponent) const;

  bool operator==(const MultiPoly& other) const = default;

  /// gcd of all coefficients (positive; 0 for the zero polynomial).
  Rational content() const;
  /// Coefficient of the leading (graded-lex greatest) monomial.
  Rational leading_coefficient() const;
  /// Divide every term's monomial by `m` (must divide all of them).
  MultiPoly divided_by_monomial(const Monomial& m) const;
  /// Componentwise min of all exponent vectors (the largest common
  /// monomial factor); the unit monomial for the zero polynomial.
  Monomial monomial_gcd() const;

  /// Coefficient polynomial of s^power (the terms with that exact power
  /// of s, with s stripped out).
  MultiPoly coefficient_of(Symbol s, unsigned power) const;

  Rational eval_rational(const std::array<Rational, kSymbolCount>& values) const;
  double eval_double(const std::array<double, kSymbolCount>& values) const;

  /// Canonical text, e.g. "2*gamma*a2^3 + 24*alpha*a2^2 - 720*omega*a2".
  /// Terms in descending graded-lex order; monomial factors in the fixed
  /// symbol order. The zero polynomial prints as "0".
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Exact multivariate division: the quotient num/den when den divides num
/// with zero remainder, empty otherwise. Division of zero by anything
/// nonzero yields zero; division by zero yields empty.
std::optional<MultiPoly> divided_exactly(const MultiPoly& num, const MultiPoly& den);

}  // namespace fkdv

#endif  // FKDV_MULTIPOLY_HPP
