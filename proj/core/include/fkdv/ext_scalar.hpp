#ifndef FKDV_EXT_SCALAR_HPP
#define FKDV_EXT_SCALAR_HPP

#include <map>
#include <string>

#include "fkdv/multipoly.hpp"

namespace fkdv {

/// Rewrites every power A^j with j >= 2 through the minimal polynomial
///   A^2 = 2*(2*alpha + beta)*A - 40*gamma*omega
/// until the result has A-degree <= 1 (the fixpoint is computed directly
/// from the power recurrence A^{e+1} = 2S*A^e_lin + ...).
MultiPoly reduce_a(const MultiPoly& p);

/// Element of the coefficient field: a ratio num/den of multivariate
/// polynomials where num has A-degree <= 1 and den is A-free and nonzero.
/// Denominators are kept A-free by conjugate rationalization, so the zero
/// test is a single numerator check.
///
/// Normalization at construction: the common monomial factor of num and
/// den is divided out, both are scaled by the gcd of their rational
/// contents (making them jointly primitive with integer coefficients),
/// and den's leading coefficient is made positive. Full polynomial GCD
/// cancellation is not performed; equality is decided by cross
/// multiplication, which is exact because the extension is a field.
///
/// Values are immutable after construction; all operations are pure.
class ExtScalar {
 public:
  ExtScalar() : num_(), den_(MultiPoly::one()) {}  // zero
  ExtScalar(MultiPoly num, MultiPoly den);

  static ExtScalar from_int(long long v);
  static ExtScalar from_rational(Rational v);
  static ExtScalar from_poly(MultiPoly p);
  static ExtScalar symbol(Symbol s);
  static const ExtScalar& zero();
  static const ExtScalar& one();

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True when the value is a plain rational constant (den constant too).
  bool is_rational_constant() const;
  /// The rational value of a constant scalar; throws std::logic_error
  /// when the scalar is not a rational constant.
  Rational rational_value() const;

  ExtScalar operator-() const;
  friend ExtScalar operator+(const ExtScalar& lhs, const ExtScalar& rhs);
  friend ExtScalar operator-(const ExtScalar& lhs, const ExtScalar& rhs);
  friend ExtScalar operator*(const ExtScalar& lhs, const ExtScalar& rhs);
  /// Division rationalizes any A in the divisor via the conjugate, so the
  /// result's denominator stays A-free. Throws std::domain_error when
  /// rhs is zero.
  friend ExtScalar operator/(const ExtScalar& lhs, const ExtScalar& rhs);
  ExtScalar& operator+=(const ExtScalar& o) { return *this = *this + o; }
  ExtScalar& operator-=(const ExtScalar& o) { return *this = *this - o; }
  ExtScalar& operator*=(const ExtScalar& o) { return *this = *this * o; }
  ExtScalar& operator/=(const ExtScalar& o) { return *this = *this / o; }
  ExtScalar pow(unsigned exponent) const;

  /// Exact value equality by cross multiplication.
  bool operator==(const ExtScalar& other) const;

  /// Image under the field automorphism A -> 2*(2*alpha+beta) - A (the
  /// conjugate root of the minimal polynomial).
  ExtScalar conjugate() const;

  /// Exact evaluation with every symbol bound (including A). Throws
  /// std::domain_error when the denominator evaluates to zero.
  Rational eval_rational(const std::array<Rational, kSymbolCount>& values) const;
  double eval_double(const std::array<double, kSymbolCount>& values) const;

  std::string to_string() const;

 private:
  void normalize();

  MultiPoly num_;
  MultiPoly den_;
};

inline ExtScalar operator+(const ExtScalar& l, long long r) { return l + ExtScalar::from_int(r); }
inline ExtScalar operator*(long long l, const ExtScalar& r) { return ExtScalar::from_int(l) * r; }
inline ExtScalar operator/(const ExtScalar& l, long long r) { return l / ExtScalar::from_int(r); }

using Bindings = std::map<Symbol, ExtScalar>;

/// Homomorphic evaluation of p with the given (possibly partial) symbol
/// bindings; unbound symbols stay symbolic. The result is A-reduced and
/// canonical.
///
/// Binding any of alpha/beta/gamma/omega without also binding A is
/// rejected (std::logic_error) whenever A is involved, because the
/// reduction rule for A refers to the generic parameter symbols.
ExtScalar substitute(const MultiPoly& p, const Bindings& bindings);
ExtScalar substitute(const ExtScalar& x, const Bindings& bindings);

}  // namespace fkdv

#endif  // FKDV_EXT_SCALAR_HPP
