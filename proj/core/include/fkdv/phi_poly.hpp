#ifndef FKDV_PHI_POLY_HPP
#define FKDV_PHI_POLY_HPP

#include <map>
#include <string>

#include "fkdv/ext_scalar.hpp"

namespace fkdv {

/// Laurent polynomial in phi with ExtScalar coefficients: a finite map
/// from integer exponent (possibly negative) to nonzero coefficient.
class PhiPoly {
 public:
  using CoeffMap = std::map<int, ExtScalar>;

  PhiPoly() = default;  // zero

  static PhiPoly constant(ExtScalar c);
  /// c * phi^power
  static PhiPoly monomial(int power, ExtScalar c);
  static const PhiPoly& zero();

  bool is_zero() const { return coeffs_.empty(); }
  /// Exponent extremes; both throw std::logic_error on the zero polynomial.
  int min_power() const;
  int max_power() const;
  std::size_t term_count() const { return coeffs_.size(); }
  const CoeffMap& coeffs() const { return coeffs_; }

  /// Coefficient of phi^power (zero when absent).
  const ExtScalar& coefficient(int power) const;
  void add(int power, const ExtScalar& c);

  PhiPoly operator-() const;
  PhiPoly& operator+=(const PhiPoly& other);
  PhiPoly& operator-=(const PhiPoly& other);
  friend PhiPoly operator+(PhiPoly lhs, const PhiPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend PhiPoly operator-(PhiPoly lhs, const PhiPoly& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend PhiPoly operator*(const PhiPoly& lhs, const PhiPoly& rhs);
  friend PhiPoly operator*(const ExtScalar& scale, const PhiPoly& p);

  bool operator==(const PhiPoly& other) const = default;

  /// Substitute values for every symbol appearing in the coefficients;
  /// the result remains a Laurent polynomial in phi.
  PhiPoly substitute_coeffs(const Bindings& bindings) const;

  /// The image under phi -> k/phi: c*phi^j becomes c*k^j*phi^{-j}.
  PhiPoly reflect_phi() const;

  /// Descending powers, e.g. "(2*a2)*phi^3 + (2*a2*k)*phi".
  std::string to_string() const;

 private:
  CoeffMap coeffs_;
};

}  // namespace fkdv

#endif  // FKDV_PHI_POLY_HPP
