#include "fkdv/rational.hpp"

namespace fkdv {

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    BigInt num{std::string(text.substr(0, slash))};
    BigInt den{std::string(text.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("malformed rational literal '" +
                                std::string(text) + "': " + e.what());
  }
}

std::string rational_to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

double rational_to_double(const Rational& value) {
  return value.convert_to<double>();
}

std::optional<Rational> rational_sqrt_exact(const Rational& value) {
  if (value < 0) return std::nullopt;
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  BigInt rem;
  const BigInt num_root = sqrt(num, rem);
  if (rem != 0) return std::nullopt;
  const BigInt den_root = sqrt(den, rem);
  if (rem != 0) return std::nullopt;
  return Rational(num_root, den_root);
}

}  // namespace fkdv
