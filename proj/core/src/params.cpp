#include "fkdv/params.hpp"

#include <stdexcept>

namespace fkdv {

FkdvParams FkdvParams::symbolic() {
  return {ExtScalar::symbol(Symbol::Alpha), ExtScalar::symbol(Symbol::Beta),
          ExtScalar::symbol(Symbol::Gamma), ExtScalar::symbol(Symbol::Omega), "symbolic"};
}

FkdvParams FkdvParams::preset(const std::string& name) {
  auto make = [&name](long long a, long long b, long long g, long long w) {
    FkdvParams p = custom(Rational(a), Rational(b), Rational(g), Rational(w));
    p.preset_name = name;
    return p;
  };
  if (name == "kk") return make(10, 25, 20, 1);
  if (name == "sk") return make(5, 5, 5, 1);
  if (name == "cdg") return make(30, 30, 180, 1);
  if (name == "lax") return make(10, 20, 30, 1);
  if (name == "ito") return make(3, 6, 2, 1);
  throw std::invalid_argument("unknown preset: " + name);
}

FkdvParams FkdvParams::custom(Rational alpha, Rational beta, Rational gamma, Rational omega) {
  if (gamma == 0) throw std::invalid_argument("gamma must be nonzero");
  if (omega == 0) throw std::invalid_argument("omega must be nonzero");
  return {ExtScalar::from_rational(std::move(alpha)), ExtScalar::from_rational(std::move(beta)),
          ExtScalar::from_rational(std::move(gamma)), ExtScalar::from_rational(std::move(omega)),
          "custom"};
}

const std::vector<std::string>& FkdvParams::preset_names() {
  static const std::vector<std::string> names{"kk", "sk", "cdg", "lax", "ito"};
  return names;
}

bool FkdvParams::is_numeric() const {
  return alpha.is_rational_constant() && beta.is_rational_constant() &&
         gamma.is_rational_constant() && omega.is_rational_constant();
}

std::array<Rational, 4> FkdvParams::numeric_values() const {
  if (!is_numeric()) throw std::logic_error("FkdvParams: symbolic parameters have no numeric value");
  return {alpha.rational_value(), beta.rational_value(), gamma.rational_value(),
          omega.rational_value()};
}

}  // namespace fkdv
