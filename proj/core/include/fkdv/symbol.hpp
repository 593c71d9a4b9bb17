#ifndef FKDV_SYMBOL_HPP
#define FKDV_SYMBOL_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace fkdv {

/// The closed symbol universe of the coefficient ring. The order below is
/// the fixed variable order used by the graded-lexicographic monomial
/// order and by canonical printing; it never changes.
///
/// `A` is the quadratic extension generator, A^2 = 2(2*alpha+beta)*A -
/// 40*gamma*omega (see ext_scalar.hpp).
enum class Symbol : unsigned char {
  Alpha,
  Beta,
  Gamma,
  Omega,
  K,
  Lambda,
  A0,
  A1,
  A2,
  B1,
  B2,
  A,
};

inline constexpr std::size_t kSymbolCount = 12;

inline constexpr std::array<std::string_view, kSymbolCount> kSymbolNames = {
    "alpha", "beta", "gamma", "omega", "k", "lambda",
    "a0",    "a1",   "a2",    "b1",    "b2", "A",
};

constexpr std::string_view symbol_name(Symbol s) {
  return kSymbolNames[static_cast<std::size_t>(s)];
}

std::optional<Symbol> symbol_from_name(std::string_view name);

}  // namespace fkdv

#endif  // FKDV_SYMBOL_HPP
