// Exact coefficient arithmetic: rationals, multivariate polynomials, and
// the quadratic extension field.

#include <doctest.h>

#include <random>

#include "fkdv/ext_scalar.hpp"
#include "fkdv/multipoly.hpp"
#include "fkdv/rational.hpp"

using namespace fkdv;

namespace {

MultiPoly sym(Symbol s, unsigned p = 1) { return MultiPoly::symbol(s, p); }

ExtScalar esym(Symbol s) { return ExtScalar::symbol(s); }

// Small random polynomial over a few symbols with coefficients in
// [-5, 5]; used for algebraic-law property checks.
MultiPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<unsigned> expo(0, 2);
  MultiPoly p;
  for (int t = 0; t < 4; ++t) {
    Monomial m;
    m.exp[static_cast<size_t>(Symbol::Alpha)] = static_cast<std::uint16_t>(expo(rng));
    m.exp[static_cast<size_t>(Symbol::Gamma)] = static_cast<std::uint16_t>(expo(rng));
    m.exp[static_cast<size_t>(Symbol::A2)] = static_cast<std::uint16_t>(expo(rng));
    m.exp[static_cast<size_t>(Symbol::A)] = static_cast<std::uint16_t>(expo(rng));
    p.add_term(m, coeff(rng));
  }
  return p;
}

ExtScalar random_scalar(std::mt19937& rng) {
  MultiPoly den = random_poly(rng);
  // Keep denominators A-free and nonzero so construction is legal.
  MultiPoly den_safe;
  for (const auto& [m, c] : den.terms()) {
    Monomial flat = m;
    flat.exp[static_cast<size_t>(Symbol::A)] = 0;
    den_safe.add_term(flat, c);
  }
  if (den_safe.is_zero()) den_safe = MultiPoly::one();
  return ExtScalar(random_poly(rng), den_safe);
}

}  // namespace

TEST_SUITE("exact-arith") {

TEST_CASE("rational parsing and canonical text") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(rational_to_string(Rational(-3, 2)) == "-3/2");
  CHECK(rational_to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rational canonical form is unique") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(numerator(Rational(-2, 4)) == -1);
  CHECK(denominator(Rational(-2, 4)) == 2);
  CHECK(parse_rational("2/-4") == Rational(-1, 2));
  CHECK(denominator(parse_rational("2/-4")) == 2);
}

TEST_CASE("exact rational square roots") {
  CHECK(rational_sqrt_exact(Rational(9, 4)) == Rational(3, 2));
  CHECK(rational_sqrt_exact(Rational(0)) == Rational(0));
  CHECK(rational_sqrt_exact(Rational(6400)) == Rational(80));
  CHECK_FALSE(rational_sqrt_exact(Rational(2)).has_value());
  CHECK_FALSE(rational_sqrt_exact(Rational(-4)).has_value());
}

TEST_CASE("multivariate polynomial arithmetic and canonical text") {
  const MultiPoly x = sym(Symbol::A2);
  const MultiPoly y = sym(Symbol::B2);
  const MultiPoly sq = (x + y) * (x + y);
  const MultiPoly expected = x * x + Rational(2) * (x * y) + y * y;
  CHECK(sq == expected);
  CHECK(sq.term_count() == 3);
  CHECK(sq.degree(Symbol::A2) == 2);
  CHECK((x - x).is_zero());
  CHECK(sq.to_string() == "a2^2 + 2*a2*b2 + b2^2");
}

TEST_CASE("coefficient extraction matches construction") {
  // 2*gamma*a2^3 + 720*omega*a2
  MultiPoly p = Rational(2) * (sym(Symbol::Gamma) * sym(Symbol::A2, 3)) +
                Rational(720) * (sym(Symbol::Omega) * sym(Symbol::A2));
  CHECK(p.coefficient_of(Symbol::A2, 3) == Rational(2) * sym(Symbol::Gamma));
  CHECK(p.coefficient_of(Symbol::A2, 1) == Rational(720) * sym(Symbol::Omega));
  CHECK(p.coefficient_of(Symbol::A2, 2).is_zero());
}

TEST_CASE("exact division recovers factors") {
  const MultiPoly x = sym(Symbol::A2);
  const MultiPoly y = sym(Symbol::B2);
  const auto quotient = divided_exactly(x * x - y * y, x - y);
  REQUIRE(quotient.has_value());
  CHECK(*quotient == x + y);
  CHECK_FALSE(divided_exactly(x * x + y, x - y).has_value());
  CHECK(divided_exactly(MultiPoly::zero(), x)->is_zero());
}

TEST_CASE("extension generator reduction") {
  // A^2 -> 2*(2*alpha+beta)*A - 40*gamma*omega
  const MultiPoly trace =
      Rational(4) * sym(Symbol::Alpha) + Rational(2) * sym(Symbol::Beta);
  const MultiPoly norm = Rational(40) * (sym(Symbol::Gamma) * sym(Symbol::Omega));
  CHECK(reduce_a(sym(Symbol::A, 2)) == trace * sym(Symbol::A) - norm);
  // A^3 = (trace*A - norm)*A -> trace*(trace*A - norm) - norm*A
  const MultiPoly a3 = reduce_a(sym(Symbol::A, 3));
  CHECK(a3 == (trace * trace - norm) * sym(Symbol::A) - trace * norm);
  CHECK(a3.degree(Symbol::A) <= 1);
}

TEST_CASE("reduction is idempotent and multiplicative" * doctest::timeout(30)) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const MultiPoly p = random_poly(rng);
    const MultiPoly q = random_poly(rng);
    const MultiPoly rp = reduce_a(p);
    CHECK(reduce_a(rp) == rp);
    CHECK(reduce_a(p * q) == reduce_a(reduce_a(p) * reduce_a(q)));
  }
}

TEST_CASE("field inverse of the generator") {
  const ExtScalar a = esym(Symbol::A);
  const ExtScalar inv = ExtScalar::one() / a;
  CHECK(a * inv == ExtScalar::one());
  // 1/A = (2*(2*alpha+beta) - A) / (40*gamma*omega)
  const ExtScalar expected =
      (4 * esym(Symbol::Alpha) + 2 * esym(Symbol::Beta) - a) /
      (40 * (esym(Symbol::Gamma) * esym(Symbol::Omega)));
  CHECK(inv == expected);
}

TEST_CASE("conjugation is the nontrivial field automorphism") {
  const ExtScalar a = esym(Symbol::A);
  const ExtScalar trace = 4 * esym(Symbol::Alpha) + 2 * esym(Symbol::Beta);
  const ExtScalar norm = 40 * (esym(Symbol::Gamma) * esym(Symbol::Omega));
  CHECK(a.conjugate() == trace - a);
  CHECK(a * a.conjugate() == norm);
  CHECK(a.conjugate().conjugate() == a);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const ExtScalar x = random_scalar(rng);
    const ExtScalar y = random_scalar(rng);
    CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
    CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
  }
}

TEST_CASE("root product identity used by the solution table") {
  // The two quadratic roots -3A/gamma and -120*omega/A multiply to
  // 360*omega/gamma.
  const ExtScalar a = esym(Symbol::A);
  const ExtScalar gamma = esym(Symbol::Gamma);
  const ExtScalar omega = esym(Symbol::Omega);
  const ExtScalar r1 = -(3 * a) / gamma;
  const ExtScalar r2 = -(120 * omega) / a;
  CHECK(r1 * r2 == 360 * omega / gamma);
}

TEST_CASE("substitution binds symbols homomorphically") {
  // alpha = 10, beta = 25, gamma = 20, omega = 1 (with A the principal
  // root 80): A^2 must evaluate to 2*(2*alpha+beta)*A - 40*gamma*omega.
  const Bindings bind{{Symbol::Alpha, ExtScalar::from_int(10)},
                      {Symbol::Beta, ExtScalar::from_int(25)},
                      {Symbol::Gamma, ExtScalar::from_int(20)},
                      {Symbol::Omega, ExtScalar::from_int(1)},
                      {Symbol::A, ExtScalar::from_int(80)}};
  const ExtScalar a2 = substitute(sym(Symbol::A, 2), bind);
  CHECK(a2.is_rational_constant());
  CHECK(a2.rational_value() == Rational(6400));
  CHECK(substitute(sym(Symbol::A, 2), bind) ==
        substitute(reduce_a(sym(Symbol::A, 2)), bind));
}

TEST_CASE("partial substitution keeps remaining symbols") {
  const MultiPoly p = sym(Symbol::Gamma) * sym(Symbol::A2, 2);
  const ExtScalar image = substitute(p, {{Symbol::Gamma, ExtScalar::from_int(5)}});
  CHECK(image == 5 * (esym(Symbol::A2) * esym(Symbol::A2)));
}

TEST_CASE("algebraic laws on random field elements" * doctest::timeout(60)) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const ExtScalar x = random_scalar(rng);
    const ExtScalar y = random_scalar(rng);
    const ExtScalar z = random_scalar(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == ExtScalar::zero());
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("exact and floating evaluation agree") {
  std::array<Rational, kSymbolCount> qpoint{};
  std::array<double, kSymbolCount> dpoint{};
  for (size_t i = 0; i < kSymbolCount; ++i) {
    qpoint[i] = Rational(static_cast<int>(2 * i + 1), 4);
    dpoint[i] = rational_to_double(qpoint[i]);
  }
  std::mt19937 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const MultiPoly p = random_poly(rng);
    const double exact = rational_to_double(p.eval_rational(qpoint));
    CHECK(p.eval_double(dpoint) == doctest::Approx(exact).epsilon(1e-12));
  }
}

}  // TEST_SUITE
