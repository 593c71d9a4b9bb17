#include "fkdv/ext_scalar.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fkdv {

namespace {

// 2*(2*alpha + beta): the linear coefficient of the minimal polynomial
// A^2 - 2*(2*alpha+beta)*A + 40*gamma*omega.
MultiPoly trace_poly() {
  return MultiPoly::term(Rational(4), {{Symbol::Alpha, 1}}) +
         MultiPoly::term(Rational(2), {{Symbol::Beta, 1}});
}

// 40*gamma*omega: the constant coefficient (product of the two roots).
MultiPoly norm_poly() {
  return MultiPoly::term(Rational(40), {{Symbol::Gamma, 1}, {Symbol::Omega, 1}});
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  if (a == 0) return b < 0 ? Rational(-b) : b;
  if (b == 0) return a < 0 ? Rational(-a) : a;
  BigInt num = gcd(BigInt(numerator(a)), BigInt(numerator(b)));
  BigInt den = lcm(BigInt(denominator(a)), BigInt(denominator(b)));
  return Rational(num, den);
}

}  // namespace

MultiPoly reduce_a(const MultiPoly& p) {
  std::uint16_t max_deg = 0;
  for (const auto& [mono, coeff] : p.terms()) {
    (void)coeff;
    max_deg = std::max(max_deg, mono.exp[static_cast<std::size_t>(Symbol::A)]);
  }
  if (max_deg <= 1) return p;

  // A^e = lin[e]*A + con[e], built from A^{e+1} = trace*A^e - norm*A^{e-1}.
  const MultiPoly trace = trace_poly();
  const MultiPoly norm = norm_poly();
  std::vector<MultiPoly> lin(max_deg + 1), con(max_deg + 1);
  lin[0] = MultiPoly::zero();
  con[0] = MultiPoly::one();
  lin[1] = MultiPoly::one();
  con[1] = MultiPoly::zero();
  for (std::uint16_t e = 2; e <= max_deg; ++e) {
    lin[e] = trace * lin[e - 1] - norm * lin[e - 2];
    con[e] = trace * con[e - 1] - norm * con[e - 2];
  }

  const MultiPoly a_sym = MultiPoly::symbol(Symbol::A);
  MultiPoly out;
  for (const auto& [mono, coeff] : p.terms()) {
    const std::uint16_t e = mono.exp[static_cast<std::size_t>(Symbol::A)];
    if (e <= 1) {
      out += MultiPoly(mono, coeff);
      continue;
    }
    Monomial stripped = mono;
    stripped.exp[static_cast<std::size_t>(Symbol::A)] = 0;
    const MultiPoly rest(stripped, coeff);
    out += rest * (lin[e] * a_sym + con[e]);
  }
  return out;
}

ExtScalar::ExtScalar(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("ExtScalar: zero denominator");
  num_ = reduce_a(num_);
  if (den_.degree(Symbol::A) > 0) {
    den_ = reduce_a(den_);
    if (den_.degree(Symbol::A) > 0) {
      // Rationalize: multiply both sides by the conjugate of the denominator.
      const MultiPoly p = den_.coefficient_of(Symbol::A, 0);
      const MultiPoly q = den_.coefficient_of(Symbol::A, 1);
      const MultiPoly conj = p + q * trace_poly() - q * MultiPoly::symbol(Symbol::A);
      num_ = reduce_a(num_ * conj);
      den_ = reduce_a(den_ * conj);
      if (den_.degree(Symbol::A) > 0)
        throw std::logic_error("ExtScalar: conjugate rationalization failed");
    }
  }
  if (den_.is_zero()) throw std::domain_error("ExtScalar: denominator is a zero divisor");
  normalize();
}

void ExtScalar::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly::one();
    return;
  }
  const Monomial common = Monomial::gcd(num_.monomial_gcd(), den_.monomial_gcd());
  if (!common.is_unit()) {
    num_ = num_.divided_by_monomial(common);
    den_ = den_.divided_by_monomial(common);
  }
  Rational scale = rational_gcd(num_.content(), den_.content());
  if (den_.leading_coefficient() < 0) scale = -scale;
  if (scale != 1) {
    const Rational inv = Rational(1) / scale;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

ExtScalar ExtScalar::from_int(long long v) {
  return from_poly(MultiPoly::constant(Rational(v)));
}

ExtScalar ExtScalar::from_rational(Rational v) {
  return from_poly(MultiPoly::constant(std::move(v)));
}

ExtScalar ExtScalar::from_poly(MultiPoly p) {
  return ExtScalar(std::move(p), MultiPoly::one());
}

ExtScalar ExtScalar::symbol(Symbol s) { return from_poly(MultiPoly::symbol(s)); }

const ExtScalar& ExtScalar::zero() {
  static const ExtScalar v;
  return v;
}

const ExtScalar& ExtScalar::one() {
  static const ExtScalar v = from_int(1);
  return v;
}

bool ExtScalar::is_rational_constant() const {
  return num_.is_constant() && den_.is_constant();
}

Rational ExtScalar::rational_value() const {
  if (!is_rational_constant())
    throw std::logic_error("ExtScalar: not a rational constant: " + to_string());
  if (num_.is_zero()) return Rational(0);
  return num_.terms().begin()->second / den_.terms().begin()->second;
}

ExtScalar ExtScalar::operator-() const {
  return ExtScalar(num_ * Rational(-1), den_);
}

ExtScalar operator+(const ExtScalar& lhs, const ExtScalar& rhs) {
  if (lhs.den_ == rhs.den_) return ExtScalar(lhs.num_ + rhs.num_, lhs.den_);
  return ExtScalar(lhs.num_ * rhs.den_ + rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
}

ExtScalar operator-(const ExtScalar& lhs, const ExtScalar& rhs) {
  if (lhs.den_ == rhs.den_) return ExtScalar(lhs.num_ - rhs.num_, lhs.den_);
  return ExtScalar(lhs.num_ * rhs.den_ - rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
}

ExtScalar operator*(const ExtScalar& lhs, const ExtScalar& rhs) {
  return ExtScalar(lhs.num_ * rhs.num_, lhs.den_ * rhs.den_);
}

ExtScalar operator/(const ExtScalar& lhs, const ExtScalar& rhs) {
  if (rhs.is_zero()) throw std::domain_error("ExtScalar: division by zero");
  // The constructor rationalizes the A part of the new denominator.
  return ExtScalar(lhs.num_ * rhs.den_, lhs.den_ * rhs.num_);
}

ExtScalar ExtScalar::pow(unsigned exponent) const {
  ExtScalar result = one();
  ExtScalar base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

bool ExtScalar::operator==(const ExtScalar& other) const {
  // den is A-free, so the cross products already have A-degree <= 1.
  return num_ * other.den_ == other.num_ * den_;
}

ExtScalar ExtScalar::conjugate() const {
  const MultiPoly p = num_.coefficient_of(Symbol::A, 0);
  const MultiPoly q = num_.coefficient_of(Symbol::A, 1);
  return ExtScalar(p + q * trace_poly() - q * MultiPoly::symbol(Symbol::A), den_);
}

Rational ExtScalar::eval_rational(const std::array<Rational, kSymbolCount>& values) const {
  const Rational d = den_.eval_rational(values);
  if (d == 0) throw std::domain_error("ExtScalar: denominator vanishes at evaluation point");
  return num_.eval_rational(values) / d;
}

double ExtScalar::eval_double(const std::array<double, kSymbolCount>& values) const {
  return num_.eval_double(values) / den_.eval_double(values);
}

std::string ExtScalar::to_string() const {
  if (den_ == MultiPoly::one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

bool binds_parameter_inconsistently(const MultiPoly& p, const Bindings& bindings) {
  if (bindings.count(Symbol::A)) return false;
  bool param_bound = false;
  for (Symbol s : {Symbol::Alpha, Symbol::Beta, Symbol::Gamma, Symbol::Omega}) {
    auto it = bindings.find(s);
    if (it != bindings.end() && !(it->second == ExtScalar::symbol(s))) param_bound = true;
  }
  if (!param_bound) return false;
  if (p.degree(Symbol::A) > 0) return true;
  for (const auto& [sym, value] : bindings) {
    (void)sym;
    if (value.num().degree(Symbol::A) > 0) return true;
  }
  return false;
}

}  // namespace

ExtScalar substitute(const MultiPoly& p, const Bindings& bindings) {
  if (binds_parameter_inconsistently(p, bindings))
    throw std::logic_error(
        "substitute: binding alpha/beta/gamma/omega while A stays symbolic "
        "breaks the reduction rule for A; bind A as well");

  // Per-symbol power cache, filled lazily up to the largest exponent seen.
  std::array<std::vector<ExtScalar>, kSymbolCount> powers;
  auto power_of = [&](std::size_t idx, std::uint16_t e) -> const ExtScalar& {
    auto& cache = powers[idx];
    if (cache.empty()) {
      cache.push_back(ExtScalar::one());
      auto it = bindings.find(static_cast<Symbol>(idx));
      cache.push_back(it != bindings.end() ? it->second
                                           : ExtScalar::symbol(static_cast<Symbol>(idx)));
    }
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };

  ExtScalar result;
  for (const auto& [mono, coeff] : p.terms()) {
    ExtScalar term = ExtScalar::from_rational(coeff);
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      if (mono.exp[i] > 0) term *= power_of(i, mono.exp[i]);
    }
    result += term;
  }
  return result;
}

ExtScalar substitute(const ExtScalar& x, const Bindings& bindings) {
  return substitute(x.num(), bindings) / substitute(x.den(), bindings);
}

}  // namespace fkdv
