// The numeric cascade solver for the restricted system, cross-checked
// against the symbolic solution table.

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "fkdv/families.hpp"
#include "fkdv/solver.hpp"

using namespace fkdv;

namespace {

using Tuple4 = std::array<double, 4>;

Tuple4 as_tuple(const SolutionTuple& t) { return {t.a0, t.a2, t.b2, t.lambda}; }

bool close(const Tuple4& a, const Tuple4& b, double tol) {
  for (int i = 0; i < 4; ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

// All distinct family-table evaluations over both extension roots.
std::vector<Tuple4> family_evaluations(const FkdvParams& params, double k) {
  std::vector<Tuple4> out;
  for (const auto& family : family_table()) {
    for (bool principal : {true, false}) {
      const auto v = evaluate_family(family, params, k, principal);
      const Tuple4 t{v.a0, v.a2, v.b2, v.lambda};
      bool duplicate = false;
      for (const auto& seen : out) duplicate = duplicate || close(seen, t, 1e-10);
      if (!duplicate) out.push_back(t);
    }
  }
  return out;
}

bool same_tuple_sets(const std::vector<Tuple4>& a, const std::vector<Tuple4>& b,
                     double tol) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    bool found = false;
    for (const auto& y : b) found = found || close(x, y, tol);
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("restricted-solver") {

TEST_CASE("hand-checkable tuples at sk, k = -1") {
  const auto result = solve_restricted(FkdvParams::preset("sk"), Rational(-1));
  CHECK(result.exact_path);
  CHECK_FALSE(result.degenerate);

  // (8, -12, 0, -16): the single-power solution with wave speed 16*B*k^2.
  bool found_exact = false;
  // (4, -6, 0, 4): the conjugate-root counterpart, wave speed 16*C*k^2.
  bool found_conjugate = false;
  for (const auto& t : result.tuples) {
    REQUIRE(t.exact);
    CHECK(t.residual_norm == 0.0);
    if (t.exact_values == std::array<Rational, 4>{8, -12, 0, -16}) found_exact = true;
    if (t.exact_values == std::array<Rational, 4>{4, -6, 0, 4}) found_conjugate = true;
  }
  CHECK(found_exact);
  CHECK(found_conjugate);
  CHECK(result.tuples.size() >= 6);
}

TEST_CASE("floating path reproduces the exact tuples to 1e-12") {
  const auto exact = solve_restricted(FkdvParams::preset("sk"), Rational(-1));
  const auto floating =
      solve_restricted(FkdvParams::preset("sk"), Rational(-1), SolveMode::Floating);
  CHECK_FALSE(floating.exact_path);
  REQUIRE(floating.tuples.size() == exact.tuples.size());

  std::vector<Tuple4> a, b;
  for (const auto& t : exact.tuples) a.push_back(as_tuple(t));
  for (const auto& t : floating.tuples) b.push_back(as_tuple(t));
  CHECK(same_tuple_sets(a, b, 1e-12));
}

TEST_CASE("solver output equals the family table on every preset" *
          doctest::timeout(60)) {
  const Rational ks[]{-2, -1, {-1, 4}, {1, 4}, 1};
  for (const auto& name : FkdvParams::preset_names()) {
    const auto params = FkdvParams::preset(name);
    for (const Rational& k : ks) {
      CAPTURE(name);
      CAPTURE(rational_to_string(k));
      const auto result = solve_restricted(params, k);
      std::vector<Tuple4> got;
      for (const auto& t : result.tuples) {
        got.push_back(as_tuple(t));
        CHECK(t.family_id != 0);  // every tuple attributed to a family
      }
      const auto expected = family_evaluations(params, rational_to_double(k));
      CHECK(same_tuple_sets(got, expected, 1e-12));
      CHECK(result.tuples.size() >= 6);
    }
  }
}

TEST_CASE("soundness: every returned tuple passes the residual threshold") {
  for (const auto& name : FkdvParams::preset_names()) {
    const auto result = solve_restricted(FkdvParams::preset(name), Rational(-1),
                                         SolveMode::Floating);
    CHECK(result.residual_scale > 0);
    for (const auto& t : result.tuples) {
      CAPTURE(name);
      CHECK(t.residual_norm <= 1e-9 * result.residual_scale);
    }
  }
}

TEST_CASE("tuples transform by the quadratic scaling law under k -> 4k") {
  // (a0, a2, b2, lambda) -> (s^2*a0, a2, s^4*b2, s^4*lambda) with s = 2.
  const auto params = FkdvParams::preset("kk");
  const auto base = solve_restricted(params, Rational(-1));
  const auto scaled = solve_restricted(params, Rational(-4));
  REQUIRE(base.tuples.size() == scaled.tuples.size());

  std::vector<Tuple4> mapped, got;
  for (const auto& t : base.tuples)
    mapped.push_back({4 * t.a0, t.a2, 16 * t.b2, 16 * t.lambda});
  for (const auto& t : scaled.tuples) got.push_back(as_tuple(t));
  CHECK(same_tuple_sets(mapped, got, 1e-9));
}

TEST_CASE("deduplication leaves no near-coincident tuples") {
  for (const auto& name : FkdvParams::preset_names()) {
    const auto result = solve_restricted(FkdvParams::preset(name), Rational(-1));
    for (size_t i = 0; i < result.tuples.size(); ++i)
      for (size_t j = i + 1; j < result.tuples.size(); ++j)
        CHECK_FALSE(close(as_tuple(result.tuples[i]), as_tuple(result.tuples[j]), 1e-10));
  }
}

TEST_CASE("degenerate discriminant: families coalesce but are returned") {
  // (2*alpha + beta)^2 = 40*gamma*omega with alpha = 1, beta = 0,
  // gamma = 1, omega = 1/10: a double root, A = trace/2 exactly.
  const auto params = FkdvParams::custom(1, 0, 1, Rational(1, 10));
  const auto result = solve_restricted(params, Rational(-1));
  CHECK(result.degenerate);
  CHECK(result.exact_path);
  CHECK(result.tuples.size() == 3);
  for (const auto& t : result.tuples) CHECK(t.residual_norm == 0.0);
}

TEST_CASE("negative discriminant signals no real solution") {
  CHECK_THROWS_AS(solve_restricted(FkdvParams::custom(0, 0, 1, 1), Rational(1)),
                  NegativeDiscriminant);
}

TEST_CASE("irrational discriminant falls back to floating; exact mode refuses") {
  const auto params = FkdvParams::custom(1, 1, 1, Rational(1, 30));
  const auto result = solve_restricted(params, Rational(-1));
  CHECK_FALSE(result.exact_path);
  CHECK(result.tuples.size() == 6);
  for (const auto& t : result.tuples) {
    CHECK_FALSE(t.exact);
    CHECK(t.residual_norm <= 1e-9 * result.residual_scale);
  }
  CHECK_THROWS_AS(solve_restricted(params, Rational(-1), SolveMode::Exact),
                  std::invalid_argument);
}

TEST_CASE("invalid inputs are rejected up front") {
  CHECK_THROWS_AS(solve_restricted(FkdvParams::preset("sk"), Rational(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_restricted(FkdvParams::symbolic(), Rational(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(FkdvParams::custom(1, 1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(FkdvParams::custom(1, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("double-k convenience overload converts exactly") {
  const auto a = solve_restricted(FkdvParams::preset("lax"), -0.25);
  const auto b = solve_restricted(FkdvParams::preset("lax"), Rational(-1, 4));
  REQUIRE(a.tuples.size() == b.tuples.size());
  for (size_t i = 0; i < a.tuples.size(); ++i)
    CHECK(close(as_tuple(a.tuples[i]), as_tuple(b.tuples[i]), 0.0));
}

}  // TEST_SUITE
