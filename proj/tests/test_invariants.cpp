#include <doctest.h>

#include "orbitsep/expr.hpp"
#include "orbitsep/invariants.hpp"

using namespace orbitsep;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kX{"x"};

SelfMap map2(std::string_view a, std::string_view b) {
  return SelfMap({parse_expression(a, kXY, kRationals),
                  parse_expression(b, kXY, kRationals)});
}

SelfMap map1(std::string_view a) {
  return SelfMap({parse_expression(a, kX, kRationals)});
}

Poly pxy(std::string_view s) {
  return parse_expression(s, kXY, kRationals).num();
}

Poly px(std::string_view s) {
  return parse_expression(s, kX, kRationals).num();
}

Point qpt(std::initializer_list<long> coords) {
  Point p;
  for (long c : coords) p.push_back(FieldElem::rational(c));
  return p;
}

}  // namespace

TEST_CASE("invariants of the additive analogue are polynomials in x") {
  SemigroupSpec add({map2("x", "x + y")}, true);
  InvariantBasis b = poly_invariants(add, 2);
  REQUIRE(b.dim() == 3);
  CHECK(b.basis[0] == pxy("1"));
  CHECK(b.basis[1] == pxy("x"));
  CHECK(b.basis[2] == pxy("x^2"));

  InvariantBasis b3 = poly_invariants(add, 3);
  REQUIRE(b3.dim() == 4);
  CHECK(b3.basis[3] == pxy("x^3"));
}

TEST_CASE("squaring map has only constant invariants") {
  SemigroupSpec sq({map1("x^2")}, false);
  InvariantBasis b = poly_invariants(sq, 4);
  REQUIRE(b.dim() == 1);
  CHECK(b.basis[0] == px("1"));
  CHECK(poly_invariants(sq, 8).dim() == 1);
}

TEST_CASE("identity-only monoid leaves everything invariant") {
  SemigroupSpec idm({SelfMap::identity(2, kRationals)}, true);
  InvariantBasis b = poly_invariants(idm, 1);
  CHECK(b.dim() == 3);
}

TEST_CASE("invariants with a rational generator") {
  // (y/x, x) sends x*y to (y/x)*x = y: not invariant. The search still
  // runs through the common-denominator construction; whatever it returns
  // must verify.
  SelfMap m({parse_expression("y/x", kXY, kRationals),
             parse_expression("x", kXY, kRationals)});
  SemigroupSpec spec({m}, false);
  InvariantBasis b = poly_invariants(spec, 2);
  CHECK(b.dim() >= 1);
  for (const Poly& f : b.basis) {
    InvariantCheck c = verify_rational_invariant(
        spec, f, Poly::constant(2, FieldElem::rational(1)));
    CHECK(c.ok);
  }
}

TEST_CASE("verify_rational_invariant on worked examples") {
  SemigroupSpec scale({map2("2*x", "2*y")}, true);
  CHECK(verify_rational_invariant(scale, pxy("x"), pxy("y")).ok);

  SemigroupSpec add({map2("x", "x + y")}, true);
  CHECK(verify_rational_invariant(add, pxy("x"), pxy("1")).ok);

  InvariantCheck bad = verify_rational_invariant(add, pxy("x"), pxy("y"));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.residues.size() == 1);
  // x*y - (x+y)*x = -x^2 by hand
  CHECK(bad.residues[0].second == pxy("-x^2"));

  CHECK_THROWS_AS(verify_rational_invariant(add, pxy("x"), Poly(2, kRationals)),
                  UsageError);
}

TEST_CASE("scaling invariance is insensitive to constant multiples") {
  SemigroupSpec scale({map2("2*x", "2*y")}, true);
  auto a = verify_rational_invariant(scale, pxy("x"), pxy("y"));
  auto b = verify_rational_invariant(scale, pxy("7*x"), pxy("7*y"));
  CHECK(a.ok == b.ok);
}

TEST_CASE("every invariant passes verification with q = 1") {
  SemigroupSpec add({map2("x", "x + y")}, true);
  InvariantBasis b = poly_invariants(add, 3);
  for (const Poly& f : b.basis)
    CHECK(verify_rational_invariant(add, f,
                                    Poly::constant(2, FieldElem::rational(1)))
              .ok);
}

TEST_CASE("invariant bases are degree-filtration consistent") {
  SemigroupSpec add({map2("x", "x + y")}, true);
  InvariantBasis big = poly_invariants(add, 3);
  InvariantBasis small = poly_invariants(add, 2);
  // elements of the big basis with degree <= 2 must span the small one
  std::vector<Poly> truncated;
  for (const Poly& f : big.basis)
    if (f.total_degree() <= 2) truncated.push_back(f);
  REQUIRE(truncated.size() == small.dim());
  for (std::size_t i = 0; i < truncated.size(); ++i)
    CHECK(truncated[i] == small.basis[i]);
}

TEST_CASE("invariants are constant along computed orbits") {
  SemigroupSpec add({map2("x", "x + y")}, true);
  InvariantBasis b = poly_invariants(add, 2);
  OrbitSample s = orbit_sample(add, qpt({3, 4}), 5);
  for (const Poly& f : b.basis) {
    FieldElem v0 = f.eval(s.entries.front().second);
    for (const auto& [w, p] : s.entries) CHECK(f.eval(p) == v0);
  }
}

TEST_CASE("invariance under generators extends to random words") {
  SemigroupSpec spec({map2("x", "x + y"), map2("x", "2*y - x")}, false);
  InvariantBasis b = poly_invariants(spec, 2);
  for (const Poly& f : b.basis) {
    for (const Word& w :
         {Word{{0, 1}}, Word{{1, 0}}, Word{{0, 0, 1}}, Word{{1, 1, 0}}}) {
      const SelfMap& m = spec.word_map(w);
      RatFunc lhs = compose(f, m.components());
      CHECK(ratfunc_equal(lhs, RatFunc(f)));
    }
  }
}

TEST_CASE("density evidence on the squaring fixture") {
  SemigroupSpec sq({map1("x^2")}, false);
  DensityReport free_orbit =
      density_evidence(sq, {FieldElem::rational(3)}, 3, 6, 3, 12);
  CHECK(free_orbit.orbit_ideal_zero);
  CHECK(free_orbit.invariants_trivial);
  CHECK_FALSE(free_orbit.exceptional_flag);
  CHECK(free_orbit.verdict == DensityReport::Verdict::evidence_for_dense);

  DensityReport fixed =
      density_evidence(sq, {FieldElem::rational(1)}, 3, 6, 3, 12);
  CHECK(fixed.exceptional_flag);
  CHECK(fixed.verdict == DensityReport::Verdict::inconclusive);
}

TEST_CASE("density evidence is inconclusive with a nontrivial invariant") {
  SemigroupSpec add({map2("x", "x + y")}, true);
  DensityReport r = density_evidence(add, qpt({2, 0}), 2, 2, 3, 12);
  CHECK_FALSE(r.invariants_trivial);
  CHECK_FALSE(r.orbit_ideal_zero);
  CHECK(r.verdict == DensityReport::Verdict::inconclusive);
}
