#include <random>

#include "doctest.h"
#include "eulercg/errors.hpp"
#include "eulercg/groebner.hpp"
#include "util.hpp"

using namespace ecg;
using namespace ecg::test;

namespace {

// Every basis element re-expands from its cofactors.
bool cofactors_ok(const GroebnerBasis& g) {
  for (std::size_t i = 0; i < g.basis.size(); ++i) {
    Poly s(g.basis[i].nvars());
    for (std::size_t j = 0; j < g.input.size(); ++j) s += g.cofactors[i][j] * g.input[j];
    if (s.with_order(g.order) != g.basis[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("buchberger examples") {
  auto r = q2();
  auto g1 = buchberger({r->var(0), r->var(1)}, MonomialOrder::grevlex());
  CHECK(g1.basis.size() == 2);
  auto lexo = MonomialOrder::lex();
  auto g2 = buchberger({P(r, "x^2-x").with_order(lexo), P(r, "y").with_order(lexo)}, lexo);
  CHECK(g2.basis.size() == 2);
  CHECK(cofactors_ok(g2));
  auto g3 = buchberger({P(r, "x+y"), P(r, "x-y")}, MonomialOrder::grevlex());
  CHECK(cofactors_ok(g3));
  CHECK(reduce(r->var(0), g3).is_zero());
  CHECK(reduce(r->var(1), g3).is_zero());
  Ideal xy = I(r, "(x, y)");
  for (const auto& b : g3.basis) CHECK(xy.contains(b));
}

TEST_CASE("buchberger on random ideals") {
  std::mt19937 rng(19);
  auto r = polynomial_ring({"x", "y", "z"});
  for (int k = 0; k < 15; ++k) {
    std::vector<Poly> gens{random_poly(rng, 3, 2, 3), random_poly(rng, 3, 2, 3), random_poly(rng, 3, 2, 2)};
    auto g = buchberger(gens, MonomialOrder::grevlex());
    CHECK(cofactors_ok(g));
    // S-polynomials of a GB reduce to zero: checked through generator reduction
    for (const auto& f : gens) CHECK(reduce(f, g).is_zero());
    // reducedness: no basis term divisible by another leading term
    for (std::size_t i = 0; i < g.basis.size(); ++i)
      for (std::size_t j = 0; j < g.basis.size(); ++j) {
        if (i == j) continue;
        for (const auto& t : g.basis[i].terms()) CHECK_FALSE(divides(g.basis[j].lead().m, t.m));
      }
  }
}

TEST_CASE("normal_form") {
  auto r = q2();
  Ideal xy = I(r, "(x, y)");
  CHECK(xy.reduce(P(r, "x^2")).is_zero());
  CHECK(xy.reduce(r->one()) == r->one());
  Ideal q = I(r, "(x^2 - x)");
  CHECK(q.reduce(P(r, "x^2 + x")) == P(r, "2*x"));
  std::mt19937 rng(2);
  Ideal J = I(r, "(x^2 - y^3, x*y - 1)");
  for (int k = 0; k < 30; ++k) {
    Poly f = random_poly(rng, 2, 5, 5);
    auto nf = normal_form(f, J.gb());
    CHECK(J.reduce(nf.remainder) == nf.remainder);
    Poly back = nf.remainder;
    for (std::size_t i = 0; i < nf.quotients.size(); ++i) back += nf.quotients[i] * J.gb().basis[i];
    CHECK(back == f);
    for (const auto& t : nf.remainder.terms())
      for (const auto& b : J.gb().basis) CHECK_FALSE(divides(b.lead().m, t.m));
  }
}

TEST_CASE("ideal_member") {
  auto r = q2();
  auto c = ideal_member(P(r, "x^2-x"), I(r, "(x, y)"));
  REQUIRE(c);
  CHECK(c->cofactors[0] == P(r, "x-1"));
  CHECK(c->cofactors[1].is_zero());
  CHECK_FALSE(ideal_member(r->one(), I(r, "(x, y)")));
  auto d = ideal_member(P(r, "y^2"), I(r, "(x^2-x, y)"));
  REQUIRE(d);
  CHECK(verify_membership(*d));
  MembershipCertificate bad = *d;
  bad.cofactors[1] += r->one();
  CHECK_FALSE(verify_membership(bad));
}

TEST_CASE("membership certificates re-expand in quotient rings") {
  auto s = make_ring({"x", "y", "z"}, parse_poly_list("(x^2+y^2+z^2-1)", {"x", "y", "z"}), 2, true);
  Ideal J(s, {s->var(0), s->var(1)});
  Poly f = s->parse("z^2 - 1 + x*y");
  auto c = ideal_member(f, J);
  REQUIRE(c);
  CHECK(verify_membership(*c));
  CHECK_FALSE(ideal_member(s->parse("z"), J));
}

TEST_CASE("radical_member") {
  auto r = q2();
  CHECK(radical_member(P(r, "x"), I(r, "(x^2)")));
  CHECK_FALSE(radical_member(r->one(), I(r, "(x)")));
  CHECK(radical_member(P(r, "x+y"), I(r, "((x+y)^3, y-y)")));
  CHECK_FALSE(radical_member(P(r, "x"), I(r, "(x*y)")));
  CHECK(radical_member(P(r, "x*y"), I(r, "(x^2*y, x*y^3)")));
}

TEST_CASE("ideal_intersect") {
  auto r = q2();
  Ideal a = I(r, "(x, y)"), b = I(r, "(x-1, y)");
  Ideal c = ideal_intersect(a, b);
  CHECK(equal_ideals(c, I(r, "(x^2-x, y)")).equal);
  CHECK(equal_ideals(ideal_intersect(a, Ideal::unit(r)), a).equal);
  CHECK(equal_ideals(ideal_intersect(a, a), a).equal);
  CHECK(equal_ideals(ideal_intersect(I(r, "(x)"), I(r, "(y)")), I(r, "(x*y)")).equal);
}

TEST_CASE("intersection properties") {
  std::mt19937 rng(23);
  auto r = q2();
  std::uniform_int_distribution<int> pt(-3, 3);
  for (int k = 0; k < 10; ++k) {
    Ideal a = I(r, "(x^2 - y, x*y)") + Ideal(r, {random_poly(rng, 2, 2, 2)});
    Ideal b(r, {random_poly(rng, 2, 2, 3), random_poly(rng, 2, 2, 3)});
    Ideal c = ideal_intersect(a, b);
    CHECK(a.contains(c));
    CHECK(b.contains(c));
    // products of members lie in both
    Poly u = a.gens()[0] * b.gens()[0] + a.gens()[1] * b.gens()[1];
    CHECK(c.contains(u));
  }
  for (int k = 0; k < 6; ++k) {
    int p = pt(rng), q = pt(rng);
    Ideal a = point(r, p, q), b = point(r, p + 1, q - 2);
    REQUIRE(comaximal(a, b));
    CHECK(equal_ideals(ideal_intersect(a, b), a * b).equal);
  }
}

TEST_CASE("comaximal") {
  auto r = q2();
  auto c = comaximal(I(r, "(x, y)"), I(r, "(x-1, y)"));
  REQUIRE(c);
  CHECK(c->u + c->v == r->one());
  CHECK(verify_comaximal(*c));
  CHECK(I(r, "(x, y)").contains(c->u));
  CHECK_FALSE(comaximal(I(r, "(x, y)"), I(r, "(x, y^2)")));
  auto d = comaximal(I(r, "(x)"), I(r, "(1-x)"));
  REQUIRE(d);
  CHECK(d->u == r->var(0));
  ComaximalityCertificate bad = *d;
  bad.v += r->one();
  CHECK_FALSE(verify_comaximal(bad));
}

TEST_CASE("dimension and height") {
  auto r = q2();
  CHECK(krull_dimension(Ideal::zero(r)) == 2);
  CHECK(krull_dimension(I(r, "(x, y)")) == 0);
  CHECK(krull_dimension(I(r, "(x^2-x, y)")) == 0);
  CHECK(krull_dimension(I(r, "(x*y)")) == 1);
  CHECK(krull_dimension(Ideal::unit(r)) == -1);
  CHECK(height(I(r, "(x)")) == 1);
  CHECK(height(I(r, "(x, y)")) == 2);
  CHECK(height(I(r, "(x^2-x, y)")) == 2);
  CHECK_THROWS_AS(height(Ideal::unit(r)), PreconditionError);
  CHECK(height_at_least(Ideal::unit(r), 5));
  auto nd = make_ring({"x", "y"}, parse_poly_list("(x*y)", {"x", "y"}), 1, false);
  CHECK_THROWS_AS(height(Ideal(nd, {nd->var(0)})), PreconditionError);
  auto q3 = polynomial_ring({"x", "y", "z"});
  for (const char* g : {"(x)", "(x, y*z)", "(x-y, y-z, z^2)", "(x*y - z^2)"}) {
    Ideal J(q3, parse_poly_list(g, q3->vars()));
    CHECK(height(J) + krull_dimension(J) == 3);
  }
}

TEST_CASE("equal_ideals") {
  auto r = q2();
  auto e = equal_ideals(I(r, "(x, y)"), I(r, "(x+y, y)"));
  CHECK(e.equal);
  CHECK(verify_equality(e));
  CHECK_FALSE(equal_ideals(I(r, "(x)"), I(r, "(x^2)")).equal);
  CHECK(equal_ideals(I(r, "(x^2-x, y)"), ideal_intersect(I(r, "(x,y)"), I(r, "(x-1,y)"))).equal);
}
