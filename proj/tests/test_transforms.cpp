#include <random>

#include "doctest.h"
#include "eulercg/errors.hpp"
#include "eulercg/transforms.hpp"
#include "util.hpp"

using namespace ecg;
using namespace ecg::test;

TEST_CASE("avoid_primes") {
  auto r = q2();
  auto g = make_generator_tuple(I(r, "(x, y)"), {r->var(0), r->var(1)});
  auto a = avoid_primes(g, {I(r, "(x)")});
  CHECK_FALSE(I(r, "(x)").contains(a.c));
  CHECK(a.c == P(r, "x+y"));
  CHECK(avoid_primes(g, {}).c == r->var(0));
  auto h = make_generator_tuple(I(r, "(x)"), {r->var(0)});
  CHECK_THROWS_AS(avoid_primes(h, {I(r, "(x)")}), PreconditionError);
  auto b = avoid_primes(g, {I(r, "(x)"), I(r, "(x+y)"), I(r, "(x-y)")});
  for (const char* p : {"(x)", "(x+y)", "(x-y)"}) CHECK_FALSE(I(r, p).contains(b.c));
}

TEST_CASE("general_position") {
  auto r = q2();
  auto g = general_position(make_generator_tuple(I(r, "(x, y)"), {r->var(0), r->var(1)}));
  CHECK(g.theta.empty());
  CHECK(g.same_ideal.equal);
  // (xy, xz) has height 1 although the whole ideal has height 3
  auto r3 = polynomial_ring({"x", "y", "z"});
  Ideal K(r3, parse_poly_list("(x*y, x*z, 1 - x)", r3->vars()));
  auto d = general_position(make_generator_tuple(K, K.gens()));
  CHECK(d.same_ideal.equal);
  CHECK_FALSE(d.theta.empty());
  for (int i = 1; i <= 3; ++i) {
    std::vector<Poly> prefix(d.new_gens.begin(), d.new_gens.begin() + i);
    CHECK(height(Ideal(r3, prefix)) >= i);
  }
  auto h = make_generator_tuple(I(r, "(x)"), {r->var(0), r->zero()});
  CHECK_THROWS_AS(general_position(h), PreconditionError);
}

TEST_CASE("evans_move") {
  auto r = q2();
  auto m = evans_move(r, {r->var(0), r->var(1)}, r->zero());
  CHECK(m.b[0].is_zero());
  CHECK(m.b[1].is_zero());
  auto n = evans_move(r, {r->var(0), r->zero()}, r->var(1));
  CHECK(height(Ideal(r, n.moved)) == 2);
  CHECK_THROWS_AS(evans_move(r, {r->zero(), r->zero()}, r->var(0)), PreconditionError);
}

TEST_CASE("split_ideal") {
  auto r = q2();
  Ideal J = I(r, "(x, y)"), J1 = I(r, "(x, y - y^2)"), J2 = I(r, "(y^2)");
  auto s = split_ideal(J, J1, J2);
  CHECK(J2.contains(s.e));
  CHECK(verify_split_ideal(s, J, J1, J2));
  CHECK(equal_ideals(s.jprime, I(r, "(x, y - y^2, 1 - y^2)")).equal);
  auto t = split_ideal(J, J, Ideal::zero(r));
  CHECK(t.e.is_zero());
  CHECK(t.jprime.is_unit());
  CHECK_THROWS_AS(split_ideal(J, I(r, "(x, y^2)"), Ideal::zero(r)), PreconditionError);
  SplitIdeal bad = s;
  bad.e += r->var(0);
  CHECK_FALSE(verify_split_ideal(bad, J, J1, J2));
}

TEST_CASE("mohan_kumar") {
  auto r = q2();
  Ideal Iq = I(r, "(x^2 - x, y)");
  auto g = make_generator_tuple(Iq, Iq.gens());
  auto m = mohan_kumar(Iq, g, r->var(0));
  CHECK(m.h.is_zero());
  CHECK(equal_ideals(Ideal(r, m.gens), I(r, "(x, y)")).equal);
  auto z = mohan_kumar(Iq, g, r->zero());
  CHECK(equal_ideals(Ideal(r, z.gens), Iq).equal);
  auto bad = make_generator_tuple(Iq, {P(r, "y"), P(r, "y")});
  CHECK_THROWS_AS(mohan_kumar(Iq, bad, r->var(0)), PreconditionError);
  // a tuple that generates only modulo I^2
  Ideal K = I(r, "(x, y)");
  auto w = make_generator_tuple(K, {P(r, "x + x*y"), P(r, "y + x^2")});
  auto mk = mohan_kumar(K, w, P(r, "x - 2"));
  CHECK(mk.equals_i_plus_x.equal);
}

TEST_CASE("idempotent generator identity (e, x) = (e + (1-e)x)") {
  auto r = make_ring({"x", "y"}, parse_poly_list("(x^2 - x)", {"x", "y"}), 1, false);
  Poly e = r->var(0);
  for (const char* xs : {"y", "y^2 + 1", "x*y - 3", "0", "1"}) {
    Poly x = r->parse(xs);
    CHECK(equal_ideals(Ideal(r, {e, x}), Ideal(r, {e + (r->one() - e) * x})).equal);
  }
}

TEST_CASE("sl2_transition") {
  auto r = q2();
  Ideal J = I(r, "(x, y)");
  auto ab = make_generator_tuple(J, {r->var(0), r->var(1)});
  PolyMat d = sl2_transition(J, ab, ab);
  CHECK(det(d) == r->one());
  auto cd = make_generator_tuple(J, {P(r, "x + x*y"), r->var(1)});
  PolyMat e = sl2_transition(J, ab, cd);
  CHECK(det(e) == r->one());
  auto img = row_times(ab.elements, e);
  CHECK(img[0] == cd.elements[0]);
  CHECK(img[1] == cd.elements[1]);
  auto far = make_generator_tuple(J, {P(r, "x + y"), r->var(1)});
  CHECK_THROWS_AS(sl2_transition(J, ab, far), PreconditionError);
}

TEST_CASE("swan_towber_complete") {
  auto r = q2();
  PolyMat id = swan_towber_complete(r, r->one(), r->zero(), r->zero());
  CHECK(det(id) == r->one());
  CHECK(id.row(0) == std::vector<Poly>{r->one(), r->zero(), r->zero()});
  PolyMat p = swan_towber_complete(r, r->zero(), r->one(), r->zero());
  CHECK(det(p) == r->one());
  CHECK(p.row(0) == std::vector<Poly>{r->zero(), r->one(), r->zero()});
  Poly x = r->var(0), y = r->var(1);
  PolyMat m = swan_towber_complete(r, x, y, P(r, "1 - x^2 - y"));
  CHECK(det(m) == r->one());
  CHECK(m.row(0) == std::vector<Poly>{x * x, y, P(r, "1 - x^2 - y")});
  CHECK_THROWS_AS(swan_towber_complete(r, x, y, r->zero()), PreconditionError);
}

TEST_CASE("unit_transition_2gen") {
  auto r = q2();
  Ideal J = I(r, "(x, y)");
  auto ab = make_generator_tuple(J, {r->var(0), r->var(1)});
  auto one = unit_transition_2gen(J, ab, r->one());
  CHECK(J.contains(det(one.tau) - r->one()));
  auto two = unit_transition_2gen(J, ab, r->constant(2));
  CHECK(J.contains(det(two.tau) - r->constant(4)));
  CHECK(two.regenerates.equal);
  CHECK_THROWS_AS(unit_transition_2gen(J, ab, r->var(0)), PreconditionError);
  Ideal K = I(r, "(x^2 - x, y)");
  auto kab = make_generator_tuple(K, K.gens());
  auto u = unit_transition_2gen(K, kab, P(r, "2*x - 3"));
  CHECK(K.contains(det(u.tau) - P(r, "(2*x-3)^2")));
  CHECK(equal_ideals(Ideal(r, u.new_gens), K).equal);
}

TEST_CASE("moving_lemma_free") {
  auto r = q2();
  Ideal J = I(r, "(x, y)");
  auto m = moving_lemma_free(J, {r->var(0), r->var(1)}, {});
  CHECK(m.jprime.is_unit());
  CHECK(m.beta_generates.equal);
  auto n = moving_lemma_free(J, {r->var(0), r->var(1)}, {I(r, "(x-1, y)")});
  CHECK(n.beta_generates.equal);
  CHECK(verify_comaximal(n.j_plus_jprime));
  REQUIRE(n.avoid_plus_jprime.size() == 1);
  CHECK(verify_comaximal(n.avoid_plus_jprime[0]));
  CHECK(verify_congruence(n.beta_vs_w));
  auto w = moving_lemma_free(J, {P(r, "x + y^2"), P(r, "y + 2*x*y")}, {I(r, "(x-1, y)"), I(r, "(x, y-1)")});
  CHECK(w.beta_generates.equal);
  CHECK(verify_congruence(w.beta_vs_w));
  CHECK_THROWS_AS(moving_lemma_free(J, {r->var(0), r->var(0)}, {}), PreconditionError);
}

TEST_CASE("comaximal_powers") {
  auto r = q1();
  Poly s = r->var(0), t = P(r, "1 - x");
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      auto [V, U] = comaximal_powers(s, t, r->one(), r->one(), a, b);
      CHECK(V * s.pow(a) + U * t.pow(b) == r->one());
    }
}

TEST_CASE("patch_element") {
  auto r = q2();
  Poly s = r->var(0), t = P(r, "1 - x");
  Poly p = P(r, "x*y + 3");
  CHECK(patch_element(r, power_fraction(p, s, 0), power_fraction(p, t, 0)) == p);
  Poly q = P(r, "y^2 - x");
  CHECK(patch_element(r, power_fraction(s * q, s, 1), power_fraction(t * q, t, 1)) == q);
  std::mt19937 rng(13);
  for (int k = 0; k < 15; ++k) {
    Poly c0 = random_poly(rng, 2, 3, 4);
    int a = k % 3, b = (k / 3) % 3;
    Poly c = patch_element(r, power_fraction(c0 * s.pow(a), s, a), power_fraction(c0 * t.pow(b), t, b));
    CHECK(c == c0);
  }
  CHECK_THROWS_AS(patch_element(r, power_fraction(p, s, 0), power_fraction(q, t, 0)), PreconditionError);
}

TEST_CASE("quillen_split") {
  auto r = q1();
  Poly s = r->var(0), t = P(r, "1 - x");
  auto id = elementary_path(r, s, t, 2, {});
  auto q0 = quillen_split(id);
  CHECK(verify_quillen_split(id, q0));
  auto p = elementary_path(r, s, t, 2, {{{0, 1, r->one()}, 1}});
  auto q = quillen_split(p);
  CHECK(verify_quillen_split(p, q));
  auto p2 = elementary_path(r, s, t, 2, {{{0, 1, P(r, "x+2")}, 2}, {{1, 0, P(r, "3*x^2-1")}, 1}});
  auto q2s = quillen_split(p2);
  CHECK(verify_quillen_split(p2, q2s));
  QuillenSplit bad = q;
  bad.psi1.num.at(0, 1) += Poly::constant(p.ringT->nvars(), 1);
  CHECK_FALSE(verify_quillen_split(p, bad));
}

TEST_CASE("isotopy_split") {
  auto r = q1();
  Poly s = r->var(0), t = P(r, "1 - x");
  auto iso = elementary_path(r, s, t, 2, {{{0, 1, r->one()}, 1}});
  LocMatrix theta = evaluate_path(iso, 1);
  auto sp = isotopy_split(theta, iso);
  CHECK(verify_isotopy_split(theta, iso, sp));
  auto idp = elementary_path(r, s, t, 2, {});
  auto sid = isotopy_split(loc_identity(2, s * t), idp);
  CHECK(verify_isotopy_split(loc_identity(2, s * t), idp, sid));
  CHECK_THROWS_AS(isotopy_split(theta, idp), PreconditionError);
}
