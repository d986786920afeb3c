#include <chrono>
#include <random>

#include "doctest.h"
#include "eulercg/errors.hpp"
#include "eulercg/principles.hpp"
#include "instances.hpp"
#include "util.hpp"

using namespace ecg;
using namespace ecg::test;

namespace {

GeneratorTuple tuple(const Ideal& J) { return make_generator_tuple(J, J.gens()); }

std::string param(const PrincipleResult& r, const std::string& lemma, const std::string& key,
                  int occurrence = 0) {
  for (const auto& st : r.transcript) {
    if (st.lemma != lemma) continue;
    if (occurrence-- > 0) continue;
    for (const auto& kv : st.params)
      if (kv.first == key) return kv.second;
  }
  FAIL("missing transcript entry " << lemma << "." << key);
  return {};
}

// "[(a, b), (c, d)]" as rows.
PolyMat parse_mat(const Ring& r, std::string s) {
  s = s.substr(1, s.size() - 2);
  std::vector<std::vector<Poly>> rows;
  std::size_t at = 0;
  while ((at = s.find('(', at)) != std::string::npos) {
    std::size_t end = s.find(')', at);
    rows.push_back(parse_poly_list(s.substr(at, end - at + 1), r->vars()));
    at = end;
  }
  return PolyMat::from_rows(rows);
}

std::vector<Poly> times(const Ring& r, const std::vector<Poly>& row, const PolyMat& m) {
  std::vector<Poly> out;
  for (int j = 0; j < m.cols(); ++j) {
    Poly acc = r->zero();
    for (int i = 0; i < m.rows(); ++i) acc += row[i] * m.at(i, j);
    out.push_back(r->reduce(acc));
  }
  return out;
}

}  // namespace

TEST_CASE("addition principle regression instance") {
  auto r = q2();
  Ideal J1 = I(r, "(x, y)"), J2 = I(r, "(x-1, y)");
  // the naive CRT tuple agrees with both residues but misses generation
  std::vector<Poly> naive{P(r, "x - 3*x^2 + 2*x^3"), P(r, "y")};
  CHECK(congruence_mod_square(naive, J1.gens(), J1));
  CHECK(congruence_mod_square(naive, J2.gens(), J2));
  CHECK_FALSE(equal_ideals(Ideal(r, naive), ideal_intersect(J1, J2)).equal);
  auto res = addition_principle(tuple(J1), tuple(J2));
  CHECK(verify_principle_result(res));
  CHECK(equal_ideals(Ideal(r, res.output.elements), I(r, "(x^2-x, y)")).equal);
  MESSAGE("c = (" << r->str(res.output.elements[0]) << ", " << r->str(res.output.elements[1]) << ")");
}

TEST_CASE("addition principle on point pairs") {
  auto r = q2();
  Ideal J1 = point(r, 0, 0), J2 = point(r, 1, 1);
  auto res = addition_principle(tuple(J1), tuple(J2));
  CHECK(verify_principle_result(res));
  CHECK_THROWS_AS(addition_principle(tuple(J1), tuple(J1)), PreconditionError);
}

TEST_CASE("subtraction principle fixed instance") {
  auto r = q2();
  Ideal J = I(r, "(x, y)"), J1 = I(r, "(x-1, y)");
  auto j2 = make_generator_tuple(ideal_intersect(J, J1), {P(r, "x^2-x"), r->var(1)});
  auto cong = congruence_mod_square(j2.elements, J1.gens(), J1);
  REQUIRE(cong);
  auto res = subtraction_principle(J, tuple(J1), j2, *cong);
  CHECK(verify_principle_result(res));
  MESSAGE("c = (" << r->str(res.output.elements[0]) << ", " << r->str(res.output.elements[1]) << ")");
}

TEST_CASE("addition principle on random point pairs") {
  auto r = q2();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    PointPair pp = random_points(rng);
    Ideal J1 = point(r, pp.p1, pp.q1), J2 = point(r, pp.p2, pp.q2);
    // random generators of each point ideal: the pair times an integer SL2
    std::uniform_int_distribution<int> d(-2, 2);
    auto mix = [&](const Ideal& J) {
      auto g = J.gens();
      int m = d(rng), n = d(rng);
      Poly a = g[0] + g[1].scaled(m);
      return make_generator_tuple(J, {a, g[1] + a.scaled(n)});
    };
    auto j1 = mix(J1), j2 = mix(J2);
    auto res = addition_principle(j1, j2);
    CHECK(verify_principle_result(res));
    CHECK(equal_ideals(Ideal(r, res.output.elements), ideal_intersect(J1, J2)).equal);
    // independent re-check of both congruences against freshly built squares
    CHECK(congruence_mod_square(res.output.elements, j1.elements, J1));
    CHECK(congruence_mod_square(res.output.elements, j2.elements, J2));
  }
}

TEST_CASE("addition principle on non-point complete intersections") {
  auto r = q2();
  Ideal J1 = I(r, "(x^2 - 2, y)"), J2 = I(r, "(x, y - 1)");
  auto res = addition_principle(tuple(J1), tuple(J2));
  CHECK(verify_principle_result(res));
}

TEST_CASE("subtraction principle on random instances") {
  auto r = q2();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    auto in = random_subtraction(rng, r);
    auto res = subtraction_principle(in.J, in.j1g, in.j2g, in.cong);
    CHECK(verify_principle_result(res));
    CHECK(equal_ideals(Ideal(r, res.output.elements), in.J).equal);
    CHECK(congruence_mod_square(res.output.elements, in.j2g.elements, in.J));
  }
}

TEST_CASE("subtraction principle degenerate and invalid inputs") {
  auto r = q2();
  Ideal J = I(r, "(x, y)"), unit = I(r, "(1)");
  auto a = tuple(J);
  auto cong = congruence_mod_square(a.elements, {r->one(), r->zero()}, unit);
  REQUIRE(cong);
  auto res = subtraction_principle(J, make_generator_tuple(unit, {r->one(), r->zero()}), a, *cong);
  CHECK(res.output.elements == a.elements);
  CHECK(verify_principle_result(res));

  Ideal J1 = I(r, "(x-1, y)");
  auto j2 = make_generator_tuple(ideal_intersect(J, J1), {P(r, "x^2-x"), r->var(1)});
  auto good = congruence_mod_square(j2.elements, J1.gens(), J1);
  REQUIRE(good);
  CongruenceCertificate bad = *good;
  bad.witnesses[0].cofactors[0] += r->one();
  CHECK_THROWS_AS(subtraction_principle(J, tuple(J1), j2, bad), PreconditionError);
  // a congruence about different right-hand sides is rejected too
  auto other = congruence_mod_square(j2.elements, j2.elements, J1);
  REQUIRE(other);
  CHECK_THROWS_AS(subtraction_principle(J, tuple(J1), j2, *other), PreconditionError);
}

TEST_CASE("addition then subtraction recovers J2 generators") {
  auto r = q2();
  std::mt19937 rng(5);
  for (int trial = 0; trial < 4; ++trial) {
    PointPair pp = random_points(rng);
    Ideal J1 = point(r, pp.p1, pp.q1), J2 = point(r, pp.p2, pp.q2);
    auto j1 = tuple(J1), j2 = tuple(J2);
    auto add = addition_principle(j1, j2);
    REQUIRE(verify_principle_result(add));
    // (c) = J1 cap J2 and c = a mod J1^2; subtract J1 back out
    auto cong = congruence_mod_square(add.output.elements, j1.elements, J1);
    REQUIRE(cong);
    auto sub = subtraction_principle(J2, j1, add.output, *cong);
    CHECK(verify_principle_result(sub));
    CHECK(equal_ideals(Ideal(r, sub.output.elements), J2).equal);
    // congruent to the addition output mod J2^2, hence to the original b
    CHECK(congruence_mod_square(sub.output.elements, j2.elements, J2));
  }
}

TEST_CASE("principle results reject tampering") {
  auto r = q2();
  auto res = addition_principle(tuple(I(r, "(x, y)")), tuple(I(r, "(x-1, y)")));
  REQUIRE(verify_principle_result(res));

  auto t1 = res;
  t1.generation.backward[0].cofactors[0] += r->var(0);
  CHECK_FALSE(verify_principle_result(t1));

  auto t2 = res;
  std::swap(t2.congruences[0], t2.congruences[1]);
  CHECK_FALSE(verify_principle_result(t2));

  auto t3 = res;
  t3.output.elements[0] += r->var(1) * r->var(1);
  CHECK_FALSE(verify_principle_result(t3));

  auto t4 = res;
  t4.congruences[1].witnesses[1].cofactors[0] += r->one();
  CHECK_FALSE(verify_principle_result(t4));

  auto t5 = res;
  t5.target = I(r, "(x, y)");
  CHECK_FALSE(verify_principle_result(t5));
}

TEST_CASE("transcripts replay to the same output") {
  auto r = q2();
  Ideal J1 = I(r, "(x, y)"), J2 = I(r, "(x-1, y-1)");
  auto res = addition_principle(tuple(J1), tuple(J2));
  auto again = addition_principle(tuple(J1), tuple(J2));
  REQUIRE(res.transcript.size() == again.transcript.size());
  for (std::size_t i = 0; i < res.transcript.size(); ++i) {
    CHECK(res.transcript[i].lemma == again.transcript[i].lemma);
    CHECK(res.transcript[i].params == again.transcript[i].params);
  }
  CHECK(res.output.elements == again.output.elements);
  // c = g theta adj(sigma) from the recorded parameters
  auto g = parse_poly_list(param(res, "patch_element", "g"), r->vars());
  PolyMat sigma = parse_mat(r, param(res, "lift_elementary", "sigma"));
  PolyMat theta = parse_mat(r, param(res, "lift_elementary", "theta", 1));
  CHECK(times(r, times(r, g, theta), adjugate(sigma)) == res.output.elements);

  Ideal J = I(r, "(x, y)"), K = I(r, "(x-1, y)");
  auto j2 = make_generator_tuple(ideal_intersect(J, K), {P(r, "x^2-x"), r->var(1)});
  auto cong = congruence_mod_square(j2.elements, K.gens(), K);
  auto sub = subtraction_principle(J, tuple(K), j2, *cong);
  auto ct = parse_poly_list(param(sub, "patch_element", "c"), r->vars());
  PolyMat ssigma = parse_mat(r, param(sub, "lift_elementary", "sigma"));
  CHECK(times(r, ct, adjugate(ssigma)) == sub.output.elements);
}

TEST_CASE("tuples of other lengths are not supported") {
  auto r = polynomial_ring({"x", "y", "z"});
  Ideal J1 = I(r, "(x, y, z)"), J2 = I(r, "(x-1, y, z)");
  CHECK_THROWS_AS(addition_principle_general(tuple(J1), tuple(J2)), NotSupported);
  auto cong = congruence_mod_square(J1.gens(), J2.gens(), J2);
  CongruenceCertificate dummy;
  CHECK_THROWS_AS(subtraction_principle_general(J1, tuple(J2), tuple(J1), cong ? *cong : dummy),
                  NotSupported);
  // pairs are routed to the two-generator pipeline
  auto q = q2();
  auto res = addition_principle_general(tuple(I(q, "(x, y)")), tuple(I(q, "(x-1, y)")));
  CHECK(verify_principle_result(res));
}
