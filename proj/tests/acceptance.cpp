// Acceptance suite: one PASS/FAIL line per criterion.
//
//   eulercg_acceptance <euler-cg binary> <cli fixture dir> <work dir> [criterion ids]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "eulercg/artinian.hpp"
#include "eulercg/errors.hpp"
#include "eulercg/euler_group.hpp"
#include "instances.hpp"
#include "util.hpp"

using namespace ecg;
using namespace ecg::test;
namespace fs = std::filesystem;

namespace {

// Pinned limits, seconds.
constexpr double kLimitMembership = 10;
constexpr double kLimitIntersection = 60;
constexpr double kLimitAddition = 300;
constexpr double kLimitSubtraction = 300;

struct Check {
  bool ok = true;
  std::string note;
  void expect(bool c, const std::string& what) {
    if (!c && ok) note = what;
    ok = ok && c;
  }
};

GeneratorTuple tuple(const Ideal& J) { return make_generator_tuple(J, J.gens()); }

std::vector<Poly> times(const Ring& r, const std::vector<Poly>& row, const PolyMat& m) {
  std::vector<Poly> out;
  for (int j = 0; j < m.cols(); ++j) {
    Poly acc = r->zero();
    for (int i = 0; i < m.rows(); ++i) acc += row[i] * m.at(i, j);
    out.push_back(r->reduce(acc));
  }
  return out;
}

PolyMat int_mat(const Ring& r, long a, long b, long c, long d) {
  return PolyMat::from_rows({{r->constant(a), r->constant(b)}, {r->constant(c), r->constant(d)}});
}

// ---- univariate oracle: dense coefficient vectors, Euclid over Q

using Dense = std::vector<Rational>;  // low degree first

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense dense(const Poly& f) {
  Dense a;
  for (const auto& t : f.terms()) {
    std::size_t d = t.m[0];
    if (a.size() <= d) a.resize(d + 1, Rational(0));
    a[d] += t.c;
  }
  trim(a);
  return a;
}

Dense rem(Dense a, const Dense& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    trim(a);
  }
  return a;
}

Dense gcd(Dense a, Dense b) {
  while (!b.empty()) {
    Dense r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly random_univariate(std::mt19937& rng, const Ring& r, int deg) {
  std::uniform_int_distribution<int> c(-3, 3);
  Poly f = r->zero();
  for (int d = 0; d <= deg; ++d) f += r->var(0).pow(d).scaled(c(rng));
  return f;
}

Check membership_oracle() {
  Check c;
  auto r = q2();
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> deg(0, 4), count(1, 3), coin(0, 1);
  Poly x = r->var(0);
  int members = 0;
  for (int k = 0; k < 200; ++k) {
    // a shared factor makes (g) a proper ideal most of the time
    Poly common = random_univariate(rng, r, deg(rng) % 3);
    if (common.is_zero()) common = x - r->constant(k % 5);
    std::vector<Poly> g;
    int n = count(rng);
    for (int i = 0; i < n; ++i) g.push_back(common * random_univariate(rng, r, deg(rng)));
    Poly f = random_univariate(rng, r, 5);
    if (coin(rng))
      for (const auto& gi : g) f += gi * random_univariate(rng, r, 2);
    Dense d;
    for (const auto& gi : g) d = gcd(d, dense(gi));
    bool oracle = d.empty() ? f.is_zero() : rem(dense(f), d).empty();
    auto cert = ideal_member(f, Ideal(r, g));
    c.expect(cert.has_value() == oracle, "disagrees with gcd oracle at instance " + std::to_string(k));
    if (cert) c.expect(verify_membership(*cert), "cofactors do not re-expand");
    members += oracle;
  }
  // both answers must be well represented
  c.expect(members >= 50 && members <= 150, "unbalanced corpus: " + std::to_string(members) + " members");
  return c;
}

// ---- intersections of comaximal complete intersections

Ideal random_ci(std::mt19937& rng, const Ring& r, const std::vector<int>& roots) {
  // (prod (x - p_i), y - h(x)) vanishes on the points (p_i, h(p_i))
  std::uniform_int_distribution<int> c(-2, 2);
  Poly x = r->var(0), y = r->var(1);
  Poly f = r->one();
  for (int p : roots) f *= x - r->constant(p);
  Poly h = x.scaled(c(rng)) + r->constant(c(rng)) + (x * x).scaled(c(rng));
  return Ideal(r, {f, y - h});
}

Check intersection_soundness() {
  Check c;
  auto r = q2();
  std::mt19937 rng(202);
  std::uniform_int_distribution<int> pt(-4, 4), n(1, 3);
  for (int k = 0; k < 50; ++k) {
    std::vector<int> all;
    while (static_cast<int>(all.size()) < 4) {
      int p = pt(rng);
      if (std::find(all.begin(), all.end(), p) == all.end()) all.push_back(p);
    }
    int split = n(rng);
    std::vector<int> a(all.begin(), all.begin() + split), b(all.begin() + split, all.end());
    Ideal L = random_ci(rng, r, a), R = random_ci(rng, r, b);
    c.expect(comaximal(L, R).has_value(), "pair is not comaximal");
    Ideal K = ideal_intersect(L, R);
    auto eq = equal_ideals(K, L * R);
    c.expect(eq.equal && verify_equality(eq), "intersection differs from the product at pair " + std::to_string(k));
  }
  return c;
}

// ---- principles

Check addition() {
  Check c;
  auto r = q2();
  Ideal J1 = I(r, "(x, y)"), J2 = I(r, "(x-1, y)");
  std::vector<Poly> naive{P(r, "x - 3*x^2 + 2*x^3"), P(r, "y")};
  c.expect(congruence_mod_square(naive, J1.gens(), J1).has_value() &&
               congruence_mod_square(naive, J2.gens(), J2).has_value(),
           "naive tuple misses a residue");
  c.expect(!equal_ideals(Ideal(r, naive), ideal_intersect(J1, J2)).equal, "naive tuple generates");
  auto fixed = addition_principle(tuple(J1), tuple(J2));
  c.expect(verify_principle_result(fixed), "regression instance does not verify");

  std::mt19937 rng(303);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int k = 0; k < 20; ++k) {
    PointPair pp = random_points(rng);
    Ideal A = point(r, pp.p1, pp.q1), B = point(r, pp.p2, pp.q2);
    auto mix = [&](const Ideal& J) {
      auto g = J.gens();
      Poly a = g[0] + g[1].scaled(d(rng));
      return make_generator_tuple(J, {a, g[1] + a.scaled(d(rng))});
    };
    auto ja = mix(A), jb = mix(B);
    auto res = addition_principle(ja, jb);
    c.expect(verify_principle_result(res), "random instance does not verify");
    // generation both ways and both congruence families, rebuilt here
    auto eq = equal_ideals(Ideal(r, res.output.elements), ideal_intersect(A, B));
    c.expect(eq.equal && verify_equality(eq), "output does not generate the intersection");
    auto c1 = congruence_mod_square(res.output.elements, ja.elements, A);
    auto c2 = congruence_mod_square(res.output.elements, jb.elements, B);
    c.expect(c1 && verify_congruence(*c1) && c2 && verify_congruence(*c2), "congruence family fails");
  }
  return c;
}

Check subtraction() {
  Check c;
  auto r = q2();
  Ideal J = I(r, "(x, y)"), J1 = I(r, "(x-1, y)");
  auto j2 = make_generator_tuple(ideal_intersect(J, J1), {P(r, "x^2-x"), r->var(1)});
  auto cong = congruence_mod_square(j2.elements, J1.gens(), J1);
  c.expect(cong.has_value(), "fixed congruence missing");
  if (!cong) return c;
  // the witness for the first entry: x^2 - x - (x - 1) = (x - 1)^2
  c.expect(r->equal(j2.elements[0] - J1.gens()[0], P(r, "(x-1)^2")), "witness is not (x-1)^2");
  auto res = subtraction_principle(J, tuple(J1), j2, *cong);
  c.expect(verify_principle_result(res), "fixed instance does not verify");
  c.expect(equal_ideals(Ideal(r, res.output.elements), J).equal, "fixed output does not generate J");

  std::mt19937 rng(404);
  for (int k = 0; k < 10; ++k) {
    auto in = random_subtraction(rng, r);
    auto out = subtraction_principle(in.J, in.j1g, in.j2g, in.cong);
    c.expect(verify_principle_result(out), "random instance does not verify");
    c.expect(equal_ideals(Ideal(r, out.output.elements), in.J).equal, "random output does not generate J");
    c.expect(congruence_mod_square(out.output.elements, in.j2g.elements, in.J).has_value(),
             "random output not congruent mod J^2");
  }
  return c;
}

Check round_trip() {
  Check c;
  auto r = q2();
  std::mt19937 rng(505);
  for (int k = 0; k < 10; ++k) {
    PointPair pp = random_points(rng);
    Ideal J1 = point(r, pp.p1, pp.q1), J2 = point(r, pp.p2, pp.q2);
    auto j1 = tuple(J1), j2 = tuple(J2);
    auto add = addition_principle(j1, j2);
    c.expect(verify_principle_result(add), "addition step does not verify");
    auto cong = congruence_mod_square(add.output.elements, j1.elements, J1);
    c.expect(cong.has_value(), "addition output not congruent to J1 generators");
    if (!cong) continue;
    auto sub = subtraction_principle(J2, j1, add.output, *cong);
    c.expect(verify_principle_result(sub), "subtraction step does not verify");
    c.expect(equal_ideals(Ideal(r, sub.output.elements), J2).equal, "recovered tuple does not generate J2");
    auto back = congruence_mod_square(sub.output.elements, j2.elements, J2);
    c.expect(back && verify_congruence(*back), "recovered tuple not congruent mod J2^2");
    std::cout << "  round trip " << k + 1 << "/10 done" << std::endl;
  }
  return c;
}

// ---- lemmas

Check sl2() {
  Check c;
  auto r = q2();
  std::mt19937 rng(606);
  std::uniform_int_distribution<int> d(-2, 2), coin(0, 1);
  for (int k = 0; k < 50; ++k) {
    PointPair pp = random_points(rng);
    Ideal J = k % 2 ? point(r, pp.p1, pp.q1) : ideal_intersect(point(r, pp.p1, pp.q1), point(r, pp.p2, pp.q2));
    auto g = J.gens();
    if (g.size() != 2) g = random_intersection_gens(rng, r, pp);
    // ab: the generators under an integer SL2 matrix
    PolyMat s = int_mat(r, 1, 0, d(rng), 1) * int_mat(r, 1, d(rng), 0, 1);
    auto ab = times(r, g, s);
    // E = Id + m e_ij with m in J
    Poly m = g[0] * random_poly(rng, 2, 1, 2) + g[1] * random_poly(rng, 2, 1, 2);
    PolyMat e = PolyMat::identity(2, 2);
    int i = coin(rng);
    e.at(i, 1 - i) = m;
    auto cd = times(r, ab, e);
    PolyMat delta = sl2_transition(J, make_generator_tuple(J, ab), make_generator_tuple(J, cd));
    c.expect(r->equal(det(delta), r->one()), "det Delta is not 1");
    auto img = times(r, ab, delta);
    c.expect(r->equal(img[0], cd[0]) && r->equal(img[1], cd[1]), "[a,b] Delta differs from [c,d]");
  }
  return c;
}

Rational eval_entry(const LocMatrix& m, int i, int j, std::vector<Rational> pt) {
  pt.resize(m.base.nvars());  // matrices over A ignore the T coordinate
  Rational v = m.num.at(i, j).eval(pt);
  Rational b = m.base.eval(pt);
  for (int k = 0; k < m.power; ++k) v /= b;
  return v;
}

// psi2 * psi1 = sigma, checked at rational points away from s t = 0.
bool pointwise_product(const LocMatrix& a, const LocMatrix& b, const LocMatrix& prod, int n) {
  for (const auto& pt : std::vector<std::vector<Rational>>{{Rational(1, 3), Rational(2)},
                                                           {Rational(-2), Rational(5, 7)},
                                                           {Rational(7, 2), Rational(-1)}}) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational acc = 0;
        for (int k = 0; k < n; ++k) acc += eval_entry(a, i, k, pt) * eval_entry(b, k, j, pt);
        if (acc != eval_entry(prod, i, j, pt)) return false;
      }
  }
  return true;
}

Check quillen() {
  Check c;
  auto r = q1();
  Poly s = r->var(0), t = P(r, "1 - x");
  std::mt19937 rng(707);
  std::uniform_int_distribution<int> nf(1, 3), pw(0, 2), coin(0, 1);
  for (int k = 0; k < 20; ++k) {
    std::vector<std::pair<ElemFactor, int>> fs;
    int n = nf(rng);
    for (int f = 0; f < n; ++f) {
      int i = coin(rng);
      Poly v = random_poly(rng, 1, 2, 3);
      if (v.is_zero()) v = r->one();
      fs.push_back({{i, 1 - i, v}, pw(rng)});
    }
    auto path = elementary_path(r, s, t, 2, fs);
    auto q = quillen_split(path);
    c.expect(verify_quillen_split(path, q), "quillen split does not verify");
    c.expect(pointwise_product(q.psi2, q.psi1, path.sigma, 2), "psi2 psi1 differs from sigma at a point");

    LocMatrix theta = evaluate_path(path, 1);
    auto iso = isotopy_split(theta, path);
    c.expect(verify_isotopy_split(theta, path, iso), "isotopy split does not verify");
    c.expect(pointwise_product(iso.theta1, iso.theta2, theta, 2), "theta1 theta2 differs from theta");
  }
  return c;
}

Check idempotents() {
  Check c;
  auto r = q1();
  for (int k = 1; k <= 5; ++k) {
    Ring rk = make_ring({"x"}, {P(r, "x^2-x").pow(k)}, 0, false);
    Ideal N(rk, {rk->parse("x^2-x")});
    auto l = lift_idempotent(rk->var(0), N);
    int cap = 1;
    while ((1 << (cap - 1)) < k) ++cap;  // ceil(log2 k) + 1
    c.expect(rk->is_zero(l.e * l.e - l.e), "lift is not idempotent at k = " + std::to_string(k));
    c.expect(N.contains(l.e - rk->var(0)), "lift is not congruent to x");
    c.expect(l.iterations <= cap, "too many iterations at k = " + std::to_string(k));
  }
  auto q = q2();
  Ideal J = I(q, "(x, y)"), J1 = I(q, "(x, y - y^2)"), J2 = I(q, "(y^2)");
  auto sp = split_ideal(J, J1, J2);
  c.expect(verify_split_ideal(sp, J, J1, J2), "split_ideal does not verify");
  c.expect(verify_membership(sp.e_in_j2) && sp.e_in_j2.ideal.gens() == J2.gens(), "e in J2 fails");
  c.expect(verify_equality(sp.j_is_j1_plus_e) && sp.j_is_j1_plus_e.equal, "J = J1 + (e) fails");
  c.expect(verify_equality(sp.j_cap_jprime_is_j1) && sp.j_cap_jprime_is_j1.equal, "J cap J' = J1 fails");
  c.expect(verify_comaximal(sp.j2_plus_jprime), "J2 + J' = A fails");
  return c;
}

Check multilinear() {
  Check c;
  auto r = q2();
  std::mt19937 rng(909);
  for (int k = 0; k < 50; ++k) {
    std::vector<Poly> alpha{random_poly(rng, 2, 2, 3), random_poly(rng, 2, 2, 3)};
    std::vector<std::vector<Poly>> p(3);
    for (auto& v : p) v = {random_poly(rng, 2, 2, 3), random_poly(rng, 2, 2, 3)};
    c.expect(alternating_sum(r, alpha, p).is_zero(), "alternating sum is nonzero");
  }
  for (int k = 0; k < 50; ++k) {
    std::vector<std::vector<Poly>> sample;
    do {
      sample = {{random_poly(rng, 2, 2, 3), random_poly(rng, 2, 2, 3)},
                {random_poly(rng, 2, 2, 3), random_poly(rng, 2, 2, 3)}};
    } while ((sample[0][0] * sample[1][1] - sample[0][1] * sample[1][0]).is_zero());
    Poly a0 = random_poly(rng, 2, 2, 3), b = random_poly(rng, 2, 2, 3), a2 = random_poly(rng, 2, 2, 3);
    Poly p02 = random_poly(rng, 2, 1, 2);
    Poly a1 = a0 * b - r->one() - a2 * p02;  // a0 b - alpha(p0) = 1 at p0 = (1, p02)
    auto t = bnminus1_transfer(r, {a1, a2}, b, a0, {r->one(), p02}, sample);
    c.expect(t.holds && r->equal(t.quotient, b), "transfer quotient differs from b");
  }
  return c;
}

Check bookkeeping() {
  Check c;
  auto r = q2();
  std::mt19937 rng(1010);
  std::uniform_int_distribution<int> d(-2, 2);
  auto equivalent = [](const Orientation& a, const Orientation& b) {
    return orientation_compare(a, b).verdict == Verdict::Equivalent;
  };

  // det oracle: w_k = g M_k, equivalent iff det M_i = det M_j
  Ideal J = I(r, "(x^2 - x, y)");
  std::vector<Orientation> ws;
  std::vector<long> dets;
  while (ws.size() < 6) {
    long a = d(rng), b = d(rng), e = d(rng), f = d(rng);
    if (a * f - b * e == 0) continue;
    ws.push_back(make_orientation(J, times(r, J.gens(), int_mat(r, a, b, e, f))));
    dets.push_back(a * f - b * e);
  }
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = 0; j < ws.size(); ++j) {
      c.expect(equivalent(ws[i], ws[j]) == (dets[i] == dets[j]), "verdict disagrees with det oracle");
      c.expect(equivalent(ws[i], ws[j]) == equivalent(ws[j], ws[i]), "not symmetric");
      for (std::size_t k = 0; k < ws.size(); ++k)
        if (equivalent(ws[i], ws[j]) && equivalent(ws[j], ws[k]))
          c.expect(equivalent(ws[i], ws[k]), "not transitive");
    }

  // square by a, then by a^-1 mod J, is the original class
  auto w = make_orientation(J, J.gens());
  Algebra alg = quotient_algebra(J);
  for (const char* s : {"x + 2", "3*x - 5", "y + x + 1", "-2"}) {
    Poly a = P(r, s);
    auto inv = try_invert(residue(alg, a));
    c.expect(inv.has_value(), "unit has no inverse");
    if (!inv) continue;
    auto back = square_rewrite(square_rewrite(w, a).result, inv->poly());
    c.expect(equivalent(back.result, w), "square rewrite is not an involution");
  }

  // 20 + 20 zero-certificate corpus
  std::uniform_int_distribution<int> pt(-2, 2);
  int accepted = 0, rejected = 0;
  for (int k = 0; k < 20; ++k) {
    Ideal K = k % 2 ? point(r, pt(rng), pt(rng)) : I(r, "(x^2 - 1, y - x)");
    PolyMat e = PolyMat::identity(2, 2);
    for (int s = 0; s < 3; ++s) {
      PolyMat f = PolyMat::identity(2, 2);
      f.at(s % 2, 1 - s % 2) = r->var(s % 2).scaled(d(rng)) + r->constant(d(rng));
      e = e * f;
    }
    auto u = times(r, K.gens(), e);
    PolyMat L = int_mat(r, 1, 0, pt(rng), 1) * int_mat(r, 1, pt(rng), 0, 1);
    auto wk = make_orientation(K, times(r, u, L));
    ZeroCertificate z{wk, make_generator_tuple(K, u), L};
    if (check_zero_certificate(z)) ++accepted;
    ZeroCertificate bad = z;
    switch (k % 4) {
      case 0:
        for (int i = 0; i < 2; ++i) bad.sl_link.at(i, 0) = bad.sl_link.at(i, 0).scaled(2);
        break;
      case 1:
        bad.sl_link.at(0, 1) += r->one();
        break;
      case 2:
        bad.witness = make_generator_tuple(K, {r->reduce(u[0] * (r->one() + u[0])), u[1]});
        break;
      default:
        bad.orientation = make_orientation(K, {wk.tuple.elements[1], wk.tuple.elements[0]});
        break;
    }
    if (!check_zero_certificate(bad)) ++rejected;
  }
  c.expect(accepted == 20 && rejected == 20,
           "separation " + std::to_string(accepted) + "/20 accepted, " + std::to_string(rejected) + "/20 rejected");
  return c;
}

Check sphere() {
  Check c;
  Ring s = sphere_ring();
  auto cl = stably_free_class(make_unimodular_row(s, {P(s, "z"), P(s, "x"), P(s, "y")}), 2);
  c.expect(!cl.zero_class, "class reported zero");
  c.expect(cl.orientation.ideal.gens() == std::vector<Poly>{P(s, "x"), P(s, "y")}, "ideal is not (x, y)");
  c.expect(cl.orientation.tuple.size() == 2 && s->equal(cl.orientation.tuple.elements[0], P(s, "y")) &&
               s->equal(cl.orientation.tuple.elements[1], P(s, "-x")),
           "tuple is not (y, -x)");
  c.expect(verify_orientation(cl.orientation), "orientation does not verify");
  return c;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Check determinism(const std::string& cli, const fs::path& fixtures, const fs::path& work) {
  Check c;
  fs::create_directories(work);
  int runs = 0;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(fixtures)) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    if (f.extension() != ".json") continue;
    std::string out[2];
    int code[2];
    for (int k = 0; k < 2; ++k) {
      fs::path o = work / (f.stem().string() + (k ? ".2.json" : ".1.json"));
      fs::remove(o);
      std::string cmd = "\"" + cli + "\" --instance \"" + f.string() + "\" --out \"" + o.string() + "\" 2>/dev/null";
      code[k] = std::system(cmd.c_str());
      out[k] = fs::exists(o) ? slurp(o) : std::string();
    }
    c.expect(code[0] == code[1], f.stem().string() + ": exit codes differ");
    c.expect(out[0] == out[1], f.stem().string() + ": outputs differ");
    ++runs;
  }
  c.expect(runs >= 20, "fewer than 20 CLI instances found");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 4) {
    std::cerr << "usage: eulercg_acceptance <euler-cg> <cli fixture dir> <work dir>\n";
    return 2;
  }
  std::string cli = argv[1];
  fs::path fixtures = argv[2], work = argv[3];

  struct Criterion {
    int id;
    const char* name;
    double limit;  // seconds, 0 for none
    std::function<Check()> run;
  };
  std::vector<Criterion> all{
      {1, "membership agrees with the gcd oracle on 200 instances", kLimitMembership, membership_oracle},
      {2, "intersection equals the product on 50 comaximal pairs", kLimitIntersection, intersection_soundness},
      {3, "addition principle: regression instance and 20 random pairs", kLimitAddition, addition},
      {4, "subtraction principle: fixed instance and 10 random", kLimitSubtraction, subtraction},
      {5, "addition then subtraction round trips on 10 instances", 0, round_trip},
      {6, "sl2 transition on 50 instances", 0, sl2},
      {7, "quillen and isotopy splits on 20 elementary paths", 0, quillen},
      {8, "idempotent lifts for k <= 5 and split_ideal certificates", 0, idempotents},
      {9, "alternating sum and b^(n-1) transfer on 50 instances each", 0, multilinear},
      {10, "orientation comparison, square rewrite and 20+20 zero corpus", 0, bookkeeping},
      {11, "stably free class of (z, x, y) on the sphere", 0, sphere},
      {12, "CLI runs are byte-reproducible", 0, [&] { return determinism(cli, fixtures, work); }},
  };

  std::vector<int> only;
  for (int i = 4; i < argc; ++i) only.push_back(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& cr : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), cr.id) == only.end()) continue;
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.limit > 0 && secs >= cr.limit) c.expect(false, "over the time limit");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs", secs);
    std::cout << (c.ok ? "PASS " : "FAIL ") << cr.id << ": " << cr.name << " (" << buf;
    if (cr.limit > 0) std::cout << ", limit " << cr.limit << "s";
    std::cout << ")";
    if (!c.ok) std::cout << " -- " << c.note;
    std::cout << std::endl;
    failed += !c.ok;
  }
  return failed ? 1 : 0;
}
