#include "eulercg/principles.hpp"

#include <algorithm>

#include "eulercg/errors.hpp"

namespace ecg {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::string join(const Ring& ring, const std::vector<Poly>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + ring->str(v[i]);
  return s + ")";
}

std::string mat_str(const Ring& ring, const PolyMat& m) {
  std::string s = "[";
  for (int i = 0; i < m.rows(); ++i) s += (i ? ", " : "") + join(ring, m.row(i));
  return s + "]";
}

std::vector<Poly> apply(const Ring& ring, const std::vector<Poly>& row, const PolyMat& m) {
  auto out = row_times(row, m);
  for (auto& p : out) p = ring->reduce(p);
  return out;
}

// f = q g + r, no term of r divisible by the leading monomial of g.
Poly divide_by(const Poly& f, const Poly& g, Poly* q) {
  Poly r = f;
  *q = Poly(f.nvars(), f.order());
  const Term& lg = g.lead();
  std::size_t i = 0;
  while (i < r.size()) {
    const Term& t = r.terms()[i];
    if (!divides(lg.m, t.m)) {
      ++i;
      continue;
    }
    Monomial m = quotient(t.m, lg.m);
    Rational c = t.c / lg.c;
    *q += Poly::monomial(f.nvars(), m, c);
    r = r.sub_mul_term(c, m, g);
  }
  return r;
}

std::pair<int, std::size_t> weight(const PolyMat& m) {
  int d = 0;
  std::size_t n = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      d = std::max(d, m.at(i, j).total_degree());
      n += m.at(i, j).size();
    }
  return {d, n};
}

// num + f (a2, -a1)^T (b1, b2) has the same [a] num and det num; f is taken
// from divisions that lower the entries.
PolyMat trim_transition(const Ring& ring, PolyMat num, const std::vector<Poly>& a,
                        const std::vector<Poly>& b) {
  const Poly u[2] = {a[1], -a[0]};
  auto shifted = [&](const Poly& f) {
    PolyMat out = num;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out.at(i, j) = ring->reduce(num.at(i, j) - f * u[i] * b[j]);
    return out;
  };
  for (bool progress = true; progress;) {
    progress = false;
    for (int e = 0; e < 4 && !progress; ++e) {
      Poly g = ring->reduce(u[e / 2] * b[e % 2]);
      if (g.is_zero()) continue;
      Poly f;
      divide_by(num.at(e / 2, e % 2), g, &f);
      if (f.is_zero()) continue;
      PolyMat cand = shifted(f);
      if (weight(cand) < weight(num)) {
        num = std::move(cand);
        progress = true;
      }
    }
  }
  return num;
}

// sigma in E_2(A) with row * sigma = (1, 0) modulo Q.
PolyMat reduce_and_lift(const Ring& ring, const std::vector<Poly>& row, const Ideal& Q,
                        std::vector<TranscriptStep>& tr) {
  Algebra alg = quotient_algebra(Q);
  std::vector<ResidueElement> r;
  for (const auto& p : row) r.push_back(residue(alg, p));
  MatrixOverQuotient m = reduce_unimodular_row(r);
  PolyMat sigma = mat_reduce(ring, lift_elementary(m));
  tr.push_back({"reduce_unimodular_row", {{"row", join(ring, row)}, {"modulo", join(ring, Q.gens())},
                                          {"factors", std::to_string(m.factors->size())}}});
  tr.push_back({"lift_elementary", {{"sigma", mat_str(ring, sigma)}}});
  return sigma;
}

// Factors over base d*other taking (r1, r2) to (1, 0), where r1 * k = -d so
// r1 is a unit once d is inverted.
std::vector<std::pair<ElemFactor, int>> clear_row(const Ring& ring, const Poly& r1, const Poly& r2,
                                                  const Poly& k, const Poly& other) {
  Poly one = ring->one();
  return {{{0, 1, ring->reduce(r2 * k * other)}, 1},
          {{0, 1, ring->reduce(-(k * other))}, 1},
          {{1, 0, ring->reduce(one - r1)}, 0},
          {{0, 1, -one}, 0}};
}

LocMatrix from_fractions(const std::vector<LocFraction>& e, const Poly& base) {
  int p = 0;
  for (const auto& f : e) p = std::max(p, f.power);
  PolyMat num(2, 2, base.nvars());
  for (int i = 0; i < 4; ++i)
    num.at(i / 2, i % 2) = e[i].num * base.pow(static_cast<unsigned>(p - e[i].power));
  return {num, base, p};
}

void require_pair_ring(const GeneratorTuple& g, const Ring& ring) {
  if (g.size() != 2) throw NotSupported("only tuples of length 2 are supported");
  if (!g.ideal.ring()->same_as(*ring)) throw PreconditionError("tuples live in different rings");
}

void require_surface(const Ring& ring) {
  if (ring->asserted_dimension() != 2) throw PreconditionError("the ring must have dimension 2");
  if (!ring->is_domain()) throw PreconditionError("the ring must be asserted a domain");
}

void require_height2(const Ideal& I, const char* name) {
  if (I.is_unit() || height(I) != 2) throw PreconditionError(std::string(name) + " must have height 2");
}

}  // namespace

PrincipleResult addition_principle(const GeneratorTuple& j1g, const GeneratorTuple& j2g) {
  const Ring& ring = j1g.ideal.ring();
  require_pair_ring(j1g, ring);
  require_pair_ring(j2g, ring);
  require_surface(ring);
  const std::vector<Poly>& a = j1g.elements;
  const std::vector<Poly>& b = j2g.elements;
  Ideal J1(ring, a), J2(ring, b);
  if (!equal_ideals(J1, j1g.ideal).equal || !equal_ideals(J2, j2g.ideal).equal)
    throw PreconditionError("tuples must generate their ideals");
  require_height2(J1, "J1");
  require_height2(J2, "J2");
  auto co = comaximal(J1, J2);
  if (!co) throw PreconditionError("J1 and J2 are not comaximal");

  PrincipleResult r;
  r.kind = PrincipleResult::Kind::Addition;
  r.ring = ring;
  r.first = J1;
  r.second = J2;
  r.input_a = a;
  r.input_b = b;
  auto& tr = r.transcript;
  tr.push_back({"comaximal", {{"u", ring->str(co->u)}, {"v", ring->str(co->v)}}});

  PolyMat sigma = reduce_and_lift(ring, a, J2, tr);
  auto at = apply(ring, a, sigma);
  auto bt = apply(ring, b, sigma);

  // 1 = beta1 b1 + beta2 b2 + k a1: s = 1 - k a1 lies in S and J2.
  auto m = ideal_member(ring->one(), Ideal(ring, {bt[0], bt[1], at[0]}));
  if (!m) throw Error("internal: (b) + K is not the unit ideal");
  Poly beta1 = m->cofactors[0], beta2 = m->cofactors[1], k = m->cofactors[2];
  Poly s = ring->reduce(beta1 * bt[0] + beta2 * bt[1]);
  Poly t = ring->reduce(-(k * at[0]));
  tr.push_back({"localize", {{"s", ring->str(s)}, {"t", ring->str(t)}}});

  // Gamma over A_s with [b] Gamma = [1, 0].
  LocMatrix gamma{PolyMat::from_rows({{beta1, -(bt[1] * s)}, {beta2, bt[0] * s}}), s, 1};
  LocMatrix gamma_inv = loc_inverse_det1(gamma);

  // Delta over A_t with [a] Delta = [1, 0], as a path in T.
  auto delta = elementary_path(ring, s, t, 2, clear_row(ring, at[0], at[1], k, s));
  {
    LocMatrix d1 = evaluate_path(delta, 1);
    auto img = apply(ring, at, d1.num);
    if (!ring->equal(img[0], (s * t).pow(d1.power)) || !ring->is_zero(img[1]))
      throw Error("internal: Delta does not clear the row");
  }
  auto iso = conjugate_path(delta, loc_rebase(gamma, t), loc_rebase(gamma_inv, t));
  LocMatrix phi = evaluate_path(iso, 1);
  IsotopySplit sp = isotopy_split(phi, iso);
  tr.push_back({"isotopy_split", {{"k", std::to_string(sp.path.k)},
                                  {"kt", std::to_string(sp.path.kt)},
                                  {"lambda", ring->str(sp.path.lambda)}}});

  LocMatrix left = loc_mul(gamma_inv, sp.theta1);
  auto ap = apply(ring, at, left.num);
  LocMatrix phi2_inv = loc_inverse_det1(sp.theta2);
  auto bp = apply(ring, bt, phi2_inv.num);
  std::vector<Poly> g(2);
  for (int i = 0; i < 2; ++i)
    g[i] = patch_element(ring, power_fraction(ap[i], s, left.power),
                         power_fraction(bp[i], t, phi2_inv.power));
  tr.push_back({"patch_element", {{"g", join(ring, g)}}});

  // Correct the residues: theta = adj(N) mod J1 and Id mod J2.
  Ideal J3 = ideal_intersect(J1, J2);
  PolyMat corr = adjugate(left.num).scaled(co->v) + PolyMat::identity(2, ring->nvars()).scaled(co->u);
  Algebra alg3 = quotient_algebra(J3);
  corr = corr.map([&](const Poly& p) { return alg3->normal(p); });
  MatrixOverQuotient fq = factor_special_linear(alg3, corr);
  PolyMat theta = mat_reduce(ring, lift_elementary(fq));
  tr.push_back({"lift_elementary", {{"theta", mat_str(ring, theta)}}});

  auto ct = apply(ring, g, theta);
  auto c = apply(ring, ct, adjugate(sigma));
  r.target = J3;
  r.output = make_generator_tuple(J3, c);
  auto c1 = congruence_mod_square(c, a, J1);
  auto c2 = congruence_mod_square(c, b, J2);
  if (!c1 || !c2) throw Error("internal: addition output fails a congruence");
  r.congruences = {*c1, *c2};
  r.generation = equal_ideals(Ideal(ring, c), J3);
  if (!r.generation.equal) throw Error("internal: addition output does not generate J1 cap J2");
  return r;
}

PrincipleResult subtraction_principle(const Ideal& J, const GeneratorTuple& j1g,
                                      const GeneratorTuple& j2g, const CongruenceCertificate& cong) {
  const Ring& ring = J.ring();
  require_pair_ring(j1g, ring);
  require_pair_ring(j2g, ring);
  require_surface(ring);
  const std::vector<Poly>& b = j1g.elements;
  const std::vector<Poly>& a = j2g.elements;
  Ideal J1(ring, b);
  if (!equal_ideals(J1, j1g.ideal).equal) throw PreconditionError("(b) does not generate J1");
  if (cong.left != a || cong.right != b || !equal_ideals(cong.base, J1).equal || !verify_congruence(cong))
    throw PreconditionError("the congruence a - b in J1^2 does not verify");

  PrincipleResult r;
  r.kind = PrincipleResult::Kind::Subtraction;
  r.ring = ring;
  r.target = J;
  r.first = J;
  r.second = J1;
  r.input_a = a;
  r.input_b = b;
  auto& tr = r.transcript;

  if (J1.is_unit()) {
    if (!equal_ideals(Ideal(ring, a), J).equal) throw PreconditionError("(a) does not generate J");
    tr.push_back({"degenerate", {{"J1", "(1)"}}});
    r.output = make_generator_tuple(J, a);
    auto c = congruence_mod_square(a, a, J);
    r.congruences = {*c};
    r.generation = equal_ideals(Ideal(ring, a), J);
    return r;
  }
  require_height2(J, "J");
  require_height2(J1, "J1");
  auto co = comaximal(J, J1);
  if (!co) throw PreconditionError("J and J1 are not comaximal");
  if (!equal_ideals(Ideal(ring, a), ideal_intersect(J, J1)).equal)
    throw PreconditionError("(a) does not generate J cap J1");

  PolyMat sigma = reduce_and_lift(ring, b, J, tr);
  auto at = apply(ring, a, sigma);
  auto bt = apply(ring, b, sigma);

  // 1 = j + k b1 with j in J: sJ = j, tK = -k b1.
  std::vector<Poly> jk = J.gens();
  jk.push_back(bt[0]);
  auto m = ideal_member(ring->one(), Ideal(ring, jk));
  if (!m) throw Error("internal: J + K is not the unit ideal");
  Poly k = m->cofactors.back();
  Poly sJ = ring->reduce(ring->one() - k * bt[0]);
  Poly tK = ring->reduce(-(k * bt[0]));
  tr.push_back({"localize", {{"s", ring->str(sJ)}, {"t", ring->str(tK)}}});

  // tau over A_sJ with [a] tau = [b], from the SL2 lemma.
  Ideal aI(ring, at);
  std::vector<std::vector<Poly>> rho(2);
  for (int i = 0; i < 2; ++i) {
    auto w = ideal_member(sJ * bt[i], aI);
    if (!w) throw Error("internal: s b_i is not in (a)");
    rho[i] = w->cofactors;
  }
  Ideal bsq(ring, square_generators(bt));
  const int pk[3] = {0, 0, 1}, pl[3] = {0, 1, 1};
  std::vector<LocFraction> x;
  for (int i = 0; i < 2; ++i) {
    auto mu = ideal_member(at[i] - bt[i], bsq);
    if (!mu) throw Error("internal: a - b left J1^2 after the elementary change");
    for (int j = 0; j < 2; ++j) {
      Poly lam = ring->zero();
      for (int q = 0; q < 3; ++q) lam += mu->cofactors[q] * rho[pk[q]][j] * bt[pl[q]];
      x.push_back(power_fraction(ring->reduce(lam), sJ, 1));
    }
  }
  auto frac = [&](const Poly& p) { return power_fraction(p, sJ, 0); };
  LocFraction one = frac(ring->one());
  LocFraction u = loc_sub(one, x[0]), v = loc_neg(x[1]), w = loc_neg(x[2]), xx = loc_sub(one, x[3]);
  LocFraction f = loc_sub(one, loc_sub(loc_mul(u, xx), loc_mul(v, w)));
  auto gam = ideal_member(f.num, Ideal(ring, bt));
  if (!gam) throw Error("internal: f is not in (b)");
  LocFraction t1 = power_fraction(-gam->cofactors[0], sJ, f.power);
  LocFraction t2 = power_fraction(gam->cofactors[1], sJ, f.power);
  LocMatrix tau = loc_normalize(
      ring, from_fractions(sl2_matrix_from_data({frac(at[0]), frac(at[1]), x[0], x[1], x[2], x[3], t1, t2}), sJ));
  tau.num = trim_transition(ring, tau.num, at, bt);
  {
    auto img = apply(ring, at, tau.num);
    Poly d = sJ.pow(static_cast<unsigned>(tau.power));
    if (!ring->equal(img[0], bt[0] * d) || !ring->equal(img[1], bt[1] * d) ||
        !ring->equal(det(tau.num), d * d))
      throw Error("internal: tau check failed");
  }
  tr.push_back({"sl2_transition", {{"tau", mat_str(ring, tau.num)}, {"power", std::to_string(tau.power)}}});
  LocMatrix tau_inv = loc_inverse_det1(tau);

  // Delta over A_tK with [b] Delta = [1, 0]; split tau Delta tau^-1.
  auto delta = elementary_path(ring, tK, sJ, 2, clear_row(ring, bt[0], bt[1], k, sJ));
  auto iso = conjugate_path(delta, loc_rebase(tau, tK), loc_rebase(tau_inv, tK));
  LocMatrix dt = evaluate_path(iso, 1);
  IsotopySplit sp = isotopy_split(dt, iso);
  tr.push_back({"isotopy_split", {{"k", std::to_string(sp.path.k)},
                                  {"kt", std::to_string(sp.path.kt)},
                                  {"lambda", ring->str(sp.path.lambda)}}});

  auto cp = apply(ring, at, sp.theta1.num);
  LocMatrix right = loc_mul(tau_inv, loc_inverse_det1(sp.theta2));
  std::vector<Poly> dp = right.num.row(0);
  std::vector<Poly> c(2);
  for (int i = 0; i < 2; ++i)
    c[i] = patch_element(ring, power_fraction(cp[i], tK, sp.theta1.power),
                         power_fraction(dp[i], sJ, right.power));
  tr.push_back({"patch_element", {{"c", join(ring, c)}}});
  c = apply(ring, c, adjugate(sigma));

  r.output = make_generator_tuple(J, c);
  auto cg = congruence_mod_square(c, a, J);
  if (!cg) throw Error("internal: subtraction output fails the congruence");
  r.congruences = {*cg};
  r.generation = equal_ideals(Ideal(ring, c), J);
  if (!r.generation.equal) throw Error("internal: subtraction output does not generate J");
  return r;
}

bool verify_principle_result(const PrincipleResult& r) {
  const Ring& ring = r.ring;
  if (!ring || r.output.size() != 2) return false;
  const auto& c = r.output.elements;
  // Every certificate re-expands.
  for (const auto& m : r.output.certs)
    if (!verify_membership(m)) return false;
  if (!verify_equality(r.generation)) return false;
  // Recompute the target and the generation claim independently.
  Ideal target = r.kind == PrincipleResult::Kind::Addition ? ideal_intersect(r.first, r.second) : r.first;
  if (!equal_ideals(target, r.target).equal) return false;
  // The generation certificate must be about (c) and the target, in that
  // order; its cofactors are re-expanded above.
  const auto& fw = r.generation.forward;
  const auto& bw = r.generation.backward;
  if (fw.size() != c.size() || bw.size() != r.target.gens().size()) return false;
  for (std::size_t i = 0; i < fw.size(); ++i)
    if (fw[i].element != c[i] || fw[i].ideal.gens() != r.target.gens()) return false;
  for (std::size_t i = 0; i < bw.size(); ++i)
    if (bw[i].element != r.target.gens()[i] || bw[i].ideal.gens() != c) return false;
  std::vector<std::pair<const std::vector<Poly>*, const Ideal*>> expect;
  if (r.kind == PrincipleResult::Kind::Addition)
    expect = {{&r.input_a, &r.first}, {&r.input_b, &r.second}};
  else
    expect = {{&r.input_a, &r.first}};
  if (r.congruences.size() != expect.size()) return false;
  for (std::size_t i = 0; i < expect.size(); ++i) {
    const auto& cg = r.congruences[i];
    if (cg.left != c || cg.right != *expect[i].first) return false;
    if (cg.base.gens() != expect[i].second->gens()) return false;
    if (!verify_congruence(cg)) return false;
  }
  return true;
}

PrincipleResult addition_principle_general(const GeneratorTuple& j1g, const GeneratorTuple& j2g) {
  if (j1g.size() == 2 && j2g.size() == 2) return addition_principle(j1g, j2g);
  throw NotSupported(
      "addition principle for n != 2 needs elementary transitivity on unimodular rows over "
      "one-dimensional quotients");
}

PrincipleResult subtraction_principle_general(const Ideal& J, const GeneratorTuple& j1g,
                                              const GeneratorTuple& j2g,
                                              const CongruenceCertificate& cong) {
  if (j1g.size() == 2 && j2g.size() == 2) return subtraction_principle(J, j1g, j2g, cong);
  throw NotSupported(
      "subtraction principle for n != 2 needs elementary transitivity on unimodular rows over "
      "one-dimensional quotients");
}

}  // namespace ecg
