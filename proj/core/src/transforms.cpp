#include "eulercg/transforms.hpp"

#include <algorithm>

#include "eulercg/errors.hpp"
#include "eulercg/search.hpp"

namespace ecg {

GeneratorTuple make_generator_tuple(const Ideal& ideal, std::vector<Poly> elements) {
  GeneratorTuple g{ideal, std::move(elements), {}};
  for (const auto& e : g.elements) {
    auto c = ideal_member(e, ideal);
    if (!c) throw PreconditionError("tuple element " + ideal.ring()->str(e) + " is not in the ideal");
    g.certs.push_back(*c);
  }
  return g;
}

std::optional<CongruenceCertificate> congruence_mod_square(const std::vector<Poly>& left,
                                                           const std::vector<Poly>& right,
                                                           const Ideal& base) {
  if (left.size() != right.size()) throw PreconditionError("congruence of tuples of different length");
  Ideal sq(base.ring(), square_generators(base.gens()));
  CongruenceCertificate c{left, right, base, sq, {}};
  for (std::size_t i = 0; i < left.size(); ++i) {
    auto w = ideal_member(left[i] - right[i], sq);
    if (!w) return std::nullopt;
    c.witnesses.push_back(*w);
  }
  return c;
}

bool verify_congruence(const CongruenceCertificate& c) {
  if (c.left.size() != c.right.size() || c.witnesses.size() != c.left.size()) return false;
  auto sq = square_generators(c.base.gens());
  for (std::size_t i = 0; i < c.left.size(); ++i) {
    const auto& w = c.witnesses[i];
    if (w.ideal.gens().size() != sq.size()) return false;
    for (std::size_t k = 0; k < sq.size(); ++k)
      if (w.ideal.gens()[k] != sq[k].with_order(MonomialOrder::grevlex())) return false;
    if (w.element != c.left[i] - c.right[i]) return false;
    if (!verify_membership(w)) return false;
  }
  return true;
}

AvoidResult avoid_primes(const GeneratorTuple& gens, const std::vector<Ideal>& primes, int bound) {
  const auto& a = gens.elements;
  if (a.empty()) throw PreconditionError("avoid_primes needs at least one generator");
  for (const auto& p : primes) {
    bool escapes = false;
    for (const auto& g : a)
      if (!p.contains(g)) {
        escapes = true;
        break;
      }
    if (!escapes) throw PreconditionError("the ideal is contained in a listed prime");
  }
  int n = static_cast<int>(a.size());
  for (const auto& b : vectors_up_to(n - 1, search_bound(bound))) {
    Poly c = a[0];
    for (int i = 0; i < n - 1; ++i)
      if (b[i] != 0) c += a[i + 1].scaled(b[i]);
    bool ok = true;
    for (const auto& p : primes)
      if (p.contains(c)) {
        ok = false;
        break;
      }
    if (ok) return {c, b};
  }
  throw BoundExhausted("prime avoidance search exhausted");
}

GeneralPosition general_position(const GeneratorTuple& gens, int bound) {
  const Ring& ring = gens.ideal.ring();
  int n = static_cast<int>(gens.size());
  Ideal whole(ring, gens.elements);
  if (!height_at_least(whole, n)) throw PreconditionError("ideal has height below the tuple length");
  GeneralPosition out;
  std::vector<Poly> cur = gens.elements;
  int b = search_bound(bound);
  for (int i = 0; i + 1 < n; ++i) {
    bool found = false;
    for (const auto& lam : vectors_up_to(n - 1 - i, b)) {
      Poly bi = cur[i];
      for (int j = 0; j < n - 1 - i; ++j)
        if (lam[j] != 0) bi += cur[i + 1 + j].scaled(lam[j]);
      std::vector<Poly> prefix(cur.begin(), cur.begin() + i);
      prefix.push_back(bi);
      if (!height_at_least(Ideal(ring, prefix), i + 1)) continue;
      for (int j = 0; j < n - 1 - i; ++j)
        if (lam[j] != 0) out.theta.push_back({i + 1 + j, i, ring->constant(lam[j])});
      cur[i] = bi;
      found = true;
      break;
    }
    if (!found) throw BoundExhausted("general position search exhausted at prefix " + std::to_string(i + 1));
  }
  out.new_gens = cur;
  out.same_ideal = equal_ideals(Ideal(ring, cur), whole);
  return out;
}

EvansMove evans_move(const Ring& ring, const std::vector<Poly>& row, const Poly& a, int bound) {
  int n = static_cast<int>(row.size());
  std::vector<Poly> with_a = row;
  with_a.push_back(a);
  if (!height_at_least(Ideal(ring, with_a), n))
    throw PreconditionError("(a_1,...,a_n,a) has height below n");
  for (const auto& b : vectors_up_to(n, search_bound(bound))) {
    std::vector<Poly> moved(n);
    for (int i = 0; i < n; ++i) moved[i] = row[i] + a.scaled(b[i]);
    if (!height_at_least(Ideal(ring, moved), n)) continue;
    EvansMove out;
    for (int v : b) out.b.push_back(ring->constant(v));
    out.moved = moved;
    return out;
  }
  throw BoundExhausted("Evans move search exhausted");
}

SplitIdeal split_ideal(const Ideal& J, const Ideal& J1, const Ideal& J2) {
  const Ring& ring = J.ring();
  if (!J.contains(J1)) throw PreconditionError("J1 is not contained in J");
  Ideal Jsq = J * J;
  if (!Jsq.contains(J2)) throw PreconditionError("J2 is not contained in J^2");
  if (!equal_ideals(J1 + J2, J).equal) throw PreconditionError("J1 + J2 differs from J");
  if (krull_dimension(J1) > 0) throw PreconditionError("A/J1 is not zero-dimensional");

  Poly e0 = idempotent_of_ideal(J, J1);
  // Lift e0 into J2 along J = J2 + J1.
  Ideal both(ring, [&] {
    std::vector<Poly> g = J2.gens();
    g.insert(g.end(), J1.gens().begin(), J1.gens().end());
    return g;
  }());
  auto cert = ideal_member(e0, both);
  if (!cert) throw Error("internal: idempotent escapes J1 + J2");
  Poly e = ring->zero();
  for (std::size_t i = 0; i < J2.gens().size(); ++i) e += cert->cofactors[i] * J2.gens()[i];
  e = ring->reduce(e);

  SplitIdeal s;
  s.e = e;
  s.jprime = J1.with({ring->one() - e});
  auto in_j2 = ideal_member(e, J2);
  auto idem = ideal_member(e * e - e, J1);
  auto co = comaximal(J2, s.jprime);
  if (!in_j2 || !idem || !co) throw Error("internal: split certificates failed");
  s.e_in_j2 = *in_j2;
  s.idempotent_mod_j1 = *idem;
  s.j2_plus_jprime = *co;
  s.j_is_j1_plus_e = equal_ideals(J, J1.with({e}));
  s.j_cap_jprime_is_j1 = equal_ideals(ideal_intersect(J, s.jprime), J1);
  if (!s.j_is_j1_plus_e.equal || !s.j_cap_jprime_is_j1.equal) throw Error("internal: split equalities failed");
  return s;
}

bool verify_split_ideal(const SplitIdeal& s, const Ideal& J, const Ideal& J1, const Ideal& J2) {
  const Ring& ring = J.ring();
  if (!verify_membership(s.e_in_j2) || s.e_in_j2.element != s.e) return false;
  if (!verify_membership(s.idempotent_mod_j1) || s.idempotent_mod_j1.element != s.e * s.e - s.e)
    return false;
  if (!verify_comaximal(s.j2_plus_jprime)) return false;
  if (!verify_equality(s.j_is_j1_plus_e) || !verify_equality(s.j_cap_jprime_is_j1)) return false;
  // Recompute the equalities against fresh ideals.
  if (!equal_ideals(J, J1.with({s.e})).equal) return false;
  if (!equal_ideals(ideal_intersect(J, s.jprime), J1).equal) return false;
  if (!comaximal(J2, s.jprime)) return false;
  return equal_ideals(s.jprime, J1.with({ring->one() - s.e})).equal;
}

MohanKumar mohan_kumar(const Ideal& I, const GeneratorTuple& gens_mod_sq, const Poly& x) {
  const Ring& ring = I.ring();
  for (const auto& a : gens_mod_sq.elements)
    if (!I.contains(a)) throw PreconditionError("generator is not in I");
  Ideal a_ideal(ring, gens_mod_sq.elements);
  if (!equal_ideals(a_ideal + I * I, I).equal)
    throw PreconditionError("the tuple does not generate I modulo I^2");
  MohanKumar out;
  out.h = idempotent_of_ideal(I, a_ideal);
  out.gens = gens_mod_sq.elements;
  out.gens.push_back(ring->reduce(out.h + (ring->one() - out.h) * x));
  out.equals_i_plus_x = equal_ideals(Ideal(ring, out.gens), I.with({x}));
  if (!out.equals_i_plus_x.equal) throw Error("internal: Mohan Kumar generators do not match (I, x)");
  return out;
}

std::vector<LocFraction> sl2_matrix_from_data(const LocSL2Data& d) {
  LocFraction one = power_fraction(Poly::constant(d.a.num.nvars(), 1), d.a.base, 0);
  LocFraction u = loc_sub(one, d.x1), v = loc_neg(d.x2);
  LocFraction w = loc_neg(d.x3), x = loc_sub(one, d.x4);
  // Column form: [[u + b t2, v - a t2], [w + b t1, x - a t1]].
  LocFraction d00 = loc_add(u, loc_mul(d.b, d.t2));
  LocFraction d01 = loc_sub(v, loc_mul(d.a, d.t2));
  LocFraction d10 = loc_add(w, loc_mul(d.b, d.t1));
  LocFraction d11 = loc_sub(x, loc_mul(d.a, d.t1));
  return {d00, d10, d01, d11};
}

PolyMat sl2_transition(const Ideal& J, const GeneratorTuple& ab, const GeneratorTuple& cd) {
  const Ring& ring = J.ring();
  if (ab.size() != 2 || cd.size() != 2) throw PreconditionError("sl2_transition needs pairs");
  const Poly &a = ab.elements[0], &b = ab.elements[1];
  const Poly &c = cd.elements[0], &d = cd.elements[1];
  if (!equal_ideals(Ideal(ring, {a, b}), J).equal || !equal_ideals(Ideal(ring, {c, d}), J).equal)
    throw PreconditionError("(a,b) and (c,d) must both generate J");
  Ideal sq(ring, {a * a, a * b, b * b});
  auto m1 = ideal_member(a - c, sq);
  auto m2 = ideal_member(b - d, sq);
  if (!m1 || !m2) throw PreconditionError("a - c or b - d is not in J^2");
  const auto& p = m1->cofactors;
  const auto& q = m2->cofactors;
  Poly x1 = p[0] * a + p[1] * b, x2 = p[2] * b;
  Poly x3 = q[0] * a + q[1] * b, x4 = q[2] * b;
  Poly one = ring->one();
  Poly u = one - x1, v = -x2, w = -x3, x = one - x4;
  Poly f = one - (u * x - v * w);
  auto mf = ideal_member(f, Ideal(ring, {c, d}));
  if (!mf) throw PreconditionError("f = d t2 - c t1 has no solution: f = " + ring->str(f));
  auto frac = [&](const Poly& g) { return power_fraction(g, one, 0); };
  auto m = sl2_matrix_from_data({frac(a), frac(b), frac(x1), frac(x2), frac(x3), frac(x4),
                                 frac(-mf->cofactors[0]), frac(mf->cofactors[1])});
  PolyMat delta = PolyMat::from_rows({{m[0].num, m[1].num}, {m[2].num, m[3].num}});
  delta = mat_reduce(ring, delta);
  auto img = row_times({a, b}, delta);
  if (!ring->equal(img[0], c) || !ring->equal(img[1], d) || !ring->equal(det(delta), one))
    throw Error("internal: SL2 transition check failed");
  return delta;
}

namespace {

// Elementary factors E with row * E = e_1, given entries i, j with cofactors
// si, sj: r_i si + r_j sj = 1.
std::vector<ElemFactor> complete_from_pair(const Ring& ring, std::vector<Poly> row, int i, int j,
                                           const Poly& si, const Poly& sj) {
  int n = static_cast<int>(row.size());
  std::vector<ElemFactor> fs;
  std::vector<int> rest;
  for (int k = 0; k < n; ++k)
    if (k != i && k != j) rest.push_back(k);
  int k = rest.empty() ? -1 : rest[0];
  Poly one = ring->one();
  auto apply = [&](const ElemFactor& f) {
    row[f.j] = ring->reduce(row[f.j] + row[f.i] * f.value);
    fs.push_back(f);
  };
  if (k < 0) {
    // Length two: make the first entry 1 directly.
    Poly r0 = row[i];
    apply({j, i, ring->reduce((one - r0) * sj)});
    k = i;
  } else {
    Poly gap = one - row[k];
    apply({i, k, ring->reduce(gap * si)});
    apply({j, k, ring->reduce(gap * sj)});
  }
  if (!ring->equal(row[k], one)) throw Error("internal: pair completion did not reach 1");
  for (int l = 0; l < n; ++l)
    if (l != k && !ring->is_zero(row[l])) apply({k, l, -row[l]});
  if (k != 0) {
    apply({k, 0, one});
    apply({0, k, -one});
  }
  return fs;
}

}  // namespace

PolyMat swan_towber_complete(const Ring& ring, const Poly& a, const Poly& b, const Poly& c,
                             int bound) {
  std::vector<Poly> row{ring->reduce(a * a), b, c};
  if (!Ideal(ring, row).is_unit()) throw PreconditionError("(a^2, b, c) is not unimodular");
  int nv = ring->nvars();
  int bnd = search_bound(bound);
  // Candidate pre-moves: none, then column dst += m * column src.
  std::vector<ElemFactor> moves{{0, 0, ring->zero()}};
  std::vector<Poly> mults;
  for (int m = 1; m <= bnd; ++m) {
    mults.push_back(ring->constant(m));
    mults.push_back(ring->constant(-m));
  }
  for (int v = 0; v < nv; ++v) {
    mults.push_back(ring->var(v));
    mults.push_back(-ring->var(v));
  }
  for (const auto& m : mults)
    for (int src = 0; src < 3; ++src)
      for (int dst = 0; dst < 3; ++dst)
        if (src != dst) moves.push_back({src, dst, m});
  const int pairs[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  for (const auto& mv : moves) {
    std::vector<Poly> r = row;
    std::vector<ElemFactor> fs;
    if (mv.i != mv.j) {
      r[mv.j] = ring->reduce(r[mv.j] + r[mv.i] * mv.value);
      fs.push_back(mv);
    }
    for (const auto& pr : pairs) {
      Ideal pi(ring, {r[pr[0]]}), pj(ring, {r[pr[1]]});
      auto co = comaximal(pi, pj);
      if (!co) continue;
      auto rest = complete_from_pair(ring, r, pr[0], pr[1], co->u_in_i.cofactors[0],
                                     co->v_in_j.cofactors[0]);
      fs.insert(fs.end(), rest.begin(), rest.end());
      PolyMat M = mat_reduce(ring, product_of(3, inverse_factors(fs), nv));
      for (int j = 0; j < 3; ++j)
        if (!ring->equal(M.at(0, j), row[j])) throw Error("internal: completion first row mismatch");
      if (!ring->equal(det(M), ring->one())) throw Error("internal: completion determinant");
      return M;
    }
  }
  throw BoundExhausted("no elementary completion of (a^2, b, c) found within the bound");
}

UnitTransition unit_transition_2gen(const Ideal& J, const GeneratorTuple& ab, const Poly& a_unit) {
  const Ring& ring = J.ring();
  if (ab.size() != 2) throw PreconditionError("unit_transition_2gen needs a pair");
  Algebra alg = quotient_algebra(J);
  auto inv = try_invert(residue(alg, a_unit));
  if (!inv) throw PreconditionError("a is not a unit modulo J");
  const Poly &a1 = ab.elements[0], &a2 = ab.elements[1];
  if (!equal_ideals(Ideal(ring, {a1, a2}), J).equal) throw PreconditionError("(a1, a2) does not generate J");
  UnitTransition out;
  out.b = inv->poly();
  out.completion = swan_towber_complete(ring, out.b, a2, -a1);
  const PolyMat& M = out.completion;
  out.tau = PolyMat::from_rows({{M.at(1, 1), M.at(1, 2)}, {M.at(2, 1), M.at(2, 2)}});
  out.new_gens = {ring->reduce(a1 * out.tau.at(0, 0) + a2 * out.tau.at(0, 1)),
                  ring->reduce(a1 * out.tau.at(1, 0) + a2 * out.tau.at(1, 1))};
  out.regenerates = equal_ideals(Ideal(ring, out.new_gens), J);
  if (!out.regenerates.equal) throw Error("internal: unit transition lost generation");
  if (!J.contains(det(out.tau) - a_unit * a_unit)) throw Error("internal: det tau differs from a^2 mod J");
  return out;
}

MovingLemma moving_lemma_free(const Ideal& J, const std::vector<Poly>& w, const std::vector<Ideal>& avoid,
                              int bound) {
  const Ring& ring = J.ring();
  int n = static_cast<int>(w.size());
  if (n != ring->asserted_dimension()) throw PreconditionError("tuple length must equal the ring dimension");
  if (J.is_unit() || height(J) != n) throw PreconditionError("J must have height n");
  for (const auto& g : w)
    if (!J.contains(g)) throw PreconditionError("tuple element outside J");
  Ideal Jsq = J * J;
  if (!equal_ideals(Ideal(ring, w) + Jsq, J).equal)
    throw PreconditionError("the tuple does not generate J/J^2");
  for (const auto& k : avoid)
    if (!height_at_least(k, 1)) throw PreconditionError("avoid ideal of height 0");

  // Auxiliary elements a in J^2 and in every avoid ideal.
  std::vector<Poly> as{ring->zero()};
  auto sq = square_generators(J.gens());
  for (const auto& g : sq) {
    Poly a = g;
    for (const auto& k : avoid) a = ring->reduce(a * k.gens().front());
    as.push_back(a);
  }
  int bnd = search_bound(bound);
  auto bs = vectors_up_to(n, bnd);
  for (const auto& a : as) {
    for (const auto& b : bs) {
      if (a.is_zero() && b != bs.front()) break;
      std::vector<Poly> beta(n);
      for (int i = 0; i < n; ++i) beta[i] = ring->reduce(w[i] + a.scaled(b[i]));
      Ideal I(ring, beta);
      if (!height_at_least(I, n)) continue;
      SplitIdeal sp = split_ideal(J, I, Jsq);
      std::vector<ComaximalityCertificate> cos;
      bool ok = true;
      for (const auto& k : avoid) {
        auto co = comaximal(k, sp.jprime);
        if (!co) {
          ok = false;
          break;
        }
        cos.push_back(*co);
      }
      if (!ok) continue;
      MovingLemma out;
      out.jprime = sp.jprime;
      out.beta = beta;
      out.a = a;
      for (int v : b) out.b.push_back(ring->constant(v));
      out.beta_generates = equal_ideals(I, ideal_intersect(J, sp.jprime));
      auto co = comaximal(J, sp.jprime);
      auto cg = congruence_mod_square(beta, w, J);
      if (!out.beta_generates.equal || !co || !cg) throw Error("internal: moving lemma certificates failed");
      out.j_plus_jprime = *co;
      out.avoid_plus_jprime = cos;
      out.beta_vs_w = *cg;
      return out;
    }
  }
  throw BoundExhausted("moving lemma search exhausted");
}

std::pair<Poly, Poly> comaximal_powers(const Poly& s, const Poly& t, const Poly& u, const Poly& v,
                                       int a, int b) {
  int nv = s.nvars();
  if (a == 0) return {Poly::constant(nv, 1), Poly(nv)};
  if (b == 0) return {Poly(nv), Poly::constant(nv, 1)};
  int N = a + b - 1;
  Poly us = u * s, vt = v * t;
  std::vector<Poly> usp{Poly::constant(nv, 1)}, vtp{Poly::constant(nv, 1)};
  for (int i = 1; i <= N; ++i) {
    usp.push_back(usp.back() * us);
    vtp.push_back(vtp.back() * vt);
  }
  Poly V(nv), U(nv);
  for (int i = 0; i <= N; ++i) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), N, i);
    Rational cq(c);
    if (i >= a) {
      V += (u.pow(i) * s.pow(i - a) * vtp[N - i]).scaled(cq);
    } else {
      U += (usp[i] * v.pow(N - i) * t.pow(N - i - b)).scaled(cq);
    }
  }
  return {V, U};
}

namespace {

std::pair<Poly, Poly> unit_witness(const Ring& ring, const Poly& s, const Poly& t) {
  auto co = comaximal(Ideal(ring, {s}), Ideal(ring, {t}));
  if (!co) throw PreconditionError("(s, t) is not the unit ideal");
  return {co->u_in_i.cofactors[0], co->v_in_j.cofactors[0]};
}

}  // namespace

Poly patch_element(const Ring& ring, const LocFraction& f, const LocFraction& g) {
  if (!ring->is_domain()) throw PreconditionError("patching needs a domain");
  if (f.cls != LocFraction::DenClass::PowerOf || g.cls != LocFraction::DenClass::PowerOf)
    throw PreconditionError("patching needs power denominators");
  const Poly &s = f.base, &t = g.base;
  Poly sa = s.pow(f.power), tb = t.pow(g.power);
  if (!ring->equal(f.num * tb, g.num * sa)) throw PreconditionError("f and g are not compatible over A_st");
  auto [u, v] = unit_witness(ring, s, t);
  auto [V, U] = comaximal_powers(s, t, u, v, f.power, g.power);
  Poly c = ring->reduce(V * f.num + U * g.num);
  if (!ring->equal(c * sa, f.num) || !ring->equal(c * tb, g.num)) throw Error("internal: patch check failed");
  return c;
}

namespace {

Poly to_T(const Poly& f) { return extend_poly(f, f.nvars() + 1); }

Poly drop_T(const Poly& f) {
  int n = f.nvars() - 1;
  std::vector<Term> ts;
  for (const auto& t : f.terms()) {
    if (t.m[n] != 0) throw Error("internal: polynomial still depends on T");
    ts.push_back({Monomial(t.m.begin(), t.m.end() - 1), t.c});
  }
  return Poly::from_terms(n, std::move(ts));
}

PolyMat mat_to_T(const PolyMat& m) { return m.map(to_T); }

LocMatrix substitute_T(const LocMatrix& m, const Poly& value, int tvar) {
  LocMatrix out = m;
  out.num = m.num.map([&](const Poly& p) { return p.substitute(tvar, value); });
  return out;
}

}  // namespace

LocalizedMatrixPath make_path(const Ring& ring, const Poly& s, const Poly& t) {
  LocalizedMatrixPath p;
  p.ring = ring;
  p.ringT = extend_ring(ring, "T");
  p.s = s;
  p.t = t;
  return p;
}

LocalizedMatrixPath elementary_path(const Ring& ring, const Poly& s, const Poly& t, int n,
                                    const std::vector<std::pair<ElemFactor, int>>& factors) {
  LocalizedMatrixPath p = make_path(ring, s, t);
  int nv = p.ringT->nvars();
  Poly st = to_T(s * t);
  Poly T = Poly::variable(nv, nv - 1);
  LocMatrix acc = loc_identity(n, st);
  for (const auto& [f, power] : factors) {
    LocMatrix e{PolyMat::identity(n, nv).scaled(st.pow(power)), st, power};
    e.num.at(f.i, f.j) = to_T(f.value) * T;
    acc = loc_mul(acc, e);
  }
  p.sigma = loc_normalize(p.ringT, acc);
  return p;
}

LocalizedMatrixPath conjugate_path(const LocalizedMatrixPath& p, const LocMatrix& left,
                                   const LocMatrix& right) {
  LocalizedMatrixPath out = p;
  LocMatrix l{mat_to_T(left.num), to_T(left.base), left.power};
  LocMatrix r{mat_to_T(right.num), to_T(right.base), right.power};
  out.sigma = loc_normalize(p.ringT, loc_mul(loc_mul(l, p.sigma), r));
  return out;
}

LocMatrix evaluate_path(const LocalizedMatrixPath& p, const Rational& value) {
  int tv = p.ringT->nvars() - 1;
  LocMatrix m = substitute_T(p.sigma, Poly::constant(tv + 1, value), tv);
  return loc_normalize(p.ring, {m.num.map(drop_T), drop_T(m.base), m.power});
}

bool congruent_identity(const Ring& ring, const LocMatrix& a, const Poly& m) {
  Ideal I(ring, {m});
  Poly d = a.base.pow(a.power);
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) {
      Poly e = i == j ? a.num.at(i, j) - d : a.num.at(i, j);
      if (!I.contains(e)) return false;
    }
  return true;
}

namespace {

// The split with T replaced by `tval` (T itself, or a constant).
QuillenSplit quillen_at(const LocalizedMatrixPath& path, const Poly& tval, int max_k) {
  const Ring& RT = path.ringT;
  int tv = RT->nvars() - 1;
  int nv = RT->nvars();
  const LocMatrix& sig = path.sigma;
  int n = sig.n();
  int e = sig.power;
  Poly s = to_T(path.s), t = to_T(path.t);
  if (sig.base != s * t) throw PreconditionError("path must be stored over base s*t");
  LocMatrix at0 = substitute_T(sig, Poly(nv), tv);
  if (!loc_mat_equal(RT, at0, loc_identity(n, sig.base)))
    throw PreconditionError("sigma(0) is not the identity");
  if (!RT->equal(det(sig.num), sig.base.pow(n * e)))
    throw PreconditionError("sigma must have determinant 1");
  // With Y = lambda s^k T and T - Y = mu t^kt T:
  //   psi1 = sigma(Y), whose s-denominators cancel once s^{kj} covers the
  //   s-denominator of the T^j coefficient;
  //   psi2 = sigma(T) sigma(Y)^{-1} = Id + (T - Y) D(T, Y) sigma(Y)^{-1},
  //   D = sum_j C_j (T^j - Y^j) / (T - Y), whose t-denominators cancel once
  //   kt > n e. The factors grow with k + kt, so the least exponents that
  //   clear are used.
  int deg = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) deg = std::max(deg, sig.num.at(i, j).degree_in(tv));
  std::vector<PolyMat> C(deg + 1);
  for (int d = 0; d <= deg; ++d)
    C[d] = sig.num.map([&](const Poly& f) { return f.coefficient_in(tv, d); });
  // Pull the common s-power out of each coefficient: C_j = s^{v_j} C'_j.
  std::vector<int> sval(deg + 1, 0);
  for (int d = 1; d <= deg; ++d) {
    PolyMat q = C[d];
    while (sval[d] < e) {
      bool ok = true;
      PolyMat next = q.map([&](const Poly& f) {
        Poly r;
        if (ok && !exact_divide(RT, f, s, &r)) ok = false;
        return r;
      });
      if (!ok) break;
      q = std::move(next);
      ++sval[d];
    }
    C[d] = std::move(q);
  }
  int k = 1;
  for (int d = 1; d <= deg; ++d) k = std::max(k, (e - sval[d]) / d + 1);
  const Poly& Tvar = tval;
  std::vector<Poly> Tp{RT->one()};
  for (int d = 1; d <= deg; ++d) Tp.push_back(Tp.back() * Tvar);
  auto [u, v] = unit_witness(path.ring, path.s, path.t);
  auto red = [&](const Poly& f) { return RT->reduce(f); };
  const int ne = n * e;
  for (int kt = 1; kt <= ne + 1; ++kt) {
    if (k + kt > max_k) break;
    auto [lam, mu] = comaximal_powers(path.s, path.t, u, v, k, kt);
    Poly lambda = to_T(lam), muT = to_T(mu);
    Poly ls = red(lambda * s.pow(k));  // Y = ls * T
    // M1 = t^e sigma(Y): constant term t^e Id, then
    // C'_j lambda^j s^{kj + v_j - e} T^j.
    PolyMat M1 = PolyMat::identity(n, nv).scaled(t.pow(e));
    Poly lampow = RT->one();
    for (int d = 1; d <= deg; ++d) {
      lampow = red(lampow * lambda);
      M1 = M1 + C[d].scaled(red(lampow * s.pow(k * d + sval[d] - e)) * Tp[d]);
    }
    M1 = M1.map(red);
    // D numerator over (st)^e: sum_j C_j T^{j-1} sum_{b<j} (lambda s^k)^b.
    PolyMat D(n, n, nv);
    Poly geo = RT->zero(), lsb = RT->one();
    for (int d = 1; d <= deg; ++d) {
      geo = geo + lsb;
      lsb = red(lsb * ls);
      D = D + C[d].scaled(red(geo * s.pow(sval[d])) * Tp[d - 1]);
    }
    D = D.map(red);
    PolyMat W = D * adjugate(M1);
    if (kt > ne) {
      Poly scale = red(Tvar * muT * t.pow(kt - ne));
      W = W.map([&](const Poly& f) { return red(f * scale); });
    } else {
      Poly scale = red(Tvar * muT * t.pow(kt)), tq = t.pow(ne);
      bool ok = true;
      W = W.map([&](const Poly& f) {
        Poly q;
        if (ok && !exact_divide(RT, red(f * scale), tq, &q)) ok = false;
        return q;
      });
      if (!ok) continue;
    }
    LocMatrix psi2{PolyMat::identity(n, nv).scaled(s.pow(e)) + W, s, e};
    if (kt <= ne && !congruent_identity(RT, psi2, t)) continue;
    QuillenSplit q{LocMatrix{M1, t, e}, psi2, k, kt, lam};
    return q;
  }
  throw BoundExhausted("denominator-clearing exponent exceeds " + std::to_string(max_k));
}

}  // namespace

QuillenSplit quillen_split(const LocalizedMatrixPath& path, int max_k) {
  int nv = path.ringT->nvars();
  QuillenSplit q = quillen_at(path, Poly::variable(nv, nv - 1), max_k);
  if (!verify_quillen_split(path, q)) throw Error("internal: Quillen split failed verification");
  return q;
}

bool verify_quillen_split(const LocalizedMatrixPath& path, const QuillenSplit& q) {
  const Ring& RT = path.ringT;
  int nv = RT->nvars();
  int tv = nv - 1;
  Poly s = to_T(path.s), t = to_T(path.t);
  const LocMatrix& sig = path.sigma;
  if (q.psi1.base != t || q.psi2.base != s) return false;
  // psi2 * psi1 = (Q P) / (s^a t^b) against N / (st)^e.
  PolyMat lhs = (q.psi2.num * q.psi1.num).scaled((s * t).pow(sig.power));
  PolyMat rhs = sig.num.scaled(s.pow(q.psi2.power) * t.pow(q.psi1.power));
  if (!mat_equal(RT, lhs, rhs)) return false;
  if (!congruent_identity(RT, q.psi1, s) || !congruent_identity(RT, q.psi2, t)) return false;
  int n = sig.n();
  LocMatrix p10 = substitute_T(q.psi1, Poly(nv), tv), p20 = substitute_T(q.psi2, Poly(nv), tv);
  return loc_mat_equal(RT, p10, loc_identity(n, t)) && loc_mat_equal(RT, p20, loc_identity(n, s));
}

IsotopySplit isotopy_split(const LocMatrix& theta, const LocalizedMatrixPath& iso) {
  const Ring& A = iso.ring;
  int n = theta.n();
  LocMatrix a0 = evaluate_path(iso, 0), a1 = evaluate_path(iso, 1);
  if (!loc_mat_equal(A, a0, loc_identity(n, iso.s * iso.t))) throw PreconditionError("isotopy is not Id at T = 0");
  if (theta.base != iso.s * iso.t || !loc_mat_equal(A, a1, theta))
    throw PreconditionError("isotopy does not reach theta at T = 1");
  IsotopySplit out;
  // Only T = 1 is needed, so the split is formed over A directly.
  int nv = iso.ringT->nvars();
  out.path = quillen_at(iso, Poly::constant(nv, 1), 1024);
  for (LocMatrix* m : {&out.path.psi1, &out.path.psi2}) {
    m->num = m->num.map(drop_T);
    m->base = drop_T(m->base);
  }
  out.theta1 = loc_normalize(A, out.path.psi2);
  out.theta2 = loc_normalize(A, out.path.psi1);
  if (!verify_isotopy_split(theta, iso, out)) throw Error("internal: isotopy split failed verification");
  return out;
}

bool verify_isotopy_split(const LocMatrix& theta, const LocalizedMatrixPath& iso, const IsotopySplit& sp) {
  const Ring& A = iso.ring;
  if (sp.theta1.base != iso.s || sp.theta2.base != iso.t) return false;
  PolyMat lhs = (sp.theta1.num * sp.theta2.num).scaled(theta.base.pow(theta.power));
  PolyMat rhs = theta.num.scaled(iso.s.pow(sp.theta1.power) * iso.t.pow(sp.theta2.power));
  if (!mat_equal(A, lhs, rhs)) return false;
  return congruent_identity(A, sp.theta1, iso.t) && congruent_identity(A, sp.theta2, iso.s);
}

}  // namespace ecg
