#include "eulercg/euler_group.hpp"

#include <algorithm>

#include "eulercg/errors.hpp"
#include "eulercg/search.hpp"

namespace ecg {

namespace {

std::string join(const Ring& ring, const std::vector<Poly>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + ring->str(v[i]);
  return s + ")";
}

Ideal square(const Ideal& J) { return J * J; }

bool same_ideal(const Ideal& a, const Ideal& b) { return equal_ideals(a, b).equal; }

}  // namespace

Orientation make_orientation(const Ideal& J, std::vector<Poly> tuple) {
  const Ring& ring = J.ring();
  for (const auto& g : tuple)
    if (!J.contains(g)) throw PreconditionError("orientation entry outside J");
  Orientation w;
  w.ideal = J;
  w.tuple = make_generator_tuple(J, std::move(tuple));
  Ideal Jsq = square(J);
  w.generates = equal_ideals(Ideal(ring, w.tuple.elements) + Jsq, J);
  if (!w.generates.equal) throw PreconditionError("the tuple does not generate J/J^2");
  return w;
}

bool verify_orientation(const Orientation& w) {
  if (!verify_equality(w.generates)) return false;
  for (const auto& c : w.tuple.certs)
    if (!verify_membership(c)) return false;
  Ideal Jsq = square(w.ideal);
  return same_ideal(Ideal(w.ideal.ring(), w.tuple.elements) + Jsq, w.ideal);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "equivalent";
    case Verdict::Inequivalent: return "inequivalent";
    case Verdict::Undecided: return "undecided";
  }
  return "undecided";
}

OrientationComparison orientation_compare(const Orientation& w1, const Orientation& w2) {
  const Ideal& J = w1.ideal;
  const Ring& ring = J.ring();
  if (!same_ideal(J, w2.ideal)) throw PreconditionError("orientations on different ideals");
  int n = static_cast<int>(w1.tuple.size());
  if (static_cast<int>(w2.tuple.size()) != n) throw PreconditionError("tuples of different lengths");
  if (J.is_unit() || krull_dimension(J) != 0) throw PreconditionError("A/J must be zero-dimensional");
  Ideal Jsq = square(J);
  OrientationComparison out;
  // J/J^2 is free of rank n iff dim J/J^2 = n dim A/J, the tuple being a
  // generating set.
  int d1 = quotient_algebra(J)->dim(), d2 = quotient_algebra(Jsq)->dim();
  out.free = d2 - d1 == n * d1;
  // psi from w2_j in (w1) + J^2; unique mod J in the free case.
  std::vector<Poly> gens = w1.tuple.elements;
  for (const auto& g : Jsq.gens()) gens.push_back(g);
  Ideal span(ring, gens);
  out.psi = PolyMat(n, n, ring->nvars());
  for (int j = 0; j < n; ++j) {
    auto m = ideal_member(w2.tuple.elements[j], span);
    if (!m) throw Error("internal: orientation entry outside (w1) + J^2");
    for (int i = 0; i < n; ++i) out.psi.at(i, j) = J.reduce(m->cofactors[i]);
  }
  out.det = J.reduce(det(out.psi));
  if (!out.free) {
    out.reason = "J/J^2 is not free of rank " + std::to_string(n);
    return out;
  }
  if (J.reduce(out.det - ring->one()).is_zero()) {
    out.verdict = Verdict::Equivalent;
    out.reason = "det psi = 1 in A/J";
  } else {
    out.verdict = Verdict::Inequivalent;
    out.reason = "the unique connecting map has det " + ring->str(out.det);
  }
  return out;
}

SquareRewrite square_rewrite(const Orientation& w, const Poly& a) {
  const Ideal& J = w.ideal;
  const Ring& ring = J.ring();
  if (!J.is_unit()) {
    auto inv = try_invert(residue(quotient_algebra(J), a));
    if (!inv) throw PreconditionError("a is not a unit modulo J");
  }
  Ideal Jsq = square(J);
  std::vector<Poly> t = w.tuple.elements;
  t[0] = Jsq.reduce(a * a * t[0]);
  SquareRewrite out;
  out.result = make_orientation(J, t);
  out.transcript.push_back({"square_rule", {{"a", ring->str(a)}, {"tuple", join(ring, t)}}});
  // With a global pair the new orientation is global too, by an explicit
  // transition of determinant a^2.
  if (w.tuple.size() == 2 && !J.is_unit() && same_ideal(Ideal(ring, w.tuple.elements), J)) {
    UnitTransition ut = unit_transition_2gen(J, w.tuple, a);
    out.transcript.push_back({"unit_transition_2gen",
                              {{"b", ring->str(ut.b)}, {"new_gens", join(ring, ut.new_gens)}}});
  }
  return out;
}

ECGElement ecg_zero(const Ring& ring) { return {ring, {}}; }

ECGElement ecg_single(const Orientation& w, long coeff) {
  ECGElement e{w.ideal.ring(), {}};
  if (coeff != 0) e.summands.push_back({w, coeff});
  return e;
}

MergeRecord merge_comaximal(const Orientation& w1, const Orientation& w2) {
  const Ring& ring = w1.ideal.ring();
  if (w1.tuple.size() != w2.tuple.size()) throw PreconditionError("tuples of different lengths");
  const Ideal &J1 = w1.ideal, &J2 = w2.ideal;
  auto co = comaximal(square(J1), square(J2));
  if (!co) throw PreconditionError("ideals are not comaximal");
  // u in J1^2, v in J2^2, u + v = 1: w = v w1 + u w2.
  std::vector<Poly> t;
  for (std::size_t i = 0; i < w1.tuple.size(); ++i)
    t.push_back(ring->reduce(co->v * w1.tuple.elements[i] + co->u * w2.tuple.elements[i]));
  MergeRecord m;
  m.coprime = *co;
  Ideal J = ideal_intersect(J1, J2);
  m.merged = make_orientation(J, t);
  auto c1 = congruence_mod_square(t, w1.tuple.elements, J1);
  auto c2 = congruence_mod_square(t, w2.tuple.elements, J2);
  if (!c1 || !c2) throw Error("internal: merged tuple misses a residue");
  m.first = *c1;
  m.second = *c2;
  return m;
}

bool verify_merge(const MergeRecord& m, const Orientation& w1, const Orientation& w2) {
  if (!verify_comaximal(m.coprime) || !verify_orientation(m.merged)) return false;
  if (!same_ideal(m.merged.ideal, ideal_intersect(w1.ideal, w2.ideal))) return false;
  const auto& t = m.merged.tuple.elements;
  if (m.first.left != t || m.first.right != w1.tuple.elements) return false;
  if (m.second.left != t || m.second.right != w2.tuple.elements) return false;
  if (!same_ideal(m.first.base, w1.ideal) || !same_ideal(m.second.base, w2.ideal)) return false;
  return verify_congruence(m.first) && verify_congruence(m.second);
}

namespace {

bool identical(const Orientation& a, const Orientation& b) {
  if (a.tuple.size() != b.tuple.size() || !same_ideal(a.ideal, b.ideal)) return false;
  return congruence_mod_square(a.tuple.elements, b.tuple.elements, a.ideal).has_value();
}

}  // namespace

ECGElement ecg_add(const ECGElement& a, const ECGElement& b, bool merge,
                   std::vector<MergeRecord>* merges) {
  if (!a.ring || !b.ring || !a.ring->same_as(*b.ring)) throw PreconditionError("ring mismatch");
  ECGElement out{a.ring, {}};
  for (const auto* e : {&a, &b})
    for (const auto& [w, c] : e->summands) {
      auto it = std::find_if(out.summands.begin(), out.summands.end(),
                             [&](const auto& s) { return identical(s.first, w); });
      if (it != out.summands.end())
        it->second += c;
      else
        out.summands.push_back({w, c});
    }
  std::erase_if(out.summands, [](const auto& s) { return s.second == 0; });
  if (!merge) return out;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < out.summands.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < out.summands.size() && !changed; ++j) {
        if (out.summands[i].second != 1 || out.summands[j].second != 1) continue;
        const Orientation &wi = out.summands[i].first, &wj = out.summands[j].first;
        if (!comaximal(wi.ideal, wj.ideal)) continue;
        MergeRecord m = merge_comaximal(wi, wj);
        if (merges) merges->push_back(m);
        out.summands.erase(out.summands.begin() + static_cast<long>(j));
        out.summands[i] = {m.merged, 1};
        changed = true;
      }
  }
  return out;
}

bool check_zero_certificate(const ZeroCertificate& z) {
  const Orientation& w = z.orientation;
  const Ideal& J = w.ideal;
  const Ring& ring = J.ring();
  int n = static_cast<int>(w.tuple.size());
  if (static_cast<int>(z.witness.size()) != n || z.sl_link.rows() != n || z.sl_link.cols() != n)
    return false;
  if (!verify_orientation(w)) return false;
  // the witness generates J exactly
  if (!same_ideal(Ideal(ring, z.witness.elements), J)) return false;
  if (J.is_unit()) return true;
  // witness * link = tuple mod J^2, det link = 1 mod J
  Ideal Jsq = square(J);
  for (int j = 0; j < n; ++j) {
    Poly acc = ring->zero();
    for (int i = 0; i < n; ++i) acc += z.witness.elements[i] * z.sl_link.at(i, j);
    if (!Jsq.contains(acc - w.tuple.elements[j])) return false;
  }
  return J.contains(det(z.sl_link) - ring->one());
}

std::optional<ZeroCertificate> find_zero_certificate(const Orientation& w, int bound) {
  const Ideal& J = w.ideal;
  const Ring& ring = J.ring();
  int n = static_cast<int>(w.tuple.size());
  if (J.is_unit()) {
    ZeroCertificate z{w, make_generator_tuple(J, w.tuple.elements), PolyMat::identity(n, ring->nvars())};
    return z;
  }
  const auto& g = J.gb().basis;
  int m = static_cast<int>(g.size());
  auto try_witness = [&](const std::vector<Poly>& cand) -> std::optional<ZeroCertificate> {
    Ideal Jsq = square(J);
    if (!same_ideal(Ideal(ring, cand) + Jsq, J)) return std::nullopt;
    Orientation wc = make_orientation(J, cand);
    OrientationComparison cmp = orientation_compare(wc, w);
    if (!J.contains(cmp.det - ring->one())) return std::nullopt;
    if (!same_ideal(Ideal(ring, cand), J)) return std::nullopt;
    ZeroCertificate z{w, make_generator_tuple(J, cand), cmp.psi};
    if (!check_zero_certificate(z)) return std::nullopt;
    return z;
  };
  if (auto z = try_witness(w.tuple.elements)) return z;
  for (const auto& c : vectors_up_to(n * m, search_bound(bound))) {
    std::vector<Poly> cand(n, ring->zero());
    bool zero_row = false;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < m; ++k)
        if (c[i * m + k]) cand[i] += g[k].scaled(c[i * m + k]);
      if (cand[i].is_zero()) zero_row = true;
    }
    if (zero_row) continue;
    if (auto z = try_witness(cand)) return z;
  }
  return std::nullopt;
}

ECGInverse ecg_inverse(const Orientation& w, int bound) {
  const Ideal& J = w.ideal;
  const Ring& ring = J.ring();
  int n = static_cast<int>(w.tuple.size());
  if (ring->asserted_dimension() != n) throw PreconditionError("tuple length must equal the ring dimension");
  ECGInverse out;
  PolyMat id = PolyMat::identity(n, ring->nvars());
  if (same_ideal(Ideal(ring, w.tuple.elements), J)) {
    // w is global; its inverse is the zero class.
    std::vector<Poly> unit_tuple(n, ring->zero());
    unit_tuple[0] = ring->one();
    out.inverse = make_orientation(Ideal::unit(ring), unit_tuple);
    out.sum_zero = {w, make_generator_tuple(J, w.tuple.elements), id};
    return out;
  }
  MovingLemma ml = moving_lemma_free(J, w.tuple.elements, {}, bound);
  out.inverse = make_orientation(ml.jprime, ml.beta);
  Ideal both = ideal_intersect(J, ml.jprime);
  out.sum_zero = {make_orientation(both, ml.beta), make_generator_tuple(both, ml.beta), id};
  out.moving = std::move(ml);
  if (!check_zero_certificate(out.sum_zero)) throw Error("internal: inverse certificate failed");
  return out;
}

UnimodularRowModule make_unimodular_row(const Ring& ring, std::vector<Poly> row) {
  auto m = ideal_member(ring->one(), Ideal(ring, row));
  if (!m) throw PreconditionError("row is not unimodular");
  return {std::move(row), *m};
}

StablyFreeClass stably_free_class(const UnimodularRowModule& m, int even_n, int bound) {
  if (even_n <= 0 || even_n % 2) throw PreconditionError("n must be even and positive");
  int n = even_n;
  if (static_cast<int>(m.row.size()) != n + 1) throw PreconditionError("row length must be n + 1");
  if (!verify_membership(m.unimodular) || !m.unimodular.element.is_one() ||
      m.unimodular.ideal.gens() != m.row)
    throw PreconditionError("unimodularity certificate does not verify");
  const Ring& ring = m.unimodular.ideal.ring();
  std::vector<Poly> a(m.row.begin() + 1, m.row.end());
  StablyFreeClass out;
  Ideal Jp(ring, a);
  if (!Jp.is_unit() && !height_at_least(Jp, n)) {
    a = evans_move(ring, a, m.row[0], bound).moved;
    Jp = Ideal(ring, a);
  }
  out.row = {m.row[0]};
  for (const auto& f : a) out.row.push_back(ring->reduce(f));
  std::vector<Poly> t(n);
  if (Jp.is_unit()) {
    out.zero_class = true;
    t.assign(n, ring->zero());
    t[0] = ring->one();
    out.orientation = make_orientation(Ideal::unit(ring), t);
    return out;
  }
  // 1-indexed: psi(e_i) = a_{i+1} for odd i, -a_{i-1} for even i.
  for (int i = 1; i <= n; ++i) t[i - 1] = i % 2 ? out.row[i + 1] : -out.row[i - 1];
  out.orientation = make_orientation(Ideal(ring, std::vector<Poly>(out.row.begin() + 1, out.row.end())), t);
  return out;
}

namespace {

// det of the columns cols[k] of A^n.
Poly det_of(const std::vector<std::vector<Poly>>& cols, int nvars) {
  int n = static_cast<int>(cols.size());
  PolyMat m(n, n, nvars);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
  return det(m);
}

Poly pair(const std::vector<Poly>& alpha, const std::vector<Poly>& p, int nvars) {
  Poly acc(nvars);
  for (std::size_t i = 0; i < alpha.size(); ++i) acc += alpha[i] * p[i];
  return acc;
}

std::vector<std::vector<Poly>> drop(const std::vector<std::vector<Poly>>& p, std::size_t i) {
  std::vector<std::vector<Poly>> out;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (k != i) out.push_back(p[k]);
  return out;
}

}  // namespace

Poly alternating_sum(const Ring& ring, const std::vector<Poly>& alpha,
                     const std::vector<std::vector<Poly>>& p) {
  int n = static_cast<int>(alpha.size());
  if (static_cast<int>(p.size()) != n + 1) throw PreconditionError("need n + 1 vectors");
  for (const auto& v : p)
    if (static_cast<int>(v.size()) != n) throw PreconditionError("vector of the wrong length");
  int nv = ring->nvars();
  Poly sum = ring->zero();
  for (int i = 0; i <= n; ++i) {
    Poly w = pair(alpha, p[i], nv) * det_of(drop(p, i), nv);
    sum = i % 2 ? sum - w : sum + w;
  }
  return ring->reduce(sum);
}

Transfer bnminus1_transfer(const Ring& ring, const std::vector<Poly>& alpha, const Poly& b,
                           const Poly& a0, const std::vector<Poly>& p0,
                           const std::vector<std::vector<Poly>>& sample) {
  int n = static_cast<int>(alpha.size());
  int nv = ring->nvars();
  if (static_cast<int>(p0.size()) != n || static_cast<int>(sample.size()) != n)
    throw PreconditionError("sample must hold n vectors of length n");
  if (!ring->equal(a0 * b - pair(alpha, p0, nv), ring->one()))
    throw PreconditionError("a0 b - alpha(p0) != 1");
  // q_i = Phi(p_i) = (alpha(p_i), b p_i); delta as a0 det(p's) plus the
  // alternating terms with p_0 in place.
  std::vector<Poly> a(n);
  std::vector<std::vector<Poly>> ps(n);
  for (int i = 0; i < n; ++i) {
    a[i] = pair(alpha, sample[i], nv);
    for (const auto& c : sample[i]) ps[i].push_back(b * c);
  }
  Poly val = a0 * det_of(ps, nv);
  std::vector<std::vector<Poly>> with0{p0};
  for (const auto& v : ps) with0.push_back(v);
  for (int i = 1; i <= n; ++i) {
    Poly term = a[i - 1] * det_of(drop(with0, static_cast<std::size_t>(i)), nv);
    val = i % 2 ? val - term : val + term;
  }
  val = ring->reduce(val);
  Transfer out;
  out.expected = ring->reduce(b.pow(static_cast<unsigned>(n - 1)));
  Poly base = ring->reduce(det_of(sample, nv));
  if (ring->is_zero(base)) throw PreconditionError("sample vectors are dependent");
  if (!exact_divide(ring, val, base, &out.quotient)) {
    out.quotient = ring->zero();
    return out;
  }
  out.quotient = ring->reduce(out.quotient);
  out.holds = ring->equal(out.quotient, out.expected);
  return out;
}

WeakElement weak_class(const ECGElement& e) {
  WeakElement out{e.ring, {}};
  for (const auto& [w, c] : e.summands) {
    auto it = std::find_if(out.summands.begin(), out.summands.end(),
                           [&](const auto& s) { return same_ideal(s.first, w.ideal); });
    if (it != out.summands.end())
      it->second += c;
    else
      out.summands.push_back({w.ideal, c});
  }
  std::erase_if(out.summands, [](const auto& s) { return s.second == 0; });
  return out;
}

bool check_weak_zero_certificate(const WeakZeroCertificate& z, int n) {
  if (static_cast<int>(z.generators.size()) != n) return false;
  if (!verify_equality(z.generates)) return false;
  return same_ideal(Ideal(z.ideal.ring(), z.generators), z.ideal);
}

Ring sphere_ring() {
  std::vector<std::string> vars{"x", "y", "z"};
  return make_ring(vars, {parse_poly("x^2 + y^2 + z^2 - 1", vars)}, 2, true);
}

}  // namespace ecg
