#include "verbs.hpp"

#include <functional>
#include <map>

#include "eulercg/errors.hpp"

namespace ecg::cli {

namespace {

using Handler = std::function<Outcome(const Ring&, const json&)>;

const json& need(const json& p, const char* key) {
  if (!p.is_object() || !p.contains(key)) throw ParseError(std::string("payload needs '") + key + "'");
  return p.at(key);
}

std::vector<Poly> gens(const Ring& r, const json& p, const char* key) { return polys_from(r, need(p, key)); }
Ideal ideal(const Ring& r, const json& p, const char* key) { return ideal_from(r, need(p, key)); }
Poly elt(const Ring& r, const json& p, const char* key) { return poly_from(r, need(p, key)); }

GeneratorTuple tuple_of(const Ring& r, const json& p, const char* key) {
  auto g = gens(r, p, key);
  return make_generator_tuple(Ideal(r, g), g);
}

json gb_to(const Ring& r, const GroebnerBasis& gb) {
  json cof = json::array();
  for (const auto& row : gb.cofactors) cof.push_back(polys_to(r, row));
  return {{"kind", "gb"}, {"input", polys_to(r, gb.input)}, {"basis", polys_to(r, gb.basis)}, {"cofactors", cof}};
}

json invariant_to(const Ring& r, const Ideal& I, const char* name, long v) {
  return {{"kind", "invariant"}, {"ideal", polys_to(r, I.gens())}, {"name", name}, {"value", num(v)}};
}

json factors_to(const Ring& r, const std::vector<ElemFactor>& fs) {
  json a = json::array();
  for (const auto& f : fs) a.push_back({{"i", num(f.i)}, {"j", num(f.j)}, {"value", poly_to(r, f.value)}});
  return a;
}

Outcome gb_verb(const Ring& r, const json& p) {
  Ideal I = ideal(r, p, "ideal");
  Outcome o;
  o.result = {{"basis", polys_to(r, I.gb().basis)}, {"unit", I.is_unit()}};
  o.certificates.push_back(gb_to(r, I.gb()));
  return o;
}

Outcome member_verb(const Ring& r, const json& p) {
  Ideal I = ideal(r, p, "ideal");
  Poly f = elt(r, p, "element");
  Outcome o;
  if (auto c = ideal_member(f, I)) {
    o.result = {{"member", true}, {"cofactors", polys_to(r, c->cofactors)}};
    o.certificates.push_back(membership_to(r, *c));
    return o;
  }
  Poly rem = I.reduce(f);
  o.result = {{"member", false}, {"remainder", poly_to(r, rem)}};
  o.certificates.push_back({{"kind", "non_membership"},
                            {"element", poly_to(r, f)},
                            {"ideal", polys_to(r, I.gens())},
                            {"remainder", poly_to(r, rem)},
                            {"gb", gb_to(r, I.gb())}});
  o.status = 1;
  return o;
}

Outcome intersect_verb(const Ring& r, const json& p) {
  Ideal L = ideal(r, p, "left"), R = ideal(r, p, "right");
  Ideal K = ideal_intersect(L, R);
  Outcome o;
  o.result = {{"gens", polys_to(r, K.gens())}};
  o.certificates.push_back(
      {{"kind", "intersection"}, {"left", polys_to(r, L.gens())}, {"right", polys_to(r, R.gens())}, {"gens", polys_to(r, K.gens())}});
  for (const auto& g : K.gens()) {
    o.certificates.push_back(membership_to(r, *ideal_member(g, L)));
    o.certificates.push_back(membership_to(r, *ideal_member(g, R)));
  }
  return o;
}

Outcome dim_verb(const Ring& r, const json& p) {
  Ideal I = ideal(r, p, "ideal");
  int d = krull_dimension(I);
  Outcome o;
  o.result = {{"dimension", num(d)}};
  o.certificates.push_back(invariant_to(r, I, "dimension", d));
  o.certificates.push_back(gb_to(r, I.gb()));
  return o;
}

Outcome height_verb(const Ring& r, const json& p) {
  Ideal I = ideal(r, p, "ideal");
  int h = height(I);
  Outcome o;
  o.result = {{"height", num(h)}};
  o.certificates.push_back(invariant_to(r, I, "height", h));
  o.certificates.push_back(gb_to(r, I.gb()));
  return o;
}

Outcome comaximal_verb(const Ring& r, const json& p) {
  Ideal L = ideal(r, p, "left"), R = ideal(r, p, "right");
  Outcome o;
  if (auto c = comaximal(L, R)) {
    o.result = {{"comaximal", true}, {"u", poly_to(r, c->u)}, {"v", poly_to(r, c->v)}};
    o.certificates.push_back(comaximal_to(r, *c));
    return o;
  }
  Ideal S = L + R;
  Poly one = r->one();
  o.result = {{"comaximal", false}};
  o.certificates.push_back({{"kind", "non_membership"},
                            {"element", poly_to(r, one)},
                            {"ideal", polys_to(r, S.gens())},
                            {"remainder", poly_to(r, S.reduce(one))},
                            {"gb", gb_to(r, S.gb())}});
  o.status = 1;
  return o;
}

Outcome quotient_info_verb(const Ring& r, const json& p) {
  Ideal I = ideal(r, p, "ideal");
  Algebra a = quotient_algebra(I);
  json basis = json::array();
  for (const auto& m : a->basis()) basis.push_back(poly_to(r, Poly::monomial(r->nvars(), m, Rational(1))));
  json tables = json::array();
  for (const auto& t : a->mult_tables()) {
    json rows = json::array();
    for (int i = 0; i < t.rows; ++i) {
      json row = json::array();
      for (int k = 0; k < t.cols; ++k) row.push_back(rational_to_string(t.at(i, k)));
      rows.push_back(row);
    }
    tables.push_back(rows);
  }
  Outcome o;
  o.result = {{"dimension", num(a->dim())}, {"basis", basis}, {"tables", tables}};
  o.certificates.push_back(invariant_to(r, I, "quotient_dimension", a->dim()));
  o.certificates.push_back(gb_to(r, I.gb()));
  return o;
}

Outcome avoid_primes_verb(const Ring& r, const json& p) {
  GeneratorTuple g = tuple_of(r, p, "gens");
  std::vector<Ideal> primes;
  json pj = json::array();
  for (const auto& q : need(p, "primes")) {
    primes.push_back(ideal_from(r, q));
    pj.push_back(polys_to(r, primes.back().gens()));
  }
  AvoidResult a = avoid_primes(g, primes);
  json b = json::array();
  for (int v : a.b) b.push_back(num(v));
  Outcome o;
  o.result = {{"c", poly_to(r, a.c)}, {"b", b}};
  o.certificates.push_back(
      {{"kind", "avoidance"}, {"gens", polys_to(r, g.elements)}, {"c", poly_to(r, a.c)}, {"b", b}, {"primes", pj}});
  return o;
}

Outcome general_position_verb(const Ring& r, const json& p) {
  GeneratorTuple g = tuple_of(r, p, "gens");
  GeneralPosition gp = general_position(g);
  int n = static_cast<int>(g.size());
  Outcome o;
  o.result = {{"theta", factors_to(r, gp.theta)}, {"gens", polys_to(r, gp.new_gens)}};
  o.certificates.push_back({{"kind", "row_transform"},
                            {"row", polys_to(r, g.elements)},
                            {"matrix", mat_to(r, product_of(n, gp.theta, r->nvars()))},
                            {"image", polys_to(r, gp.new_gens)},
                            {"det", "1"}});
  o.certificates.push_back(equality_to(r, gp.same_ideal));
  o.certificates.push_back({{"kind", "prefix_heights"}, {"gens", polys_to(r, gp.new_gens)}});
  return o;
}

Outcome split_ideal_verb(const Ring& r, const json& p) {
  Ideal J = ideal(r, p, "J"), J1 = ideal(r, p, "J1"), J2 = ideal(r, p, "J2");
  SplitIdeal s = split_ideal(J, J1, J2);
  Outcome o;
  o.result = {{"e", poly_to(r, s.e)}, {"jprime", polys_to(r, s.jprime.gens())}};
  o.certificates.push_back(membership_to(r, s.e_in_j2));
  o.certificates.push_back(equality_to(r, s.j_is_j1_plus_e));
  o.certificates.push_back(equality_to(r, s.j_cap_jprime_is_j1));
  o.certificates.push_back(comaximal_to(r, s.j2_plus_jprime));
  o.certificates.push_back(membership_to(r, s.idempotent_mod_j1));
  return o;
}

Outcome mohan_kumar_verb(const Ring& r, const json& p) {
  Ideal I = ideal(r, p, "ideal");
  GeneratorTuple g = make_generator_tuple(I, gens(r, p, "gens"));
  MohanKumar m = mohan_kumar(I, g, elt(r, p, "x"));
  Outcome o;
  o.result = {{"h", poly_to(r, m.h)}, {"gens", polys_to(r, m.gens)}};
  o.certificates.push_back(equality_to(r, m.equals_i_plus_x));
  return o;
}

Outcome sl2_verb(const Ring& r, const json& p) {
  Ideal J = ideal(r, p, "ideal");
  GeneratorTuple ab = make_generator_tuple(J, gens(r, p, "ab"));
  GeneratorTuple cd = make_generator_tuple(J, gens(r, p, "cd"));
  PolyMat d = sl2_transition(J, ab, cd);
  Outcome o;
  o.result = {{"delta", mat_to(r, d)}};
  o.certificates.push_back({{"kind", "row_transform"},
                            {"row", polys_to(r, ab.elements)},
                            {"matrix", mat_to(r, d)},
                            {"image", polys_to(r, cd.elements)},
                            {"det", "1"}});
  return o;
}

Outcome swan_towber_verb(const Ring& r, const json& p) {
  Poly a = elt(r, p, "a"), b = elt(r, p, "b"), c = elt(r, p, "c");
  PolyMat m = swan_towber_complete(r, a, b, c);
  Outcome o;
  o.result = {{"matrix", mat_to(r, m)}};
  o.certificates.push_back(
      {{"kind", "completion"}, {"row", polys_to(r, {r->reduce(a * a), b, c})}, {"matrix", mat_to(r, m)}});
  return o;
}

Outcome moving_lemma_verb(const Ring& r, const json& p) {
  Ideal J = ideal(r, p, "ideal");
  std::vector<Ideal> avoid;
  if (p.contains("avoid"))
    for (const auto& q : p.at("avoid")) avoid.push_back(ideal_from(r, q));
  MovingLemma m = moving_lemma_free(J, gens(r, p, "w"), avoid);
  json b = polys_to(r, m.b);
  Outcome o;
  o.result = {{"jprime", polys_to(r, m.jprime.gens())}, {"beta", polys_to(r, m.beta)}, {"a", poly_to(r, m.a)}, {"b", b}};
  o.certificates.push_back(equality_to(r, m.beta_generates));
  o.certificates.push_back(comaximal_to(r, m.j_plus_jprime));
  for (const auto& c : m.avoid_plus_jprime) o.certificates.push_back(comaximal_to(r, c));
  o.certificates.push_back(congruence_to(r, m.beta_vs_w));
  return o;
}

LocFraction fraction(const Ring& r, const json& j, const char* base_key) {
  return power_fraction(elt(r, j, "num"), elt(r, j, base_key), static_cast<int>(to_long(need(j, "power"))));
}

json localized_to(const Ring& r, const Poly& c, const LocFraction& f) {
  return {{"kind", "localized_equality"},
          {"element", poly_to(r, c)},
          {"base", poly_to(r, f.base)},
          {"power", num(f.power)},
          {"num", poly_to(r, f.num)}};
}

Outcome patch_verb(const Ring& r, const json& p) {
  LocFraction f = fraction(r, need(p, "f"), "s"), g = fraction(r, need(p, "g"), "t");
  Poly c = patch_element(r, f, g);
  Outcome o;
  o.result = {{"element", poly_to(r, c)}};
  o.certificates.push_back(localized_to(r, c, f));
  o.certificates.push_back(localized_to(r, c, g));
  return o;
}

Outcome quillen_split_verb(const Ring& r, const json& p) {
  Poly s = elt(r, p, "s"), t = elt(r, p, "t");
  int n = static_cast<int>(to_long(need(p, "n")));
  std::vector<std::pair<ElemFactor, int>> fs;
  for (const auto& f : need(p, "factors")) {
    int i = static_cast<int>(to_long(need(f, "i"))), j = static_cast<int>(to_long(need(f, "j")));
    if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw PreconditionError("factor index out of range");
    int power = f.contains("power") ? static_cast<int>(to_long(f.at("power"))) : 0;
    if (power < 0) throw PreconditionError("negative power");
    fs.push_back({{i, j, elt(r, f, "value")}, power});
  }
  LocalizedMatrixPath path = elementary_path(r, s, t, n, fs);
  QuillenSplit q = quillen_split(path);
  const Ring& rt = path.ringT;
  Outcome o;
  o.result = {{"psi1", loc_mat_to(rt, q.psi1)}, {"psi2", loc_mat_to(rt, q.psi2)}, {"k", num(q.k)}, {"kt", num(q.kt)}};
  o.certificates.push_back({{"kind", "quillen_split"},
                            {"s", poly_to(r, s)},
                            {"t", poly_to(r, t)},
                            {"sigma", loc_mat_to(rt, path.sigma)},
                            {"psi1", loc_mat_to(rt, q.psi1)},
                            {"psi2", loc_mat_to(rt, q.psi2)},
                            {"k", num(q.k)},
                            {"kt", num(q.kt)},
                            {"lambda", poly_to(rt, q.lambda)}});
  return o;
}

Outcome add_principle_verb(const Ring& r, const json& p) {
  PrincipleResult res = addition_principle(tuple_of(r, p, "J1"), tuple_of(r, p, "J2"));
  Outcome o;
  o.result = {{"output", polys_to(r, res.output.elements)}, {"target", polys_to(r, res.target.gens())},
              {"transcript", transcript_to(res.transcript)}};
  o.certificates.push_back(principle_to(r, res));
  return o;
}

Outcome sub_principle_verb(const Ring& r, const json& p) {
  Ideal J = ideal(r, p, "J");
  GeneratorTuple j1 = tuple_of(r, p, "J1"), j2 = tuple_of(r, p, "J2");
  auto cong = congruence_mod_square(j2.elements, j1.elements, j1.ideal);
  if (!cong) throw PreconditionError("J2 generators are not congruent to J1 generators modulo J1^2");
  PrincipleResult res = subtraction_principle(J, j1, j2, *cong);
  Outcome o;
  o.result = {{"output", polys_to(r, res.output.elements)}, {"target", polys_to(r, res.target.gens())},
              {"transcript", transcript_to(res.transcript)}};
  o.certificates.push_back(congruence_to(r, *cong));
  o.certificates.push_back(principle_to(r, res));
  return o;
}

Orientation orientation(const Ring& r, const json& p, const char* ideal_key, const char* tuple_key) {
  return make_orientation(ideal(r, p, ideal_key), gens(r, p, tuple_key));
}

Outcome ecg_add_verb(const Ring& r, const json& p) {
  ECGElement a = element_from(r, need(p, "left")), b = element_from(r, need(p, "right"));
  bool merge = p.contains("merge") && to_bool(p.at("merge"), false);
  std::vector<MergeRecord> merges;
  ECGElement s = ecg_add(a, b, merge, &merges);
  Outcome o;
  o.result = {{"element", element_to(r, s)}, {"merges", num(static_cast<long>(merges.size()))}};
  for (const auto& [w, c] : s.summands) o.certificates.push_back(orientation_to(r, w));
  for (const auto& m : merges) {
    o.certificates.push_back(comaximal_to(r, m.coprime));
    o.certificates.push_back(congruence_to(r, m.first));
    o.certificates.push_back(congruence_to(r, m.second));
  }
  return o;
}

Outcome ecg_compare_verb(const Ring& r, const json& p) {
  Orientation w1 = orientation(r, p, "ideal", "w1"), w2 = orientation(r, p, "ideal", "w2");
  OrientationComparison c = orientation_compare(w1, w2);
  std::string v = verdict_name(c.verdict);
  json psi = c.free ? mat_to(r, c.psi) : json::array();
  json d = c.free ? poly_to(r, c.det) : json("");
  Outcome o;
  o.result = {{"verdict", v}, {"free", c.free}, {"reason", c.reason}, {"psi", psi}, {"det", d}};
  o.certificates.push_back(orientation_to(r, w1));
  o.certificates.push_back(orientation_to(r, w2));
  o.certificates.push_back({{"kind", "orientation_compare"},
                            {"ideal", polys_to(r, w1.ideal.gens())},
                            {"w1", polys_to(r, w1.tuple.elements)},
                            {"w2", polys_to(r, w2.tuple.elements)},
                            {"psi", psi},
                            {"det", d},
                            {"verdict", v},
                            {"free", c.free}});
  return o;
}

Outcome ecg_zero_check_verb(const Ring& r, const json& p) {
  Orientation w = orientation(r, p, "ideal", "tuple");
  Outcome o;
  if (p.contains("witness")) {
    auto wit = gens(r, p, "witness");
    ZeroCertificate z{w, make_generator_tuple(w.ideal, wit), mat_from(r, need(p, "sl_link"))};
    bool ok = check_zero_certificate(z);
    o.result = {{"zero", ok}, {"searched", false}};
    if (ok)
      o.certificates.push_back(zero_cert_to(r, z));
    else
      o.status = 1;
    return o;
  }
  auto z = find_zero_certificate(w);
  if (!z) throw BoundExhausted("no zero certificate within the search bound");
  o.result = {{"zero", true}, {"searched", true}, {"witness", polys_to(r, z->witness.elements)}};
  o.certificates.push_back(zero_cert_to(r, *z));
  return o;
}

Outcome ecg_inverse_verb(const Ring& r, const json& p) {
  Orientation w = orientation(r, p, "ideal", "tuple");
  ECGInverse inv = ecg_inverse(w);
  Outcome o;
  o.result = {{"ideal", polys_to(r, inv.inverse.ideal.gens())}, {"tuple", polys_to(r, inv.inverse.tuple.elements)},
              {"moved", inv.moving.has_value()}};
  o.certificates.push_back(orientation_to(r, inv.inverse));
  o.certificates.push_back(zero_cert_to(r, inv.sum_zero));
  if (inv.moving) {
    o.certificates.push_back(comaximal_to(r, inv.moving->j_plus_jprime));
    o.certificates.push_back(equality_to(r, inv.moving->beta_generates));
  }
  return o;
}

Outcome stably_free_verb(const Ring& r, const json& p) {
  int n = static_cast<int>(to_long(need(p, "n")));
  UnimodularRowModule m = make_unimodular_row(r, gens(r, p, "row"));
  StablyFreeClass c = stably_free_class(m, n);
  UnimodularRowModule used = make_unimodular_row(r, c.row);
  Outcome o;
  o.result = {{"row", polys_to(r, c.row)},
              {"ideal", polys_to(r, c.orientation.ideal.gens())},
              {"tuple", polys_to(r, c.orientation.tuple.elements)},
              {"zero_class", c.zero_class}};
  o.certificates.push_back({{"kind", "stably_free_class"},
                            {"row", polys_to(r, c.row)},
                            {"n", num(n)},
                            {"unimodular", membership_to(r, used.unimodular)},
                            {"orientation", orientation_to(r, c.orientation)},
                            {"zero_class", c.zero_class}});
  return o;
}

Outcome weak_class_verb(const Ring& r, const json& p) {
  ECGElement e = element_from(r, need(p, "element"));
  WeakElement w = weak_class(e);
  json s = json::array();
  for (const auto& [I, c] : w.summands) s.push_back({{"ideal", polys_to(r, I.gens())}, {"coeff", num(c)}});
  Outcome o;
  o.result = {{"summands", s}};
  if (p.contains("zero_certificate")) {
    const json& z = p.at("zero_certificate");
    Ideal I = ideal(r, z, "ideal");
    auto g = gens(r, z, "generators");
    int n = static_cast<int>(to_long(need(z, "n")));
    WeakZeroCertificate wz{I, g, equal_ideals(Ideal(r, g), I)};
    bool ok = check_weak_zero_certificate(wz, n);
    o.result["weak_zero"] = ok;
    if (ok)
      o.certificates.push_back({{"kind", "weak_zero_certificate"},
                                {"ideal", polys_to(r, I.gens())},
                                {"generators", polys_to(r, g)},
                                {"n", num(n)},
                                {"generates", equality_to(r, wz.generates)}});
    else
      o.status = 1;
  }
  return o;
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"gb", gb_verb},
      {"member", member_verb},
      {"intersect", intersect_verb},
      {"dim", dim_verb},
      {"height", height_verb},
      {"comaximal", comaximal_verb},
      {"quotient-info", quotient_info_verb},
      {"avoid-primes", avoid_primes_verb},
      {"general-position", general_position_verb},
      {"split-ideal", split_ideal_verb},
      {"mohan-kumar", mohan_kumar_verb},
      {"sl2", sl2_verb},
      {"swan-towber", swan_towber_verb},
      {"moving-lemma", moving_lemma_verb},
      {"patch", patch_verb},
      {"quillen-split", quillen_split_verb},
      {"add-principle", add_principle_verb},
      {"sub-principle", sub_principle_verb},
      {"ecg-add", ecg_add_verb},
      {"ecg-compare", ecg_compare_verb},
      {"ecg-zero-check", ecg_zero_check_verb},
      {"ecg-inverse", ecg_inverse_verb},
      {"stably-free-class", stably_free_verb},
      {"weak-class", weak_class_verb},
  };
  return table;
}

}  // namespace

std::vector<std::string> verb_names() {
  std::vector<std::string> v;
  for (const auto& [k, h] : handlers()) v.push_back(k);
  v.push_back("verify-cert");
  return v;
}

bool is_verb(const std::string& name) { return name == "verify-cert" || handlers().count(name) > 0; }

Outcome run_verb(const std::string& verb, const Ring& ring, const json& payload) {
  auto it = handlers().find(verb);
  if (it == handlers().end()) throw ParseError("unknown verb '" + verb + "'");
  return it->second(ring, payload);
}

json make_bundle(const std::string& verb, const Ring& ring, const Outcome& out) {
  std::string h = ring_hash(ring);
  json certs = out.certificates;
  for (auto& c : certs) c["ring_hash"] = h;
  return {{"format", "euler-cg/1"},
          {"verb", verb},
          {"ring", ring_to_json(ring)},
          {"ring_hash", h},
          {"result", out.result},
          {"certificates", certs}};
}

Outcome verify_bundle(const json& bundle, const std::optional<Ring>& ring) {
  if (!bundle.is_object() || !bundle.contains("certificates")) throw ParseError("not a certificate bundle");
  Ring r = ring ? *ring : ring_from_json(need(bundle, "ring"));
  std::string h = ring_hash(r);
  bool hash_ok = bundle.contains("ring_hash") && bundle.at("ring_hash") == h;
  if (ring && bundle.contains("ring")) hash_ok = hash_ok && ring_hash(ring_from_json(bundle.at("ring"))) == h;
  json checks = json::array();
  json failing = nullptr;
  const json& certs = bundle.at("certificates");
  if (!certs.is_array()) throw ParseError("certificates must be a list");
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const json& c = certs[i];
    bool ok = verify_certificate(r, c);
    // each certificate carries its own stamp
    if (!c.contains("ring_hash") || c.at("ring_hash") != h) ok = false;
    checks.push_back({{"index", num(static_cast<long>(i))}, {"kind", c.at("kind")}, {"ok", ok}});
    if (!ok && failing.is_null()) failing = num(static_cast<long>(i));
  }
  Outcome o;
  bool valid = hash_ok && failing.is_null();
  o.result = {{"valid", valid}, {"ring_hash_ok", hash_ok}, {"checks", checks}, {"failing_index", failing}};
  o.status = valid ? 0 : 1;
  return o;
}

}  // namespace ecg::cli
