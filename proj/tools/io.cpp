#include "io.hpp"

#include <cstdio>

#include "eulercg/errors.hpp"

namespace ecg::cli {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<Poly> gens_of(const Ring& r, const json& j, const char* key) {
  return polys_from(r, field(j, key));
}

}  // namespace

Ring ring_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("ring descriptor must be an object");
  std::vector<std::string> vars;
  for (const auto& v : field(j, "vars")) vars.push_back(v.get<std::string>());
  if (vars.empty()) throw ParseError("ring needs at least one variable");
  std::vector<Poly> modulus;
  if (j.contains("modulus"))
    for (const auto& m : j.at("modulus")) modulus.push_back(parse_poly(m.get<std::string>(), vars));
  int dim = j.contains("dimension") ? static_cast<int>(to_long(j.at("dimension")))
                                    : static_cast<int>(vars.size());
  bool domain = j.contains("domain") ? to_bool(j.at("domain"), false) : modulus.empty();
  return make_ring(vars, modulus, dim, domain);
}

json ring_to_json(const Ring& r) {
  json m = json::array();
  for (const auto& p : r->modulus()) m.push_back(r->str(p));
  return {{"vars", r->vars()},
          {"modulus", m},
          {"dimension", num(r->asserted_dimension())},
          {"domain", r->is_domain()}};
}

std::string ring_hash(const Ring& r) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(r->hash()));
  return buf;
}

std::string num(long v) { return std::to_string(v); }

long to_long(const json& j) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      throw ParseError("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw ParseError("not an integer: '" + s + "'");
    return v;
  }
  throw ParseError("expected an integer");
}

bool to_bool(const json& j, bool dflt) {
  if (j.is_null()) return dflt;
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_string()) return j.get<std::string>() == "true";
  throw ParseError("expected a boolean");
}

Poly poly_from(const Ring& r, const json& j) {
  if (j.is_string()) return r->reduce(r->parse(j.get<std::string>()));
  if (j.is_number_integer()) return r->constant(j.get<long>());
  throw ParseError("polynomial must be a string");
}

json poly_to(const Ring& r, const Poly& f) { return r->str(f); }

std::vector<Poly> polys_from(const Ring& r, const json& j) {
  std::vector<Poly> out;
  if (j.is_string()) {
    for (auto& p : parse_poly_list(j.get<std::string>(), r->vars())) out.push_back(r->reduce(p));
    return out;
  }
  if (!j.is_array()) throw ParseError("expected a list of polynomials");
  for (const auto& e : j) out.push_back(poly_from(r, e));
  return out;
}

std::vector<Poly> raw_polys_from(const Ring& r, const json& j) {
  if (!j.is_array()) throw ParseError("expected a list of polynomials");
  std::vector<Poly> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError("polynomial must be a string");
    out.push_back(r->parse(e.get<std::string>()));
  }
  return out;
}

json polys_to(const Ring& r, const std::vector<Poly>& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(r->str(p));
  return a;
}

Ideal ideal_from(const Ring& r, const json& j) { return Ideal(r, polys_from(r, j)); }

PolyMat mat_from(const Ring& r, const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty list of rows");
  std::vector<std::vector<Poly>> rows;
  for (const auto& row : j) rows.push_back(polys_from(r, row));
  for (const auto& row : rows)
    if (row.size() != rows[0].size()) throw ParseError("ragged matrix");
  return PolyMat::from_rows(rows);
}

json mat_to(const Ring& r, const PolyMat& m) {
  json a = json::array();
  for (int i = 0; i < m.rows(); ++i) a.push_back(polys_to(r, m.row(i)));
  return a;
}

json loc_mat_to(const Ring& r, const LocMatrix& m) {
  return {{"num", mat_to(r, m.num)}, {"base", poly_to(r, m.base)}, {"power", num(m.power)}};
}

LocMatrix loc_mat_from(const Ring& r, const json& j) {
  return {mat_from(r, field(j, "num")), poly_from(r, field(j, "base")),
          static_cast<int>(to_long(field(j, "power")))};
}

json membership_to(const Ring& r, const MembershipCertificate& c) {
  return {{"kind", "membership"},
          {"element", poly_to(r, c.element)},
          {"ideal", polys_to(r, c.ideal.gens())},
          {"cofactors", polys_to(r, c.cofactors)}};
}

MembershipCertificate membership_from(const Ring& r, const json& j) {
  MembershipCertificate c;
  c.element = poly_from(r, field(j, "element"));
  c.ideal = Ideal(r, gens_of(r, j, "ideal"));
  c.cofactors = gens_of(r, j, "cofactors");
  return c;
}

json equality_to(const Ring& r, const IdealEquality& e) {
  json f = json::array(), b = json::array(), left = json::array(), right = json::array();
  for (const auto& m : e.forward) {
    f.push_back(membership_to(r, m));
    left.push_back(poly_to(r, m.element));
  }
  for (const auto& m : e.backward) {
    b.push_back(membership_to(r, m));
    right.push_back(poly_to(r, m.element));
  }
  return {{"kind", "ideal_equality"},
          {"left", left},
          {"right", right},
          {"equal", e.equal},
          {"forward", f},
          {"backward", b}};
}

IdealEquality equality_from(const Ring& r, const json& j) {
  IdealEquality e;
  e.equal = to_bool(field(j, "equal"), false);
  for (const auto& m : field(j, "forward")) e.forward.push_back(membership_from(r, m));
  for (const auto& m : field(j, "backward")) e.backward.push_back(membership_from(r, m));
  return e;
}

json comaximal_to(const Ring& r, const ComaximalityCertificate& c) {
  return {{"kind", "comaximal"},
          {"left", polys_to(r, c.u_in_i.ideal.gens())},
          {"right", polys_to(r, c.v_in_j.ideal.gens())},
          {"u", poly_to(r, c.u)},
          {"v", poly_to(r, c.v)},
          {"u_in_left", membership_to(r, c.u_in_i)},
          {"v_in_right", membership_to(r, c.v_in_j)}};
}

ComaximalityCertificate comaximal_from(const Ring& r, const json& j) {
  return {poly_from(r, field(j, "u")), poly_from(r, field(j, "v")),
          membership_from(r, field(j, "u_in_left")), membership_from(r, field(j, "v_in_right"))};
}

json congruence_to(const Ring& r, const CongruenceCertificate& c) {
  json w = json::array();
  for (const auto& m : c.witnesses) w.push_back(membership_to(r, m));
  return {{"kind", "congruence"},
          {"left", polys_to(r, c.left)},
          {"right", polys_to(r, c.right)},
          {"base", polys_to(r, c.base.gens())},
          {"witnesses", w}};
}

CongruenceCertificate congruence_from(const Ring& r, const json& j) {
  CongruenceCertificate c;
  c.left = gens_of(r, j, "left");
  c.right = gens_of(r, j, "right");
  c.base = Ideal(r, gens_of(r, j, "base"));
  c.square_ideal = Ideal(r, square_generators(c.base.gens()));
  for (const auto& m : field(j, "witnesses")) c.witnesses.push_back(membership_from(r, m));
  return c;
}

json tuple_to(const Ring& r, const GeneratorTuple& t) {
  json c = json::array();
  for (const auto& m : t.certs) c.push_back(membership_to(r, m));
  return {{"ideal", polys_to(r, t.ideal.gens())}, {"elements", polys_to(r, t.elements)}, {"certs", c}};
}

GeneratorTuple tuple_from(const Ring& r, const json& j) {
  GeneratorTuple t;
  t.ideal = Ideal(r, gens_of(r, j, "ideal"));
  t.elements = gens_of(r, j, "elements");
  for (const auto& m : field(j, "certs")) t.certs.push_back(membership_from(r, m));
  return t;
}

json orientation_to(const Ring& r, const Orientation& w) {
  return {{"kind", "orientation"},
          {"ideal", polys_to(r, w.ideal.gens())},
          {"tuple", tuple_to(r, w.tuple)},
          {"generates", equality_to(r, w.generates)}};
}

Orientation orientation_from(const Ring& r, const json& j) {
  Orientation w;
  w.ideal = Ideal(r, gens_of(r, j, "ideal"));
  w.tuple = tuple_from(r, field(j, "tuple"));
  w.generates = equality_from(r, field(j, "generates"));
  return w;
}

json zero_cert_to(const Ring& r, const ZeroCertificate& z) {
  return {{"kind", "zero_certificate"},
          {"orientation", orientation_to(r, z.orientation)},
          {"witness", tuple_to(r, z.witness)},
          {"sl_link", mat_to(r, z.sl_link)}};
}

ZeroCertificate zero_cert_from(const Ring& r, const json& j) {
  return {orientation_from(r, field(j, "orientation")), tuple_from(r, field(j, "witness")),
          mat_from(r, field(j, "sl_link"))};
}

json transcript_to(const std::vector<TranscriptStep>& t) {
  json a = json::array();
  for (const auto& s : t) {
    json p = json::object();
    for (const auto& [k, v] : s.params) p[k] = v;
    a.push_back({{"lemma", s.lemma}, {"params", p}});
  }
  return a;
}

json principle_to(const Ring& r, const PrincipleResult& p) {
  json cg = json::array();
  for (const auto& c : p.congruences) cg.push_back(congruence_to(r, c));
  bool add = p.kind == PrincipleResult::Kind::Addition;
  return {{"kind", "principle_result"},
          {"type", add ? "addition" : "subtraction"},
          {"target", polys_to(r, p.target.gens())},
          {"first", polys_to(r, p.first.gens())},
          {"second", polys_to(r, p.second.gens())},
          {"input_a", polys_to(r, p.input_a)},
          {"input_b", polys_to(r, p.input_b)},
          {"output", tuple_to(r, p.output)},
          {"congruences", cg},
          {"generation", equality_to(r, p.generation)},
          {"transcript", transcript_to(p.transcript)}};
}

PrincipleResult principle_from(const Ring& r, const json& j) {
  PrincipleResult p;
  std::string type = field(j, "type").get<std::string>();
  if (type != "addition" && type != "subtraction") throw ParseError("unknown principle type " + type);
  p.kind = type == "addition" ? PrincipleResult::Kind::Addition : PrincipleResult::Kind::Subtraction;
  p.ring = r;
  p.target = Ideal(r, gens_of(r, j, "target"));
  p.first = Ideal(r, gens_of(r, j, "first"));
  p.second = Ideal(r, gens_of(r, j, "second"));
  p.input_a = gens_of(r, j, "input_a");
  p.input_b = gens_of(r, j, "input_b");
  p.output = tuple_from(r, field(j, "output"));
  for (const auto& c : field(j, "congruences")) p.congruences.push_back(congruence_from(r, c));
  p.generation = equality_from(r, field(j, "generation"));
  return p;
}

json element_to(const Ring& r, const ECGElement& e) {
  json a = json::array();
  for (const auto& [w, c] : e.summands)
    a.push_back({{"ideal", polys_to(r, w.ideal.gens())}, {"tuple", polys_to(r, w.tuple.elements)},
                 {"coeff", num(c)}});
  return a;
}

ECGElement element_from(const Ring& r, const json& j) {
  if (!j.is_array()) throw ParseError("an element is a list of summands");
  ECGElement e{r, {}};
  for (const auto& s : j) {
    long c = s.contains("coeff") ? to_long(s.at("coeff")) : 1;
    e.summands.push_back({make_orientation(ideal_from(r, field(s, "ideal")), gens_of(r, s, "tuple")), c});
  }
  return e;
}

}  // namespace ecg::cli
