#include <functional>
#include <map>

#include "eulercg/errors.hpp"
#include "io.hpp"

namespace ecg::cli {

namespace {

using Check = std::function<bool(const Ring&, const json&)>;

bool same_gens(const std::vector<Poly>& a, const std::vector<Poly>& b) { return a == b; }

bool check_membership(const Ring& r, const json& j) { return verify_membership(membership_from(r, j)); }

bool check_equality(const Ring& r, const json& j) {
  auto left = polys_from(r, j.at("left")), right = polys_from(r, j.at("right"));
  IdealEquality e = equality_from(r, j);
  if (e.forward.size() != left.size() || e.backward.size() != right.size()) return false;
  for (std::size_t i = 0; i < left.size(); ++i)
    if (e.forward[i].element != left[i] || !same_gens(e.forward[i].ideal.gens(), right)) return false;
  for (std::size_t i = 0; i < right.size(); ++i)
    if (e.backward[i].element != right[i] || !same_gens(e.backward[i].ideal.gens(), left)) return false;
  return verify_equality(e);
}

bool check_comaximal(const Ring& r, const json& j) {
  auto c = comaximal_from(r, j);
  return same_gens(c.u_in_i.ideal.gens(), polys_from(r, j.at("left"))) &&
         same_gens(c.v_in_j.ideal.gens(), polys_from(r, j.at("right"))) && verify_comaximal(c);
}

bool check_congruence(const Ring& r, const json& j) { return verify_congruence(congruence_from(r, j)); }

bool check_tuple(const Ring& r, const json& j) {
  GeneratorTuple t = tuple_from(r, j);
  if (t.certs.size() != t.elements.size()) return false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& c = t.certs[i];
    if (c.element != t.elements[i] || !same_gens(c.ideal.gens(), t.ideal.gens())) return false;
    if (!verify_membership(c)) return false;
  }
  return true;
}

bool check_orientation(const Ring& r, const json& j) {
  if (!check_tuple(r, j.at("tuple")) || !check_equality(r, j.at("generates"))) return false;
  Orientation w = orientation_from(r, j);
  if (!same_gens(w.tuple.ideal.gens(), w.ideal.gens())) return false;
  return verify_orientation(w);
}

bool check_zero(const Ring& r, const json& j) {
  if (!check_orientation(r, j.at("orientation")) || !check_tuple(r, j.at("witness"))) return false;
  return check_zero_certificate(zero_cert_from(r, j));
}

bool check_principle(const Ring& r, const json& j) {
  if (!check_tuple(r, j.at("output")) || !check_equality(r, j.at("generation"))) return false;
  for (const auto& c : j.at("congruences"))
    if (!check_congruence(r, c)) return false;
  return verify_principle_result(principle_from(r, j));
}

// Fresh Buchberger run compared with the claimed basis; cofactors re-expanded.
bool check_gb(const Ring& r, const json& j) {
  auto input = raw_polys_from(r, j.at("input"));
  auto basis = raw_polys_from(r, j.at("basis"));
  const json& cof = j.at("cofactors");
  if (cof.size() != basis.size()) return false;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto c = raw_polys_from(r, cof[i]);
    if (c.size() != input.size()) return false;
    Poly acc(r->nvars());
    for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * input[k];
    if (acc != basis[i]) return false;
  }
  GroebnerBasis fresh = buchberger(input, MonomialOrder::grevlex(), false);
  if (fresh.basis.size() != basis.size()) return false;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (fresh.basis[i] != basis[i]) return false;
  return true;
}

// The gb certificate is for generators + modulus of the ideal; the
// remainder is the normal form against the claimed basis.
bool check_non_membership(const Ring& r, const json& j) {
  const json& g = j.at("gb");
  if (!check_gb(r, g)) return false;
  auto input = raw_polys_from(r, g.at("input"));
  std::vector<Poly> expect = polys_from(r, j.at("ideal"));
  for (const auto& m : r->modulus()) expect.push_back(m);
  if (!same_gens(input, expect)) return false;
  GroebnerBasis gb;
  gb.order = MonomialOrder::grevlex();
  gb.basis = raw_polys_from(r, g.at("basis"));
  gb.input = input;
  gb.tracked = false;
  Poly rem = reduce(poly_from(r, j.at("element")).with_order(gb.order), gb);
  return !rem.is_zero() && rem == poly_from(r, j.at("remainder"));
}

bool check_invariant(const Ring& r, const json& j) {
  Ideal I = ideal_from(r, j.at("ideal"));
  std::string name = j.at("name").get<std::string>();
  long v = to_long(j.at("value"));
  if (name == "dimension") return krull_dimension(I) == v;
  if (name == "height") return height(I) == v;
  if (name == "quotient_dimension") return quotient_algebra(I)->dim() == v;
  throw ParseError("unknown invariant '" + name + "'");
}

// gens lie in both sides and generate a fresh intersection.
bool check_intersection(const Ring& r, const json& j) {
  Ideal L = ideal_from(r, j.at("left")), R = ideal_from(r, j.at("right"));
  Ideal K = ideal_from(r, j.at("gens"));
  if (!L.contains(K) || !R.contains(K)) return false;
  return equal_ideals(K, ideal_intersect(L, R)).equal;
}

// row * matrix = image and det matrix = det, in A.
bool check_row_transform(const Ring& r, const json& j) {
  auto row = polys_from(r, j.at("row"));
  PolyMat m = mat_from(r, j.at("matrix"));
  auto image = polys_from(r, j.at("image"));
  if (m.rows() != static_cast<int>(row.size()) || m.cols() != static_cast<int>(image.size())) return false;
  auto got = row_times(row, m);
  for (std::size_t i = 0; i < image.size(); ++i)
    if (!r->equal(got[i], image[i])) return false;
  if (j.contains("det")) {
    if (m.rows() != m.cols()) return false;
    if (!r->equal(det(m), poly_from(r, j.at("det")))) return false;
  }
  return true;
}

// First row equals `row`, determinant one.
bool check_completion(const Ring& r, const json& j) {
  auto row = polys_from(r, j.at("row"));
  PolyMat m = mat_from(r, j.at("matrix"));
  if (m.rows() != m.cols() || m.cols() != static_cast<int>(row.size())) return false;
  for (int k = 0; k < m.cols(); ++k)
    if (!r->equal(m.at(0, k), row[k])) return false;
  return r->equal(det(m), r->one());
}

bool check_avoidance(const Ring& r, const json& j) {
  auto gens = polys_from(r, j.at("gens"));
  Poly c = poly_from(r, j.at("c"));
  const json& b = j.at("b");
  if (gens.empty() || b.size() + 1 != gens.size()) return false;
  Poly acc = gens[0];
  for (std::size_t i = 0; i < b.size(); ++i) acc += gens[i + 1].scaled(to_long(b[i]));
  if (!r->equal(acc, c)) return false;
  for (const auto& p : j.at("primes"))
    if (ideal_from(r, p).contains(c)) return false;
  return true;
}

bool check_prefix_heights(const Ring& r, const json& j) {
  auto gens = polys_from(r, j.at("gens"));
  std::vector<Poly> prefix;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    prefix.push_back(gens[i]);
    if (!height_at_least(Ideal(r, prefix), static_cast<int>(i + 1))) return false;
  }
  return true;
}

// element * base^power = num in A.
bool check_localized(const Ring& r, const json& j) {
  Poly c = poly_from(r, j.at("element"));
  Poly s = poly_from(r, j.at("base"));
  long p = to_long(j.at("power"));
  if (p < 0) return false;
  return r->equal(c * s.pow(static_cast<unsigned>(p)), poly_from(r, j.at("num")));
}

bool check_quillen(const Ring& r, const json& j) {
  LocalizedMatrixPath path = make_path(r, poly_from(r, j.at("s")), poly_from(r, j.at("t")));
  path.sigma = loc_mat_from(path.ringT, j.at("sigma"));
  QuillenSplit q;
  q.psi1 = loc_mat_from(path.ringT, j.at("psi1"));
  q.psi2 = loc_mat_from(path.ringT, j.at("psi2"));
  q.k = static_cast<int>(to_long(j.at("k")));
  q.kt = static_cast<int>(to_long(j.at("kt")));
  q.lambda = poly_from(path.ringT, j.at("lambda"));
  const Ring& rt = path.ringT;
  Poly s = extend_poly(path.s, rt->nvars()), t = extend_poly(path.t, rt->nvars());
  if (path.sigma.base != s * t || q.k < 0 || q.kt < 0) return false;
  // lambda s^k = 1 mod t^kt
  Poly quo;
  if (!exact_divide(rt, rt->one() - q.lambda * s.pow(q.k), t.pow(q.kt), &quo)) return false;
  return verify_quillen_split(path, q);
}

bool check_compare(const Ring& r, const json& j) {
  Ideal J = ideal_from(r, j.at("ideal"));
  auto w1 = polys_from(r, j.at("w1")), w2 = polys_from(r, j.at("w2"));
  std::string verdict = j.at("verdict").get<std::string>();
  std::size_t n = w1.size();
  if (w2.size() != n) return false;
  // both tuples must be orientations of J
  Ideal sq = J * J;
  for (const auto* w : {&w1, &w2})
    if (!equal_ideals(Ideal(r, *w) + sq, J).equal) return false;
  // J/J^2 freeness, recomputed from the two quotient dimensions
  int d1 = quotient_algebra(J)->dim(), d2 = quotient_algebra(J * J)->dim();
  bool free = d2 - d1 == static_cast<int>(n) * d1;
  if (to_bool(j.at("free"), false) != free) return false;
  if (!free) return verdict == "undecided";
  PolyMat psi = mat_from(r, j.at("psi"));
  Poly d = poly_from(r, j.at("det"));
  if (psi.rows() != static_cast<int>(n) || psi.cols() != static_cast<int>(n)) return false;
  auto got = row_times(w1, psi);
  for (std::size_t i = 0; i < n; ++i)
    if (!sq.contains(got[i] - w2[i])) return false;
  if (!J.contains(det(psi) - d)) return false;
  bool one = J.contains(d - r->one());
  return verdict == (one ? "equivalent" : "inequivalent");
}

bool check_weak_zero(const Ring& r, const json& j) {
  WeakZeroCertificate z{ideal_from(r, j.at("ideal")), polys_from(r, j.at("generators")),
                        equality_from(r, j.at("generates"))};
  return check_equality(r, j.at("generates")) && check_weak_zero_certificate(z, static_cast<int>(to_long(j.at("n"))));
}

// The psi rule applied to the row reproduces the orientation; the row is
// unimodular.
bool check_stably_free(const Ring& r, const json& j) {
  auto row = polys_from(r, j.at("row"));
  long n = to_long(j.at("n"));
  if (n <= 0 || n % 2 || static_cast<long>(row.size()) != n + 1) return false;
  if (!check_membership(r, j.at("unimodular"))) return false;
  auto um = membership_from(r, j.at("unimodular"));
  if (!um.element.is_one() || !same_gens(um.ideal.gens(), row)) return false;
  if (!check_orientation(r, j.at("orientation"))) return false;
  Orientation w = orientation_from(r, j.at("orientation"));
  if (to_bool(j.at("zero_class"), false)) return w.ideal.is_unit();
  std::vector<Poly> rest(row.begin() + 1, row.end());
  if (!equal_ideals(w.ideal, Ideal(r, rest)).equal) return false;
  for (long i = 1; i <= n; ++i) {
    Poly expect = i % 2 ? row[i + 1] : -row[i - 1];
    if (!r->equal(w.tuple.elements[i - 1], expect)) return false;
  }
  return true;
}

const std::map<std::string, Check>& checks() {
  static const std::map<std::string, Check> table{
      {"membership", check_membership},
      {"ideal_equality", check_equality},
      {"comaximal", check_comaximal},
      {"congruence", check_congruence},
      {"orientation", check_orientation},
      {"zero_certificate", check_zero},
      {"principle_result", check_principle},
      {"gb", check_gb},
      {"non_membership", check_non_membership},
      {"invariant", check_invariant},
      {"intersection", check_intersection},
      {"row_transform", check_row_transform},
      {"completion", check_completion},
      {"avoidance", check_avoidance},
      {"prefix_heights", check_prefix_heights},
      {"localized_equality", check_localized},
      {"quillen_split", check_quillen},
      {"orientation_compare", check_compare},
      {"weak_zero_certificate", check_weak_zero},
      {"stably_free_class", check_stably_free},
  };
  return table;
}

}  // namespace

bool verify_certificate(const Ring& r, const json& cert) {
  if (!cert.is_object() || !cert.contains("kind")) throw ParseError("certificate without a kind");
  std::string kind = cert.at("kind").get<std::string>();
  auto it = checks().find(kind);
  if (it == checks().end()) throw ParseError("unknown certificate kind '" + kind + "'");
  try {
    return it->second(r, cert);
  } catch (const PreconditionError&) {
    return false;
  } catch (const ParseError&) {
    return false;
  } catch (const json::exception&) {
    return false;
  }
}

}  // namespace ecg::cli
