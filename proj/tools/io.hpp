#pragma once

// JSON forms of rings, polynomials and certificates. Polynomials are strings
// in the ring's variables; every number is a decimal string.

#include <string>
#include <vector>

#include "eulercg/euler_group.hpp"
#include "json.hpp"

namespace ecg::cli {

using json = nlohmann::json;

struct Bundle;

// Ring descriptor: {"vars": [...], "modulus": [...], "dimension": "2", "domain": true}.
Ring ring_from_json(const json& j);
json ring_to_json(const Ring& r);
std::string ring_hash(const Ring& r);

std::string num(long v);
long to_long(const json& j);          // "3" or 3
bool to_bool(const json& j, bool dflt);

Poly poly_from(const Ring& r, const json& j);
json poly_to(const Ring& r, const Poly& f);
std::vector<Poly> polys_from(const Ring& r, const json& j);  // array or "(a, b)"
// As written, not reduced by the modulus.
std::vector<Poly> raw_polys_from(const Ring& r, const json& j);
json polys_to(const Ring& r, const std::vector<Poly>& v);
Ideal ideal_from(const Ring& r, const json& j);
PolyMat mat_from(const Ring& r, const json& j);
json mat_to(const Ring& r, const PolyMat& m);
json loc_mat_to(const Ring& r, const LocMatrix& m);
LocMatrix loc_mat_from(const Ring& r, const json& j);

json membership_to(const Ring& r, const MembershipCertificate& c);
MembershipCertificate membership_from(const Ring& r, const json& j);
// Sides are read off the certificate: left = forward elements, right =
// backward elements.
json equality_to(const Ring& r, const IdealEquality& e);
IdealEquality equality_from(const Ring& r, const json& j);
json comaximal_to(const Ring& r, const ComaximalityCertificate& c);
ComaximalityCertificate comaximal_from(const Ring& r, const json& j);
json congruence_to(const Ring& r, const CongruenceCertificate& c);
CongruenceCertificate congruence_from(const Ring& r, const json& j);
json tuple_to(const Ring& r, const GeneratorTuple& t);
GeneratorTuple tuple_from(const Ring& r, const json& j);
json orientation_to(const Ring& r, const Orientation& w);
Orientation orientation_from(const Ring& r, const json& j);
json zero_cert_to(const Ring& r, const ZeroCertificate& z);
ZeroCertificate zero_cert_from(const Ring& r, const json& j);
json principle_to(const Ring& r, const PrincipleResult& p);
PrincipleResult principle_from(const Ring& r, const json& j);
json transcript_to(const std::vector<TranscriptStep>& t);
json element_to(const Ring& r, const ECGElement& e);
ECGElement element_from(const Ring& r, const json& j);

// Checks one certificate against a freshly built context; kinds as written
// by the *_to functions above plus the verb-specific ones in verify.cpp.
bool verify_certificate(const Ring& r, const json& cert);

}  // namespace ecg::cli
