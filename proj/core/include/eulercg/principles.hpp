#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eulercg/transforms.hpp"

namespace ecg {

/// One lemma application, with its parameters rendered as text.
struct TranscriptStep {
  std::string lemma;
  std::vector<std::pair<std::string, std::string>> params;
};

struct PrincipleResult {
  enum class Kind { Addition, Subtraction };

  Kind kind = Kind::Addition;
  Ring ring;
  Ideal target;  // the ideal the output generates
  // Addition: J1, J2. Subtraction: J, J1.
  Ideal first, second;
  std::vector<Poly> input_a, input_b;
  GeneratorTuple output;
  // Addition: output vs a mod J1^2, output vs b mod J2^2.
  // Subtraction: output vs a mod J^2.
  std::vector<CongruenceCertificate> congruences;
  IdealEquality generation;  // (output) = target
  std::vector<TranscriptStep> transcript;
};

/// J1 = (a1, a2) and J2 = (b1, b2) comaximal of height 2 in a domain of
/// dimension 2. Output generates J1 cap J2 with c = a mod J1^2, c = b mod J2^2.
PrincipleResult addition_principle(const GeneratorTuple& j1g, const GeneratorTuple& j2g);

/// J2 = J cap J1 generated by `j2g` = (a1, a2), J1 generated by `j1g` =
/// (b1, b2), with `cong` witnessing a - b in J1^2. Output generates J with
/// c = a mod J^2.
PrincipleResult subtraction_principle(const Ideal& J, const GeneratorTuple& j1g,
                                      const GeneratorTuple& j2g,
                                      const CongruenceCertificate& cong);

/// Re-derives the target and re-checks every certificate from scratch.
bool verify_principle_result(const PrincipleResult& r);

/// Tuples of length other than two need elementary transitivity over
/// one-dimensional quotients, which is not available; always throws
/// NotSupported.
PrincipleResult addition_principle_general(const GeneratorTuple& j1g, const GeneratorTuple& j2g);
PrincipleResult subtraction_principle_general(const Ideal& J, const GeneratorTuple& j1g,
                                              const GeneratorTuple& j2g,
                                              const CongruenceCertificate& cong);

}  // namespace ecg
