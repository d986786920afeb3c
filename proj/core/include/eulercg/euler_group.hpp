#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulercg/principles.hpp"

namespace ecg {

/// A tuple read modulo J^2 that generates J/J^2.
struct Orientation {
  Ideal ideal;
  GeneratorTuple tuple;
  IdealEquality generates;  // (tuple) + J^2 = J
};

/// Certifies (tuple) + J^2 = J; PreconditionError otherwise. The unit ideal
/// carries the zero orientation, any tuple of the right length.
Orientation make_orientation(const Ideal& J, std::vector<Poly> tuple);
bool verify_orientation(const Orientation& w);

enum class Verdict { Equivalent, Inequivalent, Undecided };
const char* verdict_name(Verdict v);

struct OrientationComparison {
  Verdict verdict = Verdict::Undecided;
  bool free = false;  // J/J^2 free of rank n over A/J
  PolyMat psi;        // w1 psi = w2 mod J^2, entries reduced mod J (free case)
  Poly det;           // det psi mod J, the connecting unit
  std::string reason;
};

/// Decided only when J/J^2 is free of rank n; then psi is unique and the
/// orientations agree iff det psi = 1 in A/J.
OrientationComparison orientation_compare(const Orientation& w1, const Orientation& w2);

struct SquareRewrite {
  Orientation result;  // (a^2 w_1, w_2, ..., w_n)
  bool equal_in_group = true;
  std::vector<TranscriptStep> transcript;
};

SquareRewrite square_rewrite(const Orientation& w, const Poly& a);

struct ECGElement {
  Ring ring;
  std::vector<std::pair<Orientation, long>> summands;
};

ECGElement ecg_zero(const Ring& ring);
ECGElement ecg_single(const Orientation& w, long coeff = 1);

/// The two residue families of a comaximal merge.
struct MergeRecord {
  Orientation merged;
  CongruenceCertificate first, second;  // merged tuple vs each input
  ComaximalityCertificate coprime;
};

/// (J1 cap J2, w) with w = w1 mod J1^2 and w = w2 mod J2^2.
MergeRecord merge_comaximal(const Orientation& w1, const Orientation& w2);
bool verify_merge(const MergeRecord& m, const Orientation& w1, const Orientation& w2);

/// Formal sum. Identical orientations are merged; with `merge`, pairs of
/// comaximal summands of coefficient 1 are combined as well.
ECGElement ecg_add(const ECGElement& a, const ECGElement& b, bool merge = false,
                   std::vector<MergeRecord>* merges = nullptr);

/// Witness tuple generating J exactly, linked to the orientation by a
/// determinant-one matrix over A/J: witness * sl_link = tuple mod J^2.
struct ZeroCertificate {
  Orientation orientation;
  GeneratorTuple witness;
  PolyMat sl_link;
};

bool check_zero_certificate(const ZeroCertificate& z);

/// Witnesses tried as small integer combinations of the Groebner basis of J,
/// lowest enumeration index first. Never decides that no witness exists.
std::optional<ZeroCertificate> find_zero_certificate(const Orientation& w, int bound = 2);

struct ECGInverse {
  Orientation inverse;       // (J', w') with w' = beta mod J'^2
  ZeroCertificate sum_zero;  // for (J cap J', beta)
  std::optional<MovingLemma> moving;
};

ECGInverse ecg_inverse(const Orientation& w, int bound = 2);

struct UnimodularRowModule {
  std::vector<Poly> row;
  MembershipCertificate unimodular;  // 1 in (row)
};

UnimodularRowModule make_unimodular_row(const Ring& ring, std::vector<Poly> row);

struct StablyFreeClass {
  Orientation orientation;  // on J' = (a_1, ..., a_n) after the Evans move
  std::vector<Poly> row;    // the row actually used
  bool zero_class = false;  // J' = (1)
};

/// e(P) for P = A^{n+1}/(row), n even, from psi(e_i) = a_{i+1} (i odd) and
/// psi(e_i) = -a_{i-1} (i even).
StablyFreeClass stably_free_class(const UnimodularRowModule& m, int even_n, int bound = 2);

/// sum_i (-1)^i w_i with w_i = alpha(p_i) det(p_0, ..., p_n without p_i),
/// for n+1 vectors p_i of A^n and alpha a row of length n.
Poly alternating_sum(const Ring& ring, const std::vector<Poly>& alpha,
                     const std::vector<std::vector<Poly>>& p);

struct Transfer {
  Poly quotient;  // delta(wedge Phi) / det(sample)
  Poly expected;  // b^{n-1}
  bool holds = false;
};

/// Phi(p) = (alpha(p), b p) into the kernel of (b, -alpha) on A + A^n; delta
/// is built from (a_0, p_0) with a_0 b - alpha(p_0) = 1. The sample holds n
/// vectors of A^n.
Transfer bnminus1_transfer(const Ring& ring, const std::vector<Poly>& alpha, const Poly& b,
                           const Poly& a0, const std::vector<Poly>& p0,
                           const std::vector<std::vector<Poly>>& sample);

/// Orientations forgotten: summands keyed by ideal.
struct WeakElement {
  Ring ring;
  std::vector<std::pair<Ideal, long>> summands;
};

WeakElement weak_class(const ECGElement& e);

/// E_0 zero test: n generators of J, no orientation condition.
struct WeakZeroCertificate {
  Ideal ideal;
  std::vector<Poly> generators;
  IdealEquality generates;
};

bool check_weak_zero_certificate(const WeakZeroCertificate& z, int n);

/// Q[x, y, z]/(x^2 + y^2 + z^2 - 1), dimension 2, asserted prime.
Ring sphere_ring();

}  // namespace ecg
