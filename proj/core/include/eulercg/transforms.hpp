#pragma once

#include <optional>
#include <vector>

#include "eulercg/artinian.hpp"
#include "eulercg/groebner.hpp"
#include "eulercg/matrix.hpp"

namespace ecg {

/// Elements of an ideal, each with a membership certificate.
struct GeneratorTuple {
  Ideal ideal;
  std::vector<Poly> elements;
  std::vector<MembershipCertificate> certs;

  std::size_t size() const { return elements.size(); }
};

/// Certifies membership of every element; PreconditionError otherwise.
GeneratorTuple make_generator_tuple(const Ideal& ideal, std::vector<Poly> elements);

/// left_i - right_i in base^2 for every i, with base^2 generated by
/// square_generators(base.gens()).
struct CongruenceCertificate {
  std::vector<Poly> left;
  std::vector<Poly> right;
  Ideal base;
  Ideal square_ideal;
  std::vector<MembershipCertificate> witnesses;
};

std::optional<CongruenceCertificate> congruence_mod_square(const std::vector<Poly>& left,
                                                           const std::vector<Poly>& right,
                                                           const Ideal& base);
/// Rebuilds the square from `base` and re-expands every witness.
bool verify_congruence(const CongruenceCertificate& c);

struct AvoidResult {
  Poly c;
  std::vector<int> b;  // c = a_1 + sum b_i a_{i+1}
};

AvoidResult avoid_primes(const GeneratorTuple& gens, const std::vector<Ideal>& primes,
                         int bound = 4);

struct GeneralPosition {
  std::vector<ElemFactor> theta;  // integer elementary moves, applied in order
  std::vector<Poly> new_gens;
  IdealEquality same_ideal;
};

GeneralPosition general_position(const GeneratorTuple& gens, int bound = 3);

struct EvansMove {
  std::vector<Poly> b;
  std::vector<Poly> moved;  // a_i + a b_i
};

EvansMove evans_move(const Ring& ring, const std::vector<Poly>& row, const Poly& a,
                     int bound = 3);

struct SplitIdeal {
  Poly e;
  Ideal jprime;
  MembershipCertificate e_in_j2;
  IdealEquality j_is_j1_plus_e;
  IdealEquality j_cap_jprime_is_j1;
  ComaximalityCertificate j2_plus_jprime;
  MembershipCertificate idempotent_mod_j1;  // e^2 - e in J1
};

SplitIdeal split_ideal(const Ideal& J, const Ideal& J1, const Ideal& J2);
bool verify_split_ideal(const SplitIdeal& s, const Ideal& J, const Ideal& J1, const Ideal& J2);

struct MohanKumar {
  Poly h;
  std::vector<Poly> gens;  // a_1..a_n, h + (1-h) x
  IdealEquality equals_i_plus_x;
};

MohanKumar mohan_kumar(const Ideal& I, const GeneratorTuple& gens_mod_sq, const Poly& x);

/// Delta with [a,b] Delta = [c,d] and det Delta = 1.
PolyMat sl2_transition(const Ideal& J, const GeneratorTuple& ab, const GeneratorTuple& cd);

/// The explicit matrix of the SL2 lemma from its decomposition data over a
/// common-base localization: a - c = a x1 + b x2, b - d = a x3 + b x4 and
/// 1 - (ux - vw) = d t2 - c t1. Returned in the row convention
/// [a,b] Delta = [c,d].
struct LocSL2Data {
  LocFraction a, b, x1, x2, x3, x4, t1, t2;
};
std::vector<LocFraction> sl2_matrix_from_data(const LocSL2Data& d);

/// First row (a^2, b, c), determinant exactly 1.
PolyMat swan_towber_complete(const Ring& ring, const Poly& a, const Poly& b, const Poly& c,
                             int bound = 2);

struct UnitTransition {
  Poly b;  // inverse of a_unit modulo J
  PolyMat completion;
  PolyMat tau;
  std::vector<Poly> new_gens;  // [a1,a2] tau^t
  IdealEquality regenerates;
};

UnitTransition unit_transition_2gen(const Ideal& J, const GeneratorTuple& ab, const Poly& a_unit);

struct MovingLemma {
  Ideal jprime;
  std::vector<Poly> beta;
  Poly a;
  std::vector<Poly> b;
  IdealEquality beta_generates;  // (beta) = J cap J'
  ComaximalityCertificate j_plus_jprime;
  std::vector<ComaximalityCertificate> avoid_plus_jprime;
  CongruenceCertificate beta_vs_w;  // beta = w mod J^2
};

MovingLemma moving_lemma_free(const Ideal& J, const std::vector<Poly>& w,
                              const std::vector<Ideal>& avoid, int bound = 2);

/// V s^a + U t^b = 1 from u s + v t = 1, by expanding (us + vt)^(a+b-1).
std::pair<Poly, Poly> comaximal_powers(const Poly& s, const Poly& t, const Poly& u,
                                       const Poly& v, int a, int b);

/// The element of A equal to f in A_s and to g in A_t.
Poly patch_element(const Ring& ring, const LocFraction& f, const LocFraction& g);

/// sigma(T) over A_{st}[T], stored over extend_ring(A, "T") with base s*t.
struct LocalizedMatrixPath {
  Ring ring;   // A
  Ring ringT;  // A[T], T is the last variable
  Poly s, t;   // in A
  LocMatrix sigma;
};

LocalizedMatrixPath make_path(const Ring& ring, const Poly& s, const Poly& t);
/// gamma(T) = prod (1 + lambda_k T e_ij) for fractions lambda_k over base st.
LocalizedMatrixPath elementary_path(const Ring& ring, const Poly& s, const Poly& t, int n,
                                    const std::vector<std::pair<ElemFactor, int>>& factors);
/// left * path * right for constant matrices over base st.
LocalizedMatrixPath conjugate_path(const LocalizedMatrixPath& p, const LocMatrix& left,
                                   const LocMatrix& right);
/// path(value) over A with base st.
LocMatrix evaluate_path(const LocalizedMatrixPath& p, const Rational& value);

struct QuillenSplit {
  LocMatrix psi1;  // over A_t[T], base t, = Id mod s
  LocMatrix psi2;  // over A_s[T], base s, = Id mod t
  int k = 0;   // lambda s^k + mu t^kt = 1
  int kt = 0;
  Poly lambda;
};

QuillenSplit quillen_split(const LocalizedMatrixPath& sigma, int max_k = 1024);
bool verify_quillen_split(const LocalizedMatrixPath& sigma, const QuillenSplit& q);

struct IsotopySplit {
  LocMatrix theta1;  // over A_s, = Id mod t
  LocMatrix theta2;  // over A_t, = Id mod s
  QuillenSplit path;  // k and lambda; psi1, psi2 evaluated at T = 1, over A
};

/// theta = theta1 * theta2, from an isotopy alpha(0) = Id, alpha(1) = theta.
IsotopySplit isotopy_split(const LocMatrix& theta, const LocalizedMatrixPath& isotopy);
bool verify_isotopy_split(const LocMatrix& theta, const LocalizedMatrixPath& isotopy,
                          const IsotopySplit& s);

/// num/base^power = Id modulo (m), entry-wise.
bool congruent_identity(const Ring& ring, const LocMatrix& a, const Poly& m);

}  // namespace ecg
