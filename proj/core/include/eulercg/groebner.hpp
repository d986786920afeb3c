#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "eulercg/ring.hpp"

namespace ecg {

/// Reduced Groebner basis with cofactors: basis[i] = sum_j cofactors[i][j] *
/// input[j], exactly.
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Poly> input;
  std::vector<Poly> basis;  // monic, ascending in `order`
  std::vector<std::vector<Poly>> cofactors;
  bool tracked = true;

  bool is_unit() const { return basis.size() == 1 && basis[0].is_constant(); }
};

/// Buchberger run over `input` (no modulus added). With track = false the
/// cofactor matrix is left empty; used for internal elimination steps.
GroebnerBasis buchberger(const std::vector<Poly>& input,
                         const MonomialOrder& order, bool track = true);

struct NormalForm {
  Poly remainder;
  std::vector<Poly> quotients;  // one per basis element
};

NormalForm normal_form(const Poly& f, const GroebnerBasis& gb);
Poly reduce(const Poly& f, const GroebnerBasis& gb);

/// Ideal of A = Q[x]/modulus given by generators. The grevlex basis of
/// generators + modulus is computed on first use and then shared.
class Ideal {
 public:
  Ideal() = default;
  Ideal(Ring ring, std::vector<Poly> gens);

  const Ring& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }
  int nvars() const { return ring_->nvars(); }

  const GroebnerBasis& gb() const;
  bool is_unit() const { return gb().is_unit(); }
  /// NF of f modulo this ideal (plus modulus).
  Poly reduce(const Poly& f) const { return ecg::reduce(f.with_order(MonomialOrder::grevlex()), gb()); }
  bool contains(const Poly& f) const { return reduce(f).is_zero(); }
  bool contains(const Ideal& o) const;

  Ideal operator+(const Ideal& o) const;
  Ideal operator*(const Ideal& o) const;
  Ideal pow(int k) const;
  Ideal with(const std::vector<Poly>& extra) const;

  static Ideal unit(const Ring& ring) { return Ideal(ring, {ring->one()}); }
  static Ideal zero(const Ring& ring) { return Ideal(ring, {}); }

 private:
  struct Cache {
    std::once_flag once;
    GroebnerBasis gb;
  };
  Ring ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

struct MembershipCertificate {
  Poly element;
  Ideal ideal;
  std::vector<Poly> cofactors;  // one per ideal generator
};

struct ComaximalityCertificate {
  Poly u;  // in I
  Poly v;  // in J
  MembershipCertificate u_in_i;
  MembershipCertificate v_in_j;
};

struct IdealEquality {
  bool equal = false;
  std::vector<MembershipCertificate> forward;   // gens of I in J
  std::vector<MembershipCertificate> backward;  // gens of J in I
};

/// Cofactors of f against arbitrary generators of I (modulus-part dropped).
std::optional<MembershipCertificate> ideal_member(const Poly& f, const Ideal& I);
/// Re-expands cofactors and checks the difference vanishes in A.
bool verify_membership(const MembershipCertificate& c);

bool radical_member(const Poly& f, const Ideal& I);
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
std::optional<ComaximalityCertificate> comaximal(const Ideal& I, const Ideal& J);
bool verify_comaximal(const ComaximalityCertificate& c);

/// Dimension of A/I, -1 for the unit ideal.
int krull_dimension(const Ideal& I);
/// asserted_dim - dim(A/I); precondition errors for the unit ideal or a ring
/// not flagged equidimensional.
int height(const Ideal& I);
/// height(I) >= n, with the unit ideal counting as infinite height.
bool height_at_least(const Ideal& I, int n);

IdealEquality equal_ideals(const Ideal& I, const Ideal& J);
bool verify_equality(const IdealEquality& e);

/// Generators of I^2 as pairwise products g_i g_j, i <= j.
std::vector<Poly> square_generators(const std::vector<Poly>& gens);

}  // namespace ecg
