#pragma once

#include <vector>

namespace ecg {

// Exponent vector, one entry per ambient variable.
using Monomial = std::vector<int>;

int degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial product(const Monomial& a, const Monomial& b);
// b / a, assuming divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a);
bool coprime(const Monomial& a, const Monomial& b);

class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Block };

  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  /// Eliminates the first `k` variables: grevlex on that block, ties broken
  /// by grevlex on the rest.
  static MonomialOrder elimination(int k) { return {Kind::Block, k}; }

  MonomialOrder() = default;

  Kind kind() const { return kind_; }
  int block() const { return block_; }

  /// -1, 0, 1 as m1 is smaller, equal, greater.
  int compare(const Monomial& m1, const Monomial& m2) const;

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && block_ == o.block_;
  }

 private:
  MonomialOrder(Kind k, int b) : kind_(k), block_(b) {}

  Kind kind_ = Kind::Grevlex;
  int block_ = 0;
};

/// Checked comparison; throws PreconditionError on length mismatch.
int compare_monomials(const MonomialOrder& order, const Monomial& m1,
                      const Monomial& m2);

}  // namespace ecg
