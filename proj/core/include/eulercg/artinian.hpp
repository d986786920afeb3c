#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "eulercg/groebner.hpp"
#include "eulercg/matrix.hpp"

namespace ecg {

/// Dense matrix over Q.
struct RatMatrix {
  int rows = 0, cols = 0;
  std::vector<Rational> a;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a(r * c) {}
  Rational& at(int i, int j) { return a[i * cols + j]; }
  const Rational& at(int i, int j) const { return a[i * cols + j]; }
};

/// Some solution of M x = b, if one exists.
std::optional<std::vector<Rational>> solve(const RatMatrix& m,
                                           const std::vector<Rational>& b);
/// A nonzero kernel vector, if the kernel is nontrivial.
std::optional<std::vector<Rational>> kernel_vector(const RatMatrix& m);
int rank(const RatMatrix& m);

/// A/J for zero-dimensional J, as a Q-vector space on standard monomials.
class ArtinianAlgebra {
 public:
  explicit ArtinianAlgebra(const Ideal& J);

  const Ideal& source_ideal() const { return J_; }
  const Ring& ring() const { return J_.ring(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  /// Column k of table i holds the coordinates of x_i * basis[k].
  const std::vector<RatMatrix>& mult_tables() const { return tables_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  Poly normal(const Poly& f) const { return J_.reduce(f); }
  std::vector<Rational> coords(const Poly& f) const;
  Poly poly(const std::vector<Rational>& coords) const;

 private:
  Ideal J_;
  std::vector<Monomial> basis_;
  std::vector<RatMatrix> tables_;
};

using Algebra = std::shared_ptr<const ArtinianAlgebra>;

/// Throws PreconditionError for positive-dimensional (or unit) J.
Algebra quotient_algebra(const Ideal& J);

struct ResidueElement {
  Algebra alg;
  std::vector<Rational> coords;

  Poly poly() const { return alg->poly(coords); }
  bool is_zero() const;
  bool is_one() const;
};

ResidueElement residue(const Algebra& alg, const Poly& f);
ResidueElement operator*(const ResidueElement& a, const ResidueElement& b);
ResidueElement operator+(const ResidueElement& a, const ResidueElement& b);
ResidueElement operator-(const ResidueElement& a, const ResidueElement& b);

RatMatrix multiplication_matrix(const ResidueElement& r);
/// Inverse, or nullopt when r is a zero divisor (NotUnit).
std::optional<ResidueElement> try_invert(const ResidueElement& r);

/// Square matrix over A/J with entries stored as normal forms. When present,
/// `factors` multiply (left to right) to `entries` modulo J.
struct MatrixOverQuotient {
  Algebra alg;
  PolyMat entries;
  std::optional<std::vector<ElemFactor>> factors;
};

struct UnitSearchResult {
  std::vector<int> lambda;  // coefficients of row[1..]
  ResidueElement unit;
  ResidueElement inverse;
};

/// First c = row[0] + sum lambda_i row[i] that is a unit, lambda in
/// increasing max-norm. Throws BoundExhausted.
UnitSearchResult unit_search(const std::vector<ResidueElement>& row, int bound = 4);

/// Elementary M with row * M = (1, 0, ..., 0); factors recorded.
MatrixOverQuotient reduce_unimodular_row(const std::vector<ResidueElement>& row,
                                         int bound = 4);
/// Elementary factorization of a determinant-one matrix over A/J.
MatrixOverQuotient factor_special_linear(const Algebra& alg, const PolyMat& m,
                                         int bound = 4);
/// Product over A of the factors' lifts; determinant exactly 1.
PolyMat lift_elementary(const MatrixOverQuotient& m);

struct IdempotentLift {
  Poly e;
  int iterations = 0;
};

/// e with e^2 = e exactly in A = N.ring() and e = e0 mod N.
IdempotentLift lift_idempotent(const Poly& e0, const Ideal& N);

/// Idempotent generator of Jbig/Jsmall in the zero-dimensional A/Jsmall.
Poly idempotent_of_ideal(const Ideal& Jbig, const Ideal& Jsmall);

}  // namespace ecg
