#pragma once

#include <string>
#include <vector>

#include "eulercg/monomial.hpp"
#include "eulercg/rational.hpp"

namespace ecg {

struct Term {
  Monomial m;
  Rational c;
};

/// Multivariate polynomial over Q. Terms are kept strictly decreasing in the
/// polynomial's order with no zero coefficients, so structural equality is
/// value equality.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars, MonomialOrder order = MonomialOrder::grevlex());

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int index);
  static Poly monomial(int nvars, const Monomial& m, const Rational& c);
  // Takes arbitrary terms; sorts and merges them.
  static Poly from_terms(int nvars, std::vector<Term> terms,
                         MonomialOrder order = MonomialOrder::grevlex());

  int nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  const Term& lead() const { return terms_.front(); }
  int total_degree() const;
  // Largest exponent of variable `v` appearing.
  int degree_in(int v) const;

  Poly with_order(const MonomialOrder& order) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  Poly scaled(const Rational& c) const;
  Poly mul_term(const Monomial& m, const Rational& c) const;
  // this - c*m*g, the reduction step.
  Poly sub_mul_term(const Rational& c, const Monomial& m, const Poly& g) const;
  Poly pow(unsigned e) const;
  Poly monic() const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Rational eval(const std::vector<Rational>& point) const;
  /// Replaces variable `v` by `value` (same variable count).
  Poly substitute(int v, const Poly& value) const;
  /// Sends variable i to variable map[i] of a ring with `new_nvars`.
  Poly remap(int new_nvars, const std::vector<int>& map) const;
  /// Coefficient of var^k, as a polynomial in the remaining variables.
  Poly coefficient_in(int v, int k) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void normalize();

  int nvars_ = 0;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// Parses "2*x^2*y - 1/3" style text over the given variable names.
Poly parse_poly(const std::string& text, const std::vector<std::string>& names);
/// Parses "(f1, f2, ...)" into its generator list.
std::vector<Poly> parse_poly_list(const std::string& text,
                                  const std::vector<std::string>& names);

}  // namespace ecg
