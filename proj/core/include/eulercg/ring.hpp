#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "eulercg/poly.hpp"

namespace ecg {

struct GroebnerBasis;

/// A = Q[vars]/(modulus). Construct through make_ring, which checks the
/// asserted dimension against the computed one.
class RingDescriptor {
 public:
  RingDescriptor(std::vector<std::string> vars, std::vector<Poly> modulus,
                 int asserted_dim, bool domain);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Poly>& modulus() const { return modulus_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  int asserted_dimension() const { return dim_; }
  /// Modulus empty or asserted prime; heights and localization rely on it.
  bool is_domain() const { return domain_; }
  bool is_polynomial_ring() const { return modulus_.empty(); }

  Poly zero() const { return Poly(nvars()); }
  Poly one() const { return Poly::constant(nvars(), 1); }
  Poly constant(const Rational& c) const { return Poly::constant(nvars(), c); }
  Poly var(int i) const { return Poly::variable(nvars(), i); }
  Poly var(const std::string& name) const;
  Poly parse(const std::string& text) const { return parse_poly(text, vars_); }
  std::string str(const Poly& f) const { return f.to_string(vars_); }

  /// Reduced Groebner basis of the modulus (grevlex), computed once.
  const GroebnerBasis& modulus_basis() const;
  /// Canonical representative modulo the modulus.
  Poly reduce(const Poly& f) const;
  /// f == g in A.
  bool equal(const Poly& f, const Poly& g) const;
  bool is_zero(const Poly& f) const { return equal(f, zero()); }

  bool same_as(const RingDescriptor& o) const;
  /// Stable digest of variables, modulus and dimension.
  std::uint64_t hash() const;

 private:
  std::vector<std::string> vars_;
  std::vector<Poly> modulus_;
  int dim_;
  bool domain_;
  mutable std::once_flag once_;
  mutable std::shared_ptr<const GroebnerBasis> modulus_gb_;
};

using Ring = std::shared_ptr<const RingDescriptor>;

/// Builds A and checks asserted_dim == Krull dimension of Q[vars]/modulus.
/// `domain` records the caller's primality assertion for a nonempty modulus.
Ring make_ring(std::vector<std::string> vars, std::vector<Poly> modulus,
               int asserted_dim, bool domain);
Ring polynomial_ring(std::vector<std::string> vars);
/// A[name] with the new variable appended last; dimension goes up by one.
Ring extend_ring(const Ring& base, const std::string& name);
/// Embeds f from `base` into extend_ring(base, ...).
Poly extend_poly(const Poly& f, int new_nvars);

/// Exact quotient f/d in A if d divides f there.
bool exact_divide(const Ring& ring, const Poly& f, const Poly& d, Poly* q);

/// Element of A_s (den = base^power) or of A_{1+K} (den = 1 + base, base in K).
struct LocFraction {
  enum class DenClass { PowerOf, OnePlus };

  Poly num;
  Poly base;
  int power = 0;
  DenClass cls = DenClass::PowerOf;

  Poly den() const;
};

LocFraction power_fraction(const Poly& num, const Poly& s, int power);

/// Cancels common factors of the multiplicative generator (PowerOf) and
/// leaves OnePlus fractions unchanged. Requires a domain.
LocFraction loc_reduce(const Ring& ring, const LocFraction& e);
/// Arithmetic in A_s for fractions over the same base s.
LocFraction loc_add(const LocFraction& a, const LocFraction& b);
LocFraction loc_sub(const LocFraction& a, const LocFraction& b);
LocFraction loc_mul(const LocFraction& a, const LocFraction& b);
LocFraction loc_neg(const LocFraction& a);

/// a == b in the localization, by cross multiplication.
bool loc_equal(const Ring& ring, const LocFraction& a, const LocFraction& b);

}  // namespace ecg
