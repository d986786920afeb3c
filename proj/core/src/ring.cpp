#include <map>
#include "eulercg/ring.hpp"

#include <algorithm>

#include "eulercg/errors.hpp"
#include "eulercg/groebner.hpp"

namespace ecg {

RingDescriptor::RingDescriptor(std::vector<std::string> vars,
                               std::vector<Poly> modulus, int asserted_dim,
                               bool domain)
    : vars_(std::move(vars)), dim_(asserted_dim), domain_(domain) {
  for (auto& m : modulus) {
    if (m.nvars() != nvars())
      throw PreconditionError("modulus polynomial has wrong variable count");
    if (!m.is_zero()) modulus_.push_back(m.with_order(MonomialOrder::grevlex()));
  }
  if (modulus_.empty()) domain_ = true;
}

Poly RingDescriptor::var(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i] == name) return var(i);
  throw PreconditionError("unknown variable " + name);
}

const GroebnerBasis& RingDescriptor::modulus_basis() const {
  std::call_once(once_, [this] {
    modulus_gb_ = std::make_shared<GroebnerBasis>(
        buchberger(modulus_, MonomialOrder::grevlex(), false));
  });
  return *modulus_gb_;
}

Poly RingDescriptor::reduce(const Poly& f) const {
  if (modulus_.empty()) return f;
  return ecg::reduce(f, modulus_basis()).with_order(f.order());
}

bool RingDescriptor::equal(const Poly& f, const Poly& g) const {
  Poly d = f - g;
  if (d.is_zero()) return true;
  if (modulus_.empty()) return false;
  return ecg::reduce(d, modulus_basis()).is_zero();
}

bool RingDescriptor::same_as(const RingDescriptor& o) const {
  if (this == &o) return true;
  if (vars_ != o.vars_ || dim_ != o.dim_ || modulus_.size() != o.modulus_.size())
    return false;
  for (std::size_t i = 0; i < modulus_.size(); ++i)
    if (modulus_[i] != o.modulus_[i]) return false;
  return true;
}

std::uint64_t RingDescriptor::hash() const {
  std::string text;
  for (const auto& v : vars_) text += v + ",";
  text += "|";
  for (const auto& m : modulus_) text += str(m) + ";";
  text += "|" + std::to_string(dim_) + (domain_ ? "|d" : "|n");
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Ring make_ring(std::vector<std::string> vars, std::vector<Poly> modulus,
               int asserted_dim, bool domain) {
  auto r = std::make_shared<RingDescriptor>(std::move(vars), std::move(modulus),
                                            asserted_dim, domain);
  int d = krull_dimension(Ideal::zero(r));
  if (d != asserted_dim)
    throw PreconditionError("asserted dimension " + std::to_string(asserted_dim) +
                            " but modulus gives " + std::to_string(d));
  return r;
}

Ring polynomial_ring(std::vector<std::string> vars) {
  int n = static_cast<int>(vars.size());
  return std::make_shared<RingDescriptor>(std::move(vars), std::vector<Poly>{}, n,
                                          true);
}

Poly extend_poly(const Poly& f, int new_nvars) {
  std::vector<int> map(f.nvars());
  for (int i = 0; i < f.nvars(); ++i) map[i] = i;
  return f.remap(new_nvars, map);
}

Ring extend_ring(const Ring& base, const std::string& name) {
  std::vector<std::string> vars = base->vars();
  vars.push_back(name);
  int n = static_cast<int>(vars.size());
  std::vector<Poly> mod;
  for (const auto& m : base->modulus()) mod.push_back(extend_poly(m, n));
  return std::make_shared<RingDescriptor>(std::move(vars), std::move(mod),
                                          base->asserted_dimension() + 1,
                                          base->is_domain());
}

bool exact_divide(const Ring& ring, const Poly& f, const Poly& d, Poly* q) {
  if (d.is_zero()) return false;
  if (f.is_zero()) {
    *q = ring->zero();
    return true;
  }
  if (ring->is_polynomial_ring()) {
    // {d} is a Groebner basis of (d) in any order.
    const MonomialOrder ord = f.order();
    Poly dd = d.with_order(ord);
    auto desc = [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; };
    std::map<Monomial, Rational, decltype(desc)> rem(desc);
    for (const auto& t : f.terms()) rem.emplace(t.m, t.c);
    const Term& lead = dd.lead();
    std::vector<Term> acc;
    while (!rem.empty()) {
      auto top = rem.begin();
      if (!divides(lead.m, top->first)) return false;
      Rational c = top->second / lead.c;
      Monomial m = quotient(top->first, lead.m);
      rem.erase(top);
      for (std::size_t i = 1; i < dd.terms().size(); ++i) {
        const Term& t = dd.terms()[i];
        auto [it, fresh] = rem.try_emplace(product(t.m, m), -c * t.c);
        if (!fresh) {
          it->second -= c * t.c;
          if (it->second == 0) rem.erase(it);
        }
      }
      acc.push_back({std::move(m), std::move(c)});
    }
    *q = Poly::from_terms(f.nvars(), std::move(acc), ord);
    return true;
  }
  auto cert = ideal_member(f, Ideal(ring, {d}));
  if (!cert) return false;
  *q = cert->cofactors[0];
  return true;
}

Poly LocFraction::den() const {
  if (cls == DenClass::OnePlus) return Poly::constant(base.nvars(), 1) + base;
  return base.pow(static_cast<unsigned>(power));
}

LocFraction power_fraction(const Poly& num, const Poly& s, int power) {
  LocFraction f;
  f.num = num;
  f.base = s;
  f.power = power;
  f.cls = LocFraction::DenClass::PowerOf;
  return f;
}

LocFraction loc_reduce(const Ring& ring, const LocFraction& e) {
  if (!ring->is_domain())
    throw PreconditionError("loc_reduce needs a domain");
  LocFraction out = e;
  if (out.cls == LocFraction::DenClass::OnePlus) return out;
  if (ring->is_zero(out.num)) {
    out.num = ring->zero();
    out.power = 0;
    return out;
  }
  Poly q;
  while (out.power > 0 && exact_divide(ring, out.num, out.base, &q)) {
    out.num = q;
    --out.power;
  }
  return out;
}

namespace {

Poly lift_to(const LocFraction& a, int power) {
  return a.num * a.base.pow(static_cast<unsigned>(power - a.power));
}

void check_same_base(const LocFraction& a, const LocFraction& b) {
  if (a.cls != LocFraction::DenClass::PowerOf || b.cls != LocFraction::DenClass::PowerOf ||
      a.base != b.base)
    throw PreconditionError("fractions over different multiplicative sets");
}

}  // namespace

LocFraction loc_add(const LocFraction& a, const LocFraction& b) {
  check_same_base(a, b);
  int e = std::max(a.power, b.power);
  return power_fraction(lift_to(a, e) + lift_to(b, e), a.base, e);
}

LocFraction loc_sub(const LocFraction& a, const LocFraction& b) {
  return loc_add(a, loc_neg(b));
}

LocFraction loc_mul(const LocFraction& a, const LocFraction& b) {
  check_same_base(a, b);
  return power_fraction(a.num * b.num, a.base, a.power + b.power);
}

LocFraction loc_neg(const LocFraction& a) {
  LocFraction r = a;
  r.num = -r.num;
  return r;
}

bool loc_equal(const Ring& ring, const LocFraction& a, const LocFraction& b) {
  return ring->equal(a.num * b.den(), b.num * a.den());
}

}  // namespace ecg
