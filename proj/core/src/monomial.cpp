#include "eulercg/monomial.hpp"

#include <algorithm>

#include "eulercg/errors.hpp"

namespace ecg {

int degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial product(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

namespace {

int cmp_lex(const Monomial& a, const Monomial& b, std::size_t lo,
            std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t lo,
                std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& m1, const Monomial& m2) const {
  switch (kind_) {
    case Kind::Lex:
      return cmp_lex(m1, m2, 0, m1.size());
    case Kind::Grevlex:
      return cmp_grevlex(m1, m2, 0, m1.size());
    case Kind::Block: {
      std::size_t k = std::min<std::size_t>(block_, m1.size());
      int c = cmp_grevlex(m1, m2, 0, k);
      if (c != 0) return c;
      return cmp_grevlex(m1, m2, k, m1.size());
    }
  }
  return 0;
}

int compare_monomials(const MonomialOrder& order, const Monomial& m1,
                      const Monomial& m2) {
  if (m1.size() != m2.size())
    throw PreconditionError("monomial length mismatch");
  return order.compare(m1, m2);
}

}  // namespace ecg
