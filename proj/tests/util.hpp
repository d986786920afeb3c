#pragma once

#include <random>
#include <string>
#include <vector>

#include "eulercg/groebner.hpp"
#include "eulercg/ring.hpp"

namespace ecg::test {

inline Ring q1() { return polynomial_ring({"x"}); }
inline Ring q2() { return polynomial_ring({"x", "y"}); }

inline Poly P(const Ring& r, const std::string& s) { return r->parse(s); }
inline Ideal I(const Ring& r, const std::string& s) { return Ideal(r, parse_poly_list(s, r->vars())); }

// Small random polynomial with integer coefficients in [-c, c].
inline Poly random_poly(std::mt19937& rng, int nvars, int max_deg, int terms, int c = 3) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-c, c);
  Poly f(nvars);
  for (int k = 0; k < terms; ++k) {
    Monomial m(nvars, 0);
    int left = deg(rng);
    for (int v = 0; v < nvars && left > 0; ++v) {
      std::uniform_int_distribution<int> d(0, left);
      m[v] = d(rng);
      left -= m[v];
    }
    f += Poly::monomial(nvars, m, coef(rng));
  }
  return f;
}

// Maximal ideal (x - p, y - q) of an integer point.
inline Ideal point(const Ring& r, int p, int q) {
  return Ideal(r, {r->var(0) - r->constant(p), r->var(1) - r->constant(q)});
}

}  // namespace ecg::test
