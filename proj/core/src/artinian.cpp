#include "eulercg/artinian.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "eulercg/errors.hpp"
#include "eulercg/search.hpp"

namespace ecg {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMatrix& m, int ncols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < ncols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rational inv = 1 / m.at(r, c);
    for (int j = 0; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rational f = m.at(i, c);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Rational>> solve(const RatMatrix& m,
                                           const std::vector<Rational>& b) {
  RatMatrix aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<int> piv = rref(aug, m.cols);
  for (int i = static_cast<int>(piv.size()); i < m.rows; ++i)
    if (aug.at(i, m.cols) != 0) return std::nullopt;
  std::vector<Rational> x(m.cols, 0);
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug.at(k, m.cols);
  return x;
}

std::optional<std::vector<Rational>> kernel_vector(const RatMatrix& m) {
  RatMatrix w = m;
  std::vector<int> piv = rref(w, m.cols);
  std::set<int> pset(piv.begin(), piv.end());
  int free_col = -1;
  for (int c = 0; c < m.cols; ++c)
    if (!pset.count(c)) {
      free_col = c;
      break;
    }
  if (free_col < 0) return std::nullopt;
  std::vector<Rational> x(m.cols, 0);
  x[free_col] = 1;
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = -w.at(k, free_col);
  return x;
}

int rank(const RatMatrix& m) {
  RatMatrix w = m;
  return static_cast<int>(rref(w, m.cols).size());
}

ArtinianAlgebra::ArtinianAlgebra(const Ideal& J) : J_(J) {
  if (krull_dimension(J) != 0)
    throw PreconditionError("quotient algebra needs a zero-dimensional ideal");
  const auto& gb = J.gb();
  int n = J.nvars();
  auto standard = [&](const Monomial& m) {
    for (const auto& b : gb.basis)
      if (divides(b.lead().m, m)) return false;
    return true;
  };
  std::set<Monomial> seen;
  std::deque<Monomial> queue{Monomial(n, 0)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    basis_.push_back(m);
    for (int i = 0; i < n; ++i) {
      Monomial next = m;
      ++next[i];
      if (seen.count(next) || !standard(next)) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  auto ord = MonomialOrder::grevlex();
  std::sort(basis_.begin(), basis_.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) < 0; });
  for (int i = 0; i < n; ++i) {
    RatMatrix t(dim(), dim());
    for (int k = 0; k < dim(); ++k) {
      Monomial m = basis_[k];
      ++m[i];
      auto c = coords(Poly::monomial(n, m, 1));
      for (int r = 0; r < dim(); ++r) t.at(r, k) = c[r];
    }
    tables_.push_back(std::move(t));
  }
}

std::vector<Rational> ArtinianAlgebra::coords(const Poly& f) const {
  Poly r = normal(f);
  std::vector<Rational> c(dim(), 0);
  auto ord = MonomialOrder::grevlex();
  for (const auto& t : r.terms()) {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), t.m,
                               [&](const Monomial& a, const Monomial& b) {
                                 return ord.compare(a, b) < 0;
                               });
    c[it - basis_.begin()] = t.c;
  }
  return c;
}

Poly ArtinianAlgebra::poly(const std::vector<Rational>& coords) const {
  std::vector<Term> ts;
  for (int k = 0; k < dim(); ++k)
    if (coords[k] != 0) ts.push_back({basis_[k], coords[k]});
  return Poly::from_terms(J_.nvars(), std::move(ts));
}

Algebra quotient_algebra(const Ideal& J) { return std::make_shared<ArtinianAlgebra>(J); }

bool ResidueElement::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

bool ResidueElement::is_one() const { return coords == alg->coords(alg->ring()->one()); }

ResidueElement residue(const Algebra& alg, const Poly& f) { return {alg, alg->coords(f)}; }

ResidueElement operator*(const ResidueElement& a, const ResidueElement& b) {
  return residue(a.alg, a.poly() * b.poly());
}

ResidueElement operator+(const ResidueElement& a, const ResidueElement& b) {
  ResidueElement r = a;
  for (std::size_t k = 0; k < r.coords.size(); ++k) r.coords[k] += b.coords[k];
  return r;
}

ResidueElement operator-(const ResidueElement& a, const ResidueElement& b) {
  ResidueElement r = a;
  for (std::size_t k = 0; k < r.coords.size(); ++k) r.coords[k] -= b.coords[k];
  return r;
}

RatMatrix multiplication_matrix(const ResidueElement& r) {
  const auto& alg = *r.alg;
  int d = alg.dim();
  RatMatrix m(d, d);
  Poly p = r.poly();
  for (int k = 0; k < d; ++k) {
    auto c = alg.coords(p * Poly::monomial(alg.ring()->nvars(), alg.basis()[k], 1));
    for (int i = 0; i < d; ++i) m.at(i, k) = c[i];
  }
  return m;
}

std::optional<ResidueElement> try_invert(const ResidueElement& r) {
  auto one = r.alg->coords(r.alg->ring()->one());
  auto x = solve(multiplication_matrix(r), one);
  if (!x) return std::nullopt;
  return ResidueElement{r.alg, *x};
}

UnitSearchResult unit_search(const std::vector<ResidueElement>& row, int bound) {
  if (row.empty()) throw PreconditionError("unit search on an empty row");
  int b = search_bound(bound);
  int len = static_cast<int>(row.size()) - 1;
  for (int norm = 0; norm <= b; ++norm) {
    for (const auto& lam : vectors_of_norm(len, norm)) {
      ResidueElement c = row[0];
      for (int i = 0; i < len; ++i) {
        if (lam[i] == 0) continue;
        ResidueElement term = row[i + 1];
        for (auto& x : term.coords) x *= lam[i];
        c = c + term;
      }
      if (auto inv = try_invert(c)) return {lam, c, *inv};
    }
  }
  throw BoundExhausted("unit search exhausted at max-norm " + std::to_string(b));
}

MatrixOverQuotient reduce_unimodular_row(const std::vector<ResidueElement>& row,
                                         int bound) {
  int n = static_cast<int>(row.size());
  if (n < 2) throw PreconditionError("row reduction needs length >= 2");
  const Algebra& alg = row[0].alg;
  const Ring& ring = alg->ring();
  std::vector<Poly> polys;
  for (const auto& r : row) polys.push_back(r.poly());
  if (!alg->source_ideal().with(polys).is_unit())
    throw PreconditionError("row is not unimodular over the quotient");

  UnitSearchResult us = unit_search(row, bound);
  std::vector<ElemFactor> fs;
  for (int i = 1; i < n; ++i)
    if (us.lambda[i - 1] != 0)
      fs.push_back({i, 0, ring->constant(us.lambda[i - 1])});
  Poly cinv = us.inverse.poly();
  for (int i = 1; i < n; ++i)
    if (!row[i].is_zero()) fs.push_back({0, i, alg->normal(-(polys[i] * cinv))});
  if (!us.unit.is_one()) {
    fs.push_back({0, 1, cinv});
    fs.push_back({1, 0, alg->normal(ring->one() - us.unit.poly())});
    fs.push_back({0, 1, ring->constant(-1)});
  }
  MatrixOverQuotient out{alg, {}, fs};
  out.entries = product_of(n, fs, ring->nvars()).map([&](const Poly& p) { return alg->normal(p); });
  return out;
}

MatrixOverQuotient factor_special_linear(const Algebra& alg, const PolyMat& m,
                                         int bound) {
  int n = m.rows();
  const Ring& ring = alg->ring();
  int nv = ring->nvars();
  PolyMat M = m.map([&](const Poly& p) { return alg->normal(p); });
  if (!alg->normal(det(M) - ring->one()).is_zero())
    throw PreconditionError("matrix does not have determinant 1 over the quotient");
  MatrixOverQuotient out{alg, M, std::vector<ElemFactor>{}};
  if (n == 1) return out;
  std::vector<ResidueElement> row;
  for (int j = 0; j < n; ++j) row.push_back(residue(alg, M.at(0, j)));
  MatrixOverQuotient E = reduce_unimodular_row(row, bound);
  PolyMat M1 = (M * product_of(n, *E.factors, nv)).map([&](const Poly& p) { return alg->normal(p); });
  std::vector<ElemFactor> fs;
  for (int i = 1; i < n; ++i)
    if (!M1.at(i, 0).is_zero()) fs.push_back({i, 0, M1.at(i, 0)});
  PolyMat sub(n - 1, n - 1, nv);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) sub.at(i - 1, j - 1) = M1.at(i, j);
  MatrixOverQuotient D = factor_special_linear(alg, sub, bound);
  for (const auto& f : *D.factors) fs.push_back({f.i + 1, f.j + 1, f.value});
  for (const auto& f : inverse_factors(*E.factors)) fs.push_back(f);
  PolyMat check = product_of(n, fs, nv).map([&](const Poly& p) { return alg->normal(p); });
  if (!(check == M)) throw Error("internal: elementary factorization mismatch");
  out.factors = fs;
  return out;
}

PolyMat lift_elementary(const MatrixOverQuotient& m) {
  if (!m.factors) throw PreconditionError("matrix carries no elementary factorization");
  return product_of(m.entries.rows(), *m.factors, m.alg->ring()->nvars());
}

IdempotentLift lift_idempotent(const Poly& e0, const Ideal& N) {
  const Ring& ring = N.ring();
  Poly e = ring->reduce(e0);
  if (!N.contains(e * e - e))
    throw PreconditionError("e0^2 - e0 is not in N");
  Ideal zero = Ideal::zero(ring);
  for (const auto& g : N.gens())
    if (!radical_member(g, zero))
      throw PreconditionError("N is not nilpotent in the working ring");
  IdempotentLift out{e, 0};
  while (!ring->is_zero(out.e * out.e - out.e)) {
    if (out.iterations == 64)
      throw BoundExhausted("idempotent lifting did not converge in 64 steps");
    Poly sq = ring->reduce(out.e * out.e);
    out.e = ring->reduce(sq.scaled(3) - (sq * out.e).scaled(2));
    ++out.iterations;
  }
  return out;
}

Poly idempotent_of_ideal(const Ideal& Jbig, const Ideal& Jsmall) {
  const Ring& ring = Jbig.ring();
  if (!Jbig.contains(Jsmall))
    throw PreconditionError("Jsmall is not contained in Jbig");
  if (Jbig.is_unit()) return ring->one();
  Ideal sq = (Jbig * Jbig) + Jsmall;
  for (const auto& g : Jbig.gens())
    if (!sq.contains(g))
      throw PreconditionError("Jbig/Jsmall is not idempotent: generator " + ring->str(g) +
                              " escapes Jbig^2 + Jsmall");
  Algebra B = quotient_algebra(Jsmall);
  int d = B->dim();
  // Spanning set of the image of Jbig.
  std::vector<Poly> span;
  for (const auto& g : Jbig.gens())
    for (const auto& m : B->basis()) {
      Poly v = B->normal(g * Poly::monomial(ring->nvars(), m, 1));
      if (!v.is_zero()) span.push_back(v);
    }
  if (span.empty()) return ring->zero();
  // Unknown a = sum c_k span_k with a*g = g for every generator g.
  int nk = static_cast<int>(span.size());
  int ng = static_cast<int>(Jbig.gens().size());
  RatMatrix sys(ng * d, nk);
  std::vector<Rational> rhs(ng * d);
  for (int i = 0; i < ng; ++i) {
    auto gc = B->coords(Jbig.gens()[i]);
    for (int r = 0; r < d; ++r) rhs[i * d + r] = gc[r];
    for (int k = 0; k < nk; ++k) {
      auto c = B->coords(span[k] * Jbig.gens()[i]);
      for (int r = 0; r < d; ++r) sys.at(i * d + r, k) = c[r];
    }
  }
  auto sol = solve(sys, rhs);
  if (!sol) throw Error("internal: no idempotent generator found");
  Poly e = ring->zero();
  for (int k = 0; k < nk; ++k)
    if ((*sol)[k] != 0) e += span[k].scaled((*sol)[k]);
  return B->normal(e);
}

}  // namespace ecg
