#include "eulercg/matrix.hpp"

#include "eulercg/errors.hpp"

namespace ecg {

PolyMat::PolyMat(int rows, int cols, int nvars)
    : r_(rows), c_(cols), nvars_(nvars), d_(rows * cols, Poly(nvars)) {}

PolyMat PolyMat::identity(int n, int nvars) {
  PolyMat m(n, n, nvars);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(nvars, 1);
  return m;
}

PolyMat PolyMat::from_rows(const std::vector<std::vector<Poly>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  int nv = (r && c) ? rows[0][0].nvars() : 0;
  PolyMat m(r, c, nv);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw PreconditionError("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Poly> PolyMat::row(int i) const {
  return std::vector<Poly>(d_.begin() + i * c_, d_.begin() + (i + 1) * c_);
}

PolyMat PolyMat::operator*(const PolyMat& o) const {
  if (c_ != o.r_) throw PreconditionError("matrix shape mismatch");
  PolyMat m(r_, o.c_, nvars_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < o.c_; ++j) {
      Poly s(nvars_);
      for (int k = 0; k < c_; ++k) {
        const Poly& a = at(i, k);
        const Poly& b = o.at(k, j);
        if (a.is_zero() || b.is_zero()) continue;
        s += a * b;
      }
      m.at(i, j) = s;
    }
  return m;
}

PolyMat PolyMat::operator+(const PolyMat& o) const {
  PolyMat m = *this;
  for (std::size_t k = 0; k < d_.size(); ++k) m.d_[k] += o.d_[k];
  return m;
}

PolyMat PolyMat::operator-(const PolyMat& o) const {
  PolyMat m = *this;
  for (std::size_t k = 0; k < d_.size(); ++k) m.d_[k] -= o.d_[k];
  return m;
}

PolyMat PolyMat::scaled(const Poly& f) const {
  PolyMat m = *this;
  for (auto& e : m.d_) e = e * f;
  return m;
}

PolyMat PolyMat::transpose() const {
  PolyMat m(c_, r_, nvars_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool PolyMat::operator==(const PolyMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) return false;
  for (std::size_t k = 0; k < d_.size(); ++k)
    if (d_[k] != o.d_[k]) return false;
  return true;
}

namespace {

PolyMat minor_of(const PolyMat& m, int skip_r, int skip_c) {
  int n = m.rows();
  PolyMat out(n - 1, n - 1, m.nvars());
  for (int i = 0, a = 0; i < n; ++i) {
    if (i == skip_r) continue;
    for (int j = 0, b = 0; j < n; ++j) {
      if (j == skip_c) continue;
      out.at(a, b++) = m.at(i, j);
    }
    ++a;
  }
  return out;
}

}  // namespace

Poly det(const PolyMat& m) {
  int n = m.rows();
  if (n != m.cols()) throw PreconditionError("determinant of non-square matrix");
  if (n == 0) return Poly::constant(m.nvars(), 1);
  if (n == 1) return m.at(0, 0);
  if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  Poly s(m.nvars());
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    Poly t = m.at(0, j) * det(minor_of(m, 0, j));
    if (j % 2) s -= t;
    else s += t;
  }
  return s;
}

PolyMat adjugate(const PolyMat& m) {
  int n = m.rows();
  PolyMat a(n, n, m.nvars());
  if (n == 1) {
    a.at(0, 0) = Poly::constant(m.nvars(), 1);
    return a;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly c = det(minor_of(m, i, j));
      a.at(j, i) = ((i + j) % 2) ? -c : c;
    }
  return a;
}

std::vector<Poly> row_times(const std::vector<Poly>& v, const PolyMat& m) {
  if (static_cast<int>(v.size()) != m.rows())
    throw PreconditionError("row length mismatch");
  std::vector<Poly> out(m.cols(), Poly(m.nvars()));
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i)
      if (!v[i].is_zero() && !m.at(i, j).is_zero()) out[j] += v[i] * m.at(i, j);
  return out;
}

bool mat_equal(const Ring& ring, const PolyMat& a, const PolyMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!ring->equal(a.at(i, j), b.at(i, j))) return false;
  return true;
}

PolyMat mat_reduce(const Ring& ring, const PolyMat& m) {
  return m.map([&](const Poly& p) { return ring->reduce(p); });
}

PolyMat elementary(int n, const ElemFactor& f, int nvars) {
  PolyMat m = PolyMat::identity(n, nvars);
  m.at(f.i, f.j) = f.value;
  return m;
}

PolyMat product_of(int n, const std::vector<ElemFactor>& fs, int nvars) {
  PolyMat m = PolyMat::identity(n, nvars);
  for (const auto& f : fs) {
    // Right multiplication: column j += value * column i.
    for (int r = 0; r < n; ++r)
      if (!m.at(r, f.i).is_zero()) m.at(r, f.j) += m.at(r, f.i) * f.value;
  }
  return m;
}

std::vector<ElemFactor> inverse_factors(const std::vector<ElemFactor>& fs) {
  std::vector<ElemFactor> out;
  for (auto it = fs.rbegin(); it != fs.rend(); ++it)
    out.push_back({it->i, it->j, -it->value});
  return out;
}

LocMatrix loc_identity(int n, const Poly& base) {
  return {PolyMat::identity(n, base.nvars()), base, 0};
}

LocMatrix loc_from_poly(const PolyMat& m, const Poly& base) { return {m, base, 0}; }

LocMatrix loc_mul(const LocMatrix& a, const LocMatrix& b) {
  return {a.num * b.num, a.base, a.power + b.power};
}

LocMatrix loc_rebase(const LocMatrix& a, const Poly& t) {
  Poly tp = t.pow(static_cast<unsigned>(a.power));
  return {a.num.scaled(tp), a.base * t, a.power};
}

LocMatrix loc_inverse_det1(const LocMatrix& a) {
  int n = a.n();
  // adj has entries of degree (n-1) in the numerators.
  return {adjugate(a.num), a.base, a.power * (n - 1)};
}

LocMatrix loc_normalize(const Ring& ring, const LocMatrix& a) {
  LocMatrix out = a;
  while (out.power > 0) {
    PolyMat next = out.num;
    bool ok = true;
    for (int i = 0; i < out.n() && ok; ++i)
      for (int j = 0; j < out.n() && ok; ++j) {
        Poly q;
        if (!exact_divide(ring, out.num.at(i, j), out.base, &q)) ok = false;
        else next.at(i, j) = q;
      }
    if (!ok) break;
    out.num = next;
    --out.power;
  }
  return out;
}

Poly loc_det_num(const LocMatrix& a) { return det(a.num); }

bool loc_mat_equal(const Ring& ring, const LocMatrix& a, const LocMatrix& b) {
  int e = std::max(a.power, b.power);
  Poly fa = a.base.pow(static_cast<unsigned>(e - a.power));
  Poly fb = b.base.pow(static_cast<unsigned>(e - b.power));
  return mat_equal(ring, a.num.scaled(fa), b.num.scaled(fb));
}

}  // namespace ecg
