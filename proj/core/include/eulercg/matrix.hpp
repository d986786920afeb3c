#pragma once

#include <vector>

#include "eulercg/ring.hpp"

namespace ecg {

/// Dense square-or-rectangular matrix of polynomials, row-major.
class PolyMat {
 public:
  PolyMat() = default;
  PolyMat(int rows, int cols, int nvars);

  static PolyMat identity(int n, int nvars);
  static PolyMat from_rows(const std::vector<std::vector<Poly>>& rows);

  int rows() const { return r_; }
  int cols() const { return c_; }
  int nvars() const { return nvars_; }
  Poly& at(int i, int j) { return d_[i * c_ + j]; }
  const Poly& at(int i, int j) const { return d_[i * c_ + j]; }
  std::vector<Poly> row(int i) const;

  PolyMat operator*(const PolyMat& o) const;
  PolyMat operator+(const PolyMat& o) const;
  PolyMat operator-(const PolyMat& o) const;
  PolyMat scaled(const Poly& f) const;
  PolyMat transpose() const;
  /// Applies f to every entry.
  template <class F>
  PolyMat map(F f) const {
    PolyMat m = *this;
    for (auto& e : m.d_) e = f(e);
    if (!m.d_.empty()) m.nvars_ = m.d_.front().nvars();
    return m;
  }

  bool operator==(const PolyMat& o) const;

 private:
  int r_ = 0, c_ = 0, nvars_ = 0;
  std::vector<Poly> d_;
};

Poly det(const PolyMat& m);
/// Classical adjugate: m * adj(m) = det(m) * I.
PolyMat adjugate(const PolyMat& m);
/// Row vector times matrix.
std::vector<Poly> row_times(const std::vector<Poly>& v, const PolyMat& m);
/// Entry-wise equality in A.
bool mat_equal(const Ring& ring, const PolyMat& a, const PolyMat& b);
PolyMat mat_reduce(const Ring& ring, const PolyMat& m);

/// Identity plus `value` at (i, j), i != j. Right multiplication adds
/// value * column i to column j.
struct ElemFactor {
  int i = 0;
  int j = 0;
  Poly value;
};

PolyMat elementary(int n, const ElemFactor& f, int nvars);
PolyMat product_of(int n, const std::vector<ElemFactor>& fs, int nvars);
/// Factors of the inverse matrix, in order.
std::vector<ElemFactor> inverse_factors(const std::vector<ElemFactor>& fs);

/// Matrix over a localization: num / base^power.
struct LocMatrix {
  PolyMat num;
  Poly base;
  int power = 0;

  int n() const { return num.rows(); }
  LocFraction entry(int i, int j) const {
    return power_fraction(num.at(i, j), base, power);
  }
};

LocMatrix loc_identity(int n, const Poly& base);
LocMatrix loc_from_poly(const PolyMat& m, const Poly& base);
/// Product of two matrices over the same base.
LocMatrix loc_mul(const LocMatrix& a, const LocMatrix& b);
/// Rewrites num/s^e as (num * t^e) / (st)^e.
LocMatrix loc_rebase(const LocMatrix& a, const Poly& t);
/// Inverse of a determinant-one matrix via the adjugate.
LocMatrix loc_inverse_det1(const LocMatrix& a);
/// Cancels powers of base dividing every numerator entry.
LocMatrix loc_normalize(const Ring& ring, const LocMatrix& a);
Poly loc_det_num(const LocMatrix& a);  // det(num); det = this / base^(n*power)
bool loc_mat_equal(const Ring& ring, const LocMatrix& a, const LocMatrix& b);

}  // namespace ecg
