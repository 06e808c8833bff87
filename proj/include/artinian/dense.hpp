#pragma once

#include <optional>
#include <vector>

#include "artinian/matrix.hpp"

namespace artinian {

// Small row-major dense matrix used for per-block work.
template <class F>
class DenseMatrix {
 public:
  using Elem = typename F::Elem;

  DenseMatrix(F field, Index rows, Index cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, field_.zero()) {}

  static DenseMatrix identity(const F& field, Index n) {
    DenseMatrix m(field, n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  const F& field() const { return field_; }
  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Elem& operator()(Index r, Index c) { return data_[std::size_t(r) * cols_ + c]; }
  const Elem& operator()(Index r, Index c) const { return data_[std::size_t(r) * cols_ + c]; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("dense multiply shape mismatch");
    const F& f = a.field_;
    DenseMatrix out(f, a.rows_, b.cols_);
    for (Index i = 0; i < a.rows_; ++i)
      for (Index k = 0; k < a.cols_; ++k) {
        const Elem& x = a(i, k);
        if (f.is_zero(x)) continue;
        for (Index j = 0; j < b.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
      }
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  // In-place row reduction; returns pivot columns.
  std::vector<Index> row_reduce() {
    std::vector<Index> pivots;
    Index r = 0;
    for (Index c = 0; c < cols_ && r < rows_; ++c) {
      Index p = r;
      while (p < rows_ && field_.is_zero((*this)(p, c))) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (Index j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      Elem inv = field_.inv((*this)(r, c));
      for (Index j = c; j < cols_; ++j) (*this)(r, j) = field_.mul((*this)(r, j), inv);
      for (Index i = 0; i < rows_; ++i) {
        if (i == r || field_.is_zero((*this)(i, c))) continue;
        Elem f = (*this)(i, c);
        for (Index j = c; j < cols_; ++j) field_.sub_mul((*this)(i, j), f, (*this)(r, j));
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  Index rank() const {
    DenseMatrix t = *this;
    return static_cast<Index>(t.row_reduce().size());
  }

  std::optional<DenseMatrix> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Index n = rows_;
    DenseMatrix aug(field_, n, 2 * n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = field_.one();
    }
    auto piv = aug.row_reduce();
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    DenseMatrix out(field_, n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
  }

  // Column vectors spanning the nullspace.
  std::vector<std::vector<Elem>> kernel() const {
    DenseMatrix t = *this;
    auto piv = t.row_reduce();
    std::vector<char> is_piv(cols_, 0);
    for (Index p : piv) is_piv[p] = 1;
    std::vector<std::vector<Elem>> out;
    for (Index f = 0; f < cols_; ++f) {
      if (is_piv[f]) continue;
      std::vector<Elem> v(cols_, field_.zero());
      v[f] = field_.one();
      for (Index r = 0; r < piv.size(); ++r) v[piv[r]] = field_.neg(t(r, f));
      out.push_back(std::move(v));
    }
    return out;
  }

  // A basis of the column space, taken from the original columns at pivot positions.
  std::vector<std::vector<Elem>> column_basis() const {
    DenseMatrix t = *this;
    auto piv = t.row_reduce();
    std::vector<std::vector<Elem>> out;
    for (Index p : piv) {
      std::vector<Elem> v(rows_);
      for (Index i = 0; i < rows_; ++i) v[i] = (*this)(i, p);
      out.push_back(std::move(v));
    }
    return out;
  }

  // Characteristic polynomial det(xI - A), coefficients from low to high degree.
  std::vector<Elem> charpoly() const {
    if (rows_ != cols_) throw DimensionMismatch("charpoly of non-square matrix");
    Index n = rows_;
    const F& f = field_;
    DenseMatrix h = *this;
    // Reduce to upper Hessenberg form by similarity transforms.
    for (Index c = 0; c + 2 <= n; ++c) {
      Index p = c + 1;
      while (p < n && f.is_zero(h(p, c))) ++p;
      if (p == n) continue;
      if (p != c + 1) {
        for (Index j = 0; j < n; ++j) std::swap(h(p, j), h(c + 1, j));
        for (Index i = 0; i < n; ++i) std::swap(h(i, p), h(i, c + 1));
      }
      Elem inv = f.inv(h(c + 1, c));
      for (Index i = c + 2; i < n; ++i) {
        if (f.is_zero(h(i, c))) continue;
        Elem m = f.mul(h(i, c), inv);
        for (Index j = 0; j < n; ++j) f.sub_mul(h(i, j), m, h(c + 1, j));
        for (Index j = 0; j < n; ++j) h(j, c + 1) = f.add(h(j, c + 1), f.mul(m, h(j, i)));
      }
    }
    // Recurrence on leading principal minors of xI - H.
    std::vector<std::vector<Elem>> p(n + 1);
    p[0] = {f.one()};
    for (Index k = 1; k <= n; ++k) {
      std::vector<Elem> next(k + 1, f.zero());
      for (Index i = 0; i < p[k - 1].size(); ++i) {
        next[i + 1] = f.add(next[i + 1], p[k - 1][i]);
        f.sub_mul(next[i], h(k - 1, k - 1), p[k - 1][i]);
      }
      Elem prod = f.one();
      for (Index i = 1; i < k; ++i) {
        Index row = k - i - 1;
        prod = f.mul(prod, h(row + 1, row));
        Elem coef = f.mul(prod, h(row, k - 1));
        for (Index j = 0; j < p[row].size(); ++j) f.sub_mul(next[j], coef, p[row][j]);
      }
      p[k] = std::move(next);
    }
    return p[n];
  }

 private:
  F field_;
  Index rows_, cols_;
  std::vector<Elem> data_;
};

}  // namespace artinian
