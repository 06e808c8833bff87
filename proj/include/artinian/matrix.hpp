#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "artinian/degree.hpp"
#include "artinian/field.hpp"

namespace artinian {

using Index = std::uint32_t;

template <class E>
struct Entry {
  Index index;
  E value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

// Sorted by index, no stored zeros.
template <class F>
using SparseVector = std::vector<Entry<typename F::Elem>>;

template <class F>
SparseVector<F> unit_vector(const F& field, Index i) {
  return {{i, field.one()}};
}

template <class F>
void scale_in_place(const F& field, SparseVector<F>& v, const typename F::Elem& s) {
  if (field.is_zero(s)) {
    v.clear();
    return;
  }
  for (auto& e : v) e.value = field.mul(e.value, s);
}

// Dense scratch vector with a touched list; reset on take().
template <class F>
class Accumulator {
 public:
  using Elem = typename F::Elem;

  Accumulator(const F& field, Index n) : field_(field), values_(n, field.zero()), mark_(n, 0) {}

  Index size() const { return static_cast<Index>(values_.size()); }

  void add(Index i, const Elem& v) {
    touch(i);
    values_[i] = field_.add(values_[i], v);
  }
  void add_scaled(const SparseVector<F>& vec, const Elem& s, Index offset = 0) {
    for (const auto& e : vec) {
      touch(e.index + offset);
      values_[e.index + offset] = field_.add(values_[e.index + offset], field_.mul(e.value, s));
    }
  }
  const Elem& get(Index i) const { return values_[i]; }

  SparseVector<F> take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVector<F> out;
    out.reserve(touched_.size());
    for (Index i : touched_) {
      if (!field_.is_zero(values_[i])) out.push_back({i, std::move(values_[i])});
      values_[i] = field_.zero();
      mark_[i] = 0;
    }
    touched_.clear();
    return out;
  }

 private:
  void touch(Index i) {
    if (!mark_[i]) {
      mark_[i] = 1;
      touched_.push_back(i);
    }
  }
  F field_;
  std::vector<Elem> values_;
  std::vector<char> mark_;
  std::vector<Index> touched_;
};

// Column-major sparse matrix over a field.
template <class F>
class ExactMatrix {
 public:
  using Elem = typename F::Elem;
  using Column = SparseVector<F>;

  ExactMatrix(F field, Index rows, Index cols) : field_(std::move(field)), rows_(rows), columns_(cols) {}

  static ExactMatrix identity(const F& field, Index n) {
    ExactMatrix m(field, n, n);
    for (Index i = 0; i < n; ++i) m.columns_[i] = unit_vector(field, i);
    return m;
  }

  static ExactMatrix from_rows(const F& field, const std::vector<std::vector<long long>>& rows) {
    Index r = static_cast<Index>(rows.size());
    Index c = r ? static_cast<Index>(rows[0].size()) : 0;
    ExactMatrix m(field, r, c);
    for (Index i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DimensionMismatch("ragged row list");
      for (Index j = 0; j < c; ++j) {
        Elem v = field.from_int(rows[i][j]);
        if (!field.is_zero(v)) m.columns_[j].push_back({i, v});
      }
    }
    return m;
  }

  static ExactMatrix from_columns(const F& field, Index rows, std::vector<Column> cols) {
    ExactMatrix m(field, rows, static_cast<Index>(cols.size()));
    m.columns_ = std::move(cols);
    return m;
  }

  const F& field() const { return field_; }
  Index rows() const { return rows_; }
  Index cols() const { return static_cast<Index>(columns_.size()); }
  const Column& column(Index c) const { return columns_[c]; }
  Column& column(Index c) { return columns_[c]; }
  const std::vector<Column>& columns() const { return columns_; }
  void set_column(Index c, Column v) { columns_[c] = std::move(v); }

  Elem at(Index r, Index c) const {
    const auto& col = columns_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const Entry<Elem>& e, Index i) { return e.index < i; });
    return (it != col.end() && it->index == r) ? it->value : field_.zero();
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }
  bool is_zero() const {
    for (const auto& c : columns_)
      if (!c.empty()) return false;
    return true;
  }
  bool is_identity() const {
    if (rows_ != cols()) return false;
    for (Index c = 0; c < cols(); ++c) {
      const auto& col = columns_[c];
      if (col.size() != 1 || col[0].index != c || !field_.is_one(col[0].value)) return false;
    }
    return true;
  }

  Column apply(const Column& v, Accumulator<F>& acc) const {
    for (const auto& e : v) acc.add_scaled(columns_[e.index], e.value);
    return acc.take();
  }
  Column apply(const Column& v) const {
    Accumulator<F> acc(field_, rows_);
    return apply(v, acc);
  }

  ExactMatrix transpose() const {
    ExactMatrix t(field_, cols(), rows_);
    for (Index c = 0; c < cols(); ++c)
      for (const auto& e : columns_[c]) t.columns_[e.index].push_back({c, e.value});
    return t;
  }

  std::vector<std::vector<std::string>> to_string_rows() const {
    std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols(), "0"));
    for (Index c = 0; c < cols(); ++c)
      for (const auto& e : columns_[c]) out[e.index][c] = field_.to_string(e.value);
    return out;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.columns_ == b.columns_;
  }

 private:
  F field_;
  Index rows_;
  std::vector<Column> columns_;
};

template <class F>
ExactMatrix<F> matmul(const ExactMatrix<F>& a, const ExactMatrix<F>& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.rows())
    throw DimensionMismatch("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  ExactMatrix<F> out(a.field(), a.rows(), b.cols());
  Accumulator<F> acc(a.field(), a.rows());
  for (Index c = 0; c < b.cols(); ++c) out.set_column(c, a.apply(b.column(c), acc));
  return out;
}

template <class F>
ExactMatrix<F> add(const ExactMatrix<F>& a, const ExactMatrix<F>& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("add: shape mismatch");
  ExactMatrix<F> out(a.field(), a.rows(), a.cols());
  Accumulator<F> acc(a.field(), a.rows());
  for (Index c = 0; c < a.cols(); ++c) {
    acc.add_scaled(a.column(c), a.field().one());
    acc.add_scaled(b.column(c), a.field().one());
    out.set_column(c, acc.take());
  }
  return out;
}

template <class F>
ExactMatrix<F> scaled(const ExactMatrix<F>& a, const typename F::Elem& s) {
  ExactMatrix<F> out = a;
  for (Index c = 0; c < a.cols(); ++c) scale_in_place(a.field(), out.column(c), s);
  return out;
}

template <class F>
ExactMatrix<F> hstack(const F& field, Index rows, const std::vector<const ExactMatrix<F>*>& parts) {
  std::vector<SparseVector<F>> cols;
  for (const auto* p : parts) {
    if (p->rows() != rows) throw DimensionMismatch("hstack: row mismatch");
    for (const auto& c : p->columns()) cols.push_back(c);
  }
  return ExactMatrix<F>::from_columns(field, rows, std::move(cols));
}

template <class F>
ExactMatrix<F> vstack(const F& field, Index cols, const std::vector<const ExactMatrix<F>*>& parts) {
  Index rows = 0;
  for (const auto* p : parts) {
    if (p->cols() != cols) throw DimensionMismatch("vstack: column mismatch");
    rows += p->rows();
  }
  ExactMatrix<F> out(field, rows, cols);
  Index offset = 0;
  for (const auto* p : parts) {
    for (Index c = 0; c < cols; ++c)
      for (const auto& e : p->column(c)) out.column(c).push_back({e.index + offset, e.value});
    offset += p->rows();
  }
  return out;
}

// Incremental echelon form of row vectors of fixed length. Rows are monic with
// distinct leading columns; reduce() eliminates every pivot column from its input.
template <class F>
class Echelon {
 public:
  using Elem = typename F::Elem;

  Echelon(F field, Index length)
      : field_(std::move(field)),
        length_(length),
        row_of_(length, -1),
        scratch_(length, field_.zero()),
        mark_(length, 0) {}

  Index length() const { return length_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }
  bool is_pivot(Index c) const { return row_of_[c] >= 0; }
  const std::vector<SparseVector<F>>& rows() const { return rows_; }
  Index pivot_of_row(Index r) const { return rows_[r].front().index; }

  SparseVector<F> reduce(const SparseVector<F>& v) const {
    if (v.empty()) return {};
    std::priority_queue<Index, std::vector<Index>, std::greater<Index>> heap;
    std::vector<Index> touched;
    auto touch = [&](Index i) {
      if (!mark_[i]) {
        mark_[i] = 1;
        touched.push_back(i);
        heap.push(i);
      }
    };
    for (const auto& e : v) {
      touch(e.index);
      scratch_[e.index] = e.value;
    }
    auto eliminate = [&](Index c) {
      Elem f = scratch_[c];
      for (const auto& e : rows_[row_of_[c]]) {
        if (e.index == c) continue;
        if (!mark_[e.index]) {
          mark_[e.index] = 1;
          touched.push_back(e.index);
          if (!dense_) heap.push(e.index);
        }
        field_.sub_mul(scratch_[e.index], f, e.value);
      }
      scratch_[c] = field_.zero();
    };
    dense_ = false;
    Index cursor = 0;
    while (!heap.empty()) {
      Index c = heap.top();
      heap.pop();
      if (!field_.is_zero(scratch_[c]) && row_of_[c] >= 0) eliminate(c);
      if (touched.size() * 2 > length_) {
        dense_ = true;
        cursor = c + 1;
        break;
      }
    }
    if (dense_) {
      for (Index c = cursor; c < length_; ++c)
        if (mark_[c] && row_of_[c] >= 0 && !field_.is_zero(scratch_[c])) eliminate(c);
      dense_ = false;
    }
    std::sort(touched.begin(), touched.end());
    SparseVector<F> out;
    for (Index i : touched) {
      if (!field_.is_zero(scratch_[i])) out.push_back({i, scratch_[i]});
      scratch_[i] = field_.zero();
      mark_[i] = 0;
    }
    return out;
  }

  bool contains(const SparseVector<F>& v) const { return reduce(v).empty(); }

  // Returns true if v was independent of the current rows.
  bool insert(const SparseVector<F>& v) {
    SparseVector<F> r = reduce(v);
    if (r.empty()) return false;
    Elem lead_inv = field_.inv(r.front().value);
    if (!field_.is_one(r.front().value)) scale_in_place(field_, r, lead_inv);
    row_of_[r.front().index] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(r));
    reduced_ = false;
    return true;
  }

  // Back-substitution to reduced row echelon form.
  void fully_reduce() {
    if (reduced_) return;
    std::vector<Index> order(rows_.size());
    for (Index i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](Index a, Index b) { return pivot_of_row(a) > pivot_of_row(b); });
    Accumulator<F> acc(field_, length_);
    for (Index r : order) {
      auto& row = rows_[r];
      bool dirty = false;
      for (std::size_t k = 1; k < row.size(); ++k)
        if (row_of_[row[k].index] >= 0) dirty = true;
      if (!dirty) continue;
      acc.add_scaled(row, field_.one());
      for (std::size_t k = 1; k < row.size(); ++k) {
        Index c = row[k].index;
        if (row_of_[c] < 0) continue;
        Elem f = field_.neg(row[k].value);
        acc.add_scaled(rows_[row_of_[c]], f);
      }
      row = acc.take();
    }
    reduced_ = true;
  }

  std::vector<Index> pivot_columns() const {
    std::vector<Index> p;
    for (const auto& r : rows_) p.push_back(r.front().index);
    std::sort(p.begin(), p.end());
    return p;
  }

  std::vector<Index> free_columns() const {
    std::vector<Index> f;
    for (Index c = 0; c < length_; ++c)
      if (row_of_[c] < 0) f.push_back(c);
    return f;
  }

  // Nullspace of the row space viewed as linear equations; vector t has a 1 at free column t.
  std::vector<SparseVector<F>> kernel() {
    fully_reduce();
    std::vector<Index> free = free_columns();
    std::vector<std::int32_t> slot(length_, -1);
    for (Index t = 0; t < free.size(); ++t) slot[free[t]] = static_cast<std::int32_t>(t);
    std::vector<SparseVector<F>> ker(free.size());
    for (const auto& row : rows_) {
      Index p = row.front().index;
      for (std::size_t k = 1; k < row.size(); ++k)
        ker[slot[row[k].index]].push_back({p, field_.neg(row[k].value)});
    }
    for (Index t = 0; t < free.size(); ++t) {
      ker[t].push_back({free[t], field_.one()});
      std::sort(ker[t].begin(), ker[t].end(),
                [](const auto& a, const auto& b) { return a.index < b.index; });
    }
    return ker;
  }

 private:
  F field_;
  Index length_;
  std::vector<SparseVector<F>> rows_;
  std::vector<std::int32_t> row_of_;
  mutable std::vector<Elem> scratch_;
  mutable std::vector<char> mark_;
  mutable bool dense_ = false;
  bool reduced_ = true;
};

template <class F>
struct RrefResult {
  Index rank = 0;
  std::vector<SparseVector<F>> kernel_basis;
  std::vector<Index> pivot_columns;
};

template <class F>
RrefResult<F> rref(const ExactMatrix<F>& m) {
  ExactMatrix<F> t = m.transpose();
  Echelon<F> ech(m.field(), m.cols());
  for (Index r = 0; r < t.cols(); ++r) ech.insert(t.column(r));
  RrefResult<F> out;
  out.rank = ech.rank();
  out.kernel_basis = ech.kernel();
  out.pivot_columns = ech.pivot_columns();
  return out;
}

template <class F>
Index rank(const ExactMatrix<F>& m) {
  Echelon<F> ech(m.field(), m.rows());
  for (Index c = 0; c < m.cols(); ++c) ech.insert(m.column(c));
  return ech.rank();
}

// Partition of an index range into blocks labelled by keys.
struct BlockPartition {
  std::vector<std::vector<Index>> members;
  std::vector<Index> local;

  BlockPartition(const std::vector<Key>& keys, Key num_keys) : members(num_keys), local(keys.size()) {
    for (Index i = 0; i < keys.size(); ++i) {
      local[i] = static_cast<Index>(members[keys[i]].size());
      members[keys[i]].push_back(i);
    }
  }
};

inline Key key_count(const std::vector<Key>& a, const std::vector<Key>& b) {
  Key k = 0;
  for (Key x : a) k = std::max<Key>(k, x + 1);
  for (Key x : b) k = std::max<Key>(k, x + 1);
  return k;
}

// Kernel and rank of a map that preserves the given row/column block labels.
// Empty key vectors mean a single block.
template <class F>
struct GradedKernel {
  std::vector<SparseVector<F>> basis;
  std::vector<Index> free_columns;  // basis[t] has coordinate 1 at free_columns[t]
  Index rank = 0;
};

template <class F>
GradedKernel<F> graded_kernel(const ExactMatrix<F>& m, std::vector<Key> row_keys, std::vector<Key> col_keys,
                              bool want_kernel = true, std::int64_t only_key = -1) {
  if (row_keys.empty()) row_keys.assign(m.rows(), 0);
  if (col_keys.empty()) col_keys.assign(m.cols(), 0);
  if (row_keys.size() != m.rows() || col_keys.size() != m.cols())
    throw DimensionMismatch("graded_kernel: key vector size mismatch");
  Key nk = key_count(row_keys, col_keys);
  BlockPartition rows(row_keys, nk), cols(col_keys, nk);
  GradedKernel<F> out;
  std::vector<std::pair<Index, SparseVector<F>>> found;
  for (Key k = 0; k < nk; ++k) {
    if (only_key >= 0 && k != static_cast<Key>(only_key)) continue;
    const auto& cs = cols.members[k];
    if (cs.empty()) continue;
    const auto& rs = rows.members[k];
    std::vector<SparseVector<F>> local_rows(rs.size());
    for (Index lc = 0; lc < cs.size(); ++lc)
      for (const auto& e : m.column(cs[lc])) {
        if (row_keys[e.index] != k) throw InvariantViolation("map does not respect the grading");
        local_rows[rows.local[e.index]].push_back({lc, e.value});
      }
    Echelon<F> ech(m.field(), static_cast<Index>(cs.size()));
    for (auto& r : local_rows)
      if (!r.empty()) ech.insert(r);
    out.rank += ech.rank();
    if (!want_kernel) continue;
    auto ker = ech.kernel();
    auto fr = ech.free_columns();
    for (Index t = 0; t < ker.size(); ++t) {
      for (auto& e : ker[t]) e.index = cs[e.index];
      found.emplace_back(cs[fr[t]], std::move(ker[t]));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [f, v] : found) {
    out.free_columns.push_back(f);
    out.basis.push_back(std::move(v));
  }
  return out;
}

template <class F>
Index graded_rank(const ExactMatrix<F>& m, const std::vector<Key>& row_keys, const std::vector<Key>& col_keys) {
  return graded_kernel(m, row_keys, col_keys, false).rank;
}

}  // namespace artinian
