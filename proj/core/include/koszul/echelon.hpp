#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "koszul/sparse_matrix.hpp"

namespace koszul {

// Incrementally maintained reduced row echelon basis of a subspace of F^n.
//
// Every stored row has leading coefficient 1 at its pivot column and zeros
// at all other pivot columns. Pivots are always the smallest surviving
// column, so the basis is the canonical RREF of the span whatever order the
// vectors are inserted in.
template <class Field>
class EchelonBasis {
 public:
  using Element = typename Field::Element;
  using Vector = SparseVector<Field>;

  EchelonBasis() = default;
  EchelonBasis(Field field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  // Pivot column -> row, ascending by pivot.
  const std::map<std::size_t, Vector>& rows() const { return rows_; }

  bool is_pivot(std::size_t col) const { return rows_.count(col) != 0; }

  // Canonical representative of v modulo the span: support avoids all pivots.
  Vector reduce(const Vector& v) const {
    Vector out = v;
    for (const auto& [col, value] : v) {
      auto it = rows_.find(col);
      if (it == rows_.end()) continue;
      // Pivot rows vanish on the other pivot columns, so the coefficient read
      // from the original vector is still the right one.
      out = axpy(field_, out, field_.neg(value), it->second);
    }
    return out;
  }

  bool contains(const Vector& v) const { return reduce(v).empty(); }

  // Returns true if v was independent of the current span.
  bool insert(const Vector& v) {
    Vector w = reduce(v);
    if (w.empty()) return false;
    std::size_t pivot = w.front().first;
    w = scale(field_, field_.inv(w.front().second), w);
    for (auto& [col, row] : rows_) {
      Element c = entry(field_, row, pivot);
      if (!field_.is_zero(c)) row = axpy(field_, row, field_.neg(c), w);
    }
    rows_.emplace(pivot, std::move(w));
    return true;
  }

  std::vector<std::size_t> pivot_columns() const {
    std::vector<std::size_t> out;
    out.reserve(rows_.size());
    for (const auto& [col, row] : rows_) out.push_back(col);
    return out;
  }

  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (!is_pivot(c)) out.push_back(c);
    }
    return out;
  }

  // Rows as a (rank x dim) matrix in ascending pivot order.
  SparseMatrix<Field> to_matrix() const {
    SparseMatrix<Field> m(field_, rows_.size(), dim_);
    std::size_t r = 0;
    for (const auto& [col, row] : rows_) m.set_row(r++, row);
    return m;
  }

 private:
  Field field_{};
  std::size_t dim_ = 0;
  std::map<std::size_t, Vector> rows_;
};

template <class Field>
EchelonBasis<Field> row_echelon(const SparseMatrix<Field>& m) {
  EchelonBasis<Field> basis(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
  return basis;
}

template <class Field>
std::size_t rank(const SparseMatrix<Field>& m) {
  // Row rank equals column rank; eliminate along the shorter side.
  if (m.rows() > m.cols()) return row_echelon(m.transpose()).rank();
  return row_echelon(m).rank();
}

// Basis of {x : m x = 0}, one vector per row, in reduced echelon form.
template <class Field>
SparseMatrix<Field> kernel_basis(const SparseMatrix<Field>& m) {
  const Field& field = m.field();
  EchelonBasis<Field> ech = row_echelon(m);
  std::vector<std::size_t> free = ech.free_columns();
  // x_f = 1, x_pivot = -row_pivot[f]
  std::vector<std::vector<std::pair<std::size_t, typename Field::Element>>> vecs(free.size());
  std::vector<std::size_t> free_index(m.cols(), free.size());
  for (std::size_t i = 0; i < free.size(); ++i) free_index[free[i]] = i;
  for (std::size_t i = 0; i < free.size(); ++i) vecs[i].emplace_back(free[i], field.one());
  for (const auto& [pivot, row] : ech.rows()) {
    for (const auto& [col, value] : row) {
      if (col == pivot) continue;
      vecs[free_index[col]].emplace_back(pivot, field.neg(value));
    }
  }
  EchelonBasis<Field> kernel(field, m.cols());
  for (auto& v : vecs) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    kernel.insert(v);
  }
  return kernel.to_matrix();
}

// Basis of the column space of m, one vector per row, in reduced echelon form.
template <class Field>
SparseMatrix<Field> image_basis(const SparseMatrix<Field>& m) {
  return row_echelon(m.transpose()).to_matrix();
}

}  // namespace koszul
