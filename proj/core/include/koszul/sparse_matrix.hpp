#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "koszul/error.hpp"
#include "koszul/field.hpp"

namespace koszul {

// Sparse vector: (index, value) pairs sorted by index, no stored zeros.
template <class Field>
using SparseVector = std::vector<std::pair<std::size_t, typename Field::Element>>;

// y + a * x
template <class Field>
SparseVector<Field> axpy(const Field& field, const SparseVector<Field>& y,
                         const typename Field::Element& a, const SparseVector<Field>& x) {
  SparseVector<Field> out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(*iy++);
    } else if (iy == y.end() || ix->first < iy->first) {
      auto v = field.mul(a, ix->second);
      if (!field.is_zero(v)) out.emplace_back(ix->first, std::move(v));
      ++ix;
    } else {
      auto v = field.add(iy->second, field.mul(a, ix->second));
      if (!field.is_zero(v)) out.emplace_back(iy->first, std::move(v));
      ++iy;
      ++ix;
    }
  }
  return out;
}

template <class Field>
SparseVector<Field> scale(const Field& field, const typename Field::Element& a,
                          const SparseVector<Field>& x) {
  SparseVector<Field> out;
  if (field.is_zero(a)) return out;
  out.reserve(x.size());
  for (const auto& [i, v] : x) out.emplace_back(i, field.mul(a, v));
  return out;
}

template <class Field>
typename Field::Element entry(const Field& field, const SparseVector<Field>& x, std::size_t i) {
  auto it = std::lower_bound(x.begin(), x.end(), i,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != x.end() && it->first == i) return it->second;
  return field.zero();
}

// Sparse matrix with row-major storage. Matrices act on column vectors:
// a map V -> W is stored as a (dim W) x (dim V) matrix.
template <class Field>
class SparseMatrix {
 public:
  using Element = typename Field::Element;
  using Row = SparseVector<Field>;

  SparseMatrix() = default;
  SparseMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), cols_(cols), rows_(rows) {}

  static SparseMatrix identity(Field field, std::size_t n) {
    SparseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace_back(i, m.field_.one());
    return m;
  }

  // Duplicate coordinates are summed.
  static SparseMatrix from_triplets(Field field, std::size_t rows, std::size_t cols,
                                    std::vector<std::tuple<std::size_t, std::size_t, Element>> triplets) {
    SparseMatrix m(field, rows, cols);
    std::sort(triplets.begin(), triplets.end(), [](const auto& a, const auto& b) {
      return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    for (auto& [r, c, v] : triplets) {
      if (r >= rows || c >= cols) throw InternalError("triplet out of range");
      auto& row = m.rows_[r];
      if (!row.empty() && row.back().first == c) {
        row.back().second = m.field_.add(row.back().second, v);
      } else {
        row.emplace_back(c, std::move(v));
      }
    }
    for (auto& row : m.rows_) {
      std::erase_if(row, [&](const auto& e) { return m.field_.is_zero(e.second); });
    }
    return m;
  }

  static SparseMatrix from_dense(Field field, const std::vector<std::vector<long>>& dense) {
    std::size_t rows = dense.size();
    std::size_t cols = rows == 0 ? 0 : dense.front().size();
    SparseMatrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        auto v = m.field_.from_int(dense[r][c]);
        if (!m.field_.is_zero(v)) m.rows_[r].emplace_back(c, std::move(v));
      }
    }
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t r) const { return rows_[r]; }
  const std::vector<Row>& row_vectors() const { return rows_; }

  // Replaces row r; the vector must be sorted and zero-free.
  void set_row(std::size_t r, Row row) { rows_[r] = std::move(row); }

  Element at(std::size_t r, std::size_t c) const { return entry(field_, rows_[r], c); }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& row : rows_) n += row.size();
    return n;
  }

  bool is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
  }

  SparseMatrix transpose() const {
    SparseMatrix t(field_, cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r) {
      for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace_back(r, v);
    }
    return t;
  }

  // this * x for a column vector x.
  Row apply(const Row& x) const {
    Row out;
    for (std::size_t r = 0; r < rows(); ++r) {
      Element acc = field_.zero();
      auto ix = x.begin();
      for (const auto& [c, v] : rows_[r]) {
        while (ix != x.end() && ix->first < c) ++ix;
        if (ix == x.end()) break;
        if (ix->first == c) acc = field_.add(acc, field_.mul(v, ix->second));
      }
      if (!field_.is_zero(acc)) out.emplace_back(r, std::move(acc));
    }
    return out;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw InternalError("matrix product dimension mismatch");
    SparseMatrix out(a.field_, a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
      Row acc;
      for (const auto& [k, v] : a.rows_[r]) acc = axpy(a.field_, acc, v, b.rows_[k]);
      out.rows_[r] = std::move(acc);
    }
    return out;
  }

  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw InternalError("matrix difference dimension mismatch");
    }
    SparseMatrix out(a.field_, a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
      out.rows_[r] = axpy(a.field_, a.rows_[r], a.field_.neg(a.field_.one()), b.rows_[r]);
    }
    return out;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      const auto& x = a.rows_[r];
      const auto& y = b.rows_[r];
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].first != y[i].first || !a.field_.equal(x[i].second, y[i].second)) return false;
      }
    }
    return true;
  }

  // Debug format: header "rows cols" then one "row col value" triple per line.
  std::string to_triplet_text() const {
    std::ostringstream os;
    os << rows() << ' ' << cols() << '\n';
    for (std::size_t r = 0; r < rows(); ++r) {
      for (const auto& [c, v] : rows_[r]) os << r << ' ' << c << ' ' << field_.format(v) << '\n';
    }
    return os.str();
  }

 private:
  Field field_{};
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

// Maps an integer matrix into a field.
template <class Field>
SparseMatrix<Field> reduce_coefficients(const SparseMatrix<IntegerRing>& m, const Field& field) {
  SparseMatrix<Field> out(field, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVector<Field> row;
    for (const auto& [c, v] : m.row(r)) {
      auto x = field.from_integer(v);
      if (!field.is_zero(x)) row.emplace_back(c, std::move(x));
    }
    out.set_row(r, std::move(row));
  }
  return out;
}

}  // namespace koszul
