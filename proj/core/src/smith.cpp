#include "koszul/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace koszul {
namespace {

DenseIntegerMatrix to_dense(const IntegerMatrix& m) {
  DenseIntegerMatrix d(m.rows(), std::vector<mpz_class>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) d[r][c] = v;
  }
  return d;
}

DenseIntegerMatrix dense_identity(std::size_t n) {
  DenseIntegerMatrix d(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

class SmithReducer {
 public:
  SmithReducer(DenseIntegerMatrix a, bool track)
      : a_(std::move(a)),
        rows_(a_.size()),
        cols_(rows_ == 0 ? 0 : a_[0].size()),
        track_(track) {
    if (track_) {
      u_ = dense_identity(rows_);
      uinv_ = dense_identity(rows_);
    }
  }

  SmithForm run() {
    SmithForm form;
    std::size_t limit = std::min(rows_, cols_);
    for (std::size_t t = 0; t < limit; ++t) {
      auto pivot = smallest_entry(t, t);
      if (!pivot) break;
      move_to(t, *pivot);
      while (true) {
        if (!clear_row_and_column(t)) continue;
        auto offender = non_divisible(t);
        if (!offender) break;
        add_row(t, *offender, 1);  // row_t += row_offender, then clear again
      }
      if (a_[t][t] < 0) negate_row(t);
      form.invariant_factors.push_back(a_[t][t]);
    }
    return form;
  }

  DenseIntegerMatrix take_left() { return std::move(u_); }
  DenseIntegerMatrix take_left_inverse() { return std::move(uinv_); }

 private:
  // Position of the smallest nonzero |entry| in rows >= r0, cols >= c0.
  std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(std::size_t r0,
                                                                    std::size_t c0) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    mpz_class best_abs;
    for (std::size_t i = r0; i < rows_; ++i) {
      for (std::size_t j = c0; j < cols_; ++j) {
        if (sgn(a_[i][j]) == 0) continue;
        mpz_class v = abs(a_[i][j]);
        if (!best || v < best_abs) {
          best = {i, j};
          best_abs = v;
        }
      }
    }
    return best;
  }

  void move_to(std::size_t t, std::pair<std::size_t, std::size_t> at) {
    if (at.first != t) swap_rows(t, at.first);
    if (at.second != t) swap_cols(t, at.second);
  }

  // Reduces row and column t modulo the pivot. Returns true once both are
  // zero off the diagonal; otherwise moves a smaller remainder into the
  // pivot and returns false.
  bool clear_row_and_column(std::size_t t) {
    for (std::size_t i = t + 1; i < rows_; ++i) {
      if (sgn(a_[i][t]) == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a_[i][t].get_mpz_t(), a_[t][t].get_mpz_t());
      add_row(i, t, -q);
    }
    for (std::size_t j = t + 1; j < cols_; ++j) {
      if (sgn(a_[t][j]) == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a_[t][j].get_mpz_t(), a_[t][t].get_mpz_t());
      add_col(j, t, -q);
    }
    std::optional<std::pair<std::size_t, std::size_t>> best;
    mpz_class best_abs = abs(a_[t][t]);
    for (std::size_t i = t + 1; i < rows_; ++i) {
      if (sgn(a_[i][t]) != 0 && abs(a_[i][t]) < best_abs) {
        best = {i, t};
        best_abs = abs(a_[i][t]);
      }
    }
    for (std::size_t j = t + 1; j < cols_; ++j) {
      if (sgn(a_[t][j]) != 0 && abs(a_[t][j]) < best_abs) {
        best = {t, j};
        best_abs = abs(a_[t][j]);
      }
    }
    if (best) {
      move_to(t, *best);
      return false;
    }
    // Every remainder is zero: row and column are clear.
    return true;
  }

  std::optional<std::size_t> non_divisible(std::size_t t) const {
    for (std::size_t i = t + 1; i < rows_; ++i) {
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (sgn(a_[i][j]) != 0 && !mpz_divisible_p(a_[i][j].get_mpz_t(), a_[t][t].get_mpz_t())) {
          return i;
        }
      }
    }
    return std::nullopt;
  }

  // row_i += q * row_k
  void add_row(std::size_t i, std::size_t k, const mpz_class& q) {
    for (std::size_t j = 0; j < cols_; ++j) a_[i][j] += q * a_[k][j];
    if (track_) {
      for (std::size_t j = 0; j < rows_; ++j) u_[i][j] += q * u_[k][j];
      for (std::size_t j = 0; j < rows_; ++j) uinv_[j][k] -= q * uinv_[j][i];
    }
  }

  // col_j += q * col_k
  void add_col(std::size_t j, std::size_t k, const mpz_class& q) {
    for (std::size_t i = 0; i < rows_; ++i) a_[i][j] += q * a_[i][k];
  }

  void swap_rows(std::size_t i, std::size_t k) {
    std::swap(a_[i], a_[k]);
    if (track_) {
      std::swap(u_[i], u_[k]);
      for (auto& row : uinv_) std::swap(row[i], row[k]);
    }
  }

  void swap_cols(std::size_t j, std::size_t k) {
    for (auto& row : a_) std::swap(row[j], row[k]);
  }

  void negate_row(std::size_t i) {
    for (auto& v : a_[i]) v = -v;
    if (track_) {
      for (auto& v : u_[i]) v = -v;
      for (auto& row : uinv_) row[i] = -row[i];
    }
  }

  DenseIntegerMatrix a_;
  std::size_t rows_;
  std::size_t cols_;
  bool track_;
  DenseIntegerMatrix u_;
  DenseIntegerMatrix uinv_;
};

IntegerMatrix multiply_dense_rows(const DenseIntegerMatrix& d, std::size_t first, std::size_t last,
                                  const IntegerMatrix& m) {
  // rows [first, last) of d, times m
  IntegerMatrix sub(IntegerRing{}, last - first, m.rows());
  for (std::size_t r = first; r < last; ++r) {
    SparseVector<IntegerRing> row;
    for (std::size_t c = 0; c < d[r].size(); ++c) {
      if (sgn(d[r][c]) != 0) row.emplace_back(c, d[r][c]);
    }
    sub.set_row(r - first, std::move(row));
  }
  return sub * m;
}

IntegerMatrix dense_columns(const DenseIntegerMatrix& d, std::size_t first, std::size_t last) {
  IntegerMatrix out(IntegerRing{}, d.size(), last - first);
  for (std::size_t r = 0; r < d.size(); ++r) {
    SparseVector<IntegerRing> row;
    for (std::size_t c = first; c < last; ++c) {
      if (sgn(d[r][c]) != 0) row.emplace_back(c - first, d[r][c]);
    }
    out.set_row(r, std::move(row));
  }
  return out;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) { return SmithReducer(to_dense(m), false).run(); }

SmithDecomposition smith_decomposition(const IntegerMatrix& m) {
  SmithReducer reducer(to_dense(m), true);
  SmithDecomposition out;
  out.form = reducer.run();
  out.left = reducer.take_left();
  out.left_inverse = reducer.take_left_inverse();
  if (out.left.empty()) {
    out.left = dense_identity(m.rows());
    out.left_inverse = dense_identity(m.rows());
  }
  return out;
}

std::string IntegralGroup::to_string() const {
  std::string out;
  if (free_rank == 1) {
    out = "Z";
  } else if (free_rank > 1) {
    out = "Z^" + std::to_string(free_rank);
  }
  for (const auto& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.get_str();
  }
  return out.empty() ? "0" : out;
}

std::vector<IntegralGroup> integral_cohomology(const std::vector<std::size_t>& dims,
                                               const std::vector<IntegerMatrix>& maps) {
  if (dims.empty()) return {};
  if (maps.size() + 1 != dims.size()) throw InternalError("integral_cohomology: wrong number of maps");
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    if (!(maps[i + 1] * maps[i]).is_zero()) {
      throw InternalError("integral_cohomology: d^2 != 0 at degree " + std::to_string(i));
    }
  }
  std::vector<SmithForm> forms;
  forms.reserve(maps.size());
  for (const auto& m : maps) forms.push_back(smith_normal_form(m));
  std::vector<IntegralGroup> out(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    std::size_t out_rank = i < maps.size() ? forms[i].rank() : 0;
    std::size_t in_rank = i > 0 ? forms[i - 1].rank() : 0;
    out[i].free_rank = dims[i] - out_rank - in_rank;
    if (i > 0) {
      for (const auto& d : forms[i - 1].invariant_factors) {
        if (d > 1) out[i].torsion.push_back(d);
      }
    }
  }
  return out;
}

std::vector<IntegralGroup> integral_cohomology(const IntegralQuotientComplex& complex) {
  const std::size_t n = complex.ambient_dims.size();
  if (complex.relations.size() != n || complex.maps.size() + 1 != n) {
    throw InternalError("integral_cohomology: malformed quotient complex");
  }
  // Free coordinates of each quotient: rows rank.. of the left Smith
  // transform of the relation generators; section from its inverse.
  std::vector<IntegerMatrix> projection(n);
  std::vector<IntegerMatrix> section(n);
  std::vector<IntegerMatrix> generators(n);
  std::vector<std::size_t> free_dims(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a = complex.ambient_dims[i];
    generators[i] = complex.relations[i].rows() == 0 ? IntegerMatrix(IntegerRing{}, a, 0)
                                                     : complex.relations[i].transpose();
    if (generators[i].rows() != a) throw InternalError("integral_cohomology: relation width mismatch");
    SmithDecomposition snf = smith_decomposition(generators[i]);
    for (const auto& d : snf.form.invariant_factors) {
      if (d != 1) throw Error("integral_cohomology: quotient module has torsion Z/" + d.get_str());
    }
    const std::size_t r = snf.form.rank();
    free_dims[i] = a - r;
    projection[i] = multiply_dense_rows(snf.left, r, a, IntegerMatrix::identity(IntegerRing{}, a));
    section[i] = dense_columns(snf.left_inverse, r, a);
  }
  std::vector<IntegerMatrix> maps;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const IntegerMatrix& f = complex.maps[i];
    if (f.cols() != complex.ambient_dims[i] || f.rows() != complex.ambient_dims[i + 1]) {
      throw InternalError("integral_cohomology: map has wrong shape");
    }
    if (!(projection[i + 1] * (f * generators[i])).is_zero()) {
      throw InternalError("integral_cohomology: map does not preserve relations");
    }
    maps.push_back(projection[i + 1] * f * section[i]);
  }
  return integral_cohomology(free_dims, maps);
}

}  // namespace koszul
