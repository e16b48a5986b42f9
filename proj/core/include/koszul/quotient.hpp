#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "koszul/echelon.hpp"

namespace koszul {

// Presentation of ambient / span(relations).
//
// The quotient basis is the set of non-pivot ambient columns of the
// relation RREF, in ascending order; project() reduces a vector to its
// canonical representative and reads off those coordinates.
template <class Field>
class QuotientPresentation {
 public:
  using Vector = SparseVector<Field>;

  QuotientPresentation() = default;

  // Relation vectors are the rows of `relations` (ambient coordinates).
  QuotientPresentation(std::vector<std::string> ambient_labels, const SparseMatrix<Field>& relations)
      : labels_(std::move(ambient_labels)),
        relations_(row_echelon(relations)),
        basis_(relations_.free_columns()) {
    if (relations.cols() != labels_.size()) {
      throw InternalError("relation vectors do not live in the ambient space");
    }
    index_of_.assign(labels_.size(), npos);
    for (std::size_t j = 0; j < basis_.size(); ++j) index_of_[basis_[j]] = j;
  }

  static QuotientPresentation free(Field field, std::vector<std::string> ambient_labels) {
    std::size_t n = ambient_labels.size();
    return QuotientPresentation(std::move(ambient_labels), SparseMatrix<Field>(field, 0, n));
  }

  const Field& field() const { return relations_.field(); }
  std::size_t ambient_dim() const { return labels_.size(); }
  std::size_t dim() const { return basis_.size(); }
  std::size_t relation_rank() const { return relations_.rank(); }
  const std::vector<std::string>& ambient_labels() const { return labels_; }
  const EchelonBasis<Field>& relations() const { return relations_; }

  // Ambient column represented by quotient coordinate j.
  std::size_t basis_column(std::size_t j) const { return basis_[j]; }
  const std::vector<std::size_t>& basis_columns() const { return basis_; }
  const std::string& basis_label(std::size_t j) const { return labels_[basis_[j]]; }

  Vector project(const Vector& ambient) const {
    Vector reduced = relations_.reduce(ambient);
    Vector out;
    out.reserve(reduced.size());
    for (auto& [col, value] : reduced) out.emplace_back(index_of_[col], std::move(value));
    return out;
  }

  Vector lift(const Vector& quotient) const {
    Vector out;
    out.reserve(quotient.size());
    for (const auto& [j, value] : quotient) out.emplace_back(basis_[j], value);
    return out;
  }

  // Projection as a (dim x ambient_dim) matrix.
  SparseMatrix<Field> projection_matrix() const {
    SparseMatrix<Field> t(field(), ambient_dim(), dim());
    for (std::size_t c = 0; c < ambient_dim(); ++c) {
      t.set_row(c, project(Vector{{c, field().one()}}));
    }
    return t.transpose();
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::string> labels_;
  EchelonBasis<Field> relations_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> index_of_;
};

// The map induced on quotients by f : src.ambient -> dst.ambient, in
// quotient coordinates (project . f . lift). Throws InternalError if f does
// not carry src relations into dst relations.
template <class Field>
SparseMatrix<Field> induced_map(const SparseMatrix<Field>& f, const QuotientPresentation<Field>& src,
                                const QuotientPresentation<Field>& dst) {
  if (f.cols() != src.ambient_dim() || f.rows() != dst.ambient_dim()) {
    throw InternalError("induced_map: dimension mismatch");
  }
  for (const auto& [pivot, relation] : src.relations().rows()) {
    if (!dst.relations().contains(f.apply(relation))) {
      throw InternalError("induced_map: relation space not preserved (relation with pivot '" +
                          src.ambient_labels()[pivot] + "')");
    }
  }
  SparseMatrix<Field> ft = f.transpose();
  SparseMatrix<Field> out_t(f.field(), src.dim(), dst.dim());
  for (std::size_t j = 0; j < src.dim(); ++j) {
    out_t.set_row(j, dst.project(ft.row(src.basis_column(j))));
  }
  return out_t.transpose();
}

// One labelled coefficient of a printed vector.
struct Term {
  std::string label;
  std::string coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

template <class Field>
std::vector<Term> format_vector(const Field& field, const SparseVector<Field>& v,
                                const std::vector<std::string>& labels) {
  std::vector<Term> out;
  for (const auto& [i, value] : v) out.push_back({labels.at(i), field.format(value)});
  return out;
}

template <class Field>
struct CohomologyGroup {
  std::size_t dim = 0;
  // Cocycles spanning a complement of the coboundaries.
  std::vector<SparseVector<Field>> representatives;
};

// Cohomology of 0 -> C^0 -> C^1 -> ... -> C^N -> 0 with dims[i] = dim C^i
// and maps[i] : C^i -> C^{i+1} (so maps.size() == dims.size() - 1).
template <class Field>
std::vector<CohomologyGroup<Field>> cochain_cohomology(const std::vector<std::size_t>& dims,
                                                       const std::vector<SparseMatrix<Field>>& maps,
                                                       const Field& field) {
  if (dims.empty()) return {};
  if (maps.size() + 1 != dims.size()) throw InternalError("cochain_cohomology: wrong number of maps");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].cols() != dims[i] || maps[i].rows() != dims[i + 1]) {
      throw InternalError("cochain_cohomology: map " + std::to_string(i) + " has wrong shape");
    }
  }
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    if (!(maps[i + 1] * maps[i]).is_zero()) {
      throw InternalError("cochain_cohomology: d^2 != 0 at degree " + std::to_string(i));
    }
  }
  std::vector<CohomologyGroup<Field>> out(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    SparseMatrix<Field> cocycles = i < maps.size() ? kernel_basis(maps[i])
                                                   : SparseMatrix<Field>::identity(field, dims[i]);
    EchelonBasis<Field> boundaries(field, dims[i]);
    if (i > 0) {
      SparseMatrix<Field> t = maps[i - 1].transpose();
      for (std::size_t r = 0; r < t.rows(); ++r) boundaries.insert(t.row(r));
    }
    EchelonBasis<Field> spanned = boundaries;
    for (std::size_t r = 0; r < cocycles.rows(); ++r) {
      if (spanned.insert(cocycles.row(r))) {
        out[i].representatives.push_back(boundaries.reduce(cocycles.row(r)));
      }
    }
    out[i].dim = out[i].representatives.size();
  }
  return out;
}

}  // namespace koszul
