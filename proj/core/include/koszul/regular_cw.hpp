#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/layered_graph.hpp"

namespace koszul {

using CellId = std::string;

struct CellSpec {
  CellId id;
  int dim = 0;
  // Codimension-one faces with their incidence numbers (+1 or -1).
  std::map<CellId, int> boundary;
  friend bool operator==(const CellSpec&, const CellSpec&) = default;
};

// Finite regular CW complex described combinatorially by its signed
// incidence numbers d(upper, lower).
//
// Cells are indexed in CellId order. Construction only checks structure
// (known ids, dimensions, signs); the regularity consequences are checked by
// validate().
class RegularCWComplex {
 public:
  struct Face {
    std::size_t cell;
    int sign;
  };

  // Throws InputError listing every structural problem.
  static RegularCWComplex from_cells(std::string name, const std::vector<CellSpec>& cells);

  const std::string& name() const { return name_; }
  std::size_t size() const { return ids_.size(); }
  // -1 for the empty complex.
  int dim() const { return max_dim_; }

  const CellId& id(std::size_t c) const { return ids_[c]; }
  std::size_t index(const CellId& id) const;  // throws InputError
  std::optional<std::size_t> find(const CellId& id) const;
  int cell_dim(std::size_t c) const { return dims_[c]; }
  const std::vector<std::size_t>& cells_of_dim(int n) const;
  // Sorted by face index.
  const std::vector<Face>& faces(std::size_t c) const { return faces_[c]; }
  const std::vector<Face>& cofaces(std::size_t c) const { return cofaces_[c]; }
  // d(upper, lower); 0 if lower is not a codimension-one face of upper.
  int incidence(std::size_t upper, std::size_t lower) const;
  // lower <= upper in the face poset.
  bool is_face(std::size_t lower, std::size_t upper) const { return closure_[upper][lower]; }

  std::vector<CellSpec> to_cells() const;
  friend bool operator==(const RegularCWComplex& a, const RegularCWComplex& b) {
    return a.name_ == b.name_ && a.to_cells() == b.to_cells();
  }

 private:
  RegularCWComplex() = default;

  std::string name_;
  std::vector<CellId> ids_;
  std::vector<int> dims_;
  std::vector<std::vector<Face>> faces_;
  std::vector<std::vector<Face>> cofaces_;
  std::vector<std::vector<std::size_t>> by_dim_;
  std::vector<std::vector<bool>> closure_;  // closure_[upper][lower]
  int max_dim_ = -1;
};

// Downward-closed set of cells of a complex (sorted cell indices).
struct Subcomplex {
  std::vector<std::size_t> cells;
  bool contains(std::size_t c) const;
};

struct Violation {
  std::string kind;  // "boundary-squared", "thin", "no-faces", "sphere-boundary", "diamond"
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the combinatorial consequences of regularity: boundary squared is
// zero, the face poset with a minimum is thin, every positive-dimensional
// cell has faces whose closure has the Euler characteristic of a sphere, and
// each interval has a single diamond class. Topological regularity itself is
// not certified.
ValidationReport validate(const RegularCWComplex& x);
// Throws InputError with the report if x is not valid.
void require_valid(const RegularCWComplex& x);

LayeredGraph face_poset_bar(const RegularCWComplex& x);
// Throws HypothesisError if x is not pure.
LayeredGraph face_poset_hat(const RegularCWComplex& x);

bool is_pure(const RegularCWComplex& x);
// Throws HypothesisError if x is not pure.
bool connected_by_codim1(const RegularCWComplex& x);

// X_a: a and all its faces.
Subcomplex closed_cell(const RegularCWComplex& x, const CellId& a);
// Y_a: cells whose closure does not contain a.
Subcomplex complement_star(const RegularCWComplex& x, const CellId& a);
std::vector<int> euler_counts(const RegularCWComplex& x, const Subcomplex& s);
long euler_characteristic(const RegularCWComplex& x, const Subcomplex& s);
long euler_characteristic(const RegularCWComplex& x);

}  // namespace koszul
