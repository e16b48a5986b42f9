#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/field.hpp"
#include "koszul/quotient.hpp"
#include "koszul/regular_cw.hpp"
#include "koszul/smith.hpp"

namespace koszul {

// v(upper, lower): an n-cell paired with one of its k-faces (or itself).
struct PairBasisElement {
  CellId upper;
  CellId lower;
  std::string label() const { return "v(" + upper + "," + lower + ")"; }
  friend bool operator==(const PairBasisElement&, const PairBasisElement&) = default;
};

// Row k of the bigraded complex C_X(n, k), with both differentials over Z.
//
// spaces[n] is the basis of C_X(n, k), ordered by (upper id, lower id); it is
// empty for n < k. up[n] : C_X(n,k) -> C_X(n+1,k) for n < dim X, and
// down[n] : C_X(n,k) -> C_X(n,k-1) (empty when k = 0).
struct BigradedLayer {
  int k = 0;
  int dim = 0;
  std::vector<std::vector<PairBasisElement>> spaces;
  std::vector<IntegerMatrix> up;
  std::vector<IntegerMatrix> down;
};

// Throws InputError unless 0 <= k <= dim X and X is valid.
BigradedLayer build_layer(const RegularCWComplex& x, int k);

// The complex (L_X(., k), d_X): L_X(n,k) is C_X(n,k) modulo the image of the
// vertical differential from C_X(n,k+1). spaces[n - k] and maps[n - k] for
// n = k..dim X.
template <class Field>
struct LComplex {
  int k = 0;
  int dim = 0;
  std::vector<QuotientPresentation<Field>> spaces;
  std::vector<SparseMatrix<Field>> maps;

  const QuotientPresentation<Field>& at(int n) const { return spaces.at(static_cast<std::size_t>(n - k)); }
};

template <class Field>
LComplex<Field> build_L(const RegularCWComplex& x, int k, const Field& field);

struct HXTable {
  int dim = 0;
  std::optional<FieldSpec> field;  // nullopt: integral coefficients
  // Keys (n, k) with 0 <= k <= n <= dim.
  std::map<std::pair<int, int>, std::size_t> dims;
  std::map<std::pair<int, int>, IntegralGroup> groups;  // integral case only
  // First representative cocycle of each nonzero entry (field case only).
  std::map<std::pair<int, int>, std::vector<Term>> witnesses;

  bool is_zero(int n, int k) const;
  std::string entry_text(int n, int k) const;
};

HXTable hx_table(const RegularCWComplex& x, const FieldSpec& field);
HXTable hx_table_integral(const RegularCWComplex& x);

// Dimensions of H^n(X; F), n = 0..dim X, from the cellular cochain complex.
std::vector<std::size_t> cellular_cohomology(const RegularCWComplex& x, const FieldSpec& field);
std::vector<IntegralGroup> cellular_cohomology_integral(const RegularCWComplex& x);
// Dimensions of H^n(X, Y_a; F), n = 0..dim X; cochains on the cells whose
// closure contains a.
std::vector<std::size_t> relative_cohomology(const RegularCWComplex& x, const CellId& a, const FieldSpec& field);

// Cohomology of the block C_X(., k)_a (k = dim a) under d_X, n = 0..dim X.
std::vector<std::size_t> lower_block_cohomology(const RegularCWComplex& x, const CellId& a,
                                                const FieldSpec& field);
// Homology of the block C_X(n, .)^b (n = dim b) under the vertical
// differential, indexed by k = 0..n.
std::vector<std::size_t> upper_block_homology(const RegularCWComplex& x, const CellId& b,
                                              const FieldSpec& field);
// Cohomology of the unquotiented row (C_X(., k), d_X), n = 0..dim X.
std::vector<std::size_t> layer_cohomology(const RegularCWComplex& x, int k, const FieldSpec& field);

struct ObstructionReport {
  FieldSpec field = FieldSpec::rationals();
  int dim = 0;
  // Bigraded route: (n, k) with 0 <= k < n < dim and H_X(n,k;F) != 0.
  std::vector<std::pair<int, int>> bigraded;
  std::map<std::pair<int, int>, std::size_t> bigraded_dims;
  // Classical route: n with H^n(X;F) != 0 for 0 < n < dim, and (a, n) with
  // H^n(X, Y_a; F) != 0 for n < dim.
  std::vector<int> absolute;
  std::vector<std::pair<CellId, int>> relative;

  bool koszul() const { return bigraded.empty(); }
};

// Requires X pure and connected by codimension-one faces (HypothesisError).
// Computes both routes and throws InternalError if they disagree on
// emptiness.
ObstructionReport koszul_obstructions(const RegularCWComplex& x, const FieldSpec& field);

}  // namespace koszul
