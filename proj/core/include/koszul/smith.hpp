#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "koszul/sparse_matrix.hpp"

namespace koszul {

using IntegerMatrix = SparseMatrix<IntegerRing>;
using DenseIntegerMatrix = std::vector<std::vector<mpz_class>>;

struct SmithForm {
  // d_1 | d_2 | ... | d_r, all positive.
  std::vector<mpz_class> invariant_factors;
  std::size_t rank() const { return invariant_factors.size(); }
};

// U * M * V = diag(d_1, ..., d_r, 0, ...). Only the left transform is
// tracked (with its inverse); that is all the cokernel computations need.
struct SmithDecomposition {
  SmithForm form;
  DenseIntegerMatrix left;
  DenseIntegerMatrix left_inverse;
};

SmithForm smith_normal_form(const IntegerMatrix& m);
SmithDecomposition smith_decomposition(const IntegerMatrix& m);

// A finitely generated abelian group Z^free_rank + sum Z/t_i.
struct IntegralGroup {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  // "0", "Z", "Z^2 + Z/2", ...
  std::string to_string() const;
  friend bool operator==(const IntegralGroup&, const IntegralGroup&) = default;
};

// Cochain complex of quotient modules L^i = Z^{a_i} / rowspan(relations[i])
// with maps[i] : Z^{a_i} -> Z^{a_{i+1}} in ambient coordinates.
struct IntegralQuotientComplex {
  std::vector<std::size_t> ambient_dims;
  std::vector<IntegerMatrix> relations;
  std::vector<IntegerMatrix> maps;
};

// Throws InternalError if d^2 != 0 or a map does not preserve relations, and
// Error if a quotient module has torsion (only free quotients are supported).
std::vector<IntegralGroup> integral_cohomology(const IntegralQuotientComplex& complex);

// Plain free cochain complex: dims[i] = rank C^i, maps[i] : C^i -> C^{i+1}.
std::vector<IntegralGroup> integral_cohomology(const std::vector<std::size_t>& dims,
                                               const std::vector<IntegerMatrix>& maps);

}  // namespace koszul
