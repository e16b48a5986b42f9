#include "koszul/cw_cohomology.hpp"

#include <algorithm>
#include <tuple>

namespace koszul {
namespace {

using CellPair = std::pair<std::size_t, std::size_t>;  // (upper, lower)

// Pairs of an n-cell with one of its k-faces, sorted (cell indices follow id
// order, so this is (upper id, lower id) order).
std::vector<CellPair> cell_pairs(const RegularCWComplex& x, int n, int k) {
  std::vector<CellPair> out;
  if (k < 0 || k > n) return out;
  for (std::size_t b : x.cells_of_dim(n)) {
    for (std::size_t a : x.cells_of_dim(k)) {
      if (x.is_face(a, b)) out.emplace_back(b, a);
    }
  }
  return out;
}

std::size_t position(const std::vector<CellPair>& pairs, const CellPair& p) {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
  if (it == pairs.end() || *it != p) throw InternalError("pair basis lookup failed");
  return static_cast<std::size_t>(it - pairs.begin());
}

std::vector<PairBasisElement> named(const RegularCWComplex& x, const std::vector<CellPair>& pairs) {
  std::vector<PairBasisElement> out;
  out.reserve(pairs.size());
  for (const auto& [b, a] : pairs) out.push_back({x.id(b), x.id(a)});
  return out;
}

std::vector<std::string> labels_of(const std::vector<PairBasisElement>& basis) {
  std::vector<std::string> out;
  out.reserve(basis.size());
  for (const auto& e : basis) out.push_back(e.label());
  return out;
}

// Submatrix on the given column and row positions (both ascending).
template <class Field>
SparseMatrix<Field> restrict_matrix(const SparseMatrix<Field>& m, const std::vector<std::size_t>& rows,
                                    const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> col_index(m.cols(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) col_index[cols[j]] = j;
  SparseMatrix<Field> out(m.field(), rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseVector<Field> row;
    for (const auto& [c, v] : m.row(rows[i])) {
      if (col_index[c] < cols.size()) row.emplace_back(col_index[c], v);
    }
    out.set_row(i, std::move(row));
  }
  return out;
}

// Cellular coboundaries on the cells selected by `keep`, which must be closed
// under taking cofaces. maps[n] : C^n -> C^{n+1}.
template <class Keep>
std::pair<std::vector<std::size_t>, std::vector<IntegerMatrix>> cochain_complex(const RegularCWComplex& x,
                                                                                 Keep keep) {
  const int d = x.dim();
  std::vector<std::vector<std::size_t>> cells(static_cast<std::size_t>(std::max(d + 1, 0)));
  for (int n = 0; n <= d; ++n) {
    for (std::size_t c : x.cells_of_dim(n)) {
      if (keep(c)) cells[n].push_back(c);
    }
  }
  std::vector<std::size_t> dims;
  for (const auto& c : cells) dims.push_back(c.size());
  std::vector<IntegerMatrix> maps;
  for (int n = 0; n < d; ++n) {
    std::vector<std::tuple<std::size_t, std::size_t, mpz_class>> entries;
    for (std::size_t j = 0; j < cells[n].size(); ++j) {
      for (const auto& g : x.cofaces(cells[n][j])) {
        auto it = std::lower_bound(cells[n + 1].begin(), cells[n + 1].end(), g.cell);
        if (it == cells[n + 1].end() || *it != g.cell) throw InternalError("cochain support not coface-closed");
        entries.emplace_back(static_cast<std::size_t>(it - cells[n + 1].begin()), j, mpz_class(g.sign));
      }
    }
    maps.push_back(IntegerMatrix::from_triplets(IntegerRing{}, dims[n + 1], dims[n], std::move(entries)));
  }
  return {dims, maps};
}

template <class Field>
std::vector<std::size_t> cohomology_dims(const std::vector<std::size_t>& dims, const std::vector<IntegerMatrix>& maps,
                                         const Field& field) {
  std::vector<SparseMatrix<Field>> reduced;
  for (const auto& m : maps) reduced.push_back(reduce_coefficients(m, field));
  std::vector<std::size_t> out;
  for (const auto& h : cochain_cohomology(dims, reduced, field)) out.push_back(h.dim);
  return out;
}

std::vector<std::size_t> cohomology_dims(const std::vector<std::size_t>& dims, const std::vector<IntegerMatrix>& maps,
                                         const FieldSpec& spec) {
  return visit_field(spec, [&](const auto& field) { return cohomology_dims(dims, maps, field); });
}

void check_degree(const RegularCWComplex& x, int k) {
  if (k < 0 || k > x.dim()) {
    throw InputError("degree k = " + std::to_string(k) + " out of range 0.." + std::to_string(x.dim()) +
                     " for complex '" + x.name() + "'");
  }
}

BigradedLayer make_layer(const RegularCWComplex& x, int k) {
  const int d = x.dim();
  BigradedLayer layer;
  layer.k = k;
  layer.dim = d;
  std::vector<std::vector<CellPair>> here(d + 1);
  std::vector<std::vector<CellPair>> below(d + 1);
  for (int n = 0; n <= d; ++n) {
    here[n] = cell_pairs(x, n, k);
    below[n] = cell_pairs(x, n, k - 1);
    layer.spaces.push_back(named(x, here[n]));
  }
  for (int n = 0; n < d; ++n) {
    std::vector<std::tuple<std::size_t, std::size_t, mpz_class>> entries;
    for (std::size_t j = 0; j < here[n].size(); ++j) {
      const auto& [b, a] = here[n][j];
      for (const auto& g : x.cofaces(b)) {
        entries.emplace_back(position(here[n + 1], {g.cell, a}), j, mpz_class(g.sign));
      }
    }
    layer.up.push_back(IntegerMatrix::from_triplets(IntegerRing{}, here[n + 1].size(), here[n].size(),
                                                    std::move(entries)));
  }
  for (int n = 0; n <= d; ++n) {
    std::vector<std::tuple<std::size_t, std::size_t, mpz_class>> entries;
    for (std::size_t j = 0; j < here[n].size(); ++j) {
      const auto& [b, a] = here[n][j];
      for (const auto& c : x.faces(a)) {
        entries.emplace_back(position(below[n], {b, c.cell}), j, mpz_class(c.sign));
      }
    }
    layer.down.push_back(
        IntegerMatrix::from_triplets(IntegerRing{}, below[n].size(), here[n].size(), std::move(entries)));
  }
  return layer;
}

}  // namespace

BigradedLayer build_layer(const RegularCWComplex& x, int k) {
  require_valid(x);
  check_degree(x, k);
  return make_layer(x, k);
}

template <class Field>
LComplex<Field> build_L(const RegularCWComplex& x, int k, const Field& field) {
  require_valid(x);
  check_degree(x, k);
  const int d = x.dim();
  BigradedLayer layer = make_layer(x, k);
  std::optional<BigradedLayer> next;
  if (k < d) next = make_layer(x, k + 1);

  LComplex<Field> out;
  out.k = k;
  out.dim = d;
  for (int n = k; n <= d; ++n) {
    auto labels = labels_of(layer.spaces[n]);
    std::size_t ambient = labels.size();
    SparseMatrix<Field> relations(field, 0, ambient);
    if (next && n >= k + 1) relations = reduce_coefficients(next->down[n], field).transpose();
    out.spaces.emplace_back(std::move(labels), relations);
  }
  for (int n = k; n < d; ++n) {
    out.maps.push_back(induced_map(reduce_coefficients(layer.up[n], field), out.spaces[n - k], out.spaces[n + 1 - k]));
  }
  return out;
}

template LComplex<RationalField> build_L(const RegularCWComplex&, int, const RationalField&);
template LComplex<PrimeField> build_L(const RegularCWComplex&, int, const PrimeField&);

bool HXTable::is_zero(int n, int k) const {
  if (!field) return groups.at({n, k}).is_zero();
  return dims.at({n, k}) == 0;
}

std::string HXTable::entry_text(int n, int k) const {
  if (!field) return groups.at({n, k}).to_string();
  return std::to_string(dims.at({n, k}));
}

HXTable hx_table(const RegularCWComplex& x, const FieldSpec& spec) {
  require_valid(x);
  HXTable table;
  table.dim = x.dim();
  table.field = spec;
  visit_field(spec, [&](const auto& field) {
    for (int k = 0; k <= x.dim(); ++k) {
      auto complex = build_L(x, k, field);
      std::vector<std::size_t> dims;
      for (const auto& s : complex.spaces) dims.push_back(s.dim());
      auto groups = cochain_cohomology(dims, complex.maps, field);
      for (int n = k; n <= x.dim(); ++n) {
        const auto& h = groups[n - k];
        table.dims[{n, k}] = h.dim;
        if (h.dim > 0) {
          const auto& space = complex.at(n);
          table.witnesses[{n, k}] =
              format_vector(field, space.lift(h.representatives.front()), space.ambient_labels());
        }
      }
    }
  });
  return table;
}

HXTable hx_table_integral(const RegularCWComplex& x) {
  require_valid(x);
  HXTable table;
  table.dim = x.dim();
  const int d = x.dim();
  for (int k = 0; k <= d; ++k) {
    BigradedLayer layer = make_layer(x, k);
    std::optional<BigradedLayer> next;
    if (k < d) next = make_layer(x, k + 1);
    IntegralQuotientComplex complex;
    for (int n = k; n <= d; ++n) {
      std::size_t ambient = layer.spaces[n].size();
      complex.ambient_dims.push_back(ambient);
      if (next && n >= k + 1) {
        complex.relations.push_back(next->down[n].transpose());
      } else {
        complex.relations.emplace_back(IntegerRing{}, 0, ambient);
      }
      if (n < d) complex.maps.push_back(layer.up[n]);
    }
    auto groups = integral_cohomology(complex);
    for (int n = k; n <= d; ++n) {
      table.groups[{n, k}] = groups[n - k];
      table.dims[{n, k}] = groups[n - k].free_rank;
    }
  }
  return table;
}

std::vector<std::size_t> cellular_cohomology(const RegularCWComplex& x, const FieldSpec& field) {
  auto [dims, maps] = cochain_complex(x, [](std::size_t) { return true; });
  return cohomology_dims(dims, maps, field);
}

std::vector<IntegralGroup> cellular_cohomology_integral(const RegularCWComplex& x) {
  auto [dims, maps] = cochain_complex(x, [](std::size_t) { return true; });
  return integral_cohomology(dims, maps);
}

std::vector<std::size_t> relative_cohomology(const RegularCWComplex& x, const CellId& a, const FieldSpec& field) {
  std::size_t cell = x.index(a);
  auto [dims, maps] = cochain_complex(x, [&](std::size_t c) { return x.is_face(cell, c); });
  return cohomology_dims(dims, maps, field);
}

std::vector<std::size_t> lower_block_cohomology(const RegularCWComplex& x, const CellId& a, const FieldSpec& field) {
  require_valid(x);
  const std::size_t cell = x.index(a);
  const int k = x.cell_dim(cell);
  BigradedLayer layer = make_layer(x, k);
  std::vector<std::vector<std::size_t>> block(layer.spaces.size());
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n < layer.spaces.size(); ++n) {
    for (std::size_t j = 0; j < layer.spaces[n].size(); ++j) {
      if (layer.spaces[n][j].lower == a) block[n].push_back(j);
    }
    dims.push_back(block[n].size());
  }
  std::vector<IntegerMatrix> maps;
  for (std::size_t n = 0; n < layer.up.size(); ++n) {
    maps.push_back(restrict_matrix(layer.up[n], block[n + 1], block[n]));
  }
  return cohomology_dims(dims, maps, field);
}

std::vector<std::size_t> upper_block_homology(const RegularCWComplex& x, const CellId& b, const FieldSpec& field) {
  require_valid(x);
  const std::size_t cell = x.index(b);
  const int n = x.cell_dim(cell);
  // block[k]: positions of pairs (b, .) in C_X(n, k).
  std::vector<std::vector<std::size_t>> block(n + 1);
  std::vector<IntegerMatrix> downs(n + 1);
  for (int k = 0; k <= n; ++k) {
    BigradedLayer layer = make_layer(x, k);
    const auto& space = layer.spaces[n];
    for (std::size_t j = 0; j < space.size(); ++j) {
      if (space[j].upper == b) block[k].push_back(j);
    }
    downs[k] = layer.down[n];
  }
  // Chain complex C_n -> ... -> C_0 read as a cochain complex in reversed
  // degree: position i holds k = n - i.
  std::vector<std::size_t> dims;
  for (int k = n; k >= 0; --k) dims.push_back(block[k].size());
  std::vector<IntegerMatrix> maps;
  for (int k = n; k >= 1; --k) maps.push_back(restrict_matrix(downs[k], block[k - 1], block[k]));
  auto reversed = cohomology_dims(dims, maps, field);
  std::reverse(reversed.begin(), reversed.end());
  return reversed;
}

std::vector<std::size_t> layer_cohomology(const RegularCWComplex& x, int k, const FieldSpec& field) {
  BigradedLayer layer = build_layer(x, k);
  std::vector<std::size_t> dims;
  for (const auto& s : layer.spaces) dims.push_back(s.size());
  return cohomology_dims(dims, layer.up, field);
}

ObstructionReport koszul_obstructions(const RegularCWComplex& x, const FieldSpec& field) {
  require_valid(x);
  if (!is_pure(x)) throw HypothesisError("complex '" + x.name() + "' is not pure");
  if (!connected_by_codim1(x)) {
    throw HypothesisError("complex '" + x.name() + "' is not connected through codimension-one faces");
  }
  ObstructionReport report;
  report.field = field;
  report.dim = x.dim();
  const int d = x.dim();

  HXTable table = hx_table(x, field);
  for (int n = 1; n < d; ++n) {
    for (int k = 0; k < n; ++k) {
      std::size_t dim = table.dims.at({n, k});
      report.bigraded_dims[{n, k}] = dim;
      if (dim != 0) report.bigraded.emplace_back(n, k);
    }
  }

  auto absolute = cellular_cohomology(x, field);
  for (int n = 1; n < d; ++n) {
    if (absolute[n] != 0) report.absolute.push_back(n);
  }
  for (std::size_t c = 0; c < x.size(); ++c) {
    auto relative = relative_cohomology(x, x.id(c), field);
    for (int n = 0; n < d; ++n) {
      if (relative[n] != 0) report.relative.emplace_back(x.id(c), n);
    }
  }
  bool classical_empty = report.absolute.empty() && report.relative.empty();
  if (report.bigraded.empty() != classical_empty) {
    throw InternalError("obstruction routes disagree for complex '" + x.name() + "' over " + field.name());
  }
  return report;
}

}  // namespace koszul
