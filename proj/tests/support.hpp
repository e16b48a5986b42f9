#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "koszul/catalog.hpp"
#include "koszul/field.hpp"
#include "koszul/layered_graph.hpp"
#include "koszul/regular_cw.hpp"
#include "oracle/oracle.hpp"

namespace testing_support {

inline std::vector<koszul::RegularCWComplex> catalog_complexes() {
  std::vector<koszul::RegularCWComplex> out;
  for (const auto& name : koszul::catalog::names()) out.push_back(koszul::catalog::make(name));
  return out;
}

inline std::vector<koszul::FieldSpec> test_fields() {
  return {koszul::FieldSpec::rationals(), koszul::FieldSpec::prime(2), koszul::FieldSpec::prime(3)};
}

// Characteristic for the oracle: 0 for Q.
inline long oracle_char(const koszul::FieldSpec& f) {
  return f.kind() == koszul::FieldSpec::Kind::rationals ? 0 : static_cast<long>(f.characteristic());
}

inline oracle::Cells to_oracle(const koszul::RegularCWComplex& x) {
  oracle::Cells cells;
  for (const auto& spec : x.to_cells()) {
    cells.dim.push_back(spec.dim);
    std::map<std::size_t, int> b;
    for (const auto& [face, sign] : spec.boundary) b[x.index(face)] = sign;
    cells.boundary.push_back(b);
  }
  return cells;
}

inline oracle::Poset to_oracle(const koszul::LayeredGraph& g) {
  // The oracle wants the minimum at position 0: swap it with vertex 0.
  auto pos = [&](std::size_t v) { return v == g.bottom() ? 0 : v == 0 ? g.bottom() : v; };
  oracle::Poset p;
  p.rank.resize(g.size());
  p.lower.resize(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    p.rank[pos(v)] = g.rank(v);
    for (std::size_t l : g.lower_covers(v)) p.lower[pos(v)].push_back(pos(l));
    std::sort(p.lower[pos(v)].begin(), p.lower[pos(v)].end());
  }
  return p;
}

inline std::string vertex_name(std::size_t v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "v%03zu", v);
  return buf;
}

inline koszul::LayeredGraph to_graph(const oracle::Poset& p, const std::string& name) {
  std::vector<koszul::VertexSpec> vertices;
  std::vector<std::pair<koszul::VertexId, koszul::VertexId>> covers;
  for (std::size_t v = 1; v < p.rank.size(); ++v) {
    vertices.push_back({vertex_name(v), p.rank[v]});
    for (std::size_t l : p.lower[v]) {
      if (l != 0) covers.emplace_back(vertex_name(v), vertex_name(l));
    }
  }
  return koszul::LayeredGraph::build(name, vertices, covers);
}

inline std::vector<koszul::LayeredGraph> random_uniform_graphs(std::size_t count, unsigned seed = 20261016) {
  std::mt19937 rng(seed);
  std::vector<koszul::LayeredGraph> out;
  for (std::size_t i = 0; i < count; ++i) {
    int rank = std::uniform_int_distribution<int>(1, 4)(rng);
    out.push_back(to_graph(oracle::random_uniform_poset(rng, rank), "random" + std::to_string(i)));
  }
  return out;
}

// Face posets of the catalog: bar for all, hat for the pure ones.
inline std::vector<koszul::LayeredGraph> catalog_graphs(bool include_hat = true) {
  std::vector<koszul::LayeredGraph> out;
  for (const auto& x : catalog_complexes()) {
    out.push_back(koszul::face_poset_bar(x));
    if (include_hat && koszul::is_pure(x)) out.push_back(koszul::face_poset_hat(x));
  }
  return out;
}

}  // namespace testing_support
