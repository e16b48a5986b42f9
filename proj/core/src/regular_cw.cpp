#include "koszul/regular_cw.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace koszul {

RegularCWComplex RegularCWComplex::from_cells(std::string name, const std::vector<CellSpec>& cells) {
  std::vector<std::string> problems;
  std::map<CellId, int> dim_of;
  for (const auto& c : cells) {
    if (c.id.empty()) {
      problems.push_back("empty cell id");
    } else if (c.id == kBottomId || c.id == kTopId) {
      problems.push_back("cell id '" + c.id + "' is reserved");
    } else if (c.dim < 0) {
      problems.push_back("cell '" + c.id + "' has negative dimension");
    } else if (!dim_of.emplace(c.id, c.dim).second) {
      problems.push_back("duplicate cell '" + c.id + "'");
    }
  }

  RegularCWComplex x;
  x.name_ = std::move(name);
  for (const auto& [id, d] : dim_of) {
    x.ids_.push_back(id);
    x.dims_.push_back(d);
    x.max_dim_ = std::max(x.max_dim_, d);
  }
  const std::size_t n = x.ids_.size();
  x.faces_.assign(n, {});
  x.cofaces_.assign(n, {});
  for (const auto& c : cells) {
    auto upper = x.find(c.id);
    if (!upper || x.dims_[*upper] != c.dim) continue;  // already reported
    if (c.dim == 0 && !c.boundary.empty()) {
      problems.push_back("0-cell '" + c.id + "' has a nonempty boundary");
      continue;
    }
    for (const auto& [face_id, sign] : c.boundary) {
      auto lower = x.find(face_id);
      if (!lower) {
        problems.push_back("cell '" + c.id + "' names unknown face '" + face_id + "'");
      } else if (x.dims_[*lower] != c.dim - 1) {
        problems.push_back("face '" + face_id + "' of cell '" + c.id + "' has dimension " +
                           std::to_string(x.dims_[*lower]) + ", expected " + std::to_string(c.dim - 1));
      } else if (sign != 1 && sign != -1) {
        problems.push_back("incidence (" + c.id + ", " + face_id + ") is " + std::to_string(sign) +
                           "; only +1 and -1 are allowed");
      } else {
        x.faces_[*upper].push_back({*lower, sign});
        x.cofaces_[*lower].push_back({*upper, sign});
      }
    }
  }
  if (!problems.empty()) {
    std::string msg = "invalid complex '" + x.name_ + "':";
    for (const auto& p : problems) msg += "\n  - " + p;
    throw InputError(msg);
  }
  auto by_cell = [](const Face& a, const Face& b) { return a.cell < b.cell; };
  for (auto& f : x.faces_) std::sort(f.begin(), f.end(), by_cell);
  for (auto& f : x.cofaces_) std::sort(f.begin(), f.end(), by_cell);

  x.by_dim_.assign(static_cast<std::size_t>(std::max(x.max_dim_, 0)) + 1, {});
  for (std::size_t c = 0; c < n; ++c) x.by_dim_[x.dims_[c]].push_back(c);

  x.closure_.assign(n, std::vector<bool>(n, false));
  for (const auto& layer : x.by_dim_) {
    for (std::size_t c : layer) {
      x.closure_[c][c] = true;
      for (const auto& f : x.faces_[c]) {
        for (std::size_t a = 0; a < n; ++a) {
          if (x.closure_[f.cell][a]) x.closure_[c][a] = true;
        }
      }
    }
  }
  return x;
}

std::optional<std::size_t> RegularCWComplex::find(const CellId& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t RegularCWComplex::index(const CellId& id) const {
  auto c = find(id);
  if (!c) throw InputError("unknown cell '" + id + "' in complex '" + name_ + "'");
  return *c;
}

const std::vector<std::size_t>& RegularCWComplex::cells_of_dim(int n) const {
  static const std::vector<std::size_t> empty;
  if (n < 0 || n > max_dim_) return empty;
  return by_dim_[n];
}

int RegularCWComplex::incidence(std::size_t upper, std::size_t lower) const {
  const auto& f = faces_[upper];
  auto it = std::lower_bound(f.begin(), f.end(), lower,
                             [](const Face& a, std::size_t c) { return a.cell < c; });
  return it != f.end() && it->cell == lower ? it->sign : 0;
}

std::vector<CellSpec> RegularCWComplex::to_cells() const {
  std::vector<CellSpec> out;
  for (std::size_t c = 0; c < size(); ++c) {
    CellSpec spec{ids_[c], dims_[c], {}};
    for (const auto& f : faces_[c]) spec.boundary[ids_[f.cell]] = f.sign;
    out.push_back(std::move(spec));
  }
  return out;
}

bool Subcomplex::contains(std::size_t c) const { return std::binary_search(cells.begin(), cells.end(), c); }

std::vector<int> euler_counts(const RegularCWComplex& x, const Subcomplex& s) {
  std::vector<int> counts(static_cast<std::size_t>(std::max(x.dim(), 0)) + 1, 0);
  for (std::size_t c : s.cells) ++counts[x.cell_dim(c)];
  return counts;
}

long euler_characteristic(const RegularCWComplex& x, const Subcomplex& s) {
  long chi = 0;
  for (std::size_t c : s.cells) chi += x.cell_dim(c) % 2 == 0 ? 1 : -1;
  return chi;
}

long euler_characteristic(const RegularCWComplex& x) {
  Subcomplex all;
  all.cells.resize(x.size());
  std::iota(all.cells.begin(), all.cells.end(), 0);
  return euler_characteristic(x, all);
}

ValidationReport validate(const RegularCWComplex& x) {
  ValidationReport report;
  auto add = [&](std::string kind, std::string msg) {
    report.violations.push_back({std::move(kind), std::move(msg)});
  };
  const std::size_t n = x.size();

  for (std::size_t g = 0; g < n; ++g) {
    // Boundary squared: sum_b d(g,b) d(b,a) = 0.
    std::map<std::size_t, long> sums;
    for (const auto& b : x.faces(g)) {
      for (const auto& a : x.faces(b.cell)) sums[a.cell] += long{b.sign} * a.sign;
    }
    for (const auto& [a, s] : sums) {
      if (s != 0) {
        add("boundary-squared", "boundary of boundary of '" + x.id(g) + "' has coefficient " +
                                    std::to_string(s) + " on '" + x.id(a) + "'");
      }
    }
    const int dim = x.cell_dim(g);
    if (dim == 0) continue;
    if (x.faces(g).empty()) {
      add("no-faces", "cell '" + x.id(g) + "' of dimension " + std::to_string(dim) + " has no faces");
      continue;
    }
    // Thinness, including the intervals down to the adjoined minimum.
    if (dim == 1 && x.faces(g).size() != 2) {
      add("thin", "1-cell '" + x.id(g) + "' has " + std::to_string(x.faces(g).size()) +
                      " vertices, expected 2");
    }
    for (std::size_t a : x.cells_of_dim(dim - 2)) {
      if (!x.is_face(a, g)) continue;
      std::size_t middle = 0;
      for (const auto& b : x.faces(g)) middle += x.is_face(a, b.cell) ? 1 : 0;
      if (middle != 2) {
        add("thin", "interval ['" + x.id(a) + "', '" + x.id(g) + "'] has " + std::to_string(middle + 2) +
                        " elements, expected 4");
      }
    }
    // The boundary of a closed n-cell is an (n-1)-sphere.
    long chi = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (c != g && x.is_face(c, g)) chi += x.cell_dim(c) % 2 == 0 ? 1 : -1;
    }
    long expected = 1 + ((dim - 1) % 2 == 0 ? 1 : -1);
    if (chi != expected) {
      add("sphere-boundary", "boundary of '" + x.id(g) + "' has Euler characteristic " +
                                 std::to_string(chi) + ", expected " + std::to_string(expected));
    }
  }
  if (!report.ok()) return report;

  // Diamond connectivity of maximal chains, on every interval of the face
  // poset with its minimum (gaps below 3 are implied by thinness).
  LayeredGraph g = [&] {
    std::vector<VertexSpec> vertices;
    std::vector<std::pair<VertexId, VertexId>> covers;
    for (std::size_t c = 0; c < n; ++c) {
      vertices.push_back({x.id(c), x.cell_dim(c) + 1});
      for (const auto& f : x.faces(c)) covers.emplace_back(x.id(c), x.id(f.cell));
    }
    return LayeredGraph::build(x.name(), vertices, covers);
  }();
  for (std::size_t upper = 0; upper < g.size(); ++upper) {
    for (std::size_t lower = 0; lower < g.size(); ++lower) {
      if (g.rank(upper) - g.rank(lower) < 3 || !g.leq(lower, upper)) continue;
      auto classes = g.diamond_classes(g.id(upper), g.id(lower));
      if (classes.size() != 1) {
        add("diamond", "maximal chains from '" + g.id(upper) + "' to '" + g.id(lower) + "' form " +
                           std::to_string(classes.size()) + " diamond classes");
      }
    }
  }
  return report;
}

void require_valid(const RegularCWComplex& x) {
  auto report = validate(x);
  if (report.ok()) return;
  std::string msg = "complex '" + x.name() + "' failed validation:";
  for (const auto& v : report.violations) msg += "\n  - [" + v.kind + "] " + v.message;
  throw InputError(msg);
}

LayeredGraph face_poset_bar(const RegularCWComplex& x) {
  require_valid(x);
  std::vector<VertexSpec> vertices;
  std::vector<std::pair<VertexId, VertexId>> covers;
  for (std::size_t c = 0; c < x.size(); ++c) {
    vertices.push_back({x.id(c), x.cell_dim(c) + 1});
    for (const auto& f : x.faces(c)) covers.emplace_back(x.id(c), x.id(f.cell));
  }
  return LayeredGraph::build(x.name(), vertices, covers);
}

LayeredGraph face_poset_hat(const RegularCWComplex& x) {
  if (!is_pure(x)) throw HypothesisError("complex '" + x.name() + "' is not pure");
  LayeredGraph bar = face_poset_bar(x);
  return bar.extend_with_top();
}

bool is_pure(const RegularCWComplex& x) {
  const auto& top = x.cells_of_dim(x.dim());
  for (std::size_t c = 0; c < x.size(); ++c) {
    bool covered = std::any_of(top.begin(), top.end(), [&](std::size_t t) { return x.is_face(c, t); });
    if (!covered) return false;
  }
  return true;
}

bool connected_by_codim1(const RegularCWComplex& x) {
  if (!is_pure(x)) throw HypothesisError("complex '" + x.name() + "' is not pure");
  const auto& top = x.cells_of_dim(x.dim());
  if (top.empty()) return false;
  if (x.dim() == 0) return top.size() == 1;
  std::vector<bool> reached(x.size(), false);
  std::vector<std::size_t> stack{top.front()};
  reached[top.front()] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t c = stack.back();
    stack.pop_back();
    for (const auto& f : x.faces(c)) {
      for (const auto& other : x.cofaces(f.cell)) {
        if (reached[other.cell]) continue;
        reached[other.cell] = true;
        ++count;
        stack.push_back(other.cell);
      }
    }
  }
  return count == top.size();
}

Subcomplex closed_cell(const RegularCWComplex& x, const CellId& a) {
  std::size_t cell = x.index(a);
  Subcomplex s;
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (x.is_face(c, cell)) s.cells.push_back(c);
  }
  return s;
}

Subcomplex complement_star(const RegularCWComplex& x, const CellId& a) {
  std::size_t cell = x.index(a);
  Subcomplex s;
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (!x.is_face(cell, c)) s.cells.push_back(c);
  }
  return s;
}

}  // namespace koszul
