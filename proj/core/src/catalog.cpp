#include "koszul/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace koszul::catalog {
namespace {

std::string cell_name(const std::vector<int>& vertices) {
  std::string s;
  for (int v : vertices) s += static_cast<char>('0' + v);
  return s;
}

// Parses "simplex3" / "simplex(3)" style names; -1 if `name` has another stem.
int parse_size(const std::string& name, const std::string& stem) {
  if (name.rfind(stem, 0) != 0) return -1;
  std::string rest = name.substr(stem.size());
  if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
  int n = -1;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty()) return -1;
  return n;
}

std::vector<std::vector<int>> subsets(int n, int size) {
  std::vector<std::vector<int>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + size, true);
  do {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (pick[i]) s.push_back(i);
    }
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Oriented simplex with explicitly named codimension-one faces; the face
// omitting vertex i gets sign (-1)^i.
struct NamedSimplex {
  std::string id;
  std::vector<int> vertices;
  std::vector<std::string> faces;  // ids, each a simplex on a subset of vertices
};

RegularCWComplex example_singular() {
  // Two tetrahedra on D1..D4 sharing the face B4 = D2D3D4 and the edge
  // C4 = D1D3; the second tetrahedron has its own copies C7 = D1D2,
  // C8 = D1D4 and faces B5, B6, B7. Vertex order D1 < D2 < D3 < D4 orients
  // every cell.
  std::vector<NamedSimplex> cells = {
      {"D1", {1}, {}},
      {"D2", {2}, {}},
      {"D3", {3}, {}},
      {"D4", {4}, {}},
      {"C1", {1, 2}, {"D1", "D2"}},
      {"C2", {1, 4}, {"D1", "D4"}},
      {"C3", {2, 3}, {"D2", "D3"}},
      {"C4", {1, 3}, {"D1", "D3"}},
      {"C5", {2, 4}, {"D2", "D4"}},
      {"C6", {3, 4}, {"D3", "D4"}},
      {"C7", {1, 2}, {"D1", "D2"}},
      {"C8", {1, 4}, {"D1", "D4"}},
      {"B1", {1, 2, 4}, {"C1", "C2", "C5"}},
      {"B2", {1, 2, 3}, {"C1", "C4", "C3"}},
      {"B3", {1, 3, 4}, {"C4", "C2", "C6"}},
      {"B4", {2, 3, 4}, {"C3", "C5", "C6"}},
      {"B5", {1, 2, 3}, {"C7", "C4", "C3"}},
      {"B6", {1, 3, 4}, {"C4", "C8", "C6"}},
      {"B7", {1, 2, 4}, {"C7", "C8", "C5"}},
      {"A1", {1, 2, 3, 4}, {"B1", "B2", "B3", "B4"}},
      {"A2", {1, 2, 3, 4}, {"B4", "B5", "B6", "B7"}},
  };
  std::map<std::string, std::vector<int>> vertices_of;
  for (const auto& c : cells) vertices_of[c.id] = c.vertices;
  std::vector<CellSpec> specs;
  for (const auto& c : cells) {
    CellSpec spec{c.id, static_cast<int>(c.vertices.size()) - 1, {}};
    for (const auto& f : c.faces) {
      const auto& fv = vertices_of.at(f);
      // Position of the omitted vertex.
      std::size_t i = 0;
      while (i < fv.size() && fv[i] == c.vertices[i]) ++i;
      spec.boundary[f] = i % 2 == 0 ? 1 : -1;
    }
    specs.push_back(std::move(spec));
  }
  return RegularCWComplex::from_cells("example_singular", specs);
}

}  // namespace

RegularCWComplex simplicial(const std::string& name, const std::vector<std::vector<int>>& facets) {
  std::set<std::vector<int>> simplices;
  for (auto facet : facets) {
    std::sort(facet.begin(), facet.end());
    for (int size = 1; size <= static_cast<int>(facet.size()); ++size) {
      for (const auto& pick : subsets(static_cast<int>(facet.size()), size)) {
        std::vector<int> s;
        for (int i : pick) s.push_back(facet[i]);
        simplices.insert(std::move(s));
      }
    }
  }
  std::vector<CellSpec> specs;
  for (const auto& s : simplices) {
    if (s.front() < 0 || s.back() > 9) throw InputError("simplicial vertex labels must be in 0..9");
    CellSpec spec{cell_name(s), static_cast<int>(s.size()) - 1, {}};
    if (s.size() > 1) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<int> face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        spec.boundary[cell_name(face)] = i % 2 == 0 ? 1 : -1;
      }
    }
    specs.push_back(std::move(spec));
  }
  return RegularCWComplex::from_cells(name, specs);
}

std::vector<std::string> names() {
  return {"point",    "simplex1", "simplex2", "simplex3",         "simplex4",
          "simplex5", "sphere0",  "sphere1",  "sphere2",          "sphere3",
          "sphere4",  "rp2_six",  "example_singular", "three_triangles_shared_edge"};
}

RegularCWComplex make(const std::string& name) {
  if (name == "point" || name == "simplex0") return simplicial(name, {{0}});
  if (int n = parse_size(name, "simplex"); n >= 0) {
    if (n > 5) throw InputError("simplex size " + std::to_string(n) + " unsupported (max 5)");
    std::vector<int> facet(n + 1);
    for (int i = 0; i <= n; ++i) facet[i] = i;
    return simplicial("simplex" + std::to_string(n), {facet});
  }
  if (int n = parse_size(name, "sphere"); n >= 0) {
    if (n > 4) throw InputError("sphere size " + std::to_string(n) + " unsupported (max 4)");
    return simplicial("sphere" + std::to_string(n), subsets(n + 2, n + 1));
  }
  if (name == "rp2_six") {
    // Antipodal quotient of the icosahedron.
    return simplicial(name, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                             {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
  }
  if (name == "example_singular") return example_singular();
  if (name == "three_triangles_shared_edge") {
    return simplicial(name, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
  }
  throw InputError("unknown catalog complex '" + name + "'");
}

}  // namespace koszul::catalog
