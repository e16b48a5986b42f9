#include "koszul/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "koszul/catalog.hpp"

namespace koszul::io {
namespace {

using nlohmann::json;

constexpr std::string_view kCatalogPrefix = "catalog:";

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing key '" + key + "'");
  return *it;
}

std::string string_at(const json& v, const std::string& where) {
  if (!v.is_string()) throw InputError(where + ": expected a string");
  return v.get<std::string>();
}

long integer_at(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer");
  return v.get<long>();
}

const json& array_at(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array");
  return v;
}

}  // namespace

RegularCWComplex parse_complex(const std::string& text) {
  json doc = parse_text(text);
  std::string name = string_at(member(doc, "name", "complex"), "name");
  const json& cells = array_at(member(doc, "cells", "complex"), "cells");
  std::vector<CellSpec> specs;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string where = "cells[" + std::to_string(i) + "]";
    const json& c = cells[i];
    CellSpec spec;
    spec.id = string_at(member(c, "id", where), where + ".id");
    long dim = integer_at(member(c, "dim", where), where + ".dim");
    if (dim < 0) throw InputError(where + ".dim: must be >= 0");
    spec.dim = static_cast<int>(dim);
    const json& boundary = member(c, "boundary", where);
    if (!boundary.is_object()) throw InputError(where + ".boundary: expected an object");
    for (const auto& [face, sign] : boundary.items()) {
      const std::string at = where + ".boundary." + face;
      long s = integer_at(sign, at);
      if (s != 1 && s != -1) throw InputError(at + ": incidence " + std::to_string(s) + " (only +1 and -1 allowed)");
      spec.boundary[face] = static_cast<int>(s);
    }
    specs.push_back(std::move(spec));
  }
  return RegularCWComplex::from_cells(std::move(name), specs);
}

LayeredGraph parse_graph(const std::string& text) {
  json doc = parse_text(text);
  std::string name = string_at(member(doc, "name", "graph"), "name");
  const json& vertices = array_at(member(doc, "vertices", "graph"), "vertices");
  std::vector<VertexSpec> specs;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    VertexSpec v;
    v.id = string_at(member(vertices[i], "id", where), where + ".id");
    long rank = integer_at(member(vertices[i], "rank", where), where + ".rank");
    if (rank < 1) throw InputError(where + ".rank: must be >= 1");
    v.rank = static_cast<int>(rank);
    specs.push_back(std::move(v));
  }
  const json& covers = array_at(member(doc, "covers", "graph"), "covers");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const std::string where = "covers[" + std::to_string(i) + "]";
    const json& c = covers[i];
    if (!c.is_array() || c.size() != 2) throw InputError(where + ": expected [upperId, lowerId]");
    pairs.emplace_back(string_at(c[0], where + "[0]"), string_at(c[1], where + "[1]"));
  }
  return LayeredGraph::build(std::move(name), specs, pairs);
}

std::string complex_to_json(const RegularCWComplex& x) {
  json cells = json::array();
  for (const auto& spec : x.to_cells()) {
    json boundary = json::object();
    for (const auto& [face, sign] : spec.boundary) boundary[face] = sign;
    cells.push_back({{"id", spec.id}, {"dim", spec.dim}, {"boundary", boundary}});
  }
  json doc = {{"name", x.name()}, {"cells", cells}};
  return doc.dump(2) + "\n";
}

std::string graph_to_json(const LayeredGraph& g) {
  json vertices = json::array();
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (v == g.bottom()) continue;
    vertices.push_back({{"id", g.id(v)}, {"rank", g.rank(v)}});
  }
  json covers = json::array();
  for (const auto& [upper, lower] : g.covers_without_bottom()) covers.push_back({upper, lower});
  json doc = {{"name", g.name()}, {"vertices", vertices}, {"covers", covers}};
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RegularCWComplex load_complex(const std::string& source) {
  if (source.starts_with(kCatalogPrefix)) return catalog::make(source.substr(kCatalogPrefix.size()));
  return parse_complex(read_file(source));
}

LayeredGraph load_graph(const std::string& source) {
  if (source.starts_with(kCatalogPrefix)) {
    throw InputError("graph inputs must be files; use 'poset' to derive a graph from a catalog complex");
  }
  return parse_graph(read_file(source));
}

}  // namespace koszul::io
