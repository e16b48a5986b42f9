#include "koszul_cli/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "koszul/catalog.hpp"
#include "koszul/cw_cohomology.hpp"
#include "koszul/dual_algebra.hpp"
#include "koszul/io.hpp"

#ifndef KOSZUL_VERSION
#define KOSZUL_VERSION "0.0.0"
#endif

namespace koszul::cli {
namespace {

using nlohmann::json;

struct Report {
  json data;
  std::string text;
  int exit_code = kExitOk;
};

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

struct Input {
  std::string source;
  RegularCWComplex complex;
  std::string hash;  // of the canonical JSON form
};

Input load_input(const std::string& source) {
  RegularCWComplex x = io::load_complex(source);
  std::string hash = fnv1a64(io::complex_to_json(x));
  return {source, std::move(x), std::move(hash)};
}

json provenance(const std::string& source, const std::string& hash, const std::optional<std::string>& field,
                const std::optional<std::string>& poset) {
  json p = {{"input", source}, {"input_hash", hash}, {"tool_version", tool_version()}};
  p["field"] = field ? json(*field) : json(nullptr);
  p["poset"] = poset ? json(*poset) : json(nullptr);
  return p;
}

LayeredGraph poset_of(const RegularCWComplex& x, const std::string& poset) {
  return poset == "hat" ? face_poset_hat(x) : face_poset_bar(x);
}

// Aligned plain-text table; the first row is the header.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) line += "  ";
      line += std::string(width[i] - r[i].size(), ' ') + r[i];
    }
    os << line << '\n';
  }
  return os.str();
}

json terms_json(const std::vector<Term>& terms, const char* key) {
  json out = json::array();
  for (const auto& t : terms) out.push_back({{key, t.label}, {"coefficient", t.coefficient}});
  return out;
}

std::string terms_text(const std::vector<Term>& terms) {
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += " + ";
    s += "(" + terms[i].coefficient + ") " + terms[i].label;
  }
  return s;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

Report cmd_validate(const std::string& source) {
  Input in = load_input(source);
  const auto& x = in.complex;
  ValidationReport report = validate(x);
  Report r;
  json violations = json::array();
  for (const auto& v : report.violations) violations.push_back({{"kind", v.kind}, {"message", v.message}});
  std::vector<std::size_t> counts;
  for (int n = 0; n <= x.dim(); ++n) counts.push_back(x.cells_of_dim(n).size());
  r.data = {{"command", "validate"},
            {"complex", x.name()},
            {"cells_by_dim", counts},
            {"ok", report.ok()},
            {"violations", violations}};
  if (report.ok()) {
    r.data["pure"] = is_pure(x);
    r.data["connected_by_codim1"] = is_pure(x) && connected_by_codim1(x);
  }
  r.data["provenance"] = provenance(source, in.hash, std::nullopt, std::nullopt);
  std::ostringstream os;
  os << "complex: " << x.name() << "\ncells by dimension: " << join(counts) << '\n';
  if (report.ok()) {
    os << "valid\npure: " << (r.data["pure"].get<bool>() ? "yes" : "no")
       << "\nconnected by codimension-one faces: " << (r.data["connected_by_codim1"].get<bool>() ? "yes" : "no")
       << '\n';
  } else {
    os << "INVALID\n";
    for (const auto& v : report.violations) os << "  [" << v.kind << "] " << v.message << '\n';
    r.exit_code = kExitInput;
  }
  r.text = os.str();
  return r;
}

Report cmd_poset(const std::string& source, bool hat) {
  Input in = load_input(source);
  LayeredGraph g = poset_of(in.complex, hat ? "hat" : "bar");
  Report r;
  UniformityReport uniformity = g.uniformity();
  ThinnessReport thinness = g.thinness();
  r.data = {{"command", "poset"},
            {"graph", json::parse(io::graph_to_json(g))},
            {"uniform", uniformity.uniform},
            {"thin", thinness.thin}};
  if (uniformity.vertex) r.data["nonuniform_vertex"] = *uniformity.vertex;
  r.data["provenance"] = provenance(source, in.hash, std::nullopt, hat ? "hat" : "bar");
  std::ostringstream os;
  os << "poset of " << in.complex.name() << " (" << (hat ? "hat" : "bar") << ")\n";
  std::vector<std::vector<std::string>> rows{{"rank", "vertex", "lower covers"}};
  for (int rank = 0; rank <= g.max_rank(); ++rank) {
    for (std::size_t v : g.vertices_of_rank(rank)) {
      std::string covers;
      for (std::size_t c : g.lower_covers(v)) covers += (covers.empty() ? "" : " ") + g.id(c);
      rows.push_back({std::to_string(rank), g.id(v), covers.empty() ? "-" : covers});
    }
  }
  os << table(rows) << "uniform: " << (uniformity.uniform ? "yes" : "no") << "\nthin: " << (thinness.thin ? "yes" : "no")
     << '\n';
  r.text = os.str();
  return r;
}

Report cmd_cohomology(const std::string& source, const FieldSpec& field) {
  Input in = load_input(source);
  require_valid(in.complex);
  auto dims = cellular_cohomology(in.complex, field);
  Report r;
  r.data = {{"command", "cohomology"}, {"complex", in.complex.name()}, {"dims", dims}};
  r.data["provenance"] = provenance(source, in.hash, field.name(), std::nullopt);
  std::vector<std::vector<std::string>> rows{{"n", "dim H^n"}};
  for (std::size_t n = 0; n < dims.size(); ++n) rows.push_back({std::to_string(n), std::to_string(dims[n])});
  r.text = "cellular cohomology of " + in.complex.name() + " over " + field.name() + "\n" + table(rows);
  return r;
}

Report cmd_relative(const std::string& source, const std::string& cell, const FieldSpec& field) {
  Input in = load_input(source);
  require_valid(in.complex);
  auto dims = relative_cohomology(in.complex, cell, field);
  Report r;
  r.data = {{"command", "relative"}, {"complex", in.complex.name()}, {"cell", cell}, {"dims", dims}};
  r.data["provenance"] = provenance(source, in.hash, field.name(), std::nullopt);
  std::vector<std::vector<std::string>> rows{{"n", "dim H^n(X,Y)"}};
  for (std::size_t n = 0; n < dims.size(); ++n) rows.push_back({std::to_string(n), std::to_string(dims[n])});
  r.text = "relative cohomology of " + in.complex.name() + " modulo Y_" + cell + " over " + field.name() + "\n" +
           table(rows);
  return r;
}

Report cmd_hx(const std::string& source, const std::optional<FieldSpec>& field) {
  Input in = load_input(source);
  HXTable t = field ? hx_table(in.complex, *field) : hx_table_integral(in.complex);
  const std::string coefficients = field ? field->name() : "Z";
  Report r;
  json entries = json::array();
  for (const auto& [nk, dim] : t.dims) {
    json e = {{"n", nk.first}, {"k", nk.second}};
    if (field) {
      e["dim"] = dim;
      if (auto it = t.witnesses.find(nk); it != t.witnesses.end()) {
        e["representative"] = terms_json(it->second, "pair");
      }
    } else {
      const auto& g = t.groups.at(nk);
      json torsion = json::array();
      for (const auto& q : g.torsion) torsion.push_back(q.get_str());
      e["free_rank"] = g.free_rank;
      e["torsion"] = torsion;
      e["group"] = g.to_string();
    }
    entries.push_back(std::move(e));
  }
  r.data = {{"command", "hx"}, {"complex", in.complex.name()}, {"coefficients", coefficients}, {"entries", entries}};
  r.data["provenance"] = provenance(source, in.hash, coefficients, std::nullopt);
  std::vector<std::vector<std::string>> rows{{"n\\k"}};
  for (int k = 0; k <= t.dim; ++k) rows[0].push_back(std::to_string(k));
  for (int n = 0; n <= t.dim; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (int k = 0; k <= t.dim; ++k) row.push_back(k > n ? "." : t.entry_text(n, k));
    rows.push_back(std::move(row));
  }
  r.text = "H_X(n,k) of " + in.complex.name() + " over " + coefficients + "\n" + table(rows);
  return r;
}

json verdict_json(const KoszulVerdict& v) {
  json log = json::array();
  for (const auto& c : v.log) {
    json nonzero = json::array();
    for (const auto& [n, k, dim] : c.nonzero) nonzero.push_back({{"n", n}, {"k", k}, {"dim", dim}});
    log.push_back({{"vertex", c.vertex}, {"rank", c.rank}, {"passed", c.passed}, {"nonzero", nonzero}});
  }
  json out = {{"koszul", v.koszul}, {"checked_vertices", log}};
  if (v.witness) {
    out["witness"] = {{"vertex", v.witness->vertex},
                      {"n", v.witness->n},
                      {"k", v.witness->k},
                      {"dim", v.witness->dim},
                      {"representative", terms_json(v.witness->representative, "word")}};
  } else {
    out["witness"] = nullptr;
  }
  if (v.whole_graph_koszul) {
    out["whole_graph_criterion"] = {{"koszul", *v.whole_graph_koszul},
                                    {"agrees", *v.whole_graph_koszul == v.koszul}};
  }
  return out;
}

std::string verdict_text(const KoszulVerdict& v) {
  std::ostringstream os;
  os << "verdict: " << (v.koszul ? "Koszul" : "NOT Koszul") << '\n';
  if (v.witness) {
    os << "witness: vertex " << v.witness->vertex << ", (n,k) = (" << v.witness->n << "," << v.witness->k
       << "), dim H^n(R(.,k)) = " << v.witness->dim << '\n'
       << "  representative: " << terms_text(v.witness->representative) << '\n';
  }
  std::size_t passed = std::count_if(v.log.begin(), v.log.end(), [](const VertexCheck& c) { return c.passed; });
  os << "checked vertices: " << v.log.size() << " (" << passed << " passed)\n";
  if (v.whole_graph_koszul) {
    os << "whole-graph criterion: " << (*v.whole_graph_koszul ? "Koszul" : "NOT Koszul")
       << (*v.whole_graph_koszul == v.koszul ? " (agrees)" : " (DISAGREES)") << '\n';
  }
  return os.str();
}

Report cmd_koszul(const std::string& source, const std::string& poset, const FieldSpec& field, bool exit_status,
                  bool whole_graph) {
  Input in = load_input(source);
  LayeredGraph g = poset_of(in.complex, poset);
  KoszulVerdict v = koszul_decide(g, field, {whole_graph});
  Report r;
  r.data = {{"command", "koszul"}, {"complex", in.complex.name()}, {"verdict", verdict_json(v)}};
  std::string text = "complex: " + in.complex.name() + "  poset: " + poset + "  field: " + field.name() + "\n" +
                     verdict_text(v);
  if (poset == "hat") {
    ObstructionReport o = koszul_obstructions(in.complex, field);
    if (o.koszul() != v.koszul) {
      throw InternalError("algebraic verdict and bigraded obstructions disagree for '" + in.complex.name() + "'");
    }
    json bigraded = json::array();
    for (const auto& [n, k] : o.bigraded) {
      bigraded.push_back({{"n", n}, {"k", k}, {"dim", o.bigraded_dims.at({n, k})}});
    }
    json relative = json::array();
    for (const auto& [cell, n] : o.relative) relative.push_back({{"cell", cell}, {"n", n}});
    r.data["obstructions"] = {{"bigraded", bigraded}, {"absolute", o.absolute}, {"relative", relative}};
    std::ostringstream os;
    os << "obstructions H_X(n,k) != 0:";
    if (o.bigraded.empty()) os << " none";
    for (const auto& [n, k] : o.bigraded) os << " (" << n << "," << k << ")";
    os << "\nnonzero H^n(X), 0<n<d:";
    if (o.absolute.empty()) os << " none";
    for (int n : o.absolute) os << ' ' << n;
    os << "\nnonzero H^n(X,Y_a), n<d:";
    if (o.relative.empty()) os << " none";
    for (const auto& [cell, n] : o.relative) os << " (" << cell << "," << n << ")";
    os << '\n';
    text += os.str();
  }
  r.data["provenance"] = provenance(source, in.hash, field.name(), poset);
  r.text = std::move(text);
  if (exit_status) r.exit_code = v.koszul ? kExitOk : kExitNotKoszul;
  return r;
}

Report cmd_koszul_graph(const std::string& source, const FieldSpec& field, bool exit_status, bool whole_graph) {
  std::string text = io::read_file(source);
  LayeredGraph g = io::parse_graph(text);
  KoszulVerdict v = koszul_decide(g, field, {whole_graph});
  Report r;
  r.data = {{"command", "koszul-graph"}, {"graph", g.name()}, {"verdict", verdict_json(v)}};
  r.data["provenance"] = provenance(source, fnv1a64(io::graph_to_json(g)), field.name(), std::nullopt);
  r.text = "graph: " + g.name() + "  field: " + field.name() + "\n" + verdict_text(v);
  if (exit_status) r.exit_code = v.koszul ? kExitOk : kExitNotKoszul;
  return r;
}

Report cmd_rdims(const std::string& source, const std::string& poset, const FieldSpec& field) {
  Input in = load_input(source);
  LayeredGraph g = poset_of(in.complex, poset);
  auto dims = graded_dims(g, field);
  Report r;
  r.data = {{"command", "rdims"}, {"complex", in.complex.name()}, {"dims", dims}};
  r.data["provenance"] = provenance(source, in.hash, field.name(), poset);
  std::vector<std::vector<std::string>> rows{{"m", "dim R_m"}};
  for (std::size_t m = 0; m < dims.size(); ++m) rows.push_back({std::to_string(m), std::to_string(dims[m])});
  r.text = "graded dimensions of R for " + in.complex.name() + " (" + poset + ") over " + field.name() + "\n" +
           table(rows);
  return r;
}

Report cmd_ann_check(const std::string& source, const std::string& poset, const std::string& vertex, int n,
                     const FieldSpec& field) {
  Input in = load_input(source);
  LayeredGraph g = poset_of(in.complex, poset);
  AnnihilatorReport a = annihilator_check(g, field, vertex, n);
  Report r;
  json degrees = json::array();
  for (const auto& d : a.degrees) {
    degrees.push_back({{"m", d.m}, {"annihilator_dim", d.kernel_dim}, {"ideal_dim", d.ideal_dim}});
  }
  r.data = {{"command", "ann-check"}, {"complex", in.complex.name()}, {"vertex", vertex}, {"n", n},
            {"holds", a.holds},       {"vacuous", a.vacuous},           {"degrees", degrees}};
  r.data["provenance"] = provenance(source, in.hash, field.name(), poset);
  std::ostringstream os;
  os << "annihilator of r_" << vertex << "(" << n << ") in R(" << in.complex.name() << ", " << poset << ") over "
     << field.name() << ": " << (a.holds ? "holds" : "FAILS") << (a.vacuous ? " (vacuous)" : "") << '\n';
  if (!a.degrees.empty()) {
    std::vector<std::vector<std::string>> rows{{"m", "dim ann", "dim ideal"}};
    for (const auto& d : a.degrees) {
      rows.push_back({std::to_string(d.m), std::to_string(d.kernel_dim), std::to_string(d.ideal_dim)});
    }
    os << table(rows);
  }
  r.text = os.str();
  return r;
}

Report cmd_phi_check(const std::string& source, const FieldSpec& field) {
  Input in = load_input(source);
  PhiReport p = phi_iso_check(in.complex, field);
  Report r;
  json entries = json::array();
  std::vector<std::vector<std::string>> rows{{"n", "k", "dim L", "dim R", "rank"}};
  for (const auto& e : p.entries) {
    entries.push_back({{"n", e.n}, {"k", e.k}, {"dim_L", e.source_dim}, {"dim_R", e.target_dim}, {"rank", e.rank}});
    rows.push_back({std::to_string(e.n), std::to_string(e.k), std::to_string(e.source_dim),
                    std::to_string(e.target_dim), std::to_string(e.rank)});
  }
  r.data = {{"command", "phi-check"}, {"complex", in.complex.name()}, {"iso", p.iso},
            {"chain_map", p.chain_map},  {"entries", entries}};
  r.data["provenance"] = provenance(source, in.hash, field.name(), std::nullopt);
  r.text = "comparison map for " + in.complex.name() + " over " + field.name() + ": " +
           (p.iso ? "isomorphism" : "NOT an isomorphism") + ", " + (p.chain_map ? "chain map" : "NOT a chain map") +
           "\n" + table(rows);
  return r;
}

Report cmd_catalog(const std::string& action, const std::string& name) {
  Report r;
  if (action == "list") {
    r.data = {{"command", "catalog"}, {"names", catalog::names()}};
    for (const auto& n : catalog::names()) r.text += n + "\n";
    return r;
  }
  if (action != "emit") throw InputError("catalog action must be 'list' or 'emit'");
  if (name.empty()) throw InputError("catalog emit needs a name");
  RegularCWComplex x = catalog::make(name);
  r.text = io::complex_to_json(x);
  r.data = json::parse(r.text);
  return r;
}

}  // namespace

std::string tool_version() { return KOSZUL_VERSION; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Koszulity of dual algebras of layered graphs and regular CW complexes", "koszul"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  std::string input;
  std::string field_text = "q";
  std::string poset = "bar";
  std::string cell;
  std::string vertex;
  std::string catalog_action;
  std::string catalog_name;
  int n = 0;
  bool json_out = false;
  bool hat = false;
  bool integral = false;
  bool exit_status = false;
  bool whole_graph = false;

  auto add_input = [&](CLI::App* sub, const char* what) { sub->add_option("input", input, what)->required(); };
  auto add_field = [&](CLI::App* sub) { sub->add_option("--field", field_text, "q | f2 | f3 | fp:<P>"); };
  auto add_poset = [&](CLI::App* sub) {
    sub->add_option("--poset", poset, "bar | hat")->check(CLI::IsMember({"bar", "hat"}));
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the combinatorial regularity conditions");
  add_input(validate_cmd, "complex file or catalog:<name>");
  auto* poset_cmd = app.add_subcommand("poset", "Print the face poset");
  add_input(poset_cmd, "complex file or catalog:<name>");
  poset_cmd->add_flag("--hat", hat, "adjoin a maximum");
  auto* cohomology_cmd = app.add_subcommand("cohomology", "Cellular cohomology");
  add_input(cohomology_cmd, "complex file or catalog:<name>");
  add_field(cohomology_cmd);
  auto* relative_cmd = app.add_subcommand("relative", "Cohomology relative to the cells not above a cell");
  add_input(relative_cmd, "complex file or catalog:<name>");
  relative_cmd->add_option("--cell", cell, "cell id")->required();
  add_field(relative_cmd);
  auto* hx_cmd = app.add_subcommand("hx", "Bigraded groups H_X(n,k)");
  add_input(hx_cmd, "complex file or catalog:<name>");
  auto* hx_field = hx_cmd->add_option("--field", field_text, "q | f2 | f3 | fp:<P>");
  auto* hx_integral = hx_cmd->add_flag("--integral", integral, "integer coefficients");
  hx_field->excludes(hx_integral);
  auto* koszul_cmd = app.add_subcommand("koszul", "Decide Koszulity for a face poset");
  add_input(koszul_cmd, "complex file or catalog:<name>");
  add_poset(koszul_cmd);
  add_field(koszul_cmd);
  koszul_cmd->add_flag("--exit-status", exit_status, "exit 0 if Koszul, 1 if not");
  koszul_cmd->add_flag("--whole-graph,--check-remark39", whole_graph, "also evaluate the whole-graph criterion");
  auto* graph_cmd = app.add_subcommand("koszul-graph", "Decide Koszulity for a layered graph file");
  add_input(graph_cmd, "graph file");
  add_field(graph_cmd);
  graph_cmd->add_flag("--exit-status", exit_status, "exit 0 if Koszul, 1 if not");
  graph_cmd->add_flag("--whole-graph,--check-remark39", whole_graph, "also evaluate the whole-graph criterion");
  auto* rdims_cmd = app.add_subcommand("rdims", "Graded dimensions of the dual algebra");
  add_input(rdims_cmd, "complex file or catalog:<name>");
  add_poset(rdims_cmd);
  add_field(rdims_cmd);
  auto* ann_cmd = app.add_subcommand("ann-check", "Compare an annihilator with its predicted ideal");
  add_input(ann_cmd, "complex file or catalog:<name>");
  add_poset(ann_cmd);
  add_field(ann_cmd);
  ann_cmd->add_option("--vertex", vertex, "vertex id")->required();
  ann_cmd->add_option("--n", n, "sphere index")->required();
  auto* phi_cmd = app.add_subcommand("phi-check", "Check the comparison map L_X -> R");
  add_input(phi_cmd, "complex file or catalog:<name>");
  add_field(phi_cmd);
  auto* catalog_cmd = app.add_subcommand("catalog", "Built-in complexes");
  catalog_cmd->add_option("action", catalog_action, "list | emit")->required()->check(CLI::IsMember({"list", "emit"}));
  catalog_cmd->add_option("name", catalog_name, "complex name for emit");

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->add_flag("--json", json_out, "machine-readable output");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    auto field = [&] { return FieldSpec::parse(field_text); };
    Report report;
    if (validate_cmd->parsed()) {
      report = cmd_validate(input);
    } else if (poset_cmd->parsed()) {
      report = cmd_poset(input, hat);
    } else if (cohomology_cmd->parsed()) {
      report = cmd_cohomology(input, field());
    } else if (relative_cmd->parsed()) {
      report = cmd_relative(input, cell, field());
    } else if (hx_cmd->parsed()) {
      report = cmd_hx(input, integral ? std::nullopt : std::optional(field()));
    } else if (koszul_cmd->parsed()) {
      report = cmd_koszul(input, poset, field(), exit_status, whole_graph);
    } else if (graph_cmd->parsed()) {
      report = cmd_koszul_graph(input, field(), exit_status, whole_graph);
    } else if (rdims_cmd->parsed()) {
      report = cmd_rdims(input, poset, field());
    } else if (ann_cmd->parsed()) {
      report = cmd_ann_check(input, poset, vertex, n, field());
    } else if (phi_cmd->parsed()) {
      report = cmd_phi_check(input, field());
    } else if (catalog_cmd->parsed()) {
      report = cmd_catalog(catalog_action, catalog_name);
    }
    if (json_out && !catalog_cmd->parsed()) {
      out << report.data.dump(2) << '\n';
    } else if (json_out && catalog_action == "list") {
      out << report.data.dump(2) << '\n';
    } else {
      out << report.text;
    }
    return report.exit_code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const HypothesisError& e) {
    err << "hypothesis not satisfied: " << e.what() << '\n';
    return kExitHypothesis;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace koszul::cli
