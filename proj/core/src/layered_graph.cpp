#include "koszul/layered_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace koszul {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // The smaller root survives, so class representatives are minimal.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

bool share_element(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) return true;
    if (*ia < *ib) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return false;
}

}  // namespace

LayeredGraph LayeredGraph::build(std::string name, const std::vector<VertexSpec>& vertices,
                                 const std::vector<std::pair<VertexId, VertexId>>& covers) {
  std::vector<std::string> problems;
  std::map<VertexId, int> rank_of;
  rank_of[kBottomId] = 0;
  for (const auto& v : vertices) {
    if (v.id.empty()) {
      problems.push_back("empty vertex id");
      continue;
    }
    if (v.id == kBottomId) {
      problems.push_back("vertex id '" + kBottomId + "' is reserved for the minimum");
      continue;
    }
    if (v.rank < 1) {
      problems.push_back("vertex '" + v.id + "' has rank " + std::to_string(v.rank) + " < 1");
      continue;
    }
    if (!rank_of.emplace(v.id, v.rank).second) problems.push_back("duplicate vertex '" + v.id + "'");
  }

  LayeredGraph g;
  g.name_ = std::move(name);
  for (const auto& [id, r] : rank_of) {
    g.ids_.push_back(id);
    g.ranks_.push_back(r);
  }
  const std::size_t n = g.ids_.size();
  g.lower_.assign(n, {});
  g.upper_.assign(n, {});
  g.bottom_ = static_cast<std::size_t>(std::lower_bound(g.ids_.begin(), g.ids_.end(), kBottomId) - g.ids_.begin());

  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [upper, lower] : covers) {
    auto u = g.find(upper);
    auto l = g.find(lower);
    if (!u || !l) {
      problems.push_back("cover (" + upper + ", " + lower + ") names an unknown vertex");
      continue;
    }
    if (*l == g.bottom_ || *u == g.bottom_) {
      problems.push_back("cover (" + upper + ", " + lower + ") involves the implicit minimum");
      continue;
    }
    if (g.ranks_[*u] != g.ranks_[*l] + 1) {
      problems.push_back("cover (" + upper + ", " + lower + ") does not drop rank by exactly 1");
      continue;
    }
    if (!edges.emplace(*u, *l).second) {
      problems.push_back("duplicate cover (" + upper + ", " + lower + ")");
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (g.ranks_[v] == 1) edges.emplace(v, g.bottom_);
  }
  for (const auto& [u, l] : edges) {
    g.lower_[u].push_back(l);
    g.upper_[l].push_back(u);
  }
  for (auto& list : g.upper_) std::sort(list.begin(), list.end());
  for (std::size_t v = 0; v < n; ++v) {
    if (g.ranks_[v] >= 2 && g.lower_[v].empty()) {
      problems.push_back("vertex '" + g.ids_[v] + "' of rank " + std::to_string(g.ranks_[v]) +
                         " has no lower cover");
    }
  }
  if (!problems.empty()) {
    std::string msg = "invalid layered graph '" + g.name_ + "':";
    for (const auto& p : problems) msg += "\n  - " + p;
    throw InputError(msg);
  }

  g.max_rank_ = *std::max_element(g.ranks_.begin(), g.ranks_.end());
  g.by_rank_.assign(static_cast<std::size_t>(g.max_rank_) + 1, {});
  for (std::size_t v = 0; v < n; ++v) g.by_rank_[g.ranks_[v]].push_back(v);

  g.below_.assign(n, std::vector<bool>(n, false));
  for (const auto& layer : g.by_rank_) {
    for (std::size_t y : layer) {
      g.below_[y][y] = true;
      for (std::size_t c : g.lower_[y]) {
        for (std::size_t x = 0; x < n; ++x) {
          if (g.below_[c][x]) g.below_[y][x] = true;
        }
      }
    }
  }

  // Ranked check: the longest and shortest cover chains from x down to the
  // minimum both have length rank(x).
  std::vector<int> shortest(n, 0), longest(n, 0);
  for (std::size_t r = 1; r < g.by_rank_.size(); ++r) {
    for (std::size_t y : g.by_rank_[r]) {
      int lo = -1, hi = -1;
      for (std::size_t c : g.lower_[y]) {
        lo = lo < 0 ? shortest[c] + 1 : std::min(lo, shortest[c] + 1);
        hi = std::max(hi, longest[c] + 1);
      }
      shortest[y] = lo;
      longest[y] = hi;
      if (lo != g.ranks_[y] || hi != g.ranks_[y]) {
        throw InputError("invalid layered graph '" + g.name_ + "': maximal chains below '" +
                         g.ids_[y] + "' do not all have length " + std::to_string(g.ranks_[y]));
      }
    }
  }
  return g;
}

std::optional<std::size_t> LayeredGraph::find(const VertexId& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t LayeredGraph::index(const VertexId& id) const {
  auto v = find(id);
  if (!v) throw InputError("unknown vertex '" + id + "' in graph '" + name_ + "'");
  return *v;
}

const std::vector<std::size_t>& LayeredGraph::vertices_of_rank(int r) const {
  static const std::vector<std::size_t> empty;
  if (r < 0 || r > max_rank_) return empty;
  return by_rank_[r];
}

std::vector<std::size_t> LayeredGraph::maximal_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < size(); ++v) {
    if (upper_[v].empty()) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<VertexId, VertexId>> LayeredGraph::covers_without_bottom() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t l : lower_[u]) {
      if (l != bottom_) out.emplace_back(ids_[u], ids_[l]);
    }
  }
  return out;
}

LayeredGraph LayeredGraph::below(const VertexId& x) const {
  std::size_t top = index(x);
  std::vector<VertexSpec> vertices;
  std::vector<std::pair<VertexId, VertexId>> covers;
  for (std::size_t v = 0; v < size(); ++v) {
    if (v == bottom_ || !leq(v, top)) continue;
    vertices.push_back({ids_[v], ranks_[v]});
    for (std::size_t l : lower_[v]) {
      if (l != bottom_) covers.emplace_back(ids_[v], ids_[l]);
    }
  }
  return build(name_ + "[" + x + "]", vertices, covers);
}

std::vector<std::size_t> LayeredGraph::sphere(std::size_t x, int n) const {
  if (n < 0) throw InputError("sphere radius must be nonnegative");
  if (n == 0) return {x};
  std::vector<std::size_t> out;
  int target = ranks_[x] - n;
  if (target < 0) return out;
  for (std::size_t v : vertices_of_rank(target)) {
    if (below_[x][v]) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> LayeredGraph::sphere(const VertexId& x, int n) const {
  std::vector<VertexId> out;
  for (std::size_t v : sphere(index(x), n)) out.push_back(ids_[v]);
  return out;
}

UniformityReport LayeredGraph::uniformity() const {
  UniformityReport report;
  for (std::size_t a = 0; a < size(); ++a) {
    if (ranks_[a] < 2) continue;
    const auto& covers = lower_[a];
    DisjointSets sets(covers.size());
    for (std::size_t i = 0; i < covers.size(); ++i) {
      for (std::size_t j = i + 1; j < covers.size(); ++j) {
        if (share_element(lower_[covers[i]], lower_[covers[j]])) sets.unite(i, j);
      }
    }
    std::map<std::size_t, std::vector<VertexId>> classes;
    for (std::size_t i = 0; i < covers.size(); ++i) classes[sets.find(i)].push_back(ids_[covers[i]]);
    if (classes.size() > 1) {
      report.uniform = false;
      report.vertex = ids_[a];
      for (auto& [root, members] : classes) report.classes.push_back(std::move(members));
      return report;
    }
  }
  return report;
}

ThinnessReport LayeredGraph::thinness() const {
  ThinnessReport report;
  for (std::size_t a = 0; a < size(); ++a) {
    if (ranks_[a] < 2) continue;
    for (std::size_t b : sphere(a, 2)) {
      std::vector<VertexId> elements{ids_[a]};
      for (std::size_t c : lower_[a]) {
        if (below_[c][b]) elements.push_back(ids_[c]);
      }
      elements.push_back(ids_[b]);
      if (elements.size() != 4) {
        report.thin = false;
        report.interval = std::make_pair(ids_[a], ids_[b]);
        report.elements = std::move(elements);
        return report;
      }
    }
  }
  return report;
}

std::optional<LinkSequence> LayeredGraph::link_sequence(const VertexId& a, const VertexId& a2,
                                                        bool down) const {
  std::size_t start = index(a);
  std::size_t goal = index(a2);
  if (ranks_[start] != ranks_[goal]) {
    throw InputError("vertices '" + a + "' and '" + a2 + "' have different ranks");
  }
  // BFS over same-rank vertices; neighbors share a lower (or upper) cover.
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> parent(size());  // (prev, link)
  std::vector<bool> seen(size(), false);
  std::deque<std::size_t> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    if (v == goal) break;
    for (std::size_t link : down ? lower_[v] : upper_[v]) {
      for (std::size_t w : down ? upper_[link] : lower_[link]) {
        if (seen[w]) continue;
        seen[w] = true;
        parent[w] = std::make_pair(v, link);
        queue.push_back(w);
      }
    }
  }
  if (!seen[goal]) return std::nullopt;
  LinkSequence seq;
  for (std::size_t v = goal; v != start; v = parent[v]->first) {
    seq.vertices.push_back(ids_[v]);
    seq.links.push_back(ids_[parent[v]->second]);
  }
  seq.vertices.push_back(ids_[start]);
  std::reverse(seq.vertices.begin(), seq.vertices.end());
  std::reverse(seq.links.begin(), seq.links.end());
  return seq;
}

std::optional<LinkSequence> LayeredGraph::down_up_sequence(const VertexId& a, const VertexId& a2) const {
  return link_sequence(a, a2, true);
}

std::optional<LinkSequence> LayeredGraph::up_down_sequence(const VertexId& a, const VertexId& a2) const {
  return link_sequence(a, a2, false);
}

std::vector<std::vector<std::size_t>> LayeredGraph::maximal_chains(std::size_t upper,
                                                                   std::size_t lower) const {
  if (!leq(lower, upper)) {
    throw InputError("'" + ids_[lower] + "' is not below '" + ids_[upper] + "'");
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> chain{upper};
  // Depth-first in id order yields lexicographic order.
  auto extend = [&](auto&& self) -> void {
    std::size_t v = chain.back();
    if (v == lower) {
      out.push_back(chain);
      return;
    }
    for (std::size_t c : lower_[v]) {
      if (!leq(lower, c)) continue;
      chain.push_back(c);
      self(self);
      chain.pop_back();
    }
  };
  extend(extend);
  return out;
}

std::vector<PathChain> LayeredGraph::maximal_chains(const VertexId& upper, const VertexId& lower) const {
  std::vector<PathChain> out;
  for (const auto& chain : maximal_chains(index(upper), index(lower))) {
    PathChain p;
    for (std::size_t v : chain) p.vertices.push_back(ids_[v]);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::vector<PathChain>> LayeredGraph::diamond_classes(const VertexId& upper,
                                                                  const VertexId& lower) const {
  auto chains = maximal_chains(index(upper), index(lower));
  DisjointSets sets(chains.size());
  // Chains differing only at position j agree on the key (j, chain minus j).
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> first_with_key;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    const auto& c = chains[i];
    for (std::size_t j = 1; j + 1 < c.size(); ++j) {
      std::vector<std::size_t> key = c;
      key.erase(key.begin() + static_cast<std::ptrdiff_t>(j));
      auto [it, inserted] = first_with_key.emplace(std::make_pair(j, std::move(key)), i);
      if (!inserted) sets.unite(it->second, i);
    }
  }
  std::map<std::size_t, std::vector<PathChain>> classes;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    PathChain p;
    for (std::size_t v : chains[i]) p.vertices.push_back(ids_[v]);
    classes[sets.find(i)].push_back(std::move(p));
  }
  std::vector<std::vector<PathChain>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

LayeredGraph LayeredGraph::extend_with_top() const {
  auto maxima = maximal_vertices();
  int r = ranks_[maxima.front()];
  for (std::size_t m : maxima) {
    if (ranks_[m] != r) {
      throw HypothesisError("graph '" + name_ + "' has maximal vertices of different ranks ('" +
                            ids_[maxima.front()] + "' and '" + ids_[m] + "'); it is not pure");
    }
  }
  if (contains(kTopId)) throw InputError("graph '" + name_ + "' already has a vertex '" + kTopId + "'");
  std::vector<VertexSpec> vertices;
  for (std::size_t v = 0; v < size(); ++v) {
    if (v != bottom_) vertices.push_back({ids_[v], ranks_[v]});
  }
  vertices.push_back({kTopId, r + 1});
  auto covers = covers_without_bottom();
  if (r > 0) {
    for (std::size_t m : maxima) covers.emplace_back(kTopId, ids_[m]);
  }
  return build(name_ + "^", vertices, covers);
}

}  // namespace koszul
