#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/error.hpp"

namespace koszul {

using VertexId = std::string;

// Reserved ids for the adjoined minimum and maximum.
inline const VertexId kBottomId = "#0";
inline const VertexId kTopId = "#1";

struct VertexSpec {
  VertexId id;
  int rank = 1;
};

// Descending chain x_0 > x_1 > ... > x_s, consecutive entries covers.
struct PathChain {
  std::vector<VertexId> vertices;
  friend bool operator==(const PathChain&, const PathChain&) = default;
  friend auto operator<=>(const PathChain&, const PathChain&) = default;
};

struct UniformityReport {
  bool uniform = true;
  // First vertex (id order) whose lower covers split into several classes.
  std::optional<VertexId> vertex;
  std::vector<std::vector<VertexId>> classes;
};

struct ThinnessReport {
  bool thin = true;
  std::optional<std::pair<VertexId, VertexId>> interval;  // (upper, lower)
  std::vector<VertexId> elements;                         // of the closed interval
};

// Witness of down-up / up-down connectivity: vertices
// a_0 = a, ..., a_n = a' of one rank, and linking vertices b_1..b_n one rank
// below (down-up) or above (up-down) with b_i adjacent to a_{i-1} and a_i.
struct LinkSequence {
  std::vector<VertexId> vertices;
  std::vector<VertexId> links;
};

// Finite ranked poset with a unique minimum, stored as its Hasse diagram.
//
// Vertices are indexed in VertexId order; every list returned by index or by
// id is sorted in that order. The order relation is materialized at
// construction and the graph is immutable afterwards.
class LayeredGraph {
 public:
  // Builds a graph from user vertices (rank >= 1) and covers (upper, lower)
  // between them. The minimum kBottomId is added and covered by every rank-1
  // vertex. Throws InputError listing every violated condition.
  static LayeredGraph build(std::string name, const std::vector<VertexSpec>& vertices,
                            const std::vector<std::pair<VertexId, VertexId>>& covers);

  const std::string& name() const { return name_; }
  std::size_t size() const { return ids_.size(); }
  std::size_t bottom() const { return bottom_; }
  // Rank of the highest vertex.
  int max_rank() const { return max_rank_; }

  const VertexId& id(std::size_t v) const { return ids_[v]; }
  std::size_t index(const VertexId& id) const;  // throws InputError
  std::optional<std::size_t> find(const VertexId& id) const;
  bool contains(const VertexId& id) const { return find(id).has_value(); }

  int rank(std::size_t v) const { return ranks_[v]; }
  int rank(const VertexId& id) const { return ranks_[index(id)]; }
  const std::vector<std::size_t>& lower_covers(std::size_t v) const { return lower_[v]; }
  const std::vector<std::size_t>& upper_covers(std::size_t v) const { return upper_[v]; }
  const std::vector<std::size_t>& vertices_of_rank(int r) const;
  // x <= y in the poset.
  bool leq(std::size_t x, std::size_t y) const { return below_[y][x]; }
  bool less(std::size_t x, std::size_t y) const { return x != y && below_[y][x]; }
  // Vertices with no upper cover.
  std::vector<std::size_t> maximal_vertices() const;
  // All (upper, lower) cover pairs, excluding those into the minimum.
  std::vector<std::pair<VertexId, VertexId>> covers_without_bottom() const;

  // Induced subgraph on [0, x].
  LayeredGraph below(const VertexId& x) const;
  // S_x(n): vertices below x at rank rank(x) - n; {x} for n = 0.
  std::vector<VertexId> sphere(const VertexId& x, int n) const;
  std::vector<std::size_t> sphere(std::size_t x, int n) const;

  UniformityReport uniformity() const;
  bool is_uniform() const { return uniformity().uniform; }
  ThinnessReport thinness() const;
  bool is_thin() const { return thinness().thin; }

  // Shortest sequences found by breadth-first search; nullopt if none.
  // Throws InputError on rank mismatch or unknown ids.
  std::optional<LinkSequence> down_up_sequence(const VertexId& a, const VertexId& a2) const;
  std::optional<LinkSequence> up_down_sequence(const VertexId& a, const VertexId& a2) const;

  // Maximal chains of [lower, upper], lexicographic by id sequence.
  std::vector<PathChain> maximal_chains(const VertexId& upper, const VertexId& lower) const;
  std::vector<std::vector<std::size_t>> maximal_chains(std::size_t upper, std::size_t lower) const;
  // Classes of the transitive closure of "differ in at most one position".
  std::vector<std::vector<PathChain>> diamond_classes(const VertexId& upper,
                                                      const VertexId& lower) const;

  // Adds kTopId one rank above the maximal vertices, which must all share
  // a rank (HypothesisError otherwise).
  LayeredGraph extend_with_top() const;

  friend bool operator==(const LayeredGraph& a, const LayeredGraph& b) {
    return a.ids_ == b.ids_ && a.ranks_ == b.ranks_ && a.lower_ == b.lower_;
  }

 private:
  LayeredGraph() = default;
  std::optional<LinkSequence> link_sequence(const VertexId& a, const VertexId& a2, bool down) const;

  std::string name_;
  std::vector<VertexId> ids_;
  std::vector<int> ranks_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::vector<std::size_t>> by_rank_;
  std::vector<std::vector<bool>> below_;  // below_[y][x] iff x <= y
  std::size_t bottom_ = 0;
  int max_rank_ = 0;
};

}  // namespace koszul
