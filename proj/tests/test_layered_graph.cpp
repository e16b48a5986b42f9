#include <gtest/gtest.h>

#include "koszul/layered_graph.hpp"
#include "support.hpp"

using namespace koszul;

namespace {

// Segment e with endpoints a, b.
LayeredGraph segment() { return LayeredGraph::build("segment", {{"a", 1}, {"b", 1}, {"e", 2}}, {{"e", "a"}, {"e", "b"}}); }

// x > {b, c}, b > p, c > q: the lower covers of x share no lower cover.
LayeredGraph split_graph() {
  return LayeredGraph::build("split", {{"p", 1}, {"q", 1}, {"b", 2}, {"c", 2}, {"x", 3}},
                             {{"b", "p"}, {"c", "q"}, {"x", "b"}, {"x", "c"}});
}

std::vector<VertexId> ids(const std::vector<PathChain>& chains, std::size_t i) { return chains.at(i).vertices; }

}  // namespace

TEST(Build, AddsImplicitMinimum) {
  auto g = segment();
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.id(g.bottom()), kBottomId);
  EXPECT_EQ(g.rank(kBottomId), 0);
  EXPECT_TRUE(g.leq(g.bottom(), g.index("e")));
  EXPECT_EQ(g.max_rank(), 2);
}

TEST(Build, ReportsEveryViolation) {
  try {
    LayeredGraph::build("bad", {{"a", 1}, {"a", 1}, {"z", 0}, {"c", 3}, {"d", 2}},
                        {{"c", "a"}, {"d", "missing"}, {"a", kBottomId}});
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("duplicate vertex 'a'"), std::string::npos);
    EXPECT_NE(msg.find("rank 0 < 1"), std::string::npos);
    EXPECT_NE(msg.find("does not drop rank by exactly 1"), std::string::npos);
    EXPECT_NE(msg.find("unknown vertex"), std::string::npos);
    EXPECT_NE(msg.find("implicit minimum"), std::string::npos);
    EXPECT_NE(msg.find("has no lower cover"), std::string::npos);
  }
}

TEST(Build, RejectsDuplicateCoversAndReservedIds) {
  EXPECT_THROW(LayeredGraph::build("g", {{"a", 1}, {"e", 2}}, {{"e", "a"}, {"e", "a"}}), InputError);
  EXPECT_THROW(LayeredGraph::build("g", {{kBottomId, 1}}, {}), InputError);
}

TEST(Build, IdsSortingBeforeTheMinimumAreFine) {
  auto g = LayeredGraph::build("g", {{"!a", 1}, {" b", 1}, {"!e", 2}}, {{"!e", "!a"}, {"!e", " b"}});
  EXPECT_EQ(g.id(g.bottom()), kBottomId);
  EXPECT_EQ(g.sphere("!e", 2), (std::vector<VertexId>{kBottomId}));
  EXPECT_TRUE(g.is_uniform());
}

TEST(Below, Examples) {
  auto boundary = face_poset_bar(catalog::make("sphere1"));
  auto edge = boundary.below("01");
  EXPECT_EQ(edge.size(), 4u);
  EXPECT_TRUE(edge.contains("0"));
  EXPECT_TRUE(edge.contains("1"));
  EXPECT_FALSE(edge.contains("2"));
  EXPECT_EQ(boundary.below(kBottomId).size(), 1u);
  auto solid = face_poset_bar(catalog::make("simplex2"));
  EXPECT_EQ(solid.below("012"), solid);
  EXPECT_THROW(solid.below("nope"), InputError);
}

TEST(Sphere, Examples) {
  auto g = segment();
  EXPECT_EQ(g.sphere("e", 1), (std::vector<VertexId>{"a", "b"}));
  EXPECT_EQ(g.sphere("e", 2), (std::vector<VertexId>{kBottomId}));
  EXPECT_EQ(g.sphere("e", 0), (std::vector<VertexId>{"e"}));
  EXPECT_TRUE(g.sphere("e", 3).empty());
}

TEST(Uniformity, Examples) {
  EXPECT_TRUE(segment().is_uniform());
  auto report = split_graph().uniformity();
  EXPECT_FALSE(report.uniform);
  ASSERT_TRUE(report.vertex.has_value());
  EXPECT_EQ(*report.vertex, "x");
  EXPECT_EQ(report.classes, (std::vector<std::vector<VertexId>>{{"b"}, {"c"}}));
  EXPECT_TRUE(face_poset_hat(catalog::make("example_singular")).is_uniform());
}

TEST(Thinness, Examples) {
  EXPECT_TRUE(face_poset_bar(catalog::make("sphere1")).is_thin());
  auto fan = face_poset_hat(catalog::make("three_triangles_shared_edge")).thinness();
  EXPECT_FALSE(fan.thin);
  ASSERT_TRUE(fan.interval.has_value());
  EXPECT_EQ(fan.interval->first, kTopId);
  EXPECT_EQ(fan.interval->second, "01");
  EXPECT_EQ(fan.elements.size(), 5u);
  EXPECT_TRUE(LayeredGraph::build("min", {}, {}).is_thin());
}

TEST(LinkSequences, Examples) {
  auto g = segment();
  auto same = g.down_up_sequence("a", "a");
  ASSERT_TRUE(same.has_value());
  EXPECT_EQ(same->vertices, (std::vector<VertexId>{"a"}));
  EXPECT_TRUE(same->links.empty());
  auto ab = g.down_up_sequence("a", "b");
  ASSERT_TRUE(ab.has_value());
  EXPECT_EQ(ab->vertices, (std::vector<VertexId>{"a", "b"}));
  EXPECT_EQ(ab->links, (std::vector<VertexId>{kBottomId}));
  auto up = g.up_down_sequence("a", "b");
  ASSERT_TRUE(up.has_value());
  EXPECT_EQ(up->links, (std::vector<VertexId>{"e"}));
  EXPECT_THROW(g.down_up_sequence("a", "e"), InputError);
  // p and q have no common upper cover chain in the split graph
  EXPECT_FALSE(split_graph().up_down_sequence("p", "q").has_value());
}

TEST(LinkSequences, SucceedWithinEveryIntervalOfUniformCatalogGraphs) {
  for (const auto& g : testing_support::catalog_graphs()) {
    if (!g.is_uniform()) continue;
    for (std::size_t x = 0; x < g.size(); ++x) {
      for (int r = 1; r < g.rank(x); ++r) {
        auto level = g.sphere(x, g.rank(x) - r);
        for (std::size_t a : level) {
          for (std::size_t b : level) {
            EXPECT_TRUE(g.down_up_sequence(g.id(a), g.id(b)).has_value()) << g.name();
            EXPECT_TRUE(g.up_down_sequence(g.id(a), g.id(b)).has_value()) << g.name();
          }
        }
      }
    }
  }
}

TEST(MaximalChains, Examples) {
  auto tri = face_poset_bar(catalog::make("simplex2"));
  EXPECT_EQ(tri.maximal_chains("012", "012").size(), 1u);
  auto chains = tri.maximal_chains("012", kBottomId);
  ASSERT_EQ(chains.size(), 6u);
  EXPECT_EQ(ids(chains, 0), (std::vector<VertexId>{"012", "01", "0", kBottomId}));
  EXPECT_TRUE(std::is_sorted(chains.begin(), chains.end()));
  auto tet = face_poset_bar(catalog::make("simplex3"));
  EXPECT_EQ(tet.maximal_chains("0123", "0").size(), 6u);
  EXPECT_THROW(tet.maximal_chains("01", "2"), InputError);
}

TEST(DiamondClasses, Examples) {
  auto tri = face_poset_bar(catalog::make("simplex2"));
  EXPECT_EQ(tri.diamond_classes("012", kBottomId).size(), 1u);
  EXPECT_EQ(tri.diamond_classes("01", "0").size(), 1u);
  auto split = split_graph().diamond_classes("x", kBottomId);
  ASSERT_EQ(split.size(), 2u);
  EXPECT_EQ(split[0].size(), 1u);
}

TEST(ExtendWithTop, Examples) {
  auto x = catalog::make("simplex2");
  EXPECT_EQ(face_poset_bar(x).extend_with_top(), face_poset_hat(x));
  auto lone = LayeredGraph::build("min", {}, {}).extend_with_top();
  EXPECT_EQ(lone.size(), 2u);
  EXPECT_EQ(lone.rank(kTopId), 1);
  auto mixed = LayeredGraph::build("mixed", {{"a", 1}, {"b", 1}, {"c", 1}, {"e", 2}}, {{"e", "a"}, {"e", "b"}});
  EXPECT_THROW(mixed.extend_with_top(), HypothesisError);
}

TEST(Invariants, UniformIffEveryIntervalIsUniform) {
  auto graphs = testing_support::catalog_graphs();
  graphs.push_back(split_graph());
  for (const auto& g : graphs) {
    bool all = true;
    for (std::size_t x = 0; x < g.size(); ++x) all = all && g.below(g.id(x)).is_uniform();
    EXPECT_EQ(g.is_uniform(), all) << g.name();
  }
}

TEST(Invariants, MaximalChainsHaveRankLength) {
  for (const auto& g : testing_support::catalog_graphs()) {
    for (std::size_t x = 0; x < g.size(); ++x) {
      for (const auto& c : g.maximal_chains(g.id(x), kBottomId)) {
        EXPECT_EQ(c.vertices.size(), static_cast<std::size_t>(g.rank(x)) + 1);
      }
    }
  }
}
