#include <cmath>
#include <random>
#include <sstream>

#include <doctest.h>

#include "cohkit/graph.h"
#include "cohkit/graph_metrics.h"
#include "cohkit/grid.h"
#include "cohkit/reorder.h"
#include "cohkit/scorer.h"
#include "testing.h"

namespace cohkit {
namespace {

ProjectionGraph Table1Projection(Weighting mode) {
  return Project(BuildBipartite(BuildGrid(testing::Table1())), mode);
}

ProjectionGraph FromEdges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                          Weighting mode = Weighting::kUnweighted) {
  ProjectionGraph g("g", n, mode);
  for (auto [u, v] : edges) g.AddEdge(u, v, 1.0);
  return g;
}

ProjectionGraph Path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return FromEdges(n, edges);
}

ProjectionGraph Complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return FromEdges(n, edges);
}

TEST_CASE("bipartite graph of Table 1") {
  const EntityGrid grid = BuildGrid(testing::Table1());
  const BipartiteGraph g = BuildBipartite(grid);
  CHECK(g.sentence_count == 5);
  CHECK(g.entities.size() == 8);
  CHECK(g.edges.size() == 12);
  CHECK(g.edges.size() == grid.cell_count());
  const BipartiteGraph empty = BuildBipartite(BuildGrid(AnnotatedDocument{"e", {}}));
  CHECK(empty.sentence_count == 0);
  CHECK(empty.edges.empty());
}

TEST_CASE("projection of Table 1") {
  const ProjectionGraph unweighted = Table1Projection(Weighting::kUnweighted);
  REQUIRE(unweighted.edge_count() == 4);
  // 0-based (1,3),(1,5),(3,5),(2,4)
  for (auto [u, v] : std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {0, 4}, {2, 4}, {1, 3}}) {
    CHECK(unweighted.Weight(u, v) == 1.0);
  }
  const ProjectionGraph shared = Table1Projection(Weighting::kSharedCount);
  CHECK(shared.Weight(2, 4) == 2.0);
  CHECK(shared.Weight(0, 2) == 1.0);
  CHECK(shared.Weight(0, 4) == 1.0);
  CHECK(shared.Weight(1, 3) == 1.0);
  const ProjectionGraph discounted = Table1Projection(Weighting::kDistanceDiscounted);
  CHECK(discounted.Weight(0, 4) == doctest::Approx(0.25));
  CHECK(discounted.Weight(2, 4) == doctest::Approx(1.0));
  CHECK(discounted.Weight(0, 2) == doctest::Approx(0.5));
  CHECK(discounted.Weight(1, 3) == doctest::Approx(0.5));
}

TEST_CASE("projection edges match entity-set intersections") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto doc = testing::RandomDocument(rng, "d", 2 + trial % 9, 8, 3);
    const EntityGrid grid = BuildGrid(doc);
    const auto sets = SentenceEntitySets(grid);
    const ProjectionGraph g = Project(BuildBipartite(grid), Weighting::kSharedCount);
    for (std::size_t u = 0; u < sets.size(); ++u) {
      CHECK_FALSE(g.HasEdge(u, u));
      for (std::size_t v = u + 1; v < sets.size(); ++v) {
        std::vector<std::string> common;
        std::set_intersection(sets[u].begin(), sets[u].end(), sets[v].begin(), sets[v].end(),
                              std::back_inserter(common));
        CHECK(g.HasEdge(u, v) == !common.empty());
        if (!common.empty()) CHECK(*g.Weight(u, v) == static_cast<double>(common.size()));
      }
    }
  }
}

TEST_CASE("graph construction rejects bad edges") {
  ProjectionGraph g("g", 3, Weighting::kUnweighted);
  CHECK_THROWS(g.AddEdge(1, 1, 1.0));
  CHECK_THROWS(g.AddEdge(0, 1, 0.0));
  g.AddEdge(0, 1, 1.0);
  CHECK_THROWS(g.AddEdge(1, 0, 1.0));
}

TEST_CASE("edge list export") {
  std::ostringstream out;
  WriteEdgeList(out, Table1Projection(Weighting::kDistanceDiscounted));
  CHECK(out.str() == "0 2 0.500000\n0 4 0.250000\n1 3 0.500000\n2 4 1.000000\n");
}

TEST_CASE("PageRank median") {
  const GraphMetricConfig config;
  SUBCASE("Table 1 is degree-regular per component") {
    const ProjectionGraph g = Table1Projection(Weighting::kUnweighted);
    const auto pr = PageRank(g, config);
    for (double v : pr) CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(PageRankResidual(g, pr, config.damping) < 1e-8);
    const CoherenceScore s = PageRankMedian(g, config);
    CHECK(s.raw == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(s.polarity == Polarity::kLowerIsMoreCoherent);
  }
  SUBCASE("isolated node keeps only the teleport mass") {
    const ProjectionGraph g("one", 1, Weighting::kUnweighted);
    CHECK(PageRankMedian(g, config).raw == doctest::Approx(0.15));
  }
  SUBCASE("even node count takes the mean of the two middles") {
    const ProjectionGraph g = Path(4);
    auto pr = PageRank(g, config);
    std::sort(pr.begin(), pr.end());
    CHECK(PageRankMedian(g, config).raw == doctest::Approx(0.5 * (pr[1] + pr[2])));
  }
  SUBCASE("empty graph is undefined") {
    CHECK_FALSE(PageRankMedian(ProjectionGraph("e", 0, Weighting::kUnweighted), config).defined);
  }
  SUBCASE("fixed point agrees with a direct linear solve") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      const auto doc = testing::RandomDocument(rng, "d", 2 + trial % 10, 7, 3);
      for (Weighting mode : {Weighting::kUnweighted, Weighting::kSharedCount, Weighting::kDistanceDiscounted}) {
        const ProjectionGraph g = Project(BuildBipartite(BuildGrid(doc)), mode);
        const auto pr = PageRank(g, config);
        const auto solved = testing::PageRankBySolve(g, config.damping);
        CHECK(PageRankResidual(g, pr, config.damping) < 1e-8);
        for (std::size_t v = 0; v < pr.size(); ++v) {
          CHECK(pr[v] > 0.0);
          CHECK(pr[v] == doctest::Approx(solved[v]).epsilon(1e-8));
        }
      }
    }
  }
}

TEST_CASE("clustering coefficient") {
  CHECK(ClusteringCoefficient(Table1Projection(Weighting::kUnweighted)).raw == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(ClusteringCoefficient(Path(4)).raw == 0.0);
  CHECK(ClusteringCoefficient(Complete(4)).raw == doctest::Approx(1.0));
  CHECK_FALSE(ClusteringCoefficient(ProjectionGraph("e", 0, Weighting::kUnweighted)).defined);
  CHECK(ClusteringCoefficient(Path(3)).polarity == Polarity::kLowerIsMoreCoherent);

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const auto doc = testing::RandomDocument(rng, "d", 2 + trial % 9, 6, 3);
    const ProjectionGraph g = Project(BuildBipartite(BuildGrid(doc)), Weighting::kUnweighted);
    const double cc = ClusteringCoefficient(g).raw;
    CHECK(cc >= 0.0);
    CHECK(cc <= 1.0);
    CHECK(cc == doctest::Approx(testing::ClusteringByTriples(g)).epsilon(1e-12));
  }
}

TEST_CASE("betweenness") {
  CHECK(AverageBetweenness(Table1Projection(Weighting::kUnweighted)).raw == 0.0);
  CHECK(AverageBetweenness(Path(3)).raw == doctest::Approx(2.0 / 3.0));
  CHECK_FALSE(AverageBetweenness(ProjectionGraph("e", 0, Weighting::kUnweighted)).defined);

  const ProjectionGraph star = FromEdges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const ProjectionGraph path = Path(5);
  // path: sum over interior counts of ordered pairs = 2*(1*3 + 2*2 + 3*1) = 20
  CHECK(AverageBetweenness(path).raw == doctest::Approx(20.0 / 5.0));
  // star: centre carries all 12 ordered leaf pairs
  CHECK(AverageBetweenness(star).raw == doctest::Approx(12.0 / 5.0));
  CHECK(AverageBetweenness(path).raw > AverageBetweenness(star).raw);
  for (const auto& g : {star, path}) {
    const auto oracle = testing::BetweennessByPathEnumeration(g);
    const auto fast = Betweenness(g);
    for (std::size_t v = 0; v < g.node_count(); ++v) CHECK(fast[v] == doctest::Approx(oracle[v]));
  }

  SUBCASE("weighted lengths change the shortest path") {
    // 0-1-2 cheap detour versus a long direct edge 0-2
    ProjectionGraph g("w", 3, Weighting::kSharedCount);
    g.AddEdge(0, 1, 4.0);
    g.AddEdge(1, 2, 4.0);
    g.AddEdge(0, 2, 1.0);
    CHECK(Betweenness(g)[1] == doctest::Approx(2.0));
    ProjectionGraph h("h", 3, Weighting::kUnweighted);
    h.AddEdge(0, 1, 1.0);
    h.AddEdge(1, 2, 1.0);
    h.AddEdge(0, 2, 1.0);
    CHECK(Betweenness(h)[1] == 0.0);
  }
}

TEST_CASE("entity distance") {
  SUBCASE("two sentences sharing cat") {
    AnnotatedDocument doc{"cat", {Sentence{}, Sentence{}}};
    doc.sentences[0].tokens = {{"the", 0}, {"cat", 0}, {"sat", 0}};
    doc.sentences[1].tokens = {{"the", 0}, {"cat", 0}, {"slept", 0}};
    doc.sentences[0].mentions = {{"cat", Role::kSubject, 1}};
    doc.sentences[1].mentions = {{"cat", Role::kSubject, 1}};
    Reindex(doc);
    const CoherenceScore s = EntityDistance(doc);
    CHECK(s.defined);
    CHECK(s.raw == doctest::Approx(2.0 / 3.0));
  }
  SUBCASE("entity at offsets 0, 100, 200 across five sentences") {
    AnnotatedDocument doc{"far", std::vector<Sentence>(5)};
    for (std::size_t i = 0; i < 5; ++i) {
      doc.sentences[i].tokens.assign(i == 4 ? 1 : 50, Token{"w", 0});
      if (i % 2 == 0) {
        doc.sentences[i].tokens[0].surface = "x";
        doc.sentences[i].mentions = {{"x", Role::kSubject, 0}};
      }
    }
    Reindex(doc);
    REQUIRE(doc.sentences[4].tokens[0].doc_offset == 200);
    CHECK(EntityDistance(doc).raw == doctest::Approx(0.025));
  }
  SUBCASE("no entity spans two sentences") {
    CHECK_FALSE(EntityDistance(testing::DocFromRows("n", {{"a"}, {"b"}, {"a", "c"}})).defined == false);
    CHECK_FALSE(EntityDistance(testing::DocFromRows("n", {{"a", "a"}, {"b"}})).defined);
  }
}

TEST_CASE("topic flow metrics on Table 1") {
  const EntityGrid grid = BuildGrid(testing::Table1());
  CHECK(AdjacentTopicFlow(grid).raw == doctest::Approx(13.0 / 60.0).epsilon(1e-12));
  CHECK(AdjacentWeightedTopicFlow(grid).raw == 0.0);
  CHECK(NonAdjacentWeightedTopicFlow(grid).raw == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(std::abs(NonAdjacentTopicFlow(grid).raw - 0.8278) < 1e-4);

  const auto oracle = testing::TopicFlowBySets(SentenceEntitySets(grid));
  CHECK(oracle.shared_entities == 3);
  CHECK(AdjacentTopicFlow(grid).raw == doctest::Approx(oracle.atf));
  CHECK(NonAdjacentTopicFlow(grid).raw == doctest::Approx(oracle.natf));
}

TEST_CASE("topic flow edge cases") {
  const EntityGrid twins = BuildGrid(testing::DocFromRows("t", {{"a"}, {"a"}}));
  CHECK(AdjacentTopicFlow(twins).raw == 1.0);
  CHECK(AdjacentWeightedTopicFlow(twins).raw == 1.0);

  const EntityGrid single = BuildGrid(testing::DocFromRows("s", {{"a", "b"}}));
  CHECK_FALSE(AdjacentTopicFlow(single).defined);
  CHECK_FALSE(AdjacentWeightedTopicFlow(single).defined);

  const EntityGrid disjoint = BuildGrid(testing::DocFromRows("d", {{"a"}, {"b"}, {}}));
  const EntityGrid trailing = BuildGrid(testing::DocFromRows("t", {{"a"}, {}, {}}));
  const CoherenceScore nawtf = NonAdjacentWeightedTopicFlow(disjoint);
  CHECK(nawtf.defined);
  CHECK(nawtf.raw == 0.0);
  CHECK_FALSE(NonAdjacentTopicFlow(disjoint).defined);
  CHECK(AdjacentTopicFlow(disjoint).raw == doctest::Approx(0.5 * (0.5 + 1.0)));
  // two empty neighbours contribute nothing
  CHECK(AdjacentTopicFlow(trailing).raw == doctest::Approx(0.5));
}

TEST_CASE("topic flow metrics match set-algebra oracle on random grids") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const EntityGrid grid = BuildGrid(testing::RandomDocument(rng, "d", 2 + trial % 8, 6, 4));
    const auto o = testing::TopicFlowBySets(SentenceEntitySets(grid));
    const CoherenceScore atf = AdjacentTopicFlow(grid);
    CHECK(atf.raw == doctest::Approx(o.atf).epsilon(1e-12));
    CHECK(atf.raw > 0.0);
    CHECK(atf.raw <= 1.0);
    CHECK(AdjacentWeightedTopicFlow(grid).raw == doctest::Approx(o.awtf).epsilon(1e-12));
    CHECK(NonAdjacentWeightedTopicFlow(grid).raw == doctest::Approx(o.nawtf).epsilon(1e-12));
    CHECK(NonAdjacentWeightedTopicFlow(grid).raw >= 0.0);
    if (o.shared_entities > 0) CHECK(NonAdjacentTopicFlow(grid).raw == doctest::Approx(o.natf).epsilon(1e-12));
  }
}

TEST_CASE("permutation behaviour of the graph metrics") {
  const GraphMetricConfig unweighted;
  GraphMetricConfig discounted;
  discounted.weighting = Weighting::kDistanceDiscounted;
  const AnnotatedDocument doc = testing::Table1();
  const auto base = [&](const AnnotatedDocument& d, ModelId m, const GraphMetricConfig& c) {
    return ScoreDocument(d, m, ScoringConfig{EntropyMode::kNgram, c}).raw;
  };
  bool atf_changed = false, ed_changed = false;
  for (const auto& order : testing::NonIdentityPermutations(5)) {
    const AnnotatedDocument p = ApplyOrder(doc, order);
    for (ModelId m : {ModelId::kPageRank, ModelId::kClusteringCoef, ModelId::kBetweenness,
                      ModelId::kNatf, ModelId::kNawtf}) {
      CHECK(std::abs(base(p, m, unweighted) - base(doc, m, unweighted)) < 1e-9);
    }
    atf_changed |= std::abs(base(p, ModelId::kAtf, unweighted) - base(doc, ModelId::kAtf, unweighted)) > 1e-9;
    ed_changed |= std::abs(base(p, ModelId::kEntityDistance, unweighted) -
                           base(doc, ModelId::kEntityDistance, unweighted)) > 1e-9;
  }
  CHECK(atf_changed);
  CHECK(ed_changed);

  // On Table 1 AWTF stays zero and the discounted PageRank median stays 1
  // (two-node component plus a triangle whose ranks average to 1), so a
  // chain is used to expose their order dependence.
  const AnnotatedDocument chain = testing::ChainDocument("c", 5);
  bool awtf_changed = false, dd_changed = false;
  for (const auto& order : testing::NonIdentityPermutations(5)) {
    const AnnotatedDocument p = ApplyOrder(chain, order);
    awtf_changed |= std::abs(base(p, ModelId::kAwtf, unweighted) - base(chain, ModelId::kAwtf, unweighted)) > 1e-9;
    dd_changed |= std::abs(base(p, ModelId::kPageRank, discounted) - base(chain, ModelId::kPageRank, discounted)) > 1e-9;
    CHECK(std::abs(base(p, ModelId::kPageRank, unweighted) - base(chain, ModelId::kPageRank, unweighted)) < 1e-9);
  }
  CHECK(awtf_changed);
  CHECK(dd_changed);
}

}  // namespace
}  // namespace cohkit
