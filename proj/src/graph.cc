#include "cohkit/graph.h"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace cohkit {

std::string_view WeightingName(Weighting mode) {
  switch (mode) {
    case Weighting::kUnweighted: return "unweighted";
    case Weighting::kSharedCount: return "shared";
    case Weighting::kDistanceDiscounted: return "distance";
  }
  return "unweighted";
}

std::optional<Weighting> ParseWeighting(std::string_view name) {
  if (name == "unweighted") return Weighting::kUnweighted;
  if (name == "shared") return Weighting::kSharedCount;
  if (name == "distance") return Weighting::kDistanceDiscounted;
  return std::nullopt;
}

ProjectionGraph::ProjectionGraph(std::string doc_id, std::size_t node_count, Weighting mode)
    : doc_id_(std::move(doc_id)), mode_(mode), adjacency_(node_count) {}

void ProjectionGraph::AddEdge(std::size_t u, std::size_t v, double weight) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (u >= node_count() || v >= node_count()) throw std::out_of_range("edge endpoint");
  if (!(weight > 0.0)) throw std::invalid_argument("edge weight must be positive");
  if (HasEdge(u, v)) throw std::invalid_argument("duplicate edge");
  if (u > v) std::swap(u, v);
  edges_.push_back({u, v, weight});
  adjacency_[u].push_back({v, weight});
  adjacency_[v].push_back({u, weight});
}

double ProjectionGraph::strength(std::size_t node) const {
  double total = 0.0;
  for (const Neighbor& n : adjacency_.at(node)) total += n.weight;
  return total;
}

bool ProjectionGraph::HasEdge(std::size_t u, std::size_t v) const { return Weight(u, v).has_value(); }

std::optional<double> ProjectionGraph::Weight(std::size_t u, std::size_t v) const {
  for (const Neighbor& n : adjacency_.at(u)) {
    if (n.node == v) return n.weight;
  }
  return std::nullopt;
}

BipartiteGraph BuildBipartite(const EntityGrid& grid) {
  BipartiteGraph graph;
  graph.doc_id = grid.doc_id();
  graph.sentence_count = grid.sentence_count();
  graph.entities = grid.columns();
  for (std::size_t i = 0; i < grid.sentence_count(); ++i) {
    for (const auto& [column, role] : grid.row(i)) graph.edges.emplace_back(i, column);
  }
  return graph;
}

ProjectionGraph Project(const BipartiteGraph& graph, Weighting mode) {
  // sentences containing each entity, ascending
  std::vector<std::vector<std::size_t>> holders(graph.entities.size());
  for (const auto& [sentence, entity] : graph.edges) holders.at(entity).push_back(sentence);

  const std::size_t n = graph.sentence_count;
  std::vector<std::size_t> shared(n * n, 0);
  for (auto& list : holders) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) ++shared[list[a] * n + list[b]];
    }
  }

  ProjectionGraph out(graph.doc_id, n, mode);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const std::size_t count = shared[u * n + v];
      if (count == 0) continue;
      double weight = 1.0;
      if (mode == Weighting::kSharedCount) weight = static_cast<double>(count);
      if (mode == Weighting::kDistanceDiscounted) {
        weight = static_cast<double>(count) / static_cast<double>(v - u);
      }
      out.AddEdge(u, v, weight);
    }
  }
  return out;
}

void WriteEdgeList(std::ostream& out, const ProjectionGraph& graph) {
  for (const WeightedEdge& e : graph.edges()) {
    fmt::print(out, "{} {} {:.6f}\n", e.u, e.v, e.weight);
  }
}

}  // namespace cohkit
