#ifndef COHKIT_GRAPH_H_
#define COHKIT_GRAPH_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cohkit/grid.h"

namespace cohkit {

// Sentence nodes 0..N-1 (document order) on one side, entity nodes on the
// other; an edge joins a sentence to every entity it contains.
struct BipartiteGraph {
  std::string doc_id;
  std::size_t sentence_count = 0;
  std::vector<std::string> entities;
  // (sentence, entity index), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

enum class Weighting { kUnweighted, kSharedCount, kDistanceDiscounted };

std::string_view WeightingName(Weighting mode);
std::optional<Weighting> ParseWeighting(std::string_view name);

struct WeightedEdge {
  std::size_t u = 0;
  std::size_t v = 0;  // u < v
  double weight = 1.0;
};

// Undirected sentence graph; u and v are joined iff they share an entity.
class ProjectionGraph {
 public:
  struct Neighbor {
    std::size_t node;
    double weight;
  };

  ProjectionGraph() = default;
  ProjectionGraph(std::string doc_id, std::size_t node_count, Weighting mode);

  // Requires u != v, no duplicate edge and a positive weight.
  void AddEdge(std::size_t u, std::size_t v, double weight);

  const std::string& doc_id() const { return doc_id_; }
  Weighting weighting() const { return mode_; }
  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  const std::vector<Neighbor>& neighbors(std::size_t node) const { return adjacency_.at(node); }
  std::size_t degree(std::size_t node) const { return adjacency_.at(node).size(); }
  double strength(std::size_t node) const;
  bool HasEdge(std::size_t u, std::size_t v) const;
  std::optional<double> Weight(std::size_t u, std::size_t v) const;

 private:
  std::string doc_id_;
  Weighting mode_ = Weighting::kUnweighted;
  std::vector<WeightedEdge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

BipartiteGraph BuildBipartite(const EntityGrid& grid);

// Unweighted: weight 1. SharedCount: number of shared entities.
// DistanceDiscounted: shared entities / (v - u).
ProjectionGraph Project(const BipartiteGraph& graph, Weighting mode);

// One "u v weight" line per edge, weights with 6 decimals.
void WriteEdgeList(std::ostream& out, const ProjectionGraph& graph);

}  // namespace cohkit

#endif  // COHKIT_GRAPH_H_
