#ifndef COHKIT_GRAPH_METRICS_H_
#define COHKIT_GRAPH_METRICS_H_

#include <vector>

#include "cohkit/document.h"
#include "cohkit/graph.h"
#include "cohkit/grid.h"
#include "cohkit/score.h"

namespace cohkit {

struct GraphMetricConfig {
  double damping = 0.85;
  double pagerank_epsilon = 1e-10;
  int pagerank_max_iters = 200;
  Weighting weighting = Weighting::kUnweighted;
};

// Power iteration of
//   PR(v) = c * sum_{u ~ v} PR(u) * w(u,v) / W(u) + (1 - c)
// from the all-ones vector, W(u) being the total weight incident on u. Stops
// once no value moves by more than pagerank_epsilon.
std::vector<double> PageRank(const ProjectionGraph& graph, const GraphMetricConfig& config);

// Largest absolute difference between pr and one application of the update.
double PageRankResidual(const ProjectionGraph& graph, const std::vector<double>& pr,
                        double damping);

// Median PageRank (mean of the two middle values for an even node count).
CoherenceScore PageRankMedian(const ProjectionGraph& graph, const GraphMetricConfig& config);

// Local clustering of each node on the unweighted skeleton; degree < 2 gives 0.
std::vector<double> LocalClustering(const ProjectionGraph& graph);
CoherenceScore ClusteringCoefficient(const ProjectionGraph& graph);

// Brandes accumulation over ordered (s, t) pairs. Edge length is 1 / weight,
// so unweighted graphs use hop counts. Unreachable pairs contribute nothing.
std::vector<double> Betweenness(const ProjectionGraph& graph);
CoherenceScore AverageBetweenness(const ProjectionGraph& graph);

// Inverse of the per-sentence average term distance between consecutive
// occurrences of entities seen in two or more sentences.
CoherenceScore EntityDistance(const AnnotatedDocument& doc);

// Topic-flow family over the grid rows.
CoherenceScore AdjacentTopicFlow(const EntityGrid& grid);
CoherenceScore AdjacentWeightedTopicFlow(const EntityGrid& grid);
CoherenceScore NonAdjacentTopicFlow(const EntityGrid& grid);
CoherenceScore NonAdjacentWeightedTopicFlow(const EntityGrid& grid);

}  // namespace cohkit

#endif  // COHKIT_GRAPH_METRICS_H_
