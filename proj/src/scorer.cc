#include "cohkit/scorer.h"

#include "cohkit/graph.h"
#include "cohkit/grid.h"

namespace cohkit {

CoherenceScore ScoreDocument(const AnnotatedDocument& doc, ModelId model,
                             const ScoringConfig& config) {
  switch (model) {
    case ModelId::kEntropy0: return EntropyCoherence(doc, 0, config.entropy_mode);
    case ModelId::kEntropy1: return EntropyCoherence(doc, 1, config.entropy_mode);
    case ModelId::kEntropy2: return EntropyCoherence(doc, 2, config.entropy_mode);
    case ModelId::kEntityDistance: return EntityDistance(doc);
    default: break;
  }
  const EntityGrid grid = BuildGrid(doc);
  switch (model) {
    case ModelId::kAtf: return AdjacentTopicFlow(grid);
    case ModelId::kAwtf: return AdjacentWeightedTopicFlow(grid);
    case ModelId::kNatf: return NonAdjacentTopicFlow(grid);
    case ModelId::kNawtf: return NonAdjacentWeightedTopicFlow(grid);
    default: break;
  }
  const BipartiteGraph bipartite = BuildBipartite(grid);
  switch (model) {
    case ModelId::kPageRank:
      return PageRankMedian(Project(bipartite, config.graph.weighting), config.graph);
    case ModelId::kBetweenness:
      return AverageBetweenness(Project(bipartite, config.graph.weighting));
    case ModelId::kClusteringCoef:
      return ClusteringCoefficient(Project(bipartite, Weighting::kUnweighted));
    default: break;
  }
  return CoherenceScore::Undefined(model);
}

std::vector<ModelId> AllModels(int entropy_order) {
  return {EntropyModel(entropy_order), ModelId::kPageRank, ModelId::kClusteringCoef,
          ModelId::kBetweenness,       ModelId::kEntityDistance, ModelId::kAtf,
          ModelId::kAwtf,              ModelId::kNatf,           ModelId::kNawtf};
}

}  // namespace cohkit
