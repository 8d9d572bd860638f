#ifndef COHKIT_SCORER_H_
#define COHKIT_SCORER_H_

#include <vector>

#include "cohkit/document.h"
#include "cohkit/entropy.h"
#include "cohkit/graph_metrics.h"
#include "cohkit/score.h"

namespace cohkit {

struct ScoringConfig {
  EntropyMode entropy_mode = EntropyMode::kNgram;
  // Projection weighting for PageRank and betweenness. Clustering always runs
  // on the unweighted skeleton.
  GraphMetricConfig graph;
};

CoherenceScore ScoreDocument(const AnnotatedDocument& doc, ModelId model,
                             const ScoringConfig& config = {});

// The entropy model of the given order followed by the eight graph metrics.
std::vector<ModelId> AllModels(int entropy_order);

}  // namespace cohkit

#endif  // COHKIT_SCORER_H_
