#ifndef COHKIT_SCORE_H_
#define COHKIT_SCORE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cohkit {

enum class ModelId {
  kEntropy0,
  kEntropy1,
  kEntropy2,
  kPageRank,
  kClusteringCoef,
  kBetweenness,
  kEntityDistance,
  kAtf,
  kAwtf,
  kNatf,
  kNawtf,
};

enum class Polarity { kHigherIsMoreCoherent, kLowerIsMoreCoherent };

// Floor applied to denominators that may reach zero (entropy, reciprocal
// orientation of lower-is-better metrics).
inline constexpr double kEpsilon = 1e-6;

Polarity PolarityOf(ModelId model);
std::string_view ModelName(ModelId model);
std::optional<ModelId> ParseModelName(std::string_view name);
ModelId EntropyModel(int order_k);

struct CoherenceScore {
  ModelId model = ModelId::kEntropy0;
  double raw = 0.0;
  Polarity polarity = Polarity::kHigherIsMoreCoherent;
  bool defined = false;

  static CoherenceScore Defined(ModelId model, double raw) {
    return {model, raw, PolarityOf(model), true};
  }
  static CoherenceScore Undefined(ModelId model) { return {model, 0.0, PolarityOf(model), false}; }
};

// raw for higher-is-better models, -raw otherwise. Larger is always more
// coherent. Undefined scores have no oriented value.
std::optional<double> Oriented(const CoherenceScore& score);

// Compares two documents under one model: +1 if a is more coherent, -1 if b
// is, 0 on a tie. Undefined ranks below every defined score. Values within a
// relative tolerance of 1e-9 tie.
int CompareCoherence(const CoherenceScore& a, const CoherenceScore& b);

// Maps a collection of scores to [0, 1], dividing by the collection maximum
// separately for each model. Lower-is-better raws are first turned into
// 1 / max(raw, eps). Undefined scores map to 0.
std::vector<double> NormalizeCollection(std::span<const CoherenceScore> scores);

}  // namespace cohkit

#endif  // COHKIT_SCORE_H_
