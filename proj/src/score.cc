#include "cohkit/score.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

namespace cohkit {

namespace {

struct ModelInfo {
  ModelId id;
  std::string_view name;
  Polarity polarity;
};

constexpr std::array<ModelInfo, 11> kModels = {{
    {ModelId::kEntropy0, "entropy0", Polarity::kHigherIsMoreCoherent},
    {ModelId::kEntropy1, "entropy1", Polarity::kHigherIsMoreCoherent},
    {ModelId::kEntropy2, "entropy2", Polarity::kHigherIsMoreCoherent},
    {ModelId::kPageRank, "pagerank", Polarity::kLowerIsMoreCoherent},
    {ModelId::kClusteringCoef, "clustering", Polarity::kLowerIsMoreCoherent},
    {ModelId::kBetweenness, "betweenness", Polarity::kHigherIsMoreCoherent},
    {ModelId::kEntityDistance, "entity-distance", Polarity::kHigherIsMoreCoherent},
    {ModelId::kAtf, "atf", Polarity::kHigherIsMoreCoherent},
    {ModelId::kAwtf, "awtf", Polarity::kHigherIsMoreCoherent},
    {ModelId::kNatf, "natf", Polarity::kHigherIsMoreCoherent},
    {ModelId::kNawtf, "nawtf", Polarity::kHigherIsMoreCoherent},
}};

const ModelInfo& Info(ModelId model) {
  return kModels[static_cast<std::size_t>(model)];
}

}  // namespace

Polarity PolarityOf(ModelId model) { return Info(model).polarity; }

std::string_view ModelName(ModelId model) { return Info(model).name; }

std::optional<ModelId> ParseModelName(std::string_view name) {
  for (const ModelInfo& info : kModels) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

ModelId EntropyModel(int order_k) {
  switch (order_k) {
    case 0: return ModelId::kEntropy0;
    case 1: return ModelId::kEntropy1;
    case 2: return ModelId::kEntropy2;
  }
  throw std::invalid_argument("entropy order must be 0, 1 or 2");
}

std::optional<double> Oriented(const CoherenceScore& score) {
  if (!score.defined) return std::nullopt;
  return score.polarity == Polarity::kHigherIsMoreCoherent ? score.raw : -score.raw;
}

int CompareCoherence(const CoherenceScore& a, const CoherenceScore& b) {
  const auto oa = Oriented(a);
  const auto ob = Oriented(b);
  if (!oa && !ob) return 0;
  if (!ob) return 1;
  if (!oa) return -1;
  const double tolerance = 1e-9 * std::max({1.0, std::abs(*oa), std::abs(*ob)});
  if (std::abs(*oa - *ob) <= tolerance) return 0;
  return *oa > *ob ? 1 : -1;
}

std::vector<double> NormalizeCollection(std::span<const CoherenceScore> scores) {
  auto positive = [](const CoherenceScore& s) {
    return s.polarity == Polarity::kHigherIsMoreCoherent ? s.raw
                                                         : 1.0 / std::max(s.raw, kEpsilon);
  };
  std::map<ModelId, double> maxima;
  for (const CoherenceScore& s : scores) {
    if (!s.defined) continue;
    auto [it, fresh] = maxima.try_emplace(s.model, positive(s));
    if (!fresh) it->second = std::max(it->second, positive(s));
  }
  std::vector<double> out;
  out.reserve(scores.size());
  for (const CoherenceScore& s : scores) {
    const double max = s.defined ? maxima.at(s.model) : 0.0;
    out.push_back(s.defined && max > 0.0 ? positive(s) / max : 0.0);
  }
  return out;
}

}  // namespace cohkit
