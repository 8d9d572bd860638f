#include "cohkit/entropy.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cohkit/grid.h"

namespace cohkit {

NgramDistribution NgramCounts(std::span<const std::string> seq, std::size_t n) {
  if (n == 0) throw std::invalid_argument("n-gram order must be positive");
  NgramDistribution dist;
  dist.n = n;
  if (seq.size() < n) return dist;
  for (std::size_t i = 0; i + n <= seq.size(); ++i) {
    ++dist.counts[Ngram(seq.begin() + i, seq.begin() + i + n)];
    ++dist.total;
  }
  return dist;
}

EntropyScore ShannonEntropy(const NgramDistribution& dist) {
  EntropyScore score;
  score.order_k = static_cast<int>(dist.n) - 1;
  if (dist.total == 0) return score;
  const double total = static_cast<double>(dist.total);
  double h = 0.0;
  for (const auto& [gram, count] : dist.counts) {
    const double p = static_cast<double>(count) / total;
    h -= p * std::log2(p);
  }
  score.bits = std::max(h, 0.0);
  score.defined = true;
  return score;
}

EntropyScore ConditionalEntropy(std::span<const std::string> seq, int order_k) {
  if (order_k < 1 || order_k > 2) throw std::invalid_argument("conditional order must be 1 or 2");
  EntropyScore score;
  score.order_k = order_k;
  const auto window = static_cast<std::size_t>(order_k) + 1;
  const NgramDistribution grams = NgramCounts(seq, window);
  if (grams.total == 0) return score;

  std::map<std::string, std::size_t> unigram;
  for (const std::string& e : seq) ++unigram[e];
  std::map<std::string, std::size_t> as_successor;
  for (const auto& [gram, count] : grams.counts) as_successor[gram.back()] += count;

  // Group context terms under their predicted entity.
  std::map<std::string, double> inner;
  for (const auto& [gram, count] : grams.counts) {
    const double p = static_cast<double>(count) / static_cast<double>(as_successor.at(gram.back()));
    inner[gram.back()] -= p * std::log2(p);
  }
  const double total = static_cast<double>(seq.size());
  double h = 0.0;
  for (const auto& [entity, sum] : inner) {
    h += static_cast<double>(unigram.at(entity)) / total * sum;
  }
  score.bits = h;
  score.defined = true;
  return score;
}

CoherenceScore CoherenceFromEntropy(ModelId model, const EntropyScore& entropy) {
  if (!entropy.defined) return CoherenceScore::Undefined(model);
  return CoherenceScore::Defined(model, 1.0 / std::max(entropy.bits, kEpsilon));
}

CoherenceScore EntropyCoherence(const AnnotatedDocument& doc, int order_k, EntropyMode mode) {
  const ModelId model = EntropyModel(order_k);
  const std::vector<std::string> seq = EntitySequence(BuildGrid(doc));
  if (mode == EntropyMode::kConditional && order_k > 0) {
    return CoherenceFromEntropy(model, ConditionalEntropy(seq, order_k));
  }
  return CoherenceFromEntropy(model,
                              ShannonEntropy(NgramCounts(seq, static_cast<std::size_t>(order_k) + 1)));
}

}  // namespace cohkit
