#ifndef COHKIT_ENTROPY_H_
#define COHKIT_ENTROPY_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cohkit/document.h"
#include "cohkit/score.h"

namespace cohkit {

using Ngram = std::vector<std::string>;

struct NgramDistribution {
  std::size_t n = 1;
  std::map<Ngram, std::size_t> counts;
  std::size_t total = 0;
};

struct EntropyScore {
  int order_k = 0;
  double bits = 0.0;
  bool defined = false;
};

enum class EntropyMode { kNgram, kConditional };

// Counts every contiguous window of length n over the whole sequence;
// windows run across sentence boundaries.
NgramDistribution NgramCounts(std::span<const std::string> seq, std::size_t n);

// Base-2 Shannon entropy of the n-gram distribution; order_k is n - 1.
EntropyScore ShannonEntropy(const NgramDistribution& dist);

// Markov form of order k (1 or 2), with maximum-likelihood estimates
//   p(e)       = f(e) / |E|
//   p(e | ctx) = f(ctx, e) / f(e)
// where f(ctx, e) counts (k+1)-grams and the denominator counts e at the end
// of a (k+1)-gram window. The conditional is normalized by the following
// entity, as written in the model, so it need not sum to one over e.
EntropyScore ConditionalEntropy(std::span<const std::string> seq, int order_k);

// C = 1 / max(H, eps) over the document's entity sequence, using (k+1)-grams.
CoherenceScore EntropyCoherence(const AnnotatedDocument& doc, int order_k,
                                EntropyMode mode = EntropyMode::kNgram);
CoherenceScore CoherenceFromEntropy(ModelId model, const EntropyScore& entropy);

}  // namespace cohkit

#endif  // COHKIT_ENTROPY_H_
