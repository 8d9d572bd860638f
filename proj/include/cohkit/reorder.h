#ifndef COHKIT_REORDER_H_
#define COHKIT_REORDER_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cohkit/document.h"
#include "cohkit/scorer.h"

namespace cohkit {

// Generator for one document, seeded from (seed, doc_id) so that results do
// not depend on which worker handles the document.
std::mt19937_64 DocumentRng(std::uint64_t seed, std::string_view doc_id);

// Uniform Fisher-Yates shuffle of 0..n-1, redrawn until it is not the
// identity. Requires n >= 2.
std::vector<std::size_t> RandomNonIdentityOrder(std::size_t n, std::mt19937_64& rng);

// Sentences rearranged so that sentence i of the result is sentence order[i]
// of the input. Indices and offsets are recomputed.
AnnotatedDocument ApplyOrder(const AnnotatedDocument& doc, std::span<const std::size_t> order);

// Throws DocumentError for documents with fewer than two sentences.
AnnotatedDocument PermuteDocument(const AnnotatedDocument& doc, std::mt19937_64& rng);

struct PermutationSet {
  std::string doc_id;
  AnnotatedDocument original;
  std::vector<std::vector<std::size_t>> orders;
  std::vector<AnnotatedDocument> permutations;
  std::uint64_t seed = 0;
};

// k permutations, pairwise distinct whenever the document has at least k
// non-identity orderings.
PermutationSet MakePermutations(const AnnotatedDocument& doc, std::size_t k, std::uint64_t seed);

struct DocumentOutcome {
  std::string doc_id;
  std::size_t wins = 0;
  std::size_t ties = 0;
  std::size_t losses = 0;
};

struct AccuracyReport {
  ModelId model = ModelId::kEntropy0;
  std::vector<DocumentOutcome> per_document;  // sorted by doc_id
  std::size_t wins = 0;
  std::size_t ties = 0;
  std::size_t losses = 0;
  std::size_t skipped = 0;  // documents with fewer than two sentences
  // Empty when no comparison was made (k = 0 or nothing evaluable).
  std::optional<double> accuracy;
};

struct ModelSpec {
  ModelId model = ModelId::kEntropy0;
  ScoringConfig config;
};

// Scores every (original, permutation) pair. A win needs a strictly higher
// polarity-oriented score; ties are reported separately. Throws
// std::invalid_argument on an empty corpus.
std::vector<AccuracyReport> EvaluateReordering(std::span<const AnnotatedDocument> corpus,
                                               std::span<const ModelSpec> models, std::size_t k,
                                               std::uint64_t seed, unsigned threads = 1);
AccuracyReport EvaluateReordering(std::span<const AnnotatedDocument> corpus, const ModelSpec& model,
                                  std::size_t k, std::uint64_t seed, unsigned threads = 1);

// doc_id,model,wins,ties,losses
void WriteReportCsv(std::ostream& out, std::span<const AccuracyReport> reports);
// {"seed":..,"k":..,"models":{"atf":{"accuracy":..,"wins":..,...}}}
void WriteReportJson(std::ostream& out, std::span<const AccuracyReport> reports, std::size_t k,
                     std::uint64_t seed);

}  // namespace cohkit

#endif  // COHKIT_REORDER_H_
