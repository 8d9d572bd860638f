#ifndef COHKIT_SCORE_FILE_H_
#define COHKIT_SCORE_FILE_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cohkit/document.h"
#include "cohkit/rerank.h"
#include "cohkit/scorer.h"

namespace cohkit {

struct ScoreRow {
  std::string doc_id;
  CoherenceScore score;
  double normalized = 0.0;
};

// Scores every document under every model; rows are ordered by doc_id, then
// by the order of `models`. Normalization runs over the whole collection.
std::vector<ScoreRow> ScoreCorpus(std::span<const AnnotatedDocument> corpus,
                                  std::span<const ModelId> models, const ScoringConfig& config,
                                  unsigned threads = 1);

// doc_id,model,raw,oriented,normalized,defined with 6 decimals.
void WriteScoreCsv(std::ostream& out, std::span<const ScoreRow> rows);

// Rows of one model from a score CSV, keyed by doc_id. Throws
// std::runtime_error with the line number on malformed input.
ScoreTable ReadScoreCsv(std::istream& in, ModelId model);

// A raw value as it reads back from a score file.
double QuantizeRaw(double raw);

}  // namespace cohkit

#endif  // COHKIT_SCORE_FILE_H_
