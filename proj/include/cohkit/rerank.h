#ifndef COHKIT_RERANK_H_
#define COHKIT_RERANK_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cohkit/ir_metrics.h"
#include "cohkit/score.h"
#include "cohkit/trec.h"

namespace cohkit {

// Coherence of each candidate document, keyed by doc_id.
using ScoreTable = std::map<std::string, CoherenceScore>;

inline constexpr std::string_view kRerankTag = "coh-rerank";

// Per query: RSV and polarity-oriented coherence are min-max scaled to [0, 1]
// over the query's candidates (coherence over defined scores only; missing or
// undefined coherence counts as 0), mixed as
//   alpha * rsv + (1 - alpha) * coh,
// and re-sorted descending with ties kept in baseline order. The mixed value
// becomes the entry's score and ranks are renumbered.
RankedRun Rerank(const RankedRun& run, const ScoreTable& scores, double alpha,
                 std::string_view tag = kRerankTag);

// Run documents absent from the score table.
std::size_t CountUnscored(const RankedRun& run, const ScoreTable& scores);

// 0.50, 0.55, ..., 1.00
std::vector<double> DefaultAlphaGrid();

struct SweepRow {
  double alpha = 1.0;
  EvalSummary metrics;
};

std::vector<SweepRow> AlphaSweep(const RankedRun& run, const ScoreTable& scores, const Qrels& qrels,
                                 std::span<const double> alphas, const EvalOptions& options = {},
                                 unsigned threads = 1);

// alpha,mrr,p@10,map,err@20
void WriteSweepCsv(std::ostream& out, std::span<const SweepRow> rows);

// Query-to-fold assignment read from "qid fold" lines.
using FoldMap = std::map<std::string, std::string>;
FoldMap ParseFolds(std::istream& in);

enum class SweepMetric { kMrr, kPrecision, kMap, kErr };
std::optional<SweepMetric> ParseSweepMetric(std::string_view name);
double MetricValue(const EvalSummary& summary, SweepMetric metric);

struct FoldChoice {
  std::string fold;
  double alpha = 1.0;
  double train_value = 0.0;
  std::size_t test_queries = 0;
};

struct CrossValidation {
  RankedRun run;  // every query reranked with its own fold's alpha
  std::vector<FoldChoice> folds;
};

// For each fold, picks the alpha that maximizes `metric` on the other folds
// (ties go to the larger alpha) and applies it to the fold's own queries.
// Throws std::invalid_argument if a run query has no fold or a fold has no
// judged training queries.
CrossValidation CrossValidate(const RankedRun& run, const ScoreTable& scores, const Qrels& qrels,
                              const FoldMap& folds, std::span<const double> alphas, SweepMetric metric,
                              const EvalOptions& options = {});

// fold,alpha,train,queries
void WriteFoldCsv(std::ostream& out, std::span<const FoldChoice> folds);

}  // namespace cohkit

#endif  // COHKIT_RERANK_H_
