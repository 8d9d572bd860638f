#ifndef COHKIT_IR_METRICS_H_
#define COHKIT_IR_METRICS_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "cohkit/trec.h"

namespace cohkit {

// Per-query measures. Binary relevance is grade >= 1.
double ReciprocalRank(const std::vector<RunEntry>& ranking, const Qrels& qrels);
double PrecisionAt(const std::vector<RunEntry>& ranking, const Qrels& qrels, std::size_t k);
// Divides by the number of relevant judged documents for the query.
double AveragePrecision(const std::vector<RunEntry>& ranking, const Qrels& qrels, std::size_t depth);
// Cascade model with R = (2^grade - 1) / 2^max_grade.
double ExpectedReciprocalRank(const std::vector<RunEntry>& ranking, const Qrels& qrels,
                              std::size_t k, int max_grade);

struct EvalOptions {
  std::size_t precision_depth = 10;
  std::size_t map_depth = 1000;
  std::size_t err_depth = 20;
  // Defaults to the largest grade in the qrels.
  std::optional<int> max_grade;
};

struct EvalSummary {
  double mrr = 0.0;
  double precision = 0.0;
  double map = 0.0;
  double err = 0.0;
  std::size_t queries = 0;
  // Run queries with no judgments.
  std::size_t skipped = 0;
};

// Means over the queries present in both run and qrels. Throws
// std::invalid_argument when there is no such query.
EvalSummary Evaluate(const RankedRun& run, const Qrels& qrels, const EvalOptions& options = {});

double Mrr(const RankedRun& run, const Qrels& qrels);
double MeanPrecisionAt(const RankedRun& run, const Qrels& qrels, std::size_t k = 10);
double MeanAveragePrecision(const RankedRun& run, const Qrels& qrels, std::size_t depth = 1000);
double MeanErrAt(const RankedRun& run, const Qrels& qrels, std::size_t k, int max_grade);

// metric,value rows with 6 decimals.
void WriteSummaryCsv(std::ostream& out, const EvalSummary& summary);

}  // namespace cohkit

#endif  // COHKIT_IR_METRICS_H_
