#include "cohkit/ir_metrics.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <spdlog/spdlog.h>

namespace cohkit {

namespace {

bool Relevant(const Qrels& qrels, const RunEntry& e) { return qrels.Grade(e.query_id, e.doc_id) >= 1; }

template <typename PerQuery>
double MeanOverJudged(const RankedRun& run, const Qrels& qrels, PerQuery&& per_query) {
  double total = 0.0;
  std::size_t n = 0;
  for (const auto& [query, ranking] : run.queries) {
    if (!qrels.HasQuery(query)) continue;
    total += per_query(ranking);
    ++n;
  }
  if (n == 0) throw std::invalid_argument("run and qrels share no query");
  return total / static_cast<double>(n);
}

}  // namespace

double ReciprocalRank(const std::vector<RunEntry>& ranking, const Qrels& qrels) {
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    if (Relevant(qrels, ranking[i])) return 1.0 / static_cast<double>(i + 1);
  }
  return 0.0;
}

double PrecisionAt(const std::vector<RunEntry>& ranking, const Qrels& qrels, std::size_t k) {
  if (k == 0) return 0.0;
  const std::size_t depth = std::min(k, ranking.size());
  std::size_t hits = 0;
  for (std::size_t i = 0; i < depth; ++i) hits += Relevant(qrels, ranking[i]) ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(k);
}

double AveragePrecision(const std::vector<RunEntry>& ranking, const Qrels& qrels, std::size_t depth) {
  if (ranking.empty()) return 0.0;
  const std::size_t relevant = qrels.RelevantCount(ranking.front().query_id);
  if (relevant == 0) return 0.0;
  const std::size_t limit = std::min(depth, ranking.size());
  std::size_t hits = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < limit; ++i) {
    if (!Relevant(qrels, ranking[i])) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(i + 1);
  }
  return sum / static_cast<double>(relevant);
}

double ExpectedReciprocalRank(const std::vector<RunEntry>& ranking, const Qrels& qrels,
                              std::size_t k, int max_grade) {
  const double scale = std::ldexp(1.0, max_grade);
  const std::size_t limit = std::min(k, ranking.size());
  double err = 0.0;
  double reach = 1.0;  // probability the user gets to rank r
  for (std::size_t r = 0; r < limit; ++r) {
    const int grade = qrels.Grade(ranking[r].query_id, ranking[r].doc_id);
    const double stop = (std::ldexp(1.0, grade) - 1.0) / scale;
    err += reach * stop / static_cast<double>(r + 1);
    reach *= 1.0 - stop;
  }
  return err;
}

EvalSummary Evaluate(const RankedRun& run, const Qrels& qrels, const EvalOptions& options) {
  EvalSummary summary;
  const int max_grade = options.max_grade.value_or(qrels.max_grade());
  for (const auto& [query, ranking] : run.queries) {
    if (!qrels.HasQuery(query)) {
      ++summary.skipped;
      continue;
    }
    summary.mrr += ReciprocalRank(ranking, qrels);
    summary.precision += PrecisionAt(ranking, qrels, options.precision_depth);
    summary.map += AveragePrecision(ranking, qrels, options.map_depth);
    summary.err += ExpectedReciprocalRank(ranking, qrels, options.err_depth, max_grade);
    ++summary.queries;
  }
  if (summary.queries == 0) throw std::invalid_argument("run and qrels share no query");
  if (summary.skipped > 0) spdlog::debug("{} run queries have no judgments and were skipped", summary.skipped);
  const double n = static_cast<double>(summary.queries);
  summary.mrr /= n;
  summary.precision /= n;
  summary.map /= n;
  summary.err /= n;
  return summary;
}

double Mrr(const RankedRun& run, const Qrels& qrels) {
  return MeanOverJudged(run, qrels, [&](const auto& r) { return ReciprocalRank(r, qrels); });
}

double MeanPrecisionAt(const RankedRun& run, const Qrels& qrels, std::size_t k) {
  return MeanOverJudged(run, qrels, [&](const auto& r) { return PrecisionAt(r, qrels, k); });
}

double MeanAveragePrecision(const RankedRun& run, const Qrels& qrels, std::size_t depth) {
  return MeanOverJudged(run, qrels, [&](const auto& r) { return AveragePrecision(r, qrels, depth); });
}

double MeanErrAt(const RankedRun& run, const Qrels& qrels, std::size_t k, int max_grade) {
  return MeanOverJudged(run, qrels,
                        [&](const auto& r) { return ExpectedReciprocalRank(r, qrels, k, max_grade); });
}

void WriteSummaryCsv(std::ostream& out, const EvalSummary& summary) {
  fmt::print(out, "metric,value\nmrr,{:.6f}\np@10,{:.6f}\nmap,{:.6f}\nerr@20,{:.6f}\nqueries,{}\n",
             summary.mrr, summary.precision, summary.map, summary.err, summary.queries);
}

}  // namespace cohkit
