#include "cohkit/rerank.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "cohkit/parallel.h"

namespace cohkit {

namespace {

// Min-max scaling of the present values. Absent values map to 0; when every
// present value is equal they all map to 1, so a lone defined score still
// outranks undefined ones.
std::vector<double> MinMax(const std::vector<std::optional<double>>& values) {
  double lo = 0.0, hi = 0.0;
  bool any = false;
  for (const auto& v : values) {
    if (!v) continue;
    lo = any ? std::min(lo, *v) : *v;
    hi = any ? std::max(hi, *v) : *v;
    any = true;
  }
  std::vector<double> out(values.size(), 0.0);
  if (!any) return out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i]) out[i] = hi > lo ? (*values[i] - lo) / (hi - lo) : 1.0;
  }
  return out;
}

}  // namespace

RankedRun Rerank(const RankedRun& run, const ScoreTable& scores, double alpha, std::string_view tag) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  RankedRun out;
  for (const auto& [query, entries] : run.queries) {
    std::vector<std::optional<double>> rsv, coh;
    rsv.reserve(entries.size());
    coh.reserve(entries.size());
    for (const RunEntry& e : entries) {
      rsv.emplace_back(e.rsv);
      auto it = scores.find(e.doc_id);
      coh.push_back(it == scores.end() ? std::nullopt : Oriented(it->second));
    }
    const std::vector<double> rsv_norm = MinMax(rsv);
    const std::vector<double> coh_norm = MinMax(coh);

    std::vector<double> mixed(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      mixed[i] = alpha * rsv_norm[i] + (1.0 - alpha) * coh_norm[i];
    }
    std::vector<std::size_t> order(entries.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return mixed[a] > mixed[b]; });

    auto& reranked = out.queries[query];
    reranked.reserve(entries.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      RunEntry e = entries[order[pos]];
      e.rank = pos + 1;
      e.rsv = mixed[order[pos]];
      e.tag = std::string(tag);
      reranked.push_back(std::move(e));
    }
  }
  return out;
}

std::size_t CountUnscored(const RankedRun& run, const ScoreTable& scores) {
  std::size_t missing = 0;
  for (const auto& [query, entries] : run.queries) {
    for (const RunEntry& e : entries) missing += scores.count(e.doc_id) == 0 ? 1 : 0;
  }
  return missing;
}

std::vector<double> DefaultAlphaGrid() {
  std::vector<double> grid;
  for (int step = 10; step <= 20; ++step) grid.push_back(step / 20.0);
  return grid;
}

std::vector<SweepRow> AlphaSweep(const RankedRun& run, const ScoreTable& scores, const Qrels& qrels,
                                 std::span<const double> alphas, const EvalOptions& options,
                                 unsigned threads) {
  std::vector<SweepRow> rows(alphas.size());
  ParallelFor(alphas.size(), threads, [&](std::size_t i) {
    rows[i] = SweepRow{alphas[i], Evaluate(Rerank(run, scores, alphas[i]), qrels, options)};
  });
  return rows;
}

void WriteSweepCsv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "alpha,mrr,p@10,map,err@20\n";
  for (const SweepRow& r : rows) {
    fmt::print(out, "{:.6f},{:.6f},{:.6f},{:.6f},{:.6f}\n", r.alpha, r.metrics.mrr,
               r.metrics.precision, r.metrics.map, r.metrics.err);
  }
}

FoldMap ParseFolds(std::istream& in) {
  FoldMap folds;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream fields(line);
    std::string query, fold, extra;
    if (!(fields >> query)) continue;
    if (!(fields >> fold) || (fields >> extra)) {
      throw TrecFormatError(number, "expected 'qid fold'");
    }
    if (!folds.emplace(query, fold).second) throw TrecFormatError(number, "query " + query + " assigned twice");
  }
  return folds;
}

std::optional<SweepMetric> ParseSweepMetric(std::string_view name) {
  if (name == "mrr") return SweepMetric::kMrr;
  if (name == "p@10") return SweepMetric::kPrecision;
  if (name == "map") return SweepMetric::kMap;
  if (name == "err@20") return SweepMetric::kErr;
  return std::nullopt;
}

double MetricValue(const EvalSummary& summary, SweepMetric metric) {
  switch (metric) {
    case SweepMetric::kMrr: return summary.mrr;
    case SweepMetric::kPrecision: return summary.precision;
    case SweepMetric::kMap: return summary.map;
    case SweepMetric::kErr: return summary.err;
  }
  return 0.0;
}

CrossValidation CrossValidate(const RankedRun& run, const ScoreTable& scores, const Qrels& qrels,
                              const FoldMap& folds, std::span<const double> alphas, SweepMetric metric,
                              const EvalOptions& options) {
  if (alphas.empty()) throw std::invalid_argument("empty alpha grid");
  std::set<std::string> names;
  for (const auto& [query, entries] : run.queries) {
    const auto it = folds.find(query);
    if (it == folds.end()) throw std::invalid_argument("query " + query + " has no fold");
    names.insert(it->second);
  }
  CrossValidation cv;
  for (const std::string& fold : names) {
    RankedRun train, test;
    for (const auto& [query, entries] : run.queries) {
      (folds.at(query) == fold ? test : train).queries.emplace(query, entries);
    }
    bool judged = false;
    for (const auto& [query, entries] : train.queries) judged |= qrels.HasQuery(query);
    if (!judged) throw std::invalid_argument("fold " + fold + " leaves no judged training query");

    FoldChoice choice{fold, alphas.front(), -1.0, test.queries.size()};
    for (double alpha : alphas) {
      const double value = MetricValue(Evaluate(Rerank(train, scores, alpha), qrels, options), metric);
      if (value > choice.train_value || (value == choice.train_value && alpha > choice.alpha)) {
        choice.alpha = alpha;
        choice.train_value = value;
      }
    }
    for (auto& [query, entries] : Rerank(test, scores, choice.alpha).queries) {
      cv.run.queries.emplace(query, std::move(entries));
    }
    cv.folds.push_back(choice);
  }
  return cv;
}

void WriteFoldCsv(std::ostream& out, std::span<const FoldChoice> folds) {
  out << "fold,alpha,train,queries\n";
  for (const FoldChoice& f : folds) {
    fmt::print(out, "{},{:.6f},{:.6f},{}\n", f.fold, f.alpha, f.train_value, f.test_queries);
  }
}

}  // namespace cohkit
