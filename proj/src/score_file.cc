#include "cohkit/score_file.h"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "cohkit/parallel.h"

namespace cohkit {

std::vector<ScoreRow> ScoreCorpus(std::span<const AnnotatedDocument> corpus,
                                  std::span<const ModelId> models, const ScoringConfig& config,
                                  unsigned threads) {
  std::vector<std::size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return corpus[a].doc_id < corpus[b].doc_id;
  });

  std::vector<ScoreRow> rows(corpus.size() * models.size());
  ParallelFor(order.size(), threads, [&](std::size_t slot) {
    const AnnotatedDocument& doc = corpus[order[slot]];
    for (std::size_t m = 0; m < models.size(); ++m) {
      rows[slot * models.size() + m] = ScoreRow{doc.doc_id, ScoreDocument(doc, models[m], config), 0.0};
    }
  });

  std::vector<CoherenceScore> scores;
  scores.reserve(rows.size());
  for (const ScoreRow& r : rows) scores.push_back(r.score);
  const std::vector<double> normalized = NormalizeCollection(scores);
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].normalized = normalized[i];
  return rows;
}

void WriteScoreCsv(std::ostream& out, std::span<const ScoreRow> rows) {
  out << "doc_id,model,raw,oriented,normalized,defined\n";
  for (const ScoreRow& r : rows) {
    const double oriented = Oriented(r.score).value_or(0.0);
    fmt::print(out, "{},{},{:.6f},{:.6f},{:.6f},{}\n", r.doc_id, ModelName(r.score.model), r.score.raw,
               oriented, r.normalized, r.score.defined ? 1 : 0);
  }
}

ScoreTable ReadScoreCsv(std::istream& in, ModelId model) {
  ScoreTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || (line_no == 1 && line.rfind("doc_id,", 0) == 0)) continue;
    std::vector<std::string> f;
    std::istringstream fields(line);
    for (std::string cell; std::getline(fields, cell, ',');) f.push_back(cell);
    if (f.size() != 6) {
      throw std::runtime_error(fmt::format("score file line {}: expected 6 columns", line_no));
    }
    const auto row_model = ParseModelName(f[1]);
    if (!row_model) throw std::runtime_error(fmt::format("score file line {}: unknown model '{}'", line_no, f[1]));
    if (*row_model != model) continue;
    CoherenceScore score = CoherenceScore::Undefined(model);
    try {
      score.raw = std::stod(f[2]);
      score.defined = f[5] == "1";
    } catch (const std::exception&) {
      throw std::runtime_error(fmt::format("score file line {}: bad number", line_no));
    }
    if (!table.emplace(f[0], score).second) {
      throw std::runtime_error(fmt::format("score file line {}: duplicate document {}", line_no, f[0]));
    }
  }
  return table;
}

double QuantizeRaw(double raw) { return std::stod(fmt::format("{:.6f}", raw)); }

}  // namespace cohkit
