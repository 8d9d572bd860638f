#include "cli.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "cohkit/graph.h"
#include "cohkit/grid.h"
#include "cohkit/ir_metrics.h"
#include "cohkit/jsonl.h"
#include "cohkit/parallel.h"
#include "cohkit/reorder.h"
#include "cohkit/rerank.h"
#include "cohkit/score_file.h"
#include "cohkit/trec.h"

namespace cohkit::cli {

namespace {

const std::set<std::string> kCommands = {"score", "reorder-eval", "rerank", "ir-eval", "export-graph"};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::vector<std::string> models;
  int order = 0;
  std::string mode = "ngram";
  std::string weighting;
  double damping = 0.85;
  std::size_t max_terms = 60;
  bool strip_plural = false;
  unsigned threads = DefaultThreads();
  std::string out;

  std::optional<std::uint64_t> seed;
  std::size_t k = 20;
  std::string json_out;

  std::string run;
  std::string scores;
  std::string qrels;
  double alpha = 0.9;
  std::string alpha_grid;
  std::string sweep_out;
  std::string metrics_out;
  std::string folds;
  std::string cv_metric = "map";
  std::string folds_out;
  std::optional<int> max_grade;
};

void InitLogging() {
  static std::once_flag once;
  std::call_once(once, [] {
    auto logger = spdlog::stderr_color_mt("cohkit");
    spdlog::set_default_logger(logger);
    spdlog::set_pattern("[%l] %v");
    if (const char* level = std::getenv("COHKIT_LOG")) {
      spdlog::set_level(spdlog::level::from_str(level));
    } else {
      spdlog::set_level(spdlog::level::warn);
    }
  });
}

// Output stream bound to a path, or stdout when the path is empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw std::runtime_error("cannot write " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<ModelId> ResolveModels(const Options& o) {
  std::vector<std::string> names = o.models;
  if (names.empty()) names = {"all"};
  std::vector<ModelId> models;
  for (const std::string& name : names) {
    if (name == "all") {
      const auto all = AllModels(o.order);
      models.insert(models.end(), all.begin(), all.end());
    } else if (name == "entropy") {
      models.push_back(EntropyModel(o.order));
    } else if (auto id = ParseModelName(name)) {
      models.push_back(*id);
    } else {
      throw UsageError("unknown model '" + name + "'");
    }
  }
  std::vector<ModelId> unique;
  for (ModelId m : models) {
    if (std::find(unique.begin(), unique.end(), m) == unique.end()) unique.push_back(m);
  }
  return unique;
}

ScoringConfig MakeScoringConfig(const Options& o, Weighting default_weighting) {
  ScoringConfig config;
  config.entropy_mode = o.mode == "conditional" ? EntropyMode::kConditional : EntropyMode::kNgram;
  config.graph.damping = o.damping;
  config.graph.weighting = default_weighting;
  if (!o.weighting.empty()) config.graph.weighting = *ParseWeighting(o.weighting);
  return config;
}

std::vector<AnnotatedDocument> LoadCorpus(const Options& o) {
  std::vector<AnnotatedDocument> corpus = ReadCorpusFile(o.input, IngestOptions{o.strip_plural});
  for (auto& doc : corpus) doc = TruncateSentences(doc, o.max_terms);
  return corpus;
}

std::vector<double> ParseAlphaGrid(const std::string& text) {
  if (text == "default") return DefaultAlphaGrid();
  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    double lo = 0, hi = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0 || hi < lo) {
      throw UsageError("alpha grid must look like lo:hi:step");
    }
    const auto steps = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
    for (long i = 0; i <= steps; ++i) grid.push_back(lo + static_cast<double>(i) * step);
  } else {
    std::istringstream in(text);
    for (std::string cell; std::getline(in, cell, ',');) grid.push_back(std::stod(cell));
  }
  for (double a : grid) {
    if (a < 0.0 || a > 1.0) throw UsageError("alpha values must lie in [0, 1]");
  }
  return grid;
}

int CmdScore(const Options& o) {
  const auto corpus = LoadCorpus(o);
  const auto models = ResolveModels(o);
  const auto rows = ScoreCorpus(corpus, models, MakeScoringConfig(o, Weighting::kUnweighted), o.threads);
  Output out(o.out);
  WriteScoreCsv(out.stream(), rows);
  spdlog::info("scored {} documents under {} models", corpus.size(), models.size());
  return 0;
}

int CmdReorderEval(const Options& o) {
  if (!o.seed) throw UsageError("reorder-eval requires --seed");
  const auto corpus = LoadCorpus(o);
  const ScoringConfig config = MakeScoringConfig(o, Weighting::kDistanceDiscounted);
  std::vector<ModelSpec> specs;
  for (ModelId m : ResolveModels(o)) specs.push_back({m, config});
  const auto reports = EvaluateReordering(corpus, specs, o.k, *o.seed, o.threads);
  if (!reports.empty() && reports.front().skipped > 0) {
    spdlog::warn("{} documents with fewer than two sentences were skipped", reports.front().skipped);
  }
  {
    Output out(o.out);
    WriteReportCsv(out.stream(), reports);
  }
  std::string json_path = o.json_out;
  if (json_path.empty() && !o.out.empty()) {
    const auto dot = o.out.find_last_of('.');
    json_path = (dot == std::string::npos ? o.out : o.out.substr(0, dot)) + ".json";
  }
  if (json_path.empty()) {
    WriteReportJson(std::cerr, reports, o.k, *o.seed);
  } else {
    std::ofstream js(json_path);
    if (!js) throw std::runtime_error("cannot write " + json_path);
    WriteReportJson(js, reports, o.k, *o.seed);
  }
  return 0;
}

ScoreTable LoadScores(const Options& o, ModelId model) {
  if (!o.scores.empty()) {
    std::ifstream in(o.scores);
    if (!in) throw std::runtime_error("cannot open " + o.scores);
    return ReadScoreCsv(in, model);
  }
  const auto corpus = LoadCorpus(o);
  const std::vector<ModelId> models = {model};
  ScoreTable table;
  for (const ScoreRow& row : ScoreCorpus(corpus, models, MakeScoringConfig(o, Weighting::kUnweighted),
                                         o.threads)) {
    CoherenceScore score = row.score;
    score.raw = QuantizeRaw(score.raw);
    table.emplace(row.doc_id, score);
  }
  return table;
}

void WriteMetrics(const Options& o, const RankedRun& run, const Qrels& qrels, const EvalOptions& eval) {
  const EvalSummary summary = Evaluate(run, qrels, eval);
  if (summary.skipped > 0) spdlog::warn("{} run queries have no judgments and were skipped", summary.skipped);
  if (o.metrics_out.empty()) {
    WriteSummaryCsv(std::cerr, summary);
  } else {
    Output metrics(o.metrics_out);
    WriteSummaryCsv(metrics.stream(), summary);
  }
}

int CmdRerank(const Options& o) {
  if (o.input.empty() == o.scores.empty()) throw UsageError("rerank needs exactly one of --in or --scores");
  if (o.alpha < 0.0 || o.alpha > 1.0) throw UsageError("--alpha must lie in [0, 1]");
  const auto models = ResolveModels(o);
  if (models.size() != 1) throw UsageError("rerank takes a single --model");
  const RankedRun run = ReadRunFile(o.run);
  const ScoreTable scores = LoadScores(o, models.front());
  if (const std::size_t missing = CountUnscored(run, scores); missing > 0) {
    spdlog::warn("{} run entries have no coherence score and count as undefined", missing);
  }
  if (!o.folds.empty()) {
    if (o.qrels.empty()) throw UsageError("--folds needs --qrels");
    const auto metric = ParseSweepMetric(o.cv_metric);
    if (!metric) throw UsageError("--cv-metric must be one of mrr, p@10, map, err@20");
    std::ifstream in(o.folds);
    if (!in) throw std::runtime_error("cannot open " + o.folds);
    const FoldMap folds = ParseFolds(in);
    const Qrels qrels = ReadQrelsFile(o.qrels);
    EvalOptions eval;
    eval.max_grade = o.max_grade;
    const auto grid = ParseAlphaGrid(o.alpha_grid.empty() ? "default" : o.alpha_grid);
    const CrossValidation cv = CrossValidate(run, scores, qrels, folds, grid, *metric, eval);
    {
      Output out(o.out);
      WriteRun(out.stream(), cv.run);
    }
    WriteMetrics(o, cv.run, qrels, eval);
    if (o.folds_out.empty()) {
      WriteFoldCsv(std::cerr, cv.folds);
    } else {
      Output fold_csv(o.folds_out);
      WriteFoldCsv(fold_csv.stream(), cv.folds);
    }
    return 0;
  }

  const RankedRun reranked = Rerank(run, scores, o.alpha);
  {
    Output out(o.out);
    WriteRun(out.stream(), reranked);
  }
  if (o.qrels.empty()) {
    if (!o.alpha_grid.empty()) throw UsageError("--alpha-grid needs --qrels");
    return 0;
  }
  const Qrels qrels = ReadQrelsFile(o.qrels);
  EvalOptions eval;
  eval.max_grade = o.max_grade;
  WriteMetrics(o, reranked, qrels, eval);
  if (!o.alpha_grid.empty()) {
    if (o.sweep_out.empty()) throw UsageError("--alpha-grid needs --sweep-out");
    const auto grid = ParseAlphaGrid(o.alpha_grid);
    Output sweep(o.sweep_out);
    WriteSweepCsv(sweep.stream(), AlphaSweep(run, scores, qrels, grid, eval, o.threads));
  }
  return 0;
}

int CmdIrEval(const Options& o) {
  const RankedRun run = ReadRunFile(o.run);
  const Qrels qrels = ReadQrelsFile(o.qrels);
  EvalOptions eval;
  eval.max_grade = o.max_grade;
  const EvalSummary summary = Evaluate(run, qrels, eval);
  if (summary.skipped > 0) spdlog::warn("{} run queries have no judgments and were skipped", summary.skipped);
  Output out(o.out);
  WriteSummaryCsv(out.stream(), summary);
  return 0;
}

int CmdExportGraph(const Options& o) {
  auto corpus = LoadCorpus(o);
  std::stable_sort(corpus.begin(), corpus.end(),
                   [](const auto& a, const auto& b) { return a.doc_id < b.doc_id; });
  const Weighting mode = o.weighting.empty() ? Weighting::kUnweighted : *ParseWeighting(o.weighting);
  Output out(o.out);
  for (const AnnotatedDocument& doc : corpus) {
    const ProjectionGraph graph = Project(BuildBipartite(BuildGrid(doc)), mode);
    fmt::print(out.stream(), "# {} nodes={} weighting={}\n", doc.doc_id, graph.node_count(),
               WeightingName(mode));
    WriteEdgeList(out.stream(), graph);
  }
  return 0;
}

void AddCorpusOptions(CLI::App* cmd, Options& o) {
  cmd->add_option("--in", o.input, "Interchange JSONL corpus")->check(CLI::ExistingFile);
  cmd->add_option("--max-terms", o.max_terms, "Cut sentences after this many terms")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--strip-plural", o.strip_plural, "Merge entity keys that differ by a trailing s");
}

void AddModelOptions(CLI::App* cmd, Options& o) {
  cmd->add_option("--model", o.models, "Model name, 'entropy', or 'all'")->delimiter(',');
  cmd->add_option("--order", o.order, "Entropy order k (uses k+1-grams)")->check(CLI::Range(0, 2));
  cmd->add_option("--mode", o.mode, "Entropy estimator")->check(CLI::IsMember({"ngram", "conditional"}));
  cmd->add_option("--weighting", o.weighting, "Projection weighting")
      ->check(CLI::IsMember({"unweighted", "shared", "distance"}));
  cmd->add_option("--damping", o.damping, "PageRank damping factor")->check(CLI::Range(0.0, 1.0));
}

}  // namespace

std::vector<std::string> ExpandManifest(const std::vector<std::string>& args) {
  std::string manifest_path;
  std::vector<std::string> rest;
  std::string command;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--manifest" && i + 1 < args.size()) {
      manifest_path = args[++i];
    } else if (a.rfind("--manifest=", 0) == 0) {
      manifest_path = a.substr(11);
    } else if (command.empty() && kCommands.count(a) > 0) {
      command = a;
    } else {
      rest.push_back(a);
    }
  }
  if (manifest_path.empty()) return args;

  std::ifstream in(manifest_path);
  if (!in) throw UsageError("cannot open manifest " + manifest_path);
  nlohmann::json manifest;
  try {
    in >> manifest;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("invalid manifest: ") + e.what());
  }
  if (!manifest.is_object()) throw UsageError("manifest must be a JSON object");

  std::vector<std::string> flags;
  for (const auto& [key, value] : manifest.items()) {
    if (key == "command") {
      if (command.empty()) command = value.get<std::string>();
      continue;
    }
    const std::string flag = "--" + key;
    if (value.is_boolean()) {
      if (value.get<bool>()) flags.push_back(flag);
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& item : value) {
        if (!joined.empty()) joined += ',';
        joined += item.is_string() ? item.get<std::string>() : item.dump();
      }
      flags.push_back(flag);
      flags.push_back(joined);
    } else {
      flags.push_back(flag);
      flags.push_back(value.is_string() ? value.get<std::string>() : value.dump());
    }
  }
  std::vector<std::string> out = {args.front()};
  if (!command.empty()) out.push_back(command);
  out.insert(out.end(), flags.begin(), flags.end());
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

int Run(std::vector<std::string> args) {
  InitLogging();
  Options o;
  CLI::App app{"Entity-based document coherence scoring and evaluation", "cohkit"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  app.add_option("--manifest", "JSON file mirroring the command-line flags");

  auto* score = app.add_subcommand("score", "Score documents under one or more coherence models");
  AddCorpusOptions(score, o);
  AddModelOptions(score, o);
  score->get_option("--in")->required();
  score->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  score->add_option("--out", o.out, "Score CSV (default stdout)");

  auto* reorder = app.add_subcommand("reorder-eval", "Sentence-reordering accuracy");
  AddCorpusOptions(reorder, o);
  AddModelOptions(reorder, o);
  reorder->get_option("--in")->required();
  reorder->add_option("--seed", o.seed, "RNG seed")->required();
  reorder->add_option("--k", o.k, "Permutations per document");
  reorder->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  reorder->add_option("--out", o.out, "Per-document CSV (default stdout)");
  reorder->add_option("--json", o.json_out, "Summary JSON (default: --out with .json)");

  auto* rerank = app.add_subcommand("rerank", "Interpolate retrieval scores with coherence");
  AddCorpusOptions(rerank, o);
  AddModelOptions(rerank, o);
  rerank->add_option("--run", o.run, "TREC run file")->required()->check(CLI::ExistingFile);
  rerank->add_option("--scores", o.scores, "Score CSV from 'score'")->check(CLI::ExistingFile);
  rerank->add_option("--qrels", o.qrels, "TREC qrels")->check(CLI::ExistingFile);
  rerank->add_option("--alpha", o.alpha, "Weight of the retrieval score");
  rerank->add_option("--alpha-grid", o.alpha_grid, "'default', lo:hi:step, or a comma list");
  rerank->add_option("--max-grade", o.max_grade, "Grade ceiling for ERR");
  rerank->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  rerank->add_option("--out", o.out, "Reranked run (default stdout)");
  rerank->add_option("--metrics-out", o.metrics_out, "Metrics CSV (default stderr)");
  rerank->add_option("--sweep-out", o.sweep_out, "Alpha sweep CSV");
  rerank->add_option("--folds", o.folds, "'qid fold' file; picks alpha per fold on the other folds")
      ->check(CLI::ExistingFile);
  rerank->add_option("--cv-metric", o.cv_metric, "Metric maximized when picking alpha");
  rerank->add_option("--folds-out", o.folds_out, "Per-fold alpha CSV (default stderr)");

  auto* ir = app.add_subcommand("ir-eval", "MRR, P@10, MAP and ERR@20 of a run");
  ir->add_option("--run", o.run)->required()->check(CLI::ExistingFile);
  ir->add_option("--qrels", o.qrels)->required()->check(CLI::ExistingFile);
  ir->add_option("--max-grade", o.max_grade, "Grade ceiling for ERR");
  ir->add_option("--out", o.out, "Metrics CSV (default stdout)");

  auto* graph = app.add_subcommand("export-graph", "Dump projection graphs as edge lists");
  AddCorpusOptions(graph, o);
  graph->get_option("--in")->required();
  graph->add_option("--weighting", o.weighting)->check(CLI::IsMember({"unweighted", "shared", "distance"}));
  graph->add_option("--out", o.out, "Edge list (default stdout)");

  try {
    args = ExpandManifest(args);
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    spdlog::error("{}", e.what());
    return 2;
  }

  try {
    if (score->parsed()) return CmdScore(o);
    if (reorder->parsed()) return CmdReorderEval(o);
    if (rerank->parsed()) return CmdRerank(o);
    if (ir->parsed()) return CmdIrEval(o);
    if (graph->parsed()) return CmdExportGraph(o);
  } catch (const UsageError& e) {
    spdlog::error("{}", e.what());
    return 2;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return 2;
}

}  // namespace cohkit::cli
