#include "cohkit/reorder.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "cohkit/parallel.h"

namespace cohkit {

namespace {

std::uint64_t Fnv1a(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Unbiased draw from [0, bound) by rejection; avoids the
// implementation-defined uniform_int_distribution.
std::size_t UniformBelow(std::mt19937_64& rng, std::size_t bound) {
  const std::uint64_t b = bound;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % b;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return static_cast<std::size_t>(x % b);
}

// Number of non-identity orderings, saturating at `cap`.
std::size_t NonIdentityOrderings(std::size_t n, std::size_t cap) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    f *= i;
    if (f > cap) return cap;
  }
  return std::min(f - 1, cap);
}

double Round6(double x) { return std::round(x * 1e6) / 1e6; }

}  // namespace

std::mt19937_64 DocumentRng(std::uint64_t seed, std::string_view doc_id) {
  const std::uint64_t h = Fnv1a(doc_id);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return std::mt19937_64(seq);
}

std::vector<std::size_t> RandomNonIdentityOrder(std::size_t n, std::mt19937_64& rng) {
  if (n < 2) throw DocumentError("cannot permute fewer than two sentences");
  std::vector<std::size_t> order(n);
  for (;;) {
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[UniformBelow(rng, i + 1)]);
    if (!std::is_sorted(order.begin(), order.end())) return order;
  }
}

AnnotatedDocument ApplyOrder(const AnnotatedDocument& doc, std::span<const std::size_t> order) {
  if (order.size() != doc.sentences.size()) throw std::invalid_argument("order size mismatch");
  AnnotatedDocument out;
  out.doc_id = doc.doc_id;
  out.sentences.reserve(order.size());
  for (std::size_t from : order) out.sentences.push_back(doc.sentences.at(from));
  Reindex(out);
  return out;
}

AnnotatedDocument PermuteDocument(const AnnotatedDocument& doc, std::mt19937_64& rng) {
  if (doc.sentences.size() < 2) {
    throw DocumentError(doc.doc_id + ": cannot permute a document with fewer than two sentences");
  }
  return ApplyOrder(doc, RandomNonIdentityOrder(doc.sentences.size(), rng));
}

PermutationSet MakePermutations(const AnnotatedDocument& doc, std::size_t k, std::uint64_t seed) {
  PermutationSet set{doc.doc_id, doc, {}, {}, seed};
  if (k == 0) return set;
  if (doc.sentences.size() < 2) {
    throw DocumentError(doc.doc_id + ": cannot permute a document with fewer than two sentences");
  }
  std::mt19937_64 rng = DocumentRng(seed, doc.doc_id);
  const bool distinct = NonIdentityOrderings(doc.sentences.size(), k) >= k;
  std::set<std::vector<std::size_t>> seen;
  while (set.orders.size() < k) {
    auto order = RandomNonIdentityOrder(doc.sentences.size(), rng);
    if (distinct && !seen.insert(order).second) continue;
    set.permutations.push_back(ApplyOrder(doc, order));
    set.orders.push_back(std::move(order));
  }
  return set;
}

std::vector<AccuracyReport> EvaluateReordering(std::span<const AnnotatedDocument> corpus,
                                               std::span<const ModelSpec> models, std::size_t k,
                                               std::uint64_t seed, unsigned threads) {
  if (corpus.empty()) throw std::invalid_argument("reordering evaluation needs a non-empty corpus");

  // outcomes[doc][model]; unset optional marks a skipped document
  std::vector<std::optional<std::vector<DocumentOutcome>>> outcomes(corpus.size());
  ParallelFor(corpus.size(), threads, [&](std::size_t d) {
    const AnnotatedDocument& doc = corpus[d];
    if (doc.sentences.size() < 2) return;
    const PermutationSet set = MakePermutations(doc, k, seed);
    std::vector<DocumentOutcome> per_model;
    for (const ModelSpec& spec : models) {
      DocumentOutcome outcome{doc.doc_id};
      const CoherenceScore original = ScoreDocument(doc, spec.model, spec.config);
      for (const AnnotatedDocument& permuted : set.permutations) {
        const int cmp = CompareCoherence(original, ScoreDocument(permuted, spec.model, spec.config));
        if (cmp > 0) {
          ++outcome.wins;
        } else if (cmp == 0) {
          ++outcome.ties;
        } else {
          ++outcome.losses;
        }
      }
      per_model.push_back(std::move(outcome));
    }
    outcomes[d] = std::move(per_model);
  });

  std::vector<AccuracyReport> reports;
  for (std::size_t m = 0; m < models.size(); ++m) {
    AccuracyReport report;
    report.model = models[m].model;
    for (const auto& doc_outcomes : outcomes) {
      if (!doc_outcomes) {
        ++report.skipped;
        continue;
      }
      const DocumentOutcome& o = (*doc_outcomes)[m];
      report.wins += o.wins;
      report.ties += o.ties;
      report.losses += o.losses;
      report.per_document.push_back(o);
    }
    std::stable_sort(report.per_document.begin(), report.per_document.end(),
                     [](const DocumentOutcome& a, const DocumentOutcome& b) { return a.doc_id < b.doc_id; });
    const std::size_t compared = report.wins + report.ties + report.losses;
    if (compared > 0) report.accuracy = static_cast<double>(report.wins) / static_cast<double>(compared);
    reports.push_back(std::move(report));
  }
  return reports;
}

AccuracyReport EvaluateReordering(std::span<const AnnotatedDocument> corpus, const ModelSpec& model,
                                  std::size_t k, std::uint64_t seed, unsigned threads) {
  return EvaluateReordering(corpus, std::span<const ModelSpec>(&model, 1), k, seed, threads).front();
}

void WriteReportCsv(std::ostream& out, std::span<const AccuracyReport> reports) {
  out << "doc_id,model,wins,ties,losses\n";
  for (const AccuracyReport& r : reports) {
    for (const DocumentOutcome& o : r.per_document) {
      fmt::print(out, "{},{},{},{},{}\n", o.doc_id, ModelName(r.model), o.wins, o.ties, o.losses);
    }
  }
}

void WriteReportJson(std::ostream& out, std::span<const AccuracyReport> reports, std::size_t k,
                     std::uint64_t seed) {
  nlohmann::ordered_json js;
  js["seed"] = seed;
  js["k"] = k;
  js["models"] = nlohmann::ordered_json::object();
  for (const AccuracyReport& r : reports) {
    nlohmann::ordered_json m;
    m["accuracy"] = r.accuracy ? nlohmann::ordered_json(Round6(*r.accuracy)) : nlohmann::ordered_json();
    m["wins"] = r.wins;
    m["ties"] = r.ties;
    m["losses"] = r.losses;
    m["documents"] = r.per_document.size();
    m["skipped"] = r.skipped;
    js["models"][std::string(ModelName(r.model))] = std::move(m);
  }
  out << js.dump(2) << '\n';
}

}  // namespace cohkit
