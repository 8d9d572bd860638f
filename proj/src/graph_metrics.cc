#include "cohkit/graph_metrics.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <queue>

namespace cohkit {

namespace {

std::vector<double> UpdatePageRank(const ProjectionGraph& graph, const std::vector<double>& pr,
                                   const std::vector<double>& strength, double damping) {
  std::vector<double> next(graph.node_count(), 1.0 - damping);
  for (std::size_t v = 0; v < graph.node_count(); ++v) {
    double mass = 0.0;
    for (const auto& [u, w] : graph.neighbors(v)) mass += pr[u] * w / strength[u];
    next[v] += damping * mass;
  }
  return next;
}

std::vector<double> Strengths(const ProjectionGraph& graph) {
  std::vector<double> s(graph.node_count());
  for (std::size_t v = 0; v < graph.node_count(); ++v) s[v] = graph.strength(v);
  return s;
}

bool NearlyEqual(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

// Sorted column indices per row.
std::vector<std::vector<std::size_t>> RowColumns(const EntityGrid& grid) {
  std::vector<std::vector<std::size_t>> rows(grid.sentence_count());
  for (std::size_t i = 0; i < grid.sentence_count(); ++i) {
    for (const auto& [column, role] : grid.row(i)) rows[i].push_back(column);
  }
  return rows;
}

std::size_t IntersectionSize(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n, ++i, ++j;
    }
  }
  return n;
}

std::size_t SharedEntityCount(const std::vector<std::vector<std::size_t>>& rows,
                              std::size_t columns) {
  std::vector<std::size_t> seen(columns, 0);
  for (const auto& row : rows) {
    for (std::size_t c : row) ++seen[c];
  }
  return static_cast<std::size_t>(std::count_if(seen.begin(), seen.end(),
                                                [](std::size_t k) { return k >= 2; }));
}

}  // namespace

std::vector<double> PageRank(const ProjectionGraph& graph, const GraphMetricConfig& config) {
  const std::vector<double> strength = Strengths(graph);
  std::vector<double> pr(graph.node_count(), 1.0);
  for (int iter = 0; iter < config.pagerank_max_iters; ++iter) {
    std::vector<double> next = UpdatePageRank(graph, pr, strength, config.damping);
    double change = 0.0;
    for (std::size_t v = 0; v < pr.size(); ++v) change = std::max(change, std::abs(next[v] - pr[v]));
    pr = std::move(next);
    if (change < config.pagerank_epsilon) break;
  }
  return pr;
}

double PageRankResidual(const ProjectionGraph& graph, const std::vector<double>& pr,
                        double damping) {
  const std::vector<double> next = UpdatePageRank(graph, pr, Strengths(graph), damping);
  double residual = 0.0;
  for (std::size_t v = 0; v < pr.size(); ++v) residual = std::max(residual, std::abs(next[v] - pr[v]));
  return residual;
}

CoherenceScore PageRankMedian(const ProjectionGraph& graph, const GraphMetricConfig& config) {
  if (graph.node_count() == 0) return CoherenceScore::Undefined(ModelId::kPageRank);
  std::vector<double> pr = PageRank(graph, config);
  std::sort(pr.begin(), pr.end());
  const std::size_t n = pr.size();
  const double median = n % 2 == 1 ? pr[n / 2] : 0.5 * (pr[n / 2 - 1] + pr[n / 2]);
  return CoherenceScore::Defined(ModelId::kPageRank, median);
}

std::vector<double> LocalClustering(const ProjectionGraph& graph) {
  std::vector<double> cc(graph.node_count(), 0.0);
  for (std::size_t u = 0; u < graph.node_count(); ++u) {
    const auto& nbrs = graph.neighbors(u);
    const std::size_t k = nbrs.size();
    if (k < 2) continue;
    std::size_t closed = 0;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if (graph.HasEdge(nbrs[a].node, nbrs[b].node)) ++closed;
      }
    }
    cc[u] = static_cast<double>(closed) / (static_cast<double>(k * (k - 1)) / 2.0);
  }
  return cc;
}

CoherenceScore ClusteringCoefficient(const ProjectionGraph& graph) {
  if (graph.node_count() == 0) return CoherenceScore::Undefined(ModelId::kClusteringCoef);
  const std::vector<double> cc = LocalClustering(graph);
  double total = 0.0;
  for (double c : cc) total += c;
  return CoherenceScore::Defined(ModelId::kClusteringCoef,
                                 total / static_cast<double>(graph.node_count()));
}

std::vector<double> Betweenness(const ProjectionGraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<double> centrality(n, 0.0);
  constexpr double kInf = std::numeric_limits<double>::infinity();

  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::vector<std::size_t>> preds(n);
    std::vector<double> sigma(n, 0.0);
    std::vector<double> dist(n, kInf);
    std::vector<bool> settled(n, false);
    std::vector<std::size_t> order;  // non-decreasing distance from s
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;

    sigma[s] = 1.0;
    dist[s] = 0.0;
    queue.emplace(0.0, s);
    while (!queue.empty()) {
      const auto [d, v] = queue.top();
      queue.pop();
      if (settled[v] || d > dist[v]) continue;
      settled[v] = true;
      order.push_back(v);
      for (const auto& [w, weight] : graph.neighbors(v)) {
        if (settled[w]) continue;
        const double candidate = dist[v] + 1.0 / weight;
        if (dist[w] != kInf && NearlyEqual(candidate, dist[w])) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        } else if (candidate < dist[w]) {
          dist[w] = candidate;
          sigma[w] = sigma[v];
          preds[w] = {v};
          queue.emplace(candidate, w);
        }
      }
    }

    std::vector<double> delta(n, 0.0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const std::size_t w = *it;
      for (std::size_t v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) centrality[w] += delta[w];
    }
  }
  return centrality;
}

CoherenceScore AverageBetweenness(const ProjectionGraph& graph) {
  if (graph.node_count() == 0) return CoherenceScore::Undefined(ModelId::kBetweenness);
  double total = 0.0;
  for (double b : Betweenness(graph)) total += b;
  return CoherenceScore::Defined(ModelId::kBetweenness,
                                 total / static_cast<double>(graph.node_count()));
}

CoherenceScore EntityDistance(const AnnotatedDocument& doc) {
  struct Occurrences {
    std::vector<std::size_t> offsets;
    std::size_t first_sentence = 0;
    bool multi_sentence = false;
  };
  std::map<std::string, Occurrences> entities;
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    const Sentence& s = doc.sentences[i];
    for (const EntityMention& m : s.mentions) {
      auto [it, fresh] = entities.try_emplace(m.entity_id);
      if (fresh) it->second.first_sentence = i;
      if (it->second.first_sentence != i) it->second.multi_sentence = true;
      it->second.offsets.push_back(s.tokens.at(m.token_index).doc_offset);
    }
  }
  double total = 0.0;
  bool any = false;
  for (auto& [entity, occ] : entities) {
    if (!occ.multi_sentence) continue;
    any = true;
    std::sort(occ.offsets.begin(), occ.offsets.end());
    for (std::size_t j = 1; j < occ.offsets.size(); ++j) {
      total += static_cast<double>(occ.offsets[j] - occ.offsets[j - 1]);
    }
  }
  if (!any || total <= 0.0) return CoherenceScore::Undefined(ModelId::kEntityDistance);
  const double average = total / static_cast<double>(doc.sentences.size());
  return CoherenceScore::Defined(ModelId::kEntityDistance, 1.0 / average);
}

CoherenceScore AdjacentTopicFlow(const EntityGrid& grid) {
  const std::size_t n = grid.sentence_count();
  if (n < 2) return CoherenceScore::Undefined(ModelId::kAtf);
  const auto rows = RowColumns(grid);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t shared = IntersectionSize(rows[i], rows[i + 1]);
    const std::size_t joint = rows[i].size() + rows[i + 1].size() - shared;
    if (joint > 0) total += 1.0 / static_cast<double>(joint);
  }
  return CoherenceScore::Defined(ModelId::kAtf, total / static_cast<double>(n - 1));
}

CoherenceScore AdjacentWeightedTopicFlow(const EntityGrid& grid) {
  const std::size_t n = grid.sentence_count();
  if (n < 2) return CoherenceScore::Undefined(ModelId::kAwtf);
  const auto rows = RowColumns(grid);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    total += static_cast<double>(IntersectionSize(rows[i], rows[i + 1]));
  }
  return CoherenceScore::Defined(ModelId::kAwtf, total / static_cast<double>(n - 1));
}

CoherenceScore NonAdjacentTopicFlow(const EntityGrid& grid) {
  const auto rows = RowColumns(grid);
  const std::size_t shared_entities = SharedEntityCount(rows, grid.columns().size());
  if (shared_entities == 0) return CoherenceScore::Undefined(ModelId::kNatf);
  double total = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const std::size_t joint = rows[i].size() + rows[j].size() - IntersectionSize(rows[i], rows[j]);
      if (joint > 0) total += 1.0 / static_cast<double>(joint);
    }
  }
  return CoherenceScore::Defined(ModelId::kNatf, total / static_cast<double>(shared_entities));
}

CoherenceScore NonAdjacentWeightedTopicFlow(const EntityGrid& grid) {
  const auto rows = RowColumns(grid);
  const std::size_t shared_entities = SharedEntityCount(rows, grid.columns().size());
  if (shared_entities == 0) return CoherenceScore::Defined(ModelId::kNawtf, 0.0);
  std::size_t linked_pairs = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (IntersectionSize(rows[i], rows[j]) > 0) ++linked_pairs;
    }
  }
  return CoherenceScore::Defined(ModelId::kNawtf, static_cast<double>(linked_pairs) /
                                                      static_cast<double>(shared_entities));
}

}  // namespace cohkit
