#include "testing.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "cohkit/jsonl.h"

namespace cohkit::testing {

std::string DataPath(const std::string& name) { return std::string(COHKIT_TEST_DATA) + "/" + name; }

AnnotatedDocument Table1() { return ReadCorpusFile(DataPath("table1.jsonl")).at(0); }

AnnotatedDocument DocFromRows(const std::string& doc_id,
                              const std::vector<std::vector<std::string>>& rows,
                              std::size_t filler) {
  AnnotatedDocument doc{doc_id, {}};
  for (const auto& row : rows) {
    Sentence s;
    for (const std::string& e : row) {
      s.mentions.push_back({e, Role::kSubject, s.tokens.size()});
      s.tokens.push_back({e, 0});
    }
    for (std::size_t f = 0; f < filler; ++f) s.tokens.push_back({"w", 0});
    doc.sentences.push_back(std::move(s));
  }
  Reindex(doc);
  return doc;
}

AnnotatedDocument ChainDocument(const std::string& doc_id, std::size_t sentences, std::size_t filler) {
  AnnotatedDocument doc{doc_id, {}};
  for (std::size_t i = 0; i < sentences; ++i) {
    Sentence s;
    const std::string head = "link" + std::to_string(i);
    const std::string tail = "link" + std::to_string(i + 1);
    s.tokens.push_back({head, 0});
    for (std::size_t f = 0; f < filler; ++f) s.tokens.push_back({"w", 0});
    s.tokens.push_back({tail, 0});
    s.mentions.push_back({head, Role::kSubject, 0});
    s.mentions.push_back({tail, Role::kObject, s.tokens.size() - 1});
    doc.sentences.push_back(std::move(s));
  }
  Reindex(doc);
  return doc;
}

AnnotatedDocument SpamDocument() {
  AnnotatedDocument doc{"spam", {Sentence{}}};
  for (int i = 0; i < 3; ++i) {
    if (i > 0) doc.sentences[0].tokens.push_back({",", 0});
    doc.sentences[0].tokens.push_back({"free", 0});
    doc.sentences[0].mentions.push_back({"domains", Role::kObject, doc.sentences[0].tokens.size()});
    doc.sentences[0].tokens.push_back({"domains", 0});
  }
  Reindex(doc);
  return doc;
}

AnnotatedDocument RandomDocument(std::mt19937_64& rng, const std::string& doc_id,
                                 std::size_t sentences, std::size_t vocabulary,
                                 std::size_t max_mentions) {
  std::uniform_int_distribution<std::size_t> pick(0, vocabulary - 1);
  std::uniform_int_distribution<std::size_t> count(1, max_mentions);
  std::uniform_int_distribution<std::size_t> gap(0, 3);
  AnnotatedDocument doc{doc_id, {}};
  for (std::size_t i = 0; i < sentences; ++i) {
    Sentence s;
    const std::size_t mentions = count(rng);
    for (std::size_t m = 0; m < mentions; ++m) {
      for (std::size_t g = gap(rng); g > 0; --g) s.tokens.push_back({"w", 0});
      const std::string e = "e" + std::to_string(pick(rng));
      s.mentions.push_back({e, rng() % 3 == 0 ? Role::kObject : Role::kSubject, s.tokens.size()});
      s.tokens.push_back({e, 0});
    }
    doc.sentences.push_back(std::move(s));
  }
  Reindex(doc);
  return doc;
}

double EntropyOfCounts(const std::vector<std::size_t>& counts) {
  double total = 0.0;
  for (std::size_t c : counts) total += static_cast<double>(c);
  double h = 0.0;
  for (std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / total;
    h -= p * std::log2(p);
  }
  return h;
}

double ConditionalEntropyOracle(const std::vector<std::string>& seq) {
  if (seq.size() < 2) return std::nan("");
  std::set<std::string> vocabulary(seq.begin(), seq.end());
  auto pair_count = [&](const std::string& prev, const std::string& next) {
    std::size_t n = 0;
    for (std::size_t i = 1; i < seq.size(); ++i) n += (seq[i - 1] == prev && seq[i] == next) ? 1 : 0;
    return n;
  };
  auto successor_count = [&](const std::string& e) {
    std::size_t n = 0;
    for (std::size_t i = 1; i < seq.size(); ++i) n += seq[i] == e ? 1 : 0;
    return n;
  };
  double h = 0.0;
  for (const std::string& e : vocabulary) {
    const double p_e = static_cast<double>(std::count(seq.begin(), seq.end(), e)) /
                       static_cast<double>(seq.size());
    double inner = 0.0;
    for (const std::string& prev : vocabulary) {
      const std::size_t joint = pair_count(prev, e);
      if (joint == 0) continue;
      const double p = static_cast<double>(joint) / static_cast<double>(successor_count(e));
      inner += p * std::log2(p);
    }
    h -= p_e * inner;
  }
  return h;
}

std::vector<double> BetweennessByPathEnumeration(const ProjectionGraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<double> result(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    // all simple paths from s, grouped by endpoint
    std::vector<std::vector<std::pair<double, std::vector<std::size_t>>>> paths(n);
    std::vector<std::size_t> stack = {s};
    std::vector<bool> on_path(n, false);
    on_path[s] = true;
    std::function<void(std::size_t, double)> walk = [&](std::size_t v, double length) {
      for (const auto& nb : graph.neighbors(v)) {
        if (on_path[nb.node]) continue;
        const double next = length + 1.0 / nb.weight;
        stack.push_back(nb.node);
        on_path[nb.node] = true;
        paths[nb.node].emplace_back(next, stack);
        walk(nb.node, next);
        on_path[nb.node] = false;
        stack.pop_back();
      }
    };
    walk(s, 0.0);
    for (std::size_t t = 0; t < n; ++t) {
      if (t == s || paths[t].empty()) continue;
      double best = paths[t].front().first;
      for (const auto& p : paths[t]) best = std::min(best, p.first);
      std::vector<const std::vector<std::size_t>*> shortest;
      for (const auto& p : paths[t]) {
        if (std::abs(p.first - best) <= 1e-12 * std::max(1.0, best)) shortest.push_back(&p.second);
      }
      for (std::size_t u = 0; u < n; ++u) {
        if (u == s || u == t) continue;
        std::size_t through = 0;
        for (const auto* p : shortest) {
          through += std::find(p->begin(), p->end(), u) != p->end() ? 1 : 0;
        }
        result[u] += static_cast<double>(through) / static_cast<double>(shortest.size());
      }
    }
  }
  return result;
}

std::vector<double> PageRankBySolve(const ProjectionGraph& graph, double damping) {
  const std::size_t n = graph.node_count();
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
  for (std::size_t v = 0; v < n; ++v) {
    a[v][v] = 1.0;
    a[v][n] = 1.0 - damping;
  }
  for (std::size_t u = 0; u < n; ++u) {
    double total = 0.0;
    for (const auto& nb : graph.neighbors(u)) total += nb.weight;
    for (const auto& nb : graph.neighbors(u)) a[nb.node][u] -= damping * nb.weight / total;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t v = 0; v < n; ++v) x[v] = a[v][n] / a[v][v];
  return x;
}

double ClusteringByTriples(const ProjectionGraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<double> closed(n, 0.0), triplets(n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        const bool ab = graph.HasEdge(a, b), bc = graph.HasEdge(b, c), ac = graph.HasEdge(a, c);
        const int edges = ab + bc + ac;
        if (edges == 3) {
          for (std::size_t v : {a, b, c}) closed[v] += 1, triplets[v] += 1;
        } else if (edges == 2) {
          const std::size_t centre = !bc ? a : (!ac ? b : c);
          triplets[centre] += 1;
        }
      }
    }
  }
  double total = 0.0;
  for (std::size_t v = 0; v < n; ++v) total += triplets[v] > 0 ? closed[v] / triplets[v] : 0.0;
  return n == 0 ? std::nan("") : total / static_cast<double>(n);
}

TopicFlowOracle TopicFlowBySets(const std::vector<std::set<std::string>>& rows) {
  auto union_size = [](const std::set<std::string>& x, const std::set<std::string>& y) {
    std::vector<std::string> u;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(u));
    return u.size();
  };
  auto intersection_size = [](const std::set<std::string>& x, const std::set<std::string>& y) {
    std::vector<std::string> i;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(i));
    return i.size();
  };
  TopicFlowOracle o;
  std::map<std::string, std::size_t> holders;
  for (const auto& row : rows) {
    for (const auto& e : row) ++holders[e];
  }
  for (const auto& [e, k] : holders) o.shared_entities += k >= 2 ? 1 : 0;

  const std::size_t n = rows.size();
  if (n >= 2) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const std::size_t u = union_size(rows[i], rows[i + 1]);
      o.atf += u > 0 ? 1.0 / static_cast<double>(u) : 0.0;
      o.awtf += static_cast<double>(intersection_size(rows[i], rows[i + 1]));
    }
    o.atf /= static_cast<double>(n - 1);
    o.awtf /= static_cast<double>(n - 1);
  }
  if (o.shared_entities > 0) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::size_t u = union_size(rows[i], rows[j]);
        o.natf += u > 0 ? 1.0 / static_cast<double>(u) : 0.0;
        o.nawtf += intersection_size(rows[i], rows[j]) > 0 ? 1.0 : 0.0;
      }
    }
    o.natf /= static_cast<double>(o.shared_entities);
    o.nawtf /= static_cast<double>(o.shared_entities);
  }
  return o;
}

std::vector<std::vector<std::size_t>> NonIdentityPermutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  while (std::next_permutation(p.begin(), p.end())) out.push_back(p);
  return out;
}

}  // namespace cohkit::testing
