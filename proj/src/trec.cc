#include "cohkit/trec.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <spdlog/spdlog.h>

namespace cohkit {

namespace {

std::vector<std::string> Fields(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> fields;
  for (std::string f; in >> f;) fields.push_back(std::move(f));
  return fields;
}

template <typename T>
bool ParseNumber(const std::string& text, T& value) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end;
}

}  // namespace

TrecFormatError::TrecFormatError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::size_t RankedRun::size() const {
  std::size_t n = 0;
  for (const auto& [q, entries] : queries) n += entries.size();
  return n;
}

void Qrels::Add(const std::string& query_id, const std::string& doc_id, int grade) {
  grade = std::max(grade, 0);
  auto [it, fresh] = grades_.try_emplace({query_id, doc_id}, grade);
  if (!fresh) throw std::invalid_argument("duplicate judgment for " + query_id + " " + doc_id);
  auto& relevant = relevant_[query_id];
  if (grade >= 1) ++relevant;
  max_grade_ = std::max(max_grade_, grade);
}

int Qrels::Grade(const std::string& query_id, const std::string& doc_id) const {
  auto it = grades_.find({query_id, doc_id});
  return it == grades_.end() ? 0 : it->second;
}

std::size_t Qrels::RelevantCount(const std::string& query_id) const {
  auto it = relevant_.find(query_id);
  return it == relevant_.end() ? 0 : it->second;
}

RankedRun ParseRun(std::istream& in) {
  RankedRun run;
  std::map<std::string, std::size_t> first_line;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto f = Fields(line);
    if (f.empty()) continue;
    if (f.size() != 6) throw TrecFormatError(line_no, "expected 6 fields, got " + std::to_string(f.size()));
    RunEntry e{f[0], f[2], 0, 0.0, f[5]};
    if (!ParseNumber(f[3], e.rank) || e.rank == 0) {
      throw TrecFormatError(line_no, "bad rank '" + f[3] + "'");
    }
    if (!ParseNumber(f[4], e.rsv)) throw TrecFormatError(line_no, "bad score '" + f[4] + "'");
    if (!seen.insert({e.query_id, e.doc_id}).second) {
      throw TrecFormatError(line_no, "duplicate document " + e.doc_id + " for query " + e.query_id);
    }
    first_line.try_emplace(e.query_id, line_no);
    run.queries[e.query_id].push_back(std::move(e));
  }
  if (run.empty()) spdlog::warn("run input is empty");

  for (auto& [query, entries] : run.queries) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const RunEntry& a, const RunEntry& b) { return a.rank < b.rank; });
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].rank != i + 1) {
        throw TrecFormatError(first_line.at(query),
                              fmt::format("query {}: expected rank {} but found {}", query, i + 1,
                                          entries[i].rank));
      }
      if (i > 0 && entries[i].rsv > entries[i - 1].rsv) {
        throw TrecFormatError(first_line.at(query),
                              fmt::format("query {}: score increases at rank {}", query, i + 1));
      }
    }
  }
  return run;
}

RankedRun ReadRunFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TrecFormatError(0, "cannot open " + path);
  return ParseRun(in);
}

Qrels ParseQrels(std::istream& in) {
  Qrels qrels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto f = Fields(line);
    if (f.empty()) continue;
    if (f.size() != 4) throw TrecFormatError(line_no, "expected 4 fields, got " + std::to_string(f.size()));
    int grade = 0;
    if (!ParseNumber(f[3], grade)) throw TrecFormatError(line_no, "bad grade '" + f[3] + "'");
    try {
      qrels.Add(f[0], f[2], grade);
    } catch (const std::invalid_argument& e) {
      throw TrecFormatError(line_no, e.what());
    }
  }
  if (qrels.size() == 0) spdlog::warn("qrels input is empty");
  return qrels;
}

Qrels ReadQrelsFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TrecFormatError(0, "cannot open " + path);
  return ParseQrels(in);
}

void WriteRun(std::ostream& out, const RankedRun& run) {
  for (const auto& [query, entries] : run.queries) {
    for (const RunEntry& e : entries) {
      fmt::print(out, "{} Q0 {} {} {:.6f} {}\n", e.query_id, e.doc_id, e.rank, e.rsv, e.tag);
    }
  }
}

}  // namespace cohkit
