#ifndef COHKIT_TREC_H_
#define COHKIT_TREC_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cohkit {

struct RunEntry {
  std::string query_id;
  std::string doc_id;
  std::size_t rank = 0;
  double rsv = 0.0;
  std::string tag;
};

// Per-query result lists in rank order; queries iterate in id order.
struct RankedRun {
  std::map<std::string, std::vector<RunEntry>> queries;

  std::size_t size() const;
  bool empty() const { return queries.empty(); }
};

// Graded judgments; grades are >= 0.
class Qrels {
 public:
  void Add(const std::string& query_id, const std::string& doc_id, int grade);

  int Grade(const std::string& query_id, const std::string& doc_id) const;
  bool HasQuery(const std::string& query_id) const { return relevant_.count(query_id) > 0; }
  // Judged documents with grade >= 1.
  std::size_t RelevantCount(const std::string& query_id) const;
  int max_grade() const { return max_grade_; }
  std::size_t size() const { return grades_.size(); }

 private:
  std::map<std::pair<std::string, std::string>, int> grades_;
  std::map<std::string, std::size_t> relevant_;
  int max_grade_ = 0;
};

class TrecFormatError : public std::runtime_error {
 public:
  TrecFormatError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// "qid Q0 docid rank score tag" per line. Rejects malformed lines, duplicate
// (query, doc) pairs, rank gaps, and scores that increase with rank.
RankedRun ParseRun(std::istream& in);
RankedRun ReadRunFile(const std::string& path);

// "qid 0 docid grade" per line. Negative grades (spam/junk labels) are read
// as 0.
Qrels ParseQrels(std::istream& in);
Qrels ReadQrelsFile(const std::string& path);

void WriteRun(std::ostream& out, const RankedRun& run);

}  // namespace cohkit

#endif  // COHKIT_TREC_H_
