#ifndef COHKIT_JSONL_H_
#define COHKIT_JSONL_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cohkit/document.h"

namespace cohkit {

struct IngestOptions {
  bool strip_plural = false;
};

// Interchange format, one document per line:
//   {"doc_id": str, "sentences": [{"tokens": [str, ...],
//     "mentions": [{"entity": str, "role": "s"|"o", "token_index": int}]}]}
// Unknown fields are ignored, mentions with other roles are skipped, blank
// lines are skipped. Errors carry the 1-based line number.
class IngestError : public std::runtime_error {
 public:
  IngestError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

AnnotatedDocument ParseDocument(std::string_view json_line,
                                const IngestOptions& options = {});

std::vector<AnnotatedDocument> ReadCorpus(std::istream& in,
                                          const IngestOptions& options = {});
std::vector<AnnotatedDocument> ReadCorpusFile(const std::string& path,
                                              const IngestOptions& options = {});

std::string ToJsonLine(const AnnotatedDocument& doc);

}  // namespace cohkit

#endif  // COHKIT_JSONL_H_
