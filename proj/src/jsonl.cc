#include "cohkit/jsonl.h"

#include <algorithm>
#include <fstream>
#include <istream>

#include <json.hpp>

namespace cohkit {

using nlohmann::json;

IngestError::IngestError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

Sentence ParseSentence(const json& js, bool strip_plural) {
  Sentence s;
  if (!js.is_object()) throw DocumentError("sentence is not an object");
  if (js.contains("tokens")) {
    for (const json& tok : js.at("tokens")) {
      s.tokens.push_back(Token{tok.get<std::string>(), 0});
    }
  }
  if (js.contains("mentions")) {
    for (const json& m : js.at("mentions")) {
      const std::string role = m.at("role").get<std::string>();
      if (role != "s" && role != "o") continue;
      const auto index = m.at("token_index").get<long long>();
      if (index < 0) throw DocumentError("negative token_index");
      s.mentions.push_back(EntityMention{
          NormalizeEntity(m.at("entity").get<std::string>(), strip_plural),
          role == "s" ? Role::kSubject : Role::kObject, static_cast<std::size_t>(index)});
    }
  }
  std::stable_sort(s.mentions.begin(), s.mentions.end(),
                   [](const EntityMention& a, const EntityMention& b) {
                     return a.token_index < b.token_index;
                   });
  return s;
}

}  // namespace

AnnotatedDocument ParseDocument(std::string_view json_line, const IngestOptions& options) {
  json js;
  try {
    js = json::parse(json_line);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  if (!js.is_object()) throw DocumentError("document is not a JSON object");
  AnnotatedDocument doc;
  try {
    doc.doc_id = js.at("doc_id").get<std::string>();
    for (const json& s : js.at("sentences")) {
      doc.sentences.push_back(ParseSentence(s, options.strip_plural));
    }
  } catch (const json::exception& e) {
    throw DocumentError(std::string("malformed document: ") + e.what());
  }
  Reindex(doc);
  Validate(doc);
  return doc;
}

std::vector<AnnotatedDocument> ReadCorpus(std::istream& in, const IngestOptions& options) {
  std::vector<AnnotatedDocument> corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) {
      continue;
    }
    try {
      corpus.push_back(ParseDocument(line, options));
    } catch (const DocumentError& e) {
      throw IngestError(line_no, e.what());
    }
  }
  return corpus;
}

std::vector<AnnotatedDocument> ReadCorpusFile(const std::string& path,
                                              const IngestOptions& options) {
  std::ifstream in(path);
  if (!in) throw IngestError(0, "cannot open " + path);
  return ReadCorpus(in, options);
}

std::string ToJsonLine(const AnnotatedDocument& doc) {
  json js;
  js["doc_id"] = doc.doc_id;
  js["sentences"] = json::array();
  for (const Sentence& s : doc.sentences) {
    json sj;
    sj["tokens"] = json::array();
    for (const Token& t : s.tokens) sj["tokens"].push_back(t.surface);
    sj["mentions"] = json::array();
    for (const EntityMention& m : s.mentions) {
      sj["mentions"].push_back({{"entity", m.entity_id},
                                {"role", std::string(1, RoleCode(m.role))},
                                {"token_index", m.token_index}});
    }
    js["sentences"].push_back(std::move(sj));
  }
  return js.dump();
}

}  // namespace cohkit
