#include "cohkit/document.h"

#include <algorithm>
#include <cctype>

namespace cohkit {

char RoleCode(Role role) { return role == Role::kSubject ? 's' : 'o'; }

void Validate(const AnnotatedDocument& doc) {
  if (doc.doc_id.empty()) throw DocumentError("document has an empty doc_id");
  bool have_offset = false;
  std::size_t last_offset = 0;
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    const Sentence& s = doc.sentences[i];
    if (s.index != i) {
      throw DocumentError(doc.doc_id + ": sentence " + std::to_string(i) +
                          " carries index " + std::to_string(s.index));
    }
    for (const Token& t : s.tokens) {
      if (have_offset && t.doc_offset <= last_offset) {
        throw DocumentError(doc.doc_id + ": token offsets not increasing in sentence " +
                            std::to_string(i));
      }
      last_offset = t.doc_offset;
      have_offset = true;
    }
    std::size_t prev = 0;
    for (std::size_t m = 0; m < s.mentions.size(); ++m) {
      const EntityMention& mention = s.mentions[m];
      if (mention.token_index >= s.tokens.size()) {
        throw DocumentError(doc.doc_id + ": mention '" + mention.entity_id +
                            "' in sentence " + std::to_string(i) +
                            " points past the last token");
      }
      if (mention.entity_id.empty()) {
        throw DocumentError(doc.doc_id + ": empty entity id in sentence " + std::to_string(i));
      }
      if (m > 0 && mention.token_index < prev) {
        throw DocumentError(doc.doc_id + ": mentions out of token order in sentence " +
                            std::to_string(i));
      }
      prev = mention.token_index;
    }
  }
}

void Reindex(AnnotatedDocument& doc) {
  std::size_t offset = 0;
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    Sentence& s = doc.sentences[i];
    s.index = i;
    for (Token& t : s.tokens) t.doc_offset = offset++;
  }
}

AnnotatedDocument TruncateSentences(const AnnotatedDocument& doc, std::size_t max_terms) {
  AnnotatedDocument out = doc;
  for (Sentence& s : out.sentences) {
    if (s.tokens.size() > max_terms) s.tokens.resize(max_terms);
    std::erase_if(s.mentions,
                  [&](const EntityMention& m) { return m.token_index >= max_terms; });
  }
  Reindex(out);
  return out;
}

std::string NormalizeEntity(std::string_view surface, bool strip_plural) {
  std::string key(surface);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (strip_plural && key.size() > 3 && key.back() == 's' && key[key.size() - 2] != 's') {
    key.pop_back();
  }
  return key;
}

}  // namespace cohkit
