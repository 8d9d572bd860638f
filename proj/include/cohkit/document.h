#ifndef COHKIT_DOCUMENT_H_
#define COHKIT_DOCUMENT_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cohkit {

// Syntactic role of a discourse entity inside one sentence.
enum class Role { kSubject, kObject };

char RoleCode(Role role);

struct Token {
  std::string surface;
  // 0-based term index within the whole document.
  std::size_t doc_offset = 0;
};

struct EntityMention {
  std::string entity_id;
  Role role = Role::kSubject;
  // Index of the head token inside its sentence.
  std::size_t token_index = 0;
};

struct Sentence {
  std::size_t index = 0;
  std::vector<Token> tokens;
  // Ordered by token_index.
  std::vector<EntityMention> mentions;
};

struct AnnotatedDocument {
  std::string doc_id;
  std::vector<Sentence> sentences;
};

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws DocumentError when a structural invariant does not hold: empty
// doc_id, non-contiguous sentence indices, non-increasing offsets, mentions
// pointing past the token list or out of token order.
void Validate(const AnnotatedDocument& doc);

// Renumbers sentence indices to 0..N-1 and recomputes doc_offsets so they are
// contiguous from 0 in reading order.
void Reindex(AnnotatedDocument& doc);

// Keeps the first max_terms tokens of every sentence. Mentions whose head
// falls past the cut are dropped and offsets are recomputed.
AnnotatedDocument TruncateSentences(const AnnotatedDocument& doc,
                                    std::size_t max_terms = 60);

// Lowercases an entity head word. With strip_plural a trailing "s" is removed
// from words longer than three characters that do not end in "ss".
std::string NormalizeEntity(std::string_view surface, bool strip_plural = false);

}  // namespace cohkit

#endif  // COHKIT_DOCUMENT_H_
