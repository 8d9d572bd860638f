#ifndef COHKIT_GRID_H_
#define COHKIT_GRID_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cohkit/document.h"

namespace cohkit {

// Sentences x entities matrix of syntactic roles. Columns are entity ids in
// order of first occurrence in the document; each row maps column index to
// the role the entity plays in that sentence.
class EntityGrid {
 public:
  EntityGrid() = default;
  EntityGrid(std::string doc_id, std::size_t sentence_count);

  const std::string& doc_id() const { return doc_id_; }
  std::size_t sentence_count() const { return rows_.size(); }
  const std::vector<std::string>& columns() const { return columns_; }
  // Cells of one row keyed by column index, ascending.
  const std::map<std::size_t, Role>& row(std::size_t sentence) const { return rows_.at(sentence); }
  std::size_t cell_count() const;

  std::optional<Role> cell(std::size_t sentence, const std::string& entity_id) const;
  std::optional<std::size_t> column_of(const std::string& entity_id) const;

  // Subject wins over Object when an entity already has a cell in the row.
  void Mark(std::size_t sentence, const std::string& entity_id, Role role);

 private:
  std::string doc_id_;
  std::vector<std::string> columns_;
  std::map<std::string, std::size_t> column_index_;
  std::vector<std::map<std::size_t, Role>> rows_;
};

EntityGrid BuildGrid(const AnnotatedDocument& doc);

// Entities read row by row, each row left to right in column order.
std::vector<std::string> EntitySequence(const EntityGrid& grid);

std::vector<std::set<std::string>> SentenceEntitySets(const EntityGrid& grid);

}  // namespace cohkit

#endif  // COHKIT_GRID_H_
