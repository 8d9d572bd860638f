#include "cohkit/grid.h"

namespace cohkit {

EntityGrid::EntityGrid(std::string doc_id, std::size_t sentence_count)
    : doc_id_(std::move(doc_id)), rows_(sentence_count) {}

std::size_t EntityGrid::cell_count() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

std::optional<std::size_t> EntityGrid::column_of(const std::string& entity_id) const {
  auto it = column_index_.find(entity_id);
  if (it == column_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Role> EntityGrid::cell(std::size_t sentence, const std::string& entity_id) const {
  const auto column = column_of(entity_id);
  if (!column) return std::nullopt;
  const auto& r = rows_.at(sentence);
  auto it = r.find(*column);
  if (it == r.end()) return std::nullopt;
  return it->second;
}

void EntityGrid::Mark(std::size_t sentence, const std::string& entity_id, Role role) {
  auto [it, inserted] = column_index_.try_emplace(entity_id, columns_.size());
  if (inserted) columns_.push_back(entity_id);
  auto [cell, fresh] = rows_.at(sentence).try_emplace(it->second, role);
  if (!fresh && role == Role::kSubject) cell->second = Role::kSubject;
}

EntityGrid BuildGrid(const AnnotatedDocument& doc) {
  EntityGrid grid(doc.doc_id, doc.sentences.size());
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    for (const EntityMention& m : doc.sentences[i].mentions) {
      grid.Mark(i, m.entity_id, m.role);
    }
  }
  return grid;
}

std::vector<std::string> EntitySequence(const EntityGrid& grid) {
  std::vector<std::string> seq;
  seq.reserve(grid.cell_count());
  for (std::size_t i = 0; i < grid.sentence_count(); ++i) {
    for (const auto& [column, role] : grid.row(i)) seq.push_back(grid.columns()[column]);
  }
  return seq;
}

std::vector<std::set<std::string>> SentenceEntitySets(const EntityGrid& grid) {
  std::vector<std::set<std::string>> sets(grid.sentence_count());
  for (std::size_t i = 0; i < grid.sentence_count(); ++i) {
    for (const auto& [column, role] : grid.row(i)) sets[i].insert(grid.columns()[column]);
  }
  return sets;
}

}  // namespace cohkit
