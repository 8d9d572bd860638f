#include <sstream>

#include <doctest.h>

#include "cohkit/document.h"
#include "cohkit/jsonl.h"
#include "testing.h"

namespace cohkit {
namespace {

AnnotatedDocument LongSentence(std::size_t tokens, std::vector<std::size_t> mention_at) {
  AnnotatedDocument doc{"long", {Sentence{}}};
  for (std::size_t i = 0; i < tokens; ++i) doc.sentences[0].tokens.push_back({"t" + std::to_string(i), 0});
  for (std::size_t at : mention_at) doc.sentences[0].mentions.push_back({"x" + std::to_string(at), Role::kSubject, at});
  Reindex(doc);
  return doc;
}

TEST_CASE("truncation cuts long sentences at the term limit") {
  const AnnotatedDocument doc = LongSentence(70, {3, 61, 65});
  const AnnotatedDocument cut = TruncateSentences(doc);
  REQUIRE(cut.sentences[0].tokens.size() == 60);
  REQUIRE(cut.sentences[0].mentions.size() == 1);
  CHECK(cut.sentences[0].mentions[0].entity_id == "x3");
}

TEST_CASE("truncation leaves short sentences alone") {
  const AnnotatedDocument doc = LongSentence(5, {0, 4});
  const AnnotatedDocument cut = TruncateSentences(doc, 60);
  CHECK(cut.sentences[0].tokens.size() == 5);
  CHECK(cut.sentences[0].mentions.size() == 2);
}

TEST_CASE("truncation boundary matches a naive filter") {
  const AnnotatedDocument doc = LongSentence(80, {58, 59, 60, 61});
  const AnnotatedDocument cut = TruncateSentences(doc, 60);
  std::vector<std::string> expected;
  for (const auto& m : doc.sentences[0].mentions) {
    if (m.token_index < 60) expected.push_back(m.entity_id);
  }
  std::vector<std::string> got;
  for (const auto& m : cut.sentences[0].mentions) got.push_back(m.entity_id);
  CHECK(got == expected);
  CHECK(got == std::vector<std::string>{"x58", "x59"});
}

TEST_CASE("truncation recomputes contiguous offsets and keeps roles") {
  AnnotatedDocument doc = LongSentence(70, {1});
  doc.sentences.push_back(LongSentence(10, {2}).sentences[0]);
  doc.sentences[1].mentions[0].role = Role::kObject;
  Reindex(doc);
  const AnnotatedDocument cut = TruncateSentences(doc, 60);
  CHECK(cut.sentences[1].tokens.front().doc_offset == 60);
  CHECK(cut.sentences[1].mentions[0].role == Role::kObject);
  CHECK_NOTHROW(Validate(cut));
}

TEST_CASE("empty sentences pass through truncation") {
  AnnotatedDocument doc{"e", {Sentence{}, Sentence{}}};
  Reindex(doc);
  CHECK(TruncateSentences(doc).sentences.size() == 2);
}

TEST_CASE("entity keys are lowercased with optional plural stripping") {
  CHECK(NormalizeEntity("Cats") == "cats");
  CHECK(NormalizeEntity("Cats", true) == "cat");
  CHECK(NormalizeEntity("glass", true) == "glass");
  CHECK(NormalizeEntity("is", true) == "is");
}

TEST_CASE("interchange parsing") {
  SUBCASE("fields, roles and sorting") {
    const auto doc = ParseDocument(
        R"({"doc_id":"d","extra":1,"sentences":[{"tokens":["The","Cat","saw","mats"],)"
        R"("mentions":[{"entity":"mats","role":"o","token_index":3},)"
        R"({"entity":"Cat","role":"s","token_index":1},{"entity":"saw","role":"x","token_index":2}]}]})");
    REQUIRE(doc.sentences[0].mentions.size() == 2);
    CHECK(doc.sentences[0].mentions[0].entity_id == "cat");
    CHECK(doc.sentences[0].mentions[0].role == Role::kSubject);
    CHECK(doc.sentences[0].mentions[1].role == Role::kObject);
    CHECK(doc.sentences[0].tokens[3].doc_offset == 3);
  }
  SUBCASE("plural stripping is opt-in") {
    const std::string line =
        R"({"doc_id":"d","sentences":[{"tokens":["mats"],"mentions":[{"entity":"mats","role":"s","token_index":0}]}]})";
    CHECK(ParseDocument(line).sentences[0].mentions[0].entity_id == "mats");
    CHECK(ParseDocument(line, {true}).sentences[0].mentions[0].entity_id == "mat");
  }
  SUBCASE("errors carry line numbers") {
    std::istringstream in(
        "{\"doc_id\":\"a\",\"sentences\":[]}\n\n"
        "{\"doc_id\":\"b\",\"sentences\":[{\"tokens\":[\"x\"],\"mentions\":[{\"entity\":\"x\",\"role\":\"s\",\"token_index\":4}]}]}\n");
    try {
      ReadCorpus(in);
      FAIL("expected an ingestion error");
    } catch (const IngestError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("invalid json and empty doc id are rejected") {
    CHECK_THROWS_AS(ParseDocument("{not json"), DocumentError);
    CHECK_THROWS_AS(ParseDocument(R"({"doc_id":"","sentences":[]})"), DocumentError);
    CHECK_THROWS_AS(ParseDocument(R"({"sentences":[]})"), DocumentError);
  }
  SUBCASE("serialization reads back to the same document") {
    const AnnotatedDocument doc = testing::Table1();
    const AnnotatedDocument back = ParseDocument(ToJsonLine(doc));
    REQUIRE(back.sentences.size() == doc.sentences.size());
    for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
      CHECK(back.sentences[i].tokens.size() == doc.sentences[i].tokens.size());
      CHECK(back.sentences[i].mentions.size() == doc.sentences[i].mentions.size());
    }
  }
}

TEST_CASE("validation catches broken invariants") {
  AnnotatedDocument doc = testing::Table1();
  CHECK_NOTHROW(Validate(doc));
  doc.sentences[2].index = 7;
  CHECK_THROWS_AS(Validate(doc), DocumentError);
  doc = testing::Table1();
  doc.sentences[1].tokens[0].doc_offset = 0;
  CHECK_THROWS_AS(Validate(doc), DocumentError);
}

}  // namespace
}  // namespace cohkit
