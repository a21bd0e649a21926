#include <gtest/gtest.h>

#include "support/helpers.hpp"

using namespace deptree;
using support::fixture;
using support::read_file;
using support::write_file;

namespace {

std::string token(int id, const std::string& upos, int head) {
  return std::to_string(id) + "\tw" + std::to_string(id) + "\t_\t" + upos + "\t_\t_\t" + std::to_string(head) +
         "\tdep\t_\t_\n";
}

ConlluSentence sentence(const std::vector<std::pair<std::string, int>>& tokens) {
  ConlluSentence s;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    s.tokens.push_back({i + 1, "w", tokens[i].first, static_cast<std::size_t>(tokens[i].second), "dep"});
  }
  return s;
}

}  // namespace

TEST(ConlluReader, ParsesFixture) {
  const auto sentences = parse_conllu(fixture("sample.conllu"));
  ASSERT_EQ(sentences.size(), 3u);
  EXPECT_EQ(head_projection(sentences[0]).to_string(), "2 3 0 3");
  // The multiword range line is skipped; three tokens remain.
  EXPECT_EQ(sentences[1].tokens.size(), 3u);
  EXPECT_EQ(head_projection(sentences[1]).to_string(), "3 3 0");
  EXPECT_EQ(sentences[2].tokens[4].upos, "PUNCT");
  EXPECT_EQ(sentences[0].first_line, 3u);
}

TEST(ConlluReader, ThreeTokenSentence) {
  const auto dir = support::temp_dir("conllu3");
  write_file(dir / "s.conllu", token(1, "NOUN", 2) + token(2, "VERB", 0) + token(3, "NOUN", 2));
  const auto s = parse_conllu(dir / "s.conllu");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(head_projection(s[0]).to_string(), "2 0 2");
  std::filesystem::remove_all(dir);
}

TEST(ConlluReader, Errors) {
  const auto dir = support::temp_dir("conllu_err");
  auto expect_error = [&](const std::string& text, ErrorCode code, std::size_t line) {
    write_file(dir / "e.conllu", text);
    try {
      parse_conllu(dir / "e.conllu");
      ADD_FAILURE() << "no error";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), code);
      EXPECT_EQ(e.line(), line);
    }
  };
  expect_error("# c\n" + token(1, "VERB", 0) + "2\tw\t_\tNOUN\t_\t_\t1\tdep\t_\n", ErrorCode::MalformedLine, 3);
  expect_error(token(1, "VERB", 0) + token(3, "NOUN", 1), ErrorCode::NonContiguousIds, 2);
  expect_error(token(1, "VERB", 0) + token(2, "NOUN", 7), ErrorCode::HeadOutOfRange, 1);
  expect_error("x\tw\t_\tNOUN\t_\t_\t1\tdep\t_\t_\n", ErrorCode::MalformedLine, 1);
  EXPECT_THROW(parse_conllu(dir / "absent.conllu"), Error);
  std::filesystem::remove_all(dir);
}

TEST(ConlluReader, ContinuesAfterBadSentence) {
  const auto dir = support::temp_dir("conllu_cont");
  write_file(dir / "m.conllu", token(1, "VERB", 0) + token(3, "NOUN", 1) + "\n" + token(1, "VERB", 0) + "\n");
  ConlluReader reader(dir / "m.conllu");
  ConlluSentence s;
  EXPECT_THROW(reader.next(s), Error);
  EXPECT_TRUE(reader.next(s));
  EXPECT_EQ(s.tokens.size(), 1u);
  EXPECT_FALSE(reader.next(s));
  std::filesystem::remove_all(dir);
}

TEST(Preprocess, RemovesPunctuationLeaf) {
  PreprocessOptions o;
  o.remove_punct = true;
  const auto s = sentence({{"NOUN", 2}, {"VERB", 0}, {"NOUN", 2}, {"PUNCT", 2}});
  EXPECT_EQ(preprocess(s, o)->to_string(), "2 0 2");
}

TEST(Preprocess, LengthFilter) {
  PreprocessOptions o;
  o.min_len = 3;
  EXPECT_FALSE(preprocess(sentence({{"NOUN", 2}, {"VERB", 0}}), o).has_value());
  o.min_len.reset();
  o.max_len = 1;
  EXPECT_FALSE(preprocess(sentence({{"NOUN", 2}, {"VERB", 0}}), o).has_value());
  o.min_len = 2;
  EXPECT_THROW(o.validate(), Error);
}

TEST(Preprocess, ReattachesToNearestRetainedAncestor) {
  PreprocessOptions o;
  o.remove_function_words = true;
  // Chain 1 <- 2 <- 3 where token 2 is a determiner.
  EXPECT_EQ(preprocess(sentence({{"NOUN", 0}, {"DET", 1}, {"NOUN", 2}}), o)->to_string(), "0 1");
}

TEST(Preprocess, RemovedRootPromotesLeftmostOrphan) {
  PreprocessOptions o;
  o.function_words = {"AUX"};
  o.remove_function_words = true;
  const auto s = sentence({{"NOUN", 2}, {"AUX", 0}, {"NOUN", 2}, {"ADJ", 3}});
  EXPECT_EQ(preprocess(s, o)->to_string(), "0 1 2");
  PreprocessOptions punct;
  punct.remove_punct = true;
  EXPECT_FALSE(preprocess(sentence({{"PUNCT", 0}}), punct).has_value());
}

TEST(Convert, FixtureWithFilter) {
  const auto dir = support::temp_dir("convert");
  PreprocessOptions o;
  o.max_len = 4;
  const auto r = convert(fixture("sample.conllu"), dir / "o.heads", o);
  EXPECT_EQ(r.sentences, 3u);
  EXPECT_EQ(r.written, 2u);
  EXPECT_EQ(r.filtered, 1u);
  EXPECT_EQ(read_file(dir / "o.heads"), "2 3 0 3\n3 3 0\n");

  PreprocessOptions p;
  p.remove_punct = true;
  convert(fixture("sample.conllu"), dir / "p.heads", p);
  EXPECT_EQ(read_file(dir / "p.heads"), "2 3 0\n3 3 0\n2 0 2 2\n");
  std::filesystem::remove_all(dir);
}

TEST(Convert, PunctuationRemovalIsNoOpWithoutPunctuation) {
  const auto dir = support::temp_dir("noop");
  PreprocessOptions on;
  on.remove_punct = true;
  convert(fixture("no_punct.conllu"), dir / "a.heads", {});
  convert(fixture("no_punct.conllu"), dir / "b.heads", on);
  EXPECT_EQ(read_file(dir / "a.heads"), read_file(dir / "b.heads"));
  std::filesystem::remove_all(dir);
}

TEST(Convert, OutputReadsBackAsValidTrees) {
  const auto dir = support::temp_dir("roundtrip");
  convert(fixture("sample.conllu"), dir / "o.heads");
  const auto records = TreebankReader(dir / "o.heads", ErrorPolicy::fail_fast).read_all();
  EXPECT_EQ(records.size(), 3u);
  for (const auto& r : records) EXPECT_TRUE(r.heads.has_value());
  std::filesystem::remove_all(dir);
}

TEST(Convert, ErrorPolicies) {
  const auto dir = support::temp_dir("convert_err");
  write_file(dir / "m.conllu", token(1, "VERB", 0) + "\n" + token(1, "VERB", 0) + token(3, "NOUN", 1) + "\n" +
                                   token(1, "NOUN", 2) + token(2, "VERB", 0) + "\n");
  const auto r = convert(dir / "m.conllu", dir / "o.heads");
  EXPECT_EQ(r.written, 2u);
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_EQ(r.errors[0].code, ErrorCode::NonContiguousIds);
  EXPECT_EQ(r.errors[0].line, 4u);
  EXPECT_EQ(read_file(dir / "o.heads"), "0\n2 0\n");
  EXPECT_THROW(convert(dir / "m.conllu", dir / "f.heads", {}, ErrorPolicy::fail_fast), Error);
  EXPECT_FALSE(std::filesystem::exists(dir / "f.heads"));
  std::filesystem::remove_all(dir);
}
