#include "nliart/corpus.h"

#include <gtest/gtest.h>

#include <sstream>

namespace nliart {
namespace {

ParseResult Parse(const std::string& text, Split split = Split::kTrain) {
  std::istringstream in(text);
  return ParseJsonl(in, split);
}

TEST(Labels, NamesRoundTrip) {
  for (Label label : kAllLabels) EXPECT_EQ(LabelFromName(LabelName(label)), label);
  EXPECT_EQ(LabelFromName("Contradiction"), Label::kContradiction);
  EXPECT_FALSE(LabelFromName("maybe"));
  EXPECT_EQ(LabelIndex(Label::kNeutral), 1u);
}

TEST(Splits, ValidationIsDev) {
  EXPECT_EQ(SplitFromName("validation"), Split::kDev);
  EXPECT_THROW(SplitFromName("holdout"), std::invalid_argument);
}

TEST(ParseJsonl, ReadsFieldsAndDefaultsIds) {
  const auto result = Parse(
      R"({"premise":"A dog runs.","hypothesis":"An animal moves.","label":0})"
      "\n\n"
      R"({"id":"x7","premise":"P","hypothesis":"H","label":"neutral","origin":"augmented:tfidf"})"
      "\n");
  ASSERT_EQ(result.corpus.size(), 2u);
  EXPECT_EQ(result.corpus.examples[0].id, "train:1");
  EXPECT_EQ(result.corpus.examples[0].label, Label::kEntailment);
  EXPECT_EQ(result.corpus.examples[0].origin, kOriginalOrigin);
  EXPECT_EQ(result.corpus.examples[1].id, "x7");
  EXPECT_EQ(result.corpus.examples[1].label, Label::kNeutral);
  EXPECT_EQ(result.corpus.examples[1].origin, "augmented:tfidf");
}

TEST(ParseJsonl, AcceptsSnliFieldNames) {
  const auto result = Parse(
      R"({"sentence1":"P","sentence2":"H","gold_label":"contradiction","pairID":"abc"})"
      "\n"
      R"({"sentence1":"P","sentence2":"H2","gold_label":"-","pairID":"abd"})"
      "\n");
  ASSERT_EQ(result.corpus.size(), 1u);
  EXPECT_EQ(result.corpus.examples[0].id, "abc");
  EXPECT_EQ(result.corpus.examples[0].label, Label::kContradiction);
  EXPECT_EQ(result.skipped_unlabeled, 1u);
}

TEST(ParseJsonl, SkipsUnlabeledAndBlankHypotheses) {
  const auto result = Parse(
      R"({"premise":"P","hypothesis":"H","label":-1})"
      "\n"
      R"({"premise":"P","hypothesis":"   ","label":1})"
      "\n"
      R"({"premise":"P","hypothesis":"H","label":2})"
      "\n");
  EXPECT_EQ(result.corpus.size(), 1u);
  EXPECT_EQ(result.skipped_unlabeled, 1u);
  EXPECT_EQ(result.skipped_empty, 1u);
}

TEST(ParseJsonl, ErrorsCarryLineNumbers) {
  try {
    Parse(R"({"premise":"P","hypothesis":"H","label":0})"
          "\n"
          R"({"premise":"P","hypothesis":"H","label":7})"
          "\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(Parse("{not json\n"), ParseError);
  EXPECT_THROW(Parse(R"({"premise":"P","label":0})"
                     "\n"),
               ParseError);
  EXPECT_THROW(Parse(R"({"id":"a","premise":"P","hypothesis":"H","label":0})"
                     "\n"
                     R"({"id":"a","premise":"P","hypothesis":"H","label":0})"
                     "\n"),
               ParseError);
}

TEST(ParseTsv, ReadsHeaderedRows) {
  std::istringstream in("premise\thypothesis\tlabel\nA man.\tA person.\tentailment\nP\tH\t2\n");
  const auto result = ParseTsv(in, Split::kTest);
  ASSERT_EQ(result.corpus.size(), 2u);
  EXPECT_EQ(result.corpus.split, Split::kTest);
  EXPECT_EQ(result.corpus.examples[1].label, Label::kContradiction);

  std::istringstream bad("premise\thypothesis\tlabel\nonly two\tfields\n");
  EXPECT_THROW(ParseTsv(bad, Split::kTest), ParseError);
}

TEST(WriteJsonl, RoundTripsExactly) {
  Corpus corpus;
  corpus.examples.push_back({"a", "He said \"hi\".", "Someone spoke.", Label::kEntailment, "original"});
  corpus.examples.push_back({"b", "Caf\xc3\xa9 scene", "A cafe.", Label::kNeutral, "augmented:tfidf"});
  std::ostringstream out;
  WriteJsonl(out, corpus);
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')),
            R"({"id":"a","premise":"He said \"hi\".","hypothesis":"Someone spoke.","label":0,"origin":"original"})");
  const auto reread = Parse(out.str());
  EXPECT_EQ(reread.corpus, corpus);
}

TEST(Corpus, StripPremisesKeepsEverythingElse) {
  Corpus corpus;
  corpus.examples.push_back({"a", "P", "H", Label::kNeutral, "original"});
  const Corpus stripped = StripPremises(corpus);
  EXPECT_EQ(stripped.examples[0].premise, "");
  EXPECT_EQ(stripped.examples[0].hypothesis, "H");
  EXPECT_EQ(stripped.examples[0].label, Label::kNeutral);
}

TEST(Corpus, LabelDistribution) {
  Corpus corpus;
  for (int i = 0; i < 4; ++i) corpus.examples.push_back({std::to_string(i), "", "h", Label::kEntailment, ""});
  corpus.examples.push_back({"n", "", "h", Label::kNeutral, ""});
  const auto counts = LabelCounts(corpus);
  EXPECT_EQ(counts[0], 4u);
  EXPECT_EQ(counts[2], 0u);
  const auto pct = LabelDistribution(corpus);
  EXPECT_DOUBLE_EQ(pct[0], 80.0);
  EXPECT_DOUBLE_EQ(pct[1], 20.0);
  EXPECT_THROW(LabelDistribution(Corpus{}), std::invalid_argument);
}

TEST(Corpus, MergeRenamesCollisions) {
  Corpus original;
  original.examples.push_back({"a", "P", "H", Label::kEntailment, "original"});
  original.examples.push_back({"a#aug1", "P", "H", Label::kEntailment, "original"});
  Corpus augmented;
  augmented.examples.push_back({"a", "P", "H2", Label::kEntailment, "augmented:tfidf"});
  augmented.examples.push_back({"b", "P", "H3", Label::kNeutral, "augmented:tfidf"});
  const Corpus merged = Merge(original, augmented);
  ASSERT_EQ(merged.size(), 4u);
  EXPECT_EQ(merged.examples[2].id, "a#aug2");
  EXPECT_EQ(merged.examples[3].id, "b");

  Corpus dev;
  dev.split = Split::kDev;
  EXPECT_THROW(Merge(original, dev), std::invalid_argument);
}

}  // namespace
}  // namespace nliart
