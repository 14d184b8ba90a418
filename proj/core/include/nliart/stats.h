#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nliart/corpus.h"
#include "nliart/tagging.h"

namespace nliart {

enum class WordType { kSubjectNoun, kMainVerb };

std::string_view WordTypeName(WordType type);  // "subject_noun" / "main_verb"

using LabelCountArray = std::array<std::uint64_t, kNumLabels>;

struct ContingencyRow {
  std::string word;
  WordType type = WordType::kSubjectNoun;
  LabelCountArray counts{};
  std::uint64_t total = 0;

  bool operator==(const ContingencyRow&) const = default;
};

// One row per distinct (word, type). Sorted by descending total, then word,
// then type.
std::vector<ContingencyRow> CountWordLabels(std::span<const LabeledExtraction> extractions,
                                            unsigned threads = 1);

// Null-hypothesis label proportions; each strictly inside (0, 1) and summing
// to 1 within 1e-12.
class ExpectedProportions {
 public:
  // Throws std::invalid_argument when the invariants do not hold.
  static ExpectedProportions FromProportions(const std::array<double, kNumLabels>& p);
  // Throws when a count is zero (its proportion would be 0).
  static ExpectedProportions FromCounts(const LabelCountArray& counts);
  static ExpectedProportions Uniform();

  const std::array<double, kNumLabels>& values() const { return p_; }
  double operator[](std::size_t i) const { return p_[i]; }

 private:
  explicit ExpectedProportions(const std::array<double, kNumLabels>& p) : p_(p) {}
  std::array<double, kNumLabels> p_;
};

struct ChiSquareResult {
  std::string word;
  WordType type = WordType::kSubjectNoun;
  std::uint64_t total = 0;
  std::array<double, kNumLabels> proportions{};  // percent
  double statistic = 0.0;
  int df = static_cast<int>(kNumLabels) - 1;
  double p_value = 1.0;
  double log_p = 0.0;
};

// Pearson goodness of fit against expected proportions, df = labels - 1.
// p_value is exactly 1 iff the statistic is exactly 0. Throws
// std::invalid_argument when the total is 0.
ChiSquareResult ChiSquareGof(const LabelCountArray& observed,
                             const ExpectedProportions& expected);

struct ReportOptions {
  std::size_t k = 5;
  // Rows below this total are not tested (keeps expected cells >= 5 at
  // typical proportions).
  std::uint64_t min_total = 25;
};

struct StatsReport {
  std::size_t k = 0;
  std::uint64_t min_total = 0;
  std::size_t tested_examples = 0;
  std::size_t excluded_examples = 0;
  LabelCountArray label_counts{};
  ExpectedProportions expected = ExpectedProportions::Uniform();
  std::vector<ChiSquareResult> subject_rows;
  std::vector<ChiSquareResult> verb_rows;
  // Set when fewer than k rows were eligible for that word type.
  bool subjects_truncated = false;
  bool verbs_truncated = false;
};

// Selects the k highest-total eligible rows of each word type and tests them.
// Throws std::invalid_argument when k == 0.
StatsReport TopKReport(std::span<const ContingencyRow> rows,
                       const ExpectedProportions& expected, const ReportOptions& options);

// The whole procedure on a corpus: extraction, counting, expected proportions
// from the extraction subset, top-k testing.
struct CorpusStats {
  CorpusExtraction extraction;
  std::vector<ContingencyRow> rows;
  StatsReport report;
};
CorpusStats AnalyzeCorpus(const Corpus& corpus, const TagLexicon& lexicon,
                          const ReportOptions& options, unsigned threads = 1);

}  // namespace nliart
