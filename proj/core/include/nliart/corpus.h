#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nliart/error.h"

namespace nliart {

// Integer codes follow the SNLI convention and are stable.
enum class Label : int { kEntailment = 0, kNeutral = 1, kContradiction = 2 };

inline constexpr std::size_t kNumLabels = 3;
inline constexpr std::array<Label, kNumLabels> kAllLabels = {
    Label::kEntailment, Label::kNeutral, Label::kContradiction};

constexpr std::size_t LabelIndex(Label label) {
  return static_cast<std::size_t>(label);
}
constexpr Label LabelFromIndex(std::size_t index) {
  return static_cast<Label>(index);
}
std::string_view LabelName(Label label);
// Accepts "entailment" / "neutral" / "contradiction" (case-insensitive).
std::optional<Label> LabelFromName(std::string_view name);

enum class Split { kTrain, kDev, kTest };

std::string_view SplitName(Split split);
// Accepts train / dev / test (also "validation" for dev). Throws on anything
// else.
Split SplitFromName(std::string_view name);

inline constexpr std::string_view kOriginalOrigin = "original";
inline constexpr std::string_view kAugmentedOriginPrefix = "augmented:";

struct NliExample {
  std::string id;
  std::string premise;
  std::string hypothesis;
  Label label = Label::kEntailment;
  std::string origin = std::string(kOriginalOrigin);

  bool operator==(const NliExample&) const = default;
};

struct Corpus {
  Split split = Split::kTrain;
  std::vector<NliExample> examples;

  std::size_t size() const { return examples.size(); }
  bool empty() const { return examples.empty(); }

  bool operator==(const Corpus&) const = default;
};

struct ParseResult {
  Corpus corpus;
  // Records with label -1 (or SNLI's "-" gold label).
  std::size_t skipped_unlabeled = 0;
  // Records whose hypothesis is blank after trimming.
  std::size_t skipped_empty = 0;
};

// JSON Lines. Each non-blank line is an object with premise / hypothesis /
// label (0, 1, 2, -1 or a label name). The original SNLI distribution field
// names (sentence1 / sentence2 / gold_label / pairID) are accepted as well.
// Optional "id" and "origin" fields are preserved; missing ids become
// "<split>:<line>".
ParseResult ParseJsonl(std::istream& in, Split split);

// Tab-separated with the header "premise\thypothesis\tlabel".
ParseResult ParseTsv(std::istream& in, Split split);

// Dispatches on the extension (.tsv -> TSV, anything else -> JSON Lines).
ParseResult ReadCorpusFile(const std::filesystem::path& path, Split split);

void WriteJsonl(std::ostream& out, const Corpus& corpus);
void WriteCorpusFile(const std::filesystem::path& path, const Corpus& corpus);

Corpus StripPremises(const Corpus& corpus);

std::array<std::size_t, kNumLabels> LabelCounts(const Corpus& corpus);

// Percentages (sum to 100). Throws std::invalid_argument on an empty corpus.
std::array<double, kNumLabels> LabelDistribution(const Corpus& corpus);

// Concatenates original then augmented. An augmented id that collides with
// an id already present is renamed "<id>#aug<k>" with the smallest k that is
// free. Throws std::invalid_argument when the splits differ.
Corpus Merge(const Corpus& original, const Corpus& augmented);

}  // namespace nliart
