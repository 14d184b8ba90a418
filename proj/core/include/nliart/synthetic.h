#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "nliart/corpus.h"
#include "nliart/embeddings.h"

namespace nliart {

// Corpus with a planted hypothesis artifact: the hypothesis subject is the
// marker word of the example's label with probability marker_strength, and
// one of the other two markers otherwise. Every other hypothesis token is
// drawn independently of the label. Premise / hypothesis word overlap
// carries the real label signal (entailment > neutral > contradiction).
struct SyntheticConfig {
  std::size_t train_size = 24000;
  std::size_t dev_size = 3000;
  std::size_t test_size = 3000;
  double marker_strength = 0.8;
  std::uint64_t seed = 2024;
};

struct SyntheticCorpus {
  Corpus train;
  Corpus dev;
  Corpus test;
};

// Indexed by label: entailment, neutral, contradiction.
const std::array<std::string_view, kNumLabels>& SyntheticMarkers();

// Label-neutral person nouns that never occur in the generated corpus.
std::span<const std::string_view> SyntheticNeutralWords();

// Labels are balanced by cycling through them in a shuffled order.
SyntheticCorpus GenerateSynthetic(const SyntheticConfig& config);

// Small table where every marker's ten nearest neighbors are the neutral
// words, and the markers are farther from each other than from them.
EmbeddingTable SyntheticEmbeddings();

}  // namespace nliart
