#include "nliart/synthetic.h"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>
#include <string>

#include "nliart/random.h"

namespace nliart {
namespace {

constexpr std::array<std::string_view, kNumLabels> kMarkers = {"surfer", "chef", "farmer"};

constexpr std::string_view kNeutralWords[] = {
    "pedestrian", "visitor",  "resident", "stranger", "traveler", "passerby",
    "bystander",  "newcomer", "onlooker", "commuter", "wanderer", "neighbor"};

constexpr std::string_view kPremisePeople[] = {"man",   "woman", "person", "boy",
                                               "girl",  "child", "guy",    "lady",
                                               "adult", "teenager"};

constexpr std::string_view kVerbs[] = {"running", "walking", "sitting", "standing",
                                       "jumping", "dancing", "sleeping", "reading",
                                       "eating",  "waiting", "painting", "singing"};

struct PlaceGroup {
  std::string_view prep;
  std::array<std::string_view, 6> places;
};

constexpr PlaceGroup kPlaces[] = {
    {"on", {"beach", "street", "sidewalk", "bridge", "stage", "rooftop"}},
    {"in", {"park", "kitchen", "garden", "library", "field", "market"}},
    {"near", {"river", "lake", "fountain", "station", "harbor", "forest"}},
};

constexpr std::string_view kTails[] = {
    "with friends",        "during the afternoon", "under a cloudy sky",
    "after work",          "before sunset",        "while music plays",
    "on a windy day",      "early in the morning", "as people watch",
    "despite the weather"};

template <typename Range>
std::string_view Pick(const Range& range, Rng& rng) {
  const std::size_t n = std::size(range);
  return range[static_cast<std::size_t>(rng.Below(n))];
}

// Uniform draw from [0, n) other than `avoid`.
std::size_t PickOther(std::size_t n, std::size_t avoid, Rng& rng) {
  std::size_t i = static_cast<std::size_t>(rng.Below(n - 1));
  return i >= avoid ? i + 1 : i;
}

NliExample MakeExample(Split split, std::size_t index, Label label, double strength, Rng& rng) {
  const std::size_t gold = LabelIndex(label);
  const std::size_t marker =
      rng.Uniform() < strength ? gold : PickOther(kNumLabels, gold, rng);

  const std::size_t verb = static_cast<std::size_t>(rng.Below(std::size(kVerbs)));
  const std::size_t group = static_cast<std::size_t>(rng.Below(std::size(kPlaces)));
  const std::size_t place = static_cast<std::size_t>(rng.Below(6));

  std::size_t p_verb = verb;
  std::size_t p_group = group;
  std::size_t p_place = place;
  switch (label) {
    case Label::kEntailment:
      break;
    case Label::kNeutral:
      p_place = PickOther(6, place, rng);
      break;
    case Label::kContradiction:
      p_verb = PickOther(std::size(kVerbs), verb, rng);
      p_group = PickOther(std::size(kPlaces), group, rng);
      p_place = static_cast<std::size_t>(rng.Below(6));
      break;
  }

  NliExample example;
  example.id = std::string(SplitName(split)) + "-" + std::to_string(index);
  example.label = label;
  example.hypothesis = "A " + std::string(kMarkers[marker]) + " is " + std::string(kVerbs[verb]) +
                       " " + std::string(kPlaces[group].prep) + " the " +
                       std::string(kPlaces[group].places[place]) + ".";
  example.premise = "A " + std::string(Pick(kPremisePeople, rng)) + " is " +
                    std::string(kVerbs[p_verb]) + " " + std::string(kPlaces[p_group].prep) +
                    " the " + std::string(kPlaces[p_group].places[p_place]) + " " +
                    std::string(Pick(kTails, rng)) + ".";
  return example;
}

Corpus MakeSplit(Split split, std::size_t size, const SyntheticConfig& config) {
  Corpus corpus;
  corpus.split = split;
  corpus.examples.reserve(size);
  std::vector<Label> labels(size);
  for (std::size_t i = 0; i < size; ++i) labels[i] = LabelFromIndex(i % kNumLabels);
  Rng order = Rng::ForStream(config.seed, {static_cast<std::uint64_t>(split), 0});
  order.Shuffle(std::span<Label>(labels));
  for (std::size_t i = 0; i < size; ++i) {
    Rng rng = Rng::ForStream(config.seed, {static_cast<std::uint64_t>(split), 1, i});
    corpus.examples.push_back(MakeExample(split, i, labels[i], config.marker_strength, rng));
  }
  return corpus;
}

}  // namespace

const std::array<std::string_view, kNumLabels>& SyntheticMarkers() { return kMarkers; }

std::span<const std::string_view> SyntheticNeutralWords() { return kNeutralWords; }

SyntheticCorpus GenerateSynthetic(const SyntheticConfig& config) {
  if (!(config.marker_strength >= 0.0 && config.marker_strength <= 1.0)) {
    throw std::invalid_argument("marker_strength must lie in [0, 1]");
  }
  return {MakeSplit(Split::kTrain, config.train_size, config),
          MakeSplit(Split::kDev, config.dev_size, config),
          MakeSplit(Split::kTest, config.test_size, config)};
}

EmbeddingTable SyntheticEmbeddings() {
  // Axis 0 is the shared "person" direction. Markers add a private axis of
  // weight 0.5 (cosine 0.8 between markers); neutral words add a small
  // private offset (cosine about 0.89 to every marker).
  constexpr std::size_t kDim = 3 + std::size(kNeutralWords) + 1;
  EmbeddingTable table;
  std::vector<float> v(kDim);
  for (std::size_t m = 0; m < kNumLabels; ++m) {
    std::fill(v.begin(), v.end(), 0.0f);
    v[0] = 1.0f;
    v[1 + m] = 0.5f;
    table.Add(std::string(kMarkers[m]), v);
  }
  for (std::size_t i = 0; i < std::size(kNeutralWords); ++i) {
    std::fill(v.begin(), v.end(), 0.0f);
    v[0] = 1.0f;
    v[1 + kNumLabels + i] = 0.05f;
    table.Add(std::string(kNeutralWords[i]), v);
  }
  return table;
}

}  // namespace nliart
