#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "nliart/baseline.h"
#include "nliart/tagging.h"
#include "text_util.h"

namespace nliart {
namespace {

bool HasWordChar(std::string_view s) {
  for (char c : s) {
    if (IsAsciiAlpha(c) || IsAsciiDigit(c) || static_cast<unsigned char>(c) >= 0x80) return true;
  }
  return false;
}

std::set<std::string> WordTypes(std::string_view text) {
  std::set<std::string> types;
  for (Token& token : Tokenize(text)) {
    if (HasWordChar(token.lower)) types.insert(std::move(token.lower));
  }
  return types;
}

void AddTokens(std::vector<std::size_t>& out, std::string_view text, std::string_view prefix,
               const Vocabulary& vocabulary) {
  std::string name(prefix);
  for (const Token& token : Tokenize(text)) {
    name.resize(prefix.size());
    name += token.lower;
    if (auto index = vocabulary.Find(name)) out.push_back(*index);
  }
}

}  // namespace

std::string_view FeatureModeName(FeatureMode mode) {
  return mode == FeatureMode::kPair ? "pair" : "hypothesis_only";
}

std::optional<FeatureMode> FeatureModeFromName(std::string_view name) {
  if (name == "pair") return FeatureMode::kPair;
  if (name == "hypothesis_only") return FeatureMode::kHypothesisOnly;
  return std::nullopt;
}

std::size_t OverlapCount(std::string_view premise, std::string_view hypothesis) {
  const std::set<std::string> p = WordTypes(premise);
  std::size_t shared = 0;
  for (const std::string& word : WordTypes(hypothesis)) shared += p.count(word);
  return shared;
}

Vocabulary Vocabulary::Build(const Corpus& train, FeatureMode mode, std::size_t min_count) {
  if (train.empty()) throw std::invalid_argument("vocabulary needs a non-empty corpus");
  std::map<std::string, std::size_t> counts;
  for (const NliExample& example : train.examples) {
    for (const Token& token : Tokenize(example.hypothesis)) ++counts["h:" + token.lower];
    if (mode == FeatureMode::kPair) {
      for (const Token& token : Tokenize(example.premise)) ++counts["p:" + token.lower];
    }
  }
  std::vector<std::string> names;
  for (const auto& [name, count] : counts) {
    if (count >= min_count) names.push_back(name);
  }
  if (mode == FeatureMode::kPair) names.emplace_back(kOverlapFeature);
  return FromNames(mode, std::move(names));
}

Vocabulary Vocabulary::FromNames(FeatureMode mode, std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end()) {
    throw std::invalid_argument("duplicate feature name in vocabulary");
  }
  Vocabulary vocabulary;
  vocabulary.mode_ = mode;
  for (const std::string& name : names) {
    const bool hypothesis = name.rfind("h:", 0) == 0;
    const bool premise = name.rfind("p:", 0) == 0;
    const bool overlap = name == kOverlapFeature;
    if (!hypothesis && !(mode == FeatureMode::kPair && (premise || overlap))) {
      throw std::invalid_argument("feature '" + name + "' not allowed in " +
                                  std::string(FeatureModeName(mode)) + " mode");
    }
  }
  vocabulary.names_ = std::move(names);
  for (std::size_t i = 0; i < vocabulary.names_.size(); ++i) {
    vocabulary.index_.emplace(vocabulary.names_[i], i);
  }
  return vocabulary;
}

std::optional<std::size_t> Vocabulary::Find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FeatureVector Featurize(const NliExample& example, const Vocabulary& vocabulary) {
  std::vector<std::size_t> hits;
  AddTokens(hits, example.hypothesis, "h:", vocabulary);
  if (vocabulary.mode() == FeatureMode::kPair) AddTokens(hits, example.premise, "p:", vocabulary);
  std::sort(hits.begin(), hits.end());

  FeatureVector x;
  for (std::size_t i = 0; i < hits.size();) {
    std::size_t j = i;
    while (j < hits.size() && hits[j] == hits[i]) ++j;
    x.push_back({hits[i], static_cast<double>(j - i)});
    i = j;
  }
  if (vocabulary.mode() == FeatureMode::kPair) {
    if (auto index = vocabulary.Find(kOverlapFeature)) {
      const std::size_t overlap = OverlapCount(example.premise, example.hypothesis);
      if (overlap > 0) {
        const FeatureEntry entry{*index, static_cast<double>(overlap)};
        x.insert(std::upper_bound(x.begin(), x.end(), entry,
                                  [](const FeatureEntry& a, const FeatureEntry& b) {
                                    return a.index < b.index;
                                  }),
                 entry);
      }
    }
  }
  return x;
}

}  // namespace nliart
