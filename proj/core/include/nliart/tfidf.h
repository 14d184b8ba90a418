#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nliart/random.h"

namespace nliart {

// Document frequencies over lowercased word tokens (tokens made of letters
// with internal hyphens / apostrophes; punctuation and numbers are ignored).
// idf(w) = ln((1 + N) / (1 + df(w))) + 1, so unseen words get the largest
// idf, ln(1 + N) + 1. Replacement weights are idf normalized over the
// vocabulary.
class TfIdfModel {
 public:
  // Throws std::invalid_argument on an empty document list.
  static TfIdfModel Fit(std::span<const std::string> documents);

  static TfIdfModel Load(std::istream& in);
  static TfIdfModel LoadFile(const std::string& path);
  void Save(std::ostream& out) const;

  std::size_t documents() const { return documents_; }
  std::uint64_t DocumentFrequency(std::string_view lower) const;
  double Idf(std::string_view lower) const;
  // Sorted lexicographically.
  const std::vector<std::string>& vocabulary() const { return vocabulary_; }
  double ReplacementWeight(std::string_view lower) const;

  // Draws a vocabulary word with probability proportional to its
  // replacement weight, conditioned on differing from exclude. nullopt when
  // no other word exists.
  std::optional<std::string> SampleReplacement(std::string_view exclude, Rng& rng) const;

 private:
  void Finalize();

  std::size_t documents_ = 0;
  std::vector<std::string> vocabulary_;
  std::vector<std::uint64_t> df_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<double> cumulative_;  // running idf sums over vocabulary_
};

}  // namespace nliart
