#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nliart {

enum class SynonymSource { kWordNet, kPpdb };

std::string_view SynonymSourceName(SynonymSource source);  // "wordnet" / "ppdb"

// word -> non-empty synonym list. Lines read "word<TAB>syn1,syn2,...".
// Headwords are lowercased; a synonym equal to its headword is dropped and
// an entry left with no synonyms is skipped.
class SynonymLexicon {
 public:
  explicit SynonymLexicon(SynonymSource source) : source_(source) {}

  static SynonymLexicon Load(std::istream& in, SynonymSource source);
  static SynonymLexicon LoadFile(const std::string& path, SynonymSource source);
  // Bundled ~2k-entry table for the given source.
  static const SynonymLexicon& Default(SynonymSource source);

  void Add(std::string_view word, std::span<const std::string> synonyms);

  SynonymSource source() const { return source_; }
  std::size_t size() const { return entries_.size(); }
  // nullptr when the word has no entry. Expects a lowercased word.
  const std::vector<std::string>* Find(std::string_view lower) const;

 private:
  SynonymSource source_;
  std::unordered_map<std::string, std::vector<std::string>> entries_;
};

}  // namespace nliart
