#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nliart/corpus.h"

namespace nliart {

struct Token {
  std::string surface;
  std::string lower;
  std::size_t index = 0;
  // Byte offset of surface within the source text.
  std::size_t offset = 0;

  bool operator==(const Token&) const = default;
};

// Whitespace split, then each leading / trailing run of ASCII punctuation is
// detached as one token. Internal hyphens and apostrophes stay in the word.
std::vector<Token> Tokenize(std::string_view text);

enum class PosTag {
  kNoun,
  kNounPlural,
  kPronoun,
  kVerbBase,
  kVerb3sg,
  kVerbGerund,
  kVerbPast,
  kAux,
  kDet,
  kAdj,
  kAdp,
  kNum,
  kOther,
};

std::string_view PosTagName(PosTag tag);  // "NOUN", "VERB_3SG", ...
std::optional<PosTag> PosTagFromName(std::string_view name);

constexpr bool IsNounFamily(PosTag tag) {
  return tag == PosTag::kNoun || tag == PosTag::kNounPlural || tag == PosTag::kPronoun;
}
constexpr bool IsVerbFamily(PosTag tag) {
  return tag == PosTag::kVerbBase || tag == PosTag::kVerb3sg ||
         tag == PosTag::kVerbGerund || tag == PosTag::kVerbPast || tag == PosTag::kAux;
}

// Closed list: forms of be / have / do, modals and their negated
// contractions. Expects a lowercased word.
bool IsAuxiliary(std::string_view lower);

// Word -> single most frequent tag. File format: "word<TAB>TAG" per line.
class TagLexicon {
 public:
  TagLexicon() = default;

  static TagLexicon Load(std::istream& in);
  static TagLexicon LoadFile(const std::string& path);
  // The compiled-in lexicon (~5k entries).
  static const TagLexicon& Default();

  std::optional<PosTag> Find(std::string_view lower) const;
  std::size_t size() const { return tags_.size(); }

 private:
  std::unordered_map<std::string, PosTag> tags_;
};

struct TaggedToken {
  Token token;
  PosTag tag = PosTag::kOther;
};

using TaggedSentence = std::vector<TaggedToken>;

// Tag order: auxiliary closed list, lexicon, then fallbacks. Tokens with no
// letters are NUM when they contain a digit and OTHER otherwise; remaining
// unknown words go through the suffix rules -ing, -ed, -s (not -ss), NOUN.
PosTag TagWord(std::string_view lower, const TagLexicon& lexicon);
TaggedSentence TagTokens(std::span<const Token> tokens, const TagLexicon& lexicon);

struct Extraction {
  std::optional<std::string> main_subject;
  std::optional<std::string> main_verb;

  bool empty() const { return !main_subject && !main_verb; }
  bool operator==(const Extraction&) const = default;
};

// main_subject: first noun-family token before the first verb-family token
// (first noun-family token overall when the sentence has no verb).
// main_verb: the first verb-family token, promoted to the next gerund when
// that token is an auxiliary followed later by a VERB_GERUND.
Extraction Extract(const TaggedSentence& tagged);

Extraction ExtractText(std::string_view text, const TagLexicon& lexicon);

struct LabeledExtraction {
  Extraction extraction;
  Label label = Label::kEntailment;
};

struct CorpusExtraction {
  std::vector<LabeledExtraction> entries;  // corpus order
  std::size_t excluded = 0;                // both fields absent
};

// Runs over hypotheses only. Result is independent of the thread count.
CorpusExtraction ExtractCorpus(const Corpus& corpus, const TagLexicon& lexicon,
                               unsigned threads = 1);

}  // namespace nliart
