#include "nliart/tagging.h"

#include <array>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "embedded_data.h"
#include "parallel.h"
#include "text_util.h"

namespace nliart {
namespace {

constexpr std::array<std::string_view, 13> kTagNames = {
    "NOUN",        "NOUN_PLURAL", "PRONOUN", "VERB_BASE", "VERB_3SG",
    "VERB_GERUND", "VERB_PAST",   "AUX",     "DET",       "ADJ",
    "ADP",         "NUM",         "OTHER"};

constexpr std::string_view kAuxiliaries[] = {
    "be",      "am",       "is",     "are",      "was",      "were",    "been",
    "being",   "have",     "has",    "had",      "having",   "do",      "does",
    "did",     "doing",    "will",   "would",    "shall",    "should",  "can",
    "could",   "may",      "might",  "must",     "isn't",    "aren't",  "wasn't",
    "weren't", "don't",    "doesn't", "didn't",  "can't",    "cannot",  "couldn't",
    "won't",   "wouldn't", "shouldn't", "hasn't", "haven't", "hadn't", "mustn't"};

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

void PushToken(std::vector<Token>& tokens, std::string_view text, std::size_t begin,
               std::size_t end) {
  Token token;
  token.surface = std::string(text.substr(begin, end - begin));
  token.lower = ToLower(token.surface);
  token.index = tokens.size();
  token.offset = begin;
  tokens.push_back(std::move(token));
}

}  // namespace

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsAsciiSpace(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t end = i;
    while (end < text.size() && !IsAsciiSpace(text[end])) ++end;

    std::size_t lead = i;
    while (lead < end && IsAsciiPunct(text[lead])) ++lead;
    if (lead == end) {
      PushToken(tokens, text, i, end);  // the whole chunk is punctuation
    } else {
      std::size_t trail = end;
      while (trail > lead && IsAsciiPunct(text[trail - 1])) --trail;
      if (lead > i) PushToken(tokens, text, i, lead);
      PushToken(tokens, text, lead, trail);
      if (trail < end) PushToken(tokens, text, trail, end);
    }
    i = end;
  }
  return tokens;
}

std::string_view PosTagName(PosTag tag) { return kTagNames[static_cast<std::size_t>(tag)]; }

std::optional<PosTag> PosTagFromName(std::string_view name) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i) {
    if (kTagNames[i] == name) return static_cast<PosTag>(i);
  }
  return std::nullopt;
}

bool IsAuxiliary(std::string_view lower) {
  for (std::string_view aux : kAuxiliaries) {
    if (aux == lower) return true;
  }
  return false;
}

TagLexicon TagLexicon::Load(std::istream& in) {
  TagLexicon lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line[0] == '#') continue;
    const auto fields = SplitOn(line, '\t');
    if (fields.size() != 2 || fields[0].empty()) {
      throw ParseError(line_no, "expected 'word<TAB>TAG'");
    }
    const auto tag = PosTagFromName(Trim(fields[1]));
    if (!tag) throw ParseError(line_no, "unknown tag '" + std::string(fields[1]) + "'");
    lexicon.tags_[ToLower(fields[0])] = *tag;
  }
  return lexicon;
}

TagLexicon TagLexicon::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file " + path);
  return Load(in);
}

const TagLexicon& TagLexicon::Default() {
  static const TagLexicon lexicon = [] {
    std::istringstream in{std::string(embedded::k_lexicon)};
    return Load(in);
  }();
  return lexicon;
}

std::optional<PosTag> TagLexicon::Find(std::string_view lower) const {
  auto it = tags_.find(std::string(lower));
  if (it == tags_.end()) return std::nullopt;
  return it->second;
}

PosTag TagWord(std::string_view lower, const TagLexicon& lexicon) {
  if (IsAuxiliary(lower)) return PosTag::kAux;
  if (auto tag = lexicon.Find(lower)) return *tag;

  bool has_letter = false;
  bool has_digit = false;
  for (char c : lower) {
    // Non-ASCII bytes count as letters so that accented words are words.
    if (IsAsciiAlpha(c) || static_cast<unsigned char>(c) >= 0x80) has_letter = true;
    if (IsAsciiDigit(c)) has_digit = true;
  }
  if (!has_letter) return has_digit ? PosTag::kNum : PosTag::kOther;

  if (EndsWith(lower, "ing")) return PosTag::kVerbGerund;
  if (EndsWith(lower, "ed")) return PosTag::kVerbPast;
  if (EndsWith(lower, "s") && !EndsWith(lower, "ss")) return PosTag::kNounPlural;
  return PosTag::kNoun;
}

TaggedSentence TagTokens(std::span<const Token> tokens, const TagLexicon& lexicon) {
  TaggedSentence tagged;
  tagged.reserve(tokens.size());
  for (const Token& token : tokens) {
    tagged.push_back(TaggedToken{token, TagWord(token.lower, lexicon)});
  }
  return tagged;
}

Extraction Extract(const TaggedSentence& tagged) {
  Extraction result;
  std::size_t first_verb = tagged.size();
  for (std::size_t i = 0; i < tagged.size(); ++i) {
    if (IsVerbFamily(tagged[i].tag)) {
      first_verb = i;
      break;
    }
  }
  for (std::size_t i = 0; i < first_verb; ++i) {
    if (IsNounFamily(tagged[i].tag)) {
      result.main_subject = tagged[i].token.lower;
      break;
    }
  }
  if (first_verb == tagged.size()) return result;

  std::size_t verb = first_verb;
  if (tagged[first_verb].tag == PosTag::kAux) {
    for (std::size_t i = first_verb + 1; i < tagged.size(); ++i) {
      if (tagged[i].tag == PosTag::kVerbGerund) {
        verb = i;
        break;
      }
    }
  }
  result.main_verb = tagged[verb].token.lower;
  return result;
}

Extraction ExtractText(std::string_view text, const TagLexicon& lexicon) {
  const std::vector<Token> tokens = Tokenize(text);
  return Extract(TagTokens(tokens, lexicon));
}

CorpusExtraction ExtractCorpus(const Corpus& corpus, const TagLexicon& lexicon,
                               unsigned threads) {
  std::vector<Extraction> extractions(corpus.size());
  ParallelChunks(corpus.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      extractions[i] = ExtractText(corpus.examples[i].hypothesis, lexicon);
    }
  });

  CorpusExtraction result;
  result.entries.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (extractions[i].empty()) {
      ++result.excluded;
    } else {
      result.entries.push_back(
          LabeledExtraction{std::move(extractions[i]), corpus.examples[i].label});
    }
  }
  return result;
}

}  // namespace nliart
