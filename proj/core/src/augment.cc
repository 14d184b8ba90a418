#include "nliart/augment.h"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "nliart/tagging.h"
#include "parallel.h"
#include "text_util.h"

namespace nliart {
namespace {

constexpr std::string_view kStrategyNames[] = {"char_substitute", "word_embedding",
                                               "synonym_wordnet", "synonym_ppdb", "tfidf"};

constexpr std::string_view kStopwords[] = {
    "a",        "about",   "above",   "after",   "again",   "against",    "all",     "am",
    "an",       "and",     "any",     "are",     "as",      "at",         "be",      "because",
    "been",     "before",  "being",   "below",   "between", "both",       "but",     "by",
    "can",      "could",   "did",     "do",      "does",    "doing",      "down",    "during",
    "each",     "few",     "for",     "from",    "further", "had",        "has",     "have",
    "having",   "he",      "her",     "here",    "hers",    "herself",    "him",     "himself",
    "his",      "how",     "i",       "if",      "in",      "into",       "is",      "it",
    "its",      "itself",  "just",    "may",     "me",      "might",      "more",    "most",
    "must",     "my",      "myself",  "no",      "nor",     "not",        "now",     "of",
    "off",      "on",      "once",    "only",    "or",      "other",      "ought",   "our",
    "ours",     "ourselves", "out",   "over",    "own",     "same",       "shall",   "she",
    "should",   "so",      "some",    "such",    "than",    "that",       "the",     "their",
    "theirs",   "them",    "themselves", "then", "there",   "these",      "they",    "this",
    "those",    "through", "to",      "too",     "under",   "until",      "up",      "upon",
    "very",     "was",     "we",      "were",    "what",    "when",       "where",   "which",
    "while",    "who",     "whom",    "whose",   "why",     "will",       "with",    "within",
    "without",  "would",   "you",     "your",    "yours",   "yourself",   "yourselves",
    "isn't",    "aren't",  "wasn't",  "weren't", "don't",   "doesn't",    "didn't",  "can't",
    "cannot",   "won't",   "also",    "there's", "it's",    "onto",       "toward",  "towards",
    "among",    "across",  "along",   "around",  "behind",  "beside",     "near"};

const std::unordered_set<std::string_view>& StopwordSet() {
  static const std::unordered_set<std::string_view> set(std::begin(kStopwords),
                                                        std::end(kStopwords));
  return set;
}

bool Eligible(const Token& token, const AugmentConfig& config) {
  if (!IsPlainWord(token.surface)) return false;
  if (token.surface.size() < config.min_word_length) return false;
  return !(config.preserve_stopwords && IsStopword(token.lower));
}

std::string MatchCase(std::string_view original, std::string replacement) {
  if (!original.empty() && !replacement.empty() && IsAsciiUpper(original.front())) {
    replacement.front() = ToUpperAscii(replacement.front());
  }
  return replacement;
}

// Uniform choice of count items from pool (partial Fisher-Yates), returned in
// ascending order.
std::vector<std::size_t> ChooseUniform(std::vector<std::size_t> pool, std::size_t count,
                                       Rng& rng) {
  count = std::min(count, pool.size());
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.Below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

// Rebuilds the text with token surfaces swapped; spacing is left untouched.
AugmentOutcome Rebuild(std::string_view text, const std::vector<Token>& tokens,
                       const std::vector<std::pair<std::size_t, std::string>>& edits) {
  AugmentOutcome outcome;
  outcome.text.reserve(text.size() + 16);
  std::size_t cursor = 0;
  for (const auto& [index, surface] : edits) {
    const Token& token = tokens[index];
    outcome.text.append(text.substr(cursor, token.offset - cursor));
    outcome.text.append(surface);
    cursor = token.offset + token.surface.size();
    if (surface != token.surface) ++outcome.altered;
  }
  outcome.text.append(text.substr(cursor));
  return outcome;
}

template <typename HasResource>
std::vector<std::size_t> Pool(const std::vector<Token>& tokens, const AugmentConfig& config,
                              HasResource&& has_resource) {
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (Eligible(tokens[i], config) && has_resource(tokens[i])) pool.push_back(i);
  }
  return pool;
}

}  // namespace

std::string_view StrategyName(Strategy strategy) {
  return kStrategyNames[static_cast<std::size_t>(strategy)];
}

std::optional<Strategy> StrategyFromName(std::string_view name) {
  for (Strategy s : kAllStrategies) {
    if (StrategyName(s) == name) return s;
  }
  return std::nullopt;
}

void AugmentConfig::Validate() const {
  if (!(word_rate >= 0.0 && word_rate <= 1.0)) {
    throw std::invalid_argument("word_rate must lie in [0, 1]");
  }
  if (copies_per_example == 0) throw std::invalid_argument("copies_per_example must be >= 1");
}

bool IsStopword(std::string_view lower) { return StopwordSet().count(lower) > 0; }
std::size_t StopwordCount() { return StopwordSet().size(); }

std::size_t SelectionCount(double rate, std::size_t pool) {
  if (pool == 0 || rate <= 0.0) return 0;
  const double exact = rate * static_cast<double>(pool);
  const auto count = static_cast<std::size_t>(std::ceil(exact - 1e-9));
  return std::min(count, pool);
}

AugmentOutcome CharSubstitute(std::string_view text, const AugmentConfig& config, Rng& rng) {
  const std::vector<Token> tokens = Tokenize(text);
  const auto pool = Pool(tokens, config, [](const Token&) { return true; });
  std::vector<std::pair<std::size_t, std::string>> edits;
  for (std::size_t index : ChooseUniform(pool, SelectionCount(config.word_rate, pool.size()), rng)) {
    std::string word = tokens[index].surface;
    std::vector<std::size_t> letters;
    for (std::size_t i = 1; i < word.size(); ++i) {
      if (IsAsciiAlpha(word[i])) letters.push_back(i);
    }
    for (std::size_t pos : ChooseUniform(letters, SelectionCount(0.3, word.size()), rng)) {
      const char current = ToLowerAscii(word[pos]);
      char next = static_cast<char>('a' + rng.Below(25));
      if (next >= current) ++next;  // 25 letters other than the current one
      word[pos] = next;
    }
    edits.emplace_back(index, std::move(word));
  }
  return Rebuild(text, tokens, edits);
}

struct NeighborIndex::Cache {
  std::shared_mutex mutex;
  std::unordered_map<std::string, std::vector<Neighbor>> entries;
};

NeighborIndex::NeighborIndex(const EmbeddingTable& table, std::size_t k)
    : table_(table), k_(k), cache_(std::make_unique<Cache>()) {
  if (k == 0) throw std::invalid_argument("neighbor index needs k >= 1");
}

NeighborIndex::~NeighborIndex() = default;

std::vector<Neighbor> NeighborIndex::Get(std::string_view word) const {
  const std::string key(word);
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->entries.find(key);
    if (it != cache_->entries.end()) return it->second;
  }
  std::vector<Neighbor> neighbors;
  if (table_.Contains(word)) {
    for (Neighbor& n : table_.NearestNeighbors(word, k_)) {
      if (IsPlainWord(n.word)) neighbors.push_back(std::move(n));
    }
  }
  std::unique_lock lock(cache_->mutex);
  return cache_->entries.emplace(key, std::move(neighbors)).first->second;
}

AugmentOutcome EmbedSubstitute(std::string_view text, const NeighborIndex& neighbors,
                               const AugmentConfig& config, Rng& rng) {
  const std::vector<Token> tokens = Tokenize(text);
  const auto pool =
      Pool(tokens, config, [&](const Token& t) { return !neighbors.Get(t.lower).empty(); });
  std::vector<std::pair<std::size_t, std::string>> edits;
  for (std::size_t index : ChooseUniform(pool, SelectionCount(config.word_rate, pool.size()), rng)) {
    const std::vector<Neighbor> options = neighbors.Get(tokens[index].lower);
    const Neighbor& pick = options[static_cast<std::size_t>(rng.Below(options.size()))];
    edits.emplace_back(index, MatchCase(tokens[index].surface, pick.word));
  }
  return Rebuild(text, tokens, edits);
}

AugmentOutcome EmbedSubstitute(std::string_view text, const EmbeddingTable& table,
                               const AugmentConfig& config, Rng& rng) {
  const NeighborIndex neighbors(table);
  return EmbedSubstitute(text, neighbors, config, rng);
}

AugmentOutcome SynonymSubstitute(std::string_view text, const SynonymLexicon& lexicon,
                                 const AugmentConfig& config, Rng& rng) {
  const std::vector<Token> tokens = Tokenize(text);
  const auto pool = Pool(tokens, config, [&](const Token& t) {
    const auto* synonyms = lexicon.Find(t.lower);
    return synonyms != nullptr && !synonyms->empty();
  });
  std::vector<std::pair<std::size_t, std::string>> edits;
  for (std::size_t index : ChooseUniform(pool, SelectionCount(config.word_rate, pool.size()), rng)) {
    const auto& synonyms = *lexicon.Find(tokens[index].lower);
    const std::string& pick = synonyms[static_cast<std::size_t>(rng.Below(synonyms.size()))];
    edits.emplace_back(index, MatchCase(tokens[index].surface, pick));
  }
  return Rebuild(text, tokens, edits);
}

AugmentOutcome TfIdfSubstitute(std::string_view text, const TfIdfModel& model,
                               const AugmentConfig& config, Rng& rng) {
  const std::vector<Token> tokens = Tokenize(text);
  const auto pool = Pool(tokens, config, [](const Token&) { return true; });
  std::vector<double> weights;
  weights.reserve(pool.size());
  for (std::size_t index : pool) weights.push_back(1.0 / model.Idf(tokens[index].lower));

  std::vector<std::size_t> chosen;
  const std::size_t count = SelectionCount(config.word_rate, pool.size());
  for (std::size_t draw = 0; draw < count; ++draw) {
    const std::size_t slot = rng.Weighted(weights);
    chosen.push_back(pool[slot]);
    weights[slot] = 0.0;  // without replacement
  }
  std::sort(chosen.begin(), chosen.end());

  std::vector<std::pair<std::size_t, std::string>> edits;
  for (std::size_t index : chosen) {
    auto replacement = model.SampleReplacement(tokens[index].lower, rng);
    if (replacement) edits.emplace_back(index, MatchCase(tokens[index].surface, *replacement));
  }
  return Rebuild(text, tokens, edits);
}

void CheckResources(Strategy strategy, const AugmentResources& resources) {
  switch (strategy) {
    case Strategy::kCharSubstitute:
      return;
    case Strategy::kWordEmbedding:
      if (!resources.embeddings) throw MissingResource("word_embedding needs an embedding table");
      return;
    case Strategy::kSynonymWordNet:
      if (!resources.wordnet) throw MissingResource("synonym_wordnet needs a WordNet lexicon");
      if (resources.wordnet->source() != SynonymSource::kWordNet) {
        throw MissingResource("synonym_wordnet was given a ppdb-style lexicon");
      }
      return;
    case Strategy::kSynonymPpdb:
      if (!resources.ppdb) throw MissingResource("synonym_ppdb needs a PPDB lexicon");
      if (resources.ppdb->source() != SynonymSource::kPpdb) {
        throw MissingResource("synonym_ppdb was given a wordnet-style lexicon");
      }
      return;
    case Strategy::kTfIdf:
      if (!resources.tfidf) throw MissingResource("tfidf needs a fitted tf-idf model");
      return;
  }
}

AugmentResult AugmentCorpus(const Corpus& corpus, const AugmentConfig& config,
                            const AugmentResources& resources, unsigned threads) {
  config.Validate();
  CheckResources(config.strategy, resources);
  if (corpus.split != Split::kTrain) {
    throw std::invalid_argument("only the train split is augmented, got " +
                                std::string(SplitName(corpus.split)));
  }

  std::unique_ptr<NeighborIndex> neighbors;
  if (config.strategy == Strategy::kWordEmbedding) {
    neighbors = std::make_unique<NeighborIndex>(*resources.embeddings);
  }
  const std::string origin =
      std::string(kAugmentedOriginPrefix) + std::string(StrategyName(config.strategy));
  const std::size_t copies = config.copies_per_example;

  AugmentResult result;
  result.corpus.split = corpus.split;
  result.corpus.examples.resize(corpus.size() * copies);
  std::vector<char> identity(result.corpus.examples.size(), 0);

  ParallelChunks(corpus.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const NliExample& source = corpus.examples[i];
      for (std::size_t c = 0; c < copies; ++c) {
        Rng rng = Rng::ForStream(config.seed, {i, c});
        AugmentOutcome outcome;
        switch (config.strategy) {
          case Strategy::kCharSubstitute:
            outcome = CharSubstitute(source.hypothesis, config, rng);
            break;
          case Strategy::kWordEmbedding:
            outcome = EmbedSubstitute(source.hypothesis, *neighbors, config, rng);
            break;
          case Strategy::kSynonymWordNet:
            outcome = SynonymSubstitute(source.hypothesis, *resources.wordnet, config, rng);
            break;
          case Strategy::kSynonymPpdb:
            outcome = SynonymSubstitute(source.hypothesis, *resources.ppdb, config, rng);
            break;
          case Strategy::kTfIdf:
            outcome = TfIdfSubstitute(source.hypothesis, *resources.tfidf, config, rng);
            break;
        }
        const std::size_t slot = i * copies + c;
        NliExample& out = result.corpus.examples[slot];
        out.id = source.id + "#aug" + std::to_string(c + 1);
        out.premise = source.premise;
        out.hypothesis = std::move(outcome.text);
        out.label = source.label;
        out.origin = origin;
        identity[slot] = out.hypothesis == source.hypothesis;
      }
    }
  });
  result.identities = static_cast<std::size_t>(std::count(identity.begin(), identity.end(), 1));
  return result;
}

}  // namespace nliart
