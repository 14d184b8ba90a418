#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nliart/corpus.h"
#include "nliart/embeddings.h"
#include "nliart/random.h"
#include "nliart/synonyms.h"
#include "nliart/tfidf.h"

namespace nliart {

enum class Strategy { kCharSubstitute, kWordEmbedding, kSynonymWordNet, kSynonymPpdb, kTfIdf };

inline constexpr Strategy kAllStrategies[] = {Strategy::kCharSubstitute, Strategy::kWordEmbedding,
                                              Strategy::kSynonymWordNet, Strategy::kSynonymPpdb,
                                              Strategy::kTfIdf};

// "char_substitute", "word_embedding", "synonym_wordnet", "synonym_ppdb", "tfidf"
std::string_view StrategyName(Strategy strategy);
std::optional<Strategy> StrategyFromName(std::string_view name);

struct AugmentConfig {
  Strategy strategy = Strategy::kCharSubstitute;
  double word_rate = 0.3;  // fraction of candidate words altered per sentence
  std::size_t copies_per_example = 1;
  std::uint64_t seed = 0;
  std::size_t min_word_length = 3;
  bool preserve_stopwords = true;

  // Throws std::invalid_argument when word_rate is outside [0, 1] or
  // copies_per_example is 0.
  void Validate() const;
};

// Fixed English function-word list, lowercased.
bool IsStopword(std::string_view lower);
std::size_t StopwordCount();

// ceil(rate * pool), guarded against rounding (0.3 * 10 is 3, not 4).
std::size_t SelectionCount(double rate, std::size_t pool);

struct AugmentOutcome {
  std::string text;
  std::size_t altered = 0;  // words actually changed
  bool identity() const { return altered == 0; }
};

// Each selected word keeps its first character; ceil(0.3 * length) of its
// other letters become different random lowercase letters.
AugmentOutcome CharSubstitute(std::string_view text, const AugmentConfig& config, Rng& rng);

// Memoized top-k cosine neighbors, restricted to replacement-safe words.
// Safe for concurrent use.
class NeighborIndex {
 public:
  explicit NeighborIndex(const EmbeddingTable& table, std::size_t k = 10);
  ~NeighborIndex();

  const EmbeddingTable& table() const { return table_; }
  std::size_t k() const { return k_; }
  // Empty when the word is absent from the table.
  std::vector<Neighbor> Get(std::string_view word) const;

 private:
  struct Cache;
  const EmbeddingTable& table_;
  std::size_t k_;
  std::unique_ptr<Cache> cache_;
};

// Selected in-vocabulary words are replaced by one of their top-10 cosine
// neighbors, chosen uniformly. Out-of-vocabulary words are never selected.
AugmentOutcome EmbedSubstitute(std::string_view text, const NeighborIndex& neighbors,
                               const AugmentConfig& config, Rng& rng);
AugmentOutcome EmbedSubstitute(std::string_view text, const EmbeddingTable& table,
                               const AugmentConfig& config, Rng& rng);

// Selected words with a lexicon entry get a uniformly drawn synonym.
AugmentOutcome SynonymSubstitute(std::string_view text, const SynonymLexicon& lexicon,
                                 const AugmentConfig& config, Rng& rng);

// Words are selected with probability proportional to 1 / idf; each gets a
// replacement drawn from the model's weight table, never itself.
AugmentOutcome TfIdfSubstitute(std::string_view text, const TfIdfModel& model,
                               const AugmentConfig& config, Rng& rng);

struct AugmentResources {
  const EmbeddingTable* embeddings = nullptr;
  const SynonymLexicon* wordnet = nullptr;
  const SynonymLexicon* ppdb = nullptr;
  const TfIdfModel* tfidf = nullptr;
};

// Throws MissingResource when the strategy's resource is not supplied.
class MissingResource : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
void CheckResources(Strategy strategy, const AugmentResources& resources);

struct AugmentResult {
  Corpus corpus;               // augmented examples only
  std::size_t identities = 0;  // outputs identical to their source hypothesis
};

// copies_per_example outputs per training example, example-major. Each output
// draws from its own stream keyed by (seed, example index, copy index), so
// the result does not depend on the thread count. Ids are "<id>#aug<copy+1>"
// and origins "augmented:<strategy>". Only the train split is accepted.
AugmentResult AugmentCorpus(const Corpus& corpus, const AugmentConfig& config,
                            const AugmentResources& resources, unsigned threads = 1);

}  // namespace nliart
