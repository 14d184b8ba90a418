#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nliart/augment.h"
#include "nliart/baseline.h"
#include "nliart/corpus.h"
#include "nliart/stats.h"
#include "nliart/tagging.h"

namespace nliart {

namespace fs = std::filesystem;

// Environment variable naming the directory that relative data paths fall
// back to when they do not exist relative to the working directory.
inline constexpr const char* kDataDirEnv = "NLIART_DATA_DIR";

fs::path ResolveDataPath(const fs::path& path);

// Fixed output layout under an output directory.
struct OutputLayout {
  fs::path root;
  fs::path reports() const { return root / "reports"; }
  fs::path augmented() const { return root / "augmented"; }
  fs::path models() const { return root / "models"; }
  fs::path tables() const { return root / "tables"; }
};

void WriteTextFile(const fs::path& path, const std::string& content);

struct StatsRun {
  CorpusStats stats;
  std::vector<fs::path> written;  // json, txt, svg, csv
};

// reports/stats.json, stats.txt, stats.svg and contingency.csv.
StatsRun RunStats(const Corpus& corpus, const TagLexicon& lexicon, const ReportOptions& options,
                  const fs::path& out_dir, unsigned threads = 1);

// Raised by RunExperiment; names the stage and strategy that failed.
class ExperimentError : public std::runtime_error {
 public:
  ExperimentError(std::string stage, std::string strategy, const std::string& message);
  const std::string& stage() const { return stage_; }
  const std::string& strategy() const { return strategy_; }

 private:
  std::string stage_;
  std::string strategy_;
};

inline constexpr std::string_view kNoAugmentation = "none";

struct ExperimentSpec {
  fs::path train_path;
  fs::path dev_path;
  fs::path test_path;
  // "none" plus strategy names; Normalize() puts "none" first.
  std::vector<std::string> strategies{std::string(kNoAugmentation)};
  AugmentConfig augment;
  TrainConfig train;
  fs::path out_dir = "out";
  // Strategy resources. Synonym strategies fall back to the bundled
  // lexicons, tfidf to a model fitted on the training hypotheses.
  std::optional<fs::path> embeddings_path;
  std::optional<fs::path> wordnet_path;
  std::optional<fs::path> ppdb_path;
  std::optional<fs::path> tfidf_path;
  unsigned threads = 1;

  // Keys mirror the fields: train, dev, test, strategies, out_dir,
  // embeddings, wordnet, ppdb, tfidf, threads, seed, and the nested objects
  // "augment" {word_rate, copies_per_example, min_word_length,
  // preserve_stopwords} and "train_config" {learning_rate, epochs,
  // batch_size, l2, checkpoint_interval}. Relative paths resolve against base_dir. A
  // top-level seed sets both the augmentation and the training seed.
  static ExperimentSpec FromJson(const std::string& text, const fs::path& base_dir = {});
  static ExperimentSpec FromFile(const fs::path& path);

  // Adds "none" at the front when missing, drops duplicates, validates
  // names and configs. Throws std::invalid_argument.
  void Normalize();
};

std::string StrategyDisplayName(std::string_view strategy);

struct ExperimentRow {
  std::string strategy;
  std::size_t train_examples = 0;
  EvalReport pair;
  EvalReport hypothesis_only;
  double pair_delta = 0.0;  // accuracy points versus the "none" row
  double hypothesis_only_delta = 0.0;
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;  // config order, "none" first
};

struct ExperimentData {
  Corpus train;
  Corpus dev;
  Corpus test;
};

// Reads the three corpora named in the config.
ExperimentData LoadExperimentData(const ExperimentSpec& spec);

// For each strategy: augment the train split (nothing for "none"), merge,
// train pair and hypothesis-only models, evaluate both on test. Writes
// augmented/<strategy>.jsonl, models/<strategy>.<mode>.json plus training
// logs, tables/experiment.json and tables/experiment.txt.
ExperimentResult RunExperiment(const ExperimentSpec& spec, const ExperimentData& data);
ExperimentResult RunExperiment(const ExperimentSpec& spec);

std::string ExperimentToJson(const ExperimentResult& result);
std::string ExperimentToText(const ExperimentResult& result);

}  // namespace nliart
