// nliart: statistics reports, augmentation, baseline training and the
// augmentation experiment matrix for NLI corpora.

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "nliart/augment.h"
#include "nliart/baseline.h"
#include "nliart/corpus.h"
#include "nliart/pipeline.h"
#include "nliart/report.h"
#include "nliart/stats.h"
#include "nliart/synthetic.h"
#include "nliart/tagging.h"

namespace fs = std::filesystem;
using namespace nliart;

namespace {

struct Common {
  std::uint64_t seed = 0;
  std::string out_dir = "out";
  std::string config;
  unsigned threads = 1;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* out_opt = nullptr;
  CLI::Option* threads_opt = nullptr;
};

// The JSON spec (when given) supplies defaults; explicit flags win.
ExperimentSpec BaseSpec(const Common& common) {
  ExperimentSpec spec = common.config.empty() ? ExperimentSpec{}
                                              : ExperimentSpec::FromFile(common.config);
  if (common.seed_opt->count() > 0) {
    spec.augment.seed = common.seed;
    spec.train.seed = common.seed;
  }
  if (common.out_opt->count() > 0 || common.config.empty()) spec.out_dir = common.out_dir;
  if (common.threads_opt->count() > 0) spec.threads = common.threads;
  return spec;
}

Corpus LoadCorpus(const std::string& path, Split split) {
  const ParseResult parsed = ReadCorpusFile(ResolveDataPath(path), split);
  if (parsed.skipped_unlabeled + parsed.skipped_empty > 0) {
    std::cerr << fmt::format("{}: skipped {} unlabeled and {} empty-hypothesis records\n", path,
                             parsed.skipped_unlabeled, parsed.skipped_empty);
  }
  return parsed.corpus;
}

template <typename T>
void Override(CLI::Option* opt, const T& value, T& into) {
  if (opt->count() > 0) into = value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NLI dataset artifact statistics, augmentation and baselines"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  common.seed_opt = app.add_option("--seed", common.seed, "Seed for every random choice");
  common.out_opt = app.add_option("--out-dir", common.out_dir, "Output directory")
                       ->capture_default_str();
  app.add_option("--config", common.config, "JSON experiment spec supplying defaults")
      ->check(CLI::ExistingFile);
  common.threads_opt =
      app.add_option("--threads", common.threads, "Worker threads (0 = all cores)");

  // stats
  auto* stats = app.add_subcommand("stats", "Hypothesis word / label association report");
  std::string stats_corpus;
  std::size_t top_k = 5;
  std::uint64_t min_total = 25;
  std::string split_name = "train";
  std::string lexicon_path;
  stats->add_option("corpus", stats_corpus, "JSON Lines or TSV corpus")->required();
  stats->add_option("-k,--top-k", top_k, "Words reported per word type")->capture_default_str();
  stats->add_option("--min-total", min_total, "Smallest row total that is tested")
      ->capture_default_str();
  stats->add_option("--split", split_name, "Split name used for missing ids")->capture_default_str();
  stats->add_option("--lexicon", lexicon_path, "Tag lexicon TSV replacing the bundled one");

  // augment
  auto* augment = app.add_subcommand("augment", "Write an augmented copy of a training split");
  std::string aug_corpus, strategy_name, aug_output;
  std::string embeddings, wordnet, ppdb, tfidf;
  double rate = 0.3;
  std::size_t copies = 1;
  std::size_t min_length = 3;
  bool all_words = false;
  augment->add_option("corpus", aug_corpus, "Training corpus")->required();
  augment->add_option("-s,--strategy", strategy_name,
                      "char_substitute | word_embedding | synonym_wordnet | synonym_ppdb | tfidf")
      ->required();
  auto* rate_opt = augment->add_option("--rate", rate, "Fraction of candidate words altered");
  auto* copies_opt = augment->add_option("--copies", copies, "Augmented copies per example");
  auto* length_opt =
      augment->add_option("--min-word-length", min_length, "Shortest word that may change");
  auto* all_opt = augment->add_flag("--include-stopwords", all_words,
                                    "Let function words be altered too");
  augment->add_option("--embeddings", embeddings, "word2vec text file (word_embedding)");
  augment->add_option("--wordnet", wordnet, "Synonym TSV replacing the bundled WordNet table");
  augment->add_option("--ppdb", ppdb, "Synonym TSV replacing the bundled PPDB table");
  augment->add_option("--tfidf", tfidf, "Saved tf-idf model (default: fit on the input)");
  augment->add_option("-o,--output", aug_output, "Output file (default augmented/<strategy>.jsonl)");

  // train
  auto* train = app.add_subcommand("train", "Train a bag-of-words baseline");
  std::string train_path, dev_path, mode_name = "pair", model_name;
  double lr = 0.1, l2 = 1e-6;
  std::size_t epochs = 5, batch = 256, interval = 500;
  train->add_option("--train", train_path, "Training corpus");
  train->add_option("--dev", dev_path, "Development corpus for checkpoint selection");
  train->add_option("--mode", mode_name, "pair | hypothesis_only")->capture_default_str();
  train->add_option("--name", model_name, "Model file stem (default: the mode)");
  auto* lr_opt = train->add_option("--learning-rate", lr, "Fixed step size");
  auto* epochs_opt = train->add_option("--epochs", epochs, "Passes over the training data");
  auto* batch_opt = train->add_option("--batch-size", batch, "Examples per step");
  auto* l2_opt = train->add_option("--l2", l2, "Weight penalty");
  auto* interval_opt =
      train->add_option("--checkpoint-interval", interval, "Steps between dev evaluations");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Score a saved model on a corpus");
  std::string model_path, eval_corpus;
  evaluate->add_option("--model", model_path, "Model file written by train")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate->add_option("corpus", eval_corpus, "Corpus to score")->required();

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Augmentation strategy comparison table");
  std::string exp_train, exp_dev, exp_test;
  std::vector<std::string> strategies;
  experiment->add_option("--train", exp_train, "Training corpus");
  experiment->add_option("--dev", exp_dev, "Development corpus");
  experiment->add_option("--test", exp_test, "Test corpus");
  auto* strategies_opt =
      experiment->add_option("--strategies", strategies, "Strategies to compare (none is implied)")
          ->delimiter(',');
  experiment->add_option("--embeddings", embeddings, "word2vec text file (word_embedding)");
  experiment->add_option("--wordnet", wordnet, "Synonym TSV replacing the bundled WordNet table");
  experiment->add_option("--ppdb", ppdb, "Synonym TSV replacing the bundled PPDB table");
  experiment->add_option("--tfidf", tfidf, "Saved tf-idf model (default: fit on train)");

  // synth
  auto* synth = app.add_subcommand("synth", "Write the planted-artifact corpus and toy embeddings");
  SyntheticConfig synth_config;
  synth->add_option("--train-size", synth_config.train_size)->capture_default_str();
  synth->add_option("--dev-size", synth_config.dev_size)->capture_default_str();
  synth->add_option("--test-size", synth_config.test_size)->capture_default_str();
  synth->add_option("--strength", synth_config.marker_strength,
                    "Probability that the subject is the label's marker")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    ExperimentSpec spec = BaseSpec(common);
    const OutputLayout layout{spec.out_dir};

    if (stats->parsed()) {
      const TagLexicon lexicon =
          lexicon_path.empty() ? TagLexicon::Default() : TagLexicon::LoadFile(lexicon_path);
      const Corpus corpus = LoadCorpus(stats_corpus, SplitFromName(split_name));
      const StatsRun run =
          RunStats(corpus, lexicon, ReportOptions{top_k, min_total}, spec.out_dir, spec.threads);
      std::cout << ReportToText(run.stats.report);
      for (const fs::path& p : run.written) std::cout << "wrote " << p.string() << '\n';
      return 0;
    }

    if (augment->parsed()) {
      AugmentConfig config = spec.augment;
      const auto strategy = StrategyFromName(strategy_name);
      if (!strategy) throw std::invalid_argument("unknown strategy '" + strategy_name + "'");
      config.strategy = *strategy;
      Override(rate_opt, rate, config.word_rate);
      Override(copies_opt, copies, config.copies_per_example);
      Override(length_opt, min_length, config.min_word_length);
      if (all_opt->count() > 0) config.preserve_stopwords = false;
      if (!embeddings.empty()) spec.embeddings_path = embeddings;
      if (!wordnet.empty()) spec.wordnet_path = wordnet;
      if (!ppdb.empty()) spec.ppdb_path = ppdb;
      if (!tfidf.empty()) spec.tfidf_path = tfidf;

      const Corpus corpus = LoadCorpus(aug_corpus, Split::kTrain);
      std::optional<EmbeddingTable> table;
      std::optional<SynonymLexicon> wn, pp;
      std::optional<TfIdfModel> model;
      AugmentResources resources;
      resources.wordnet = &SynonymLexicon::Default(SynonymSource::kWordNet);
      resources.ppdb = &SynonymLexicon::Default(SynonymSource::kPpdb);
      if (config.strategy == Strategy::kWordEmbedding) {
        if (!spec.embeddings_path) {
          throw MissingResource("word_embedding needs --embeddings <word2vec text file>");
        }
        const fs::path p = ResolveDataPath(*spec.embeddings_path);
        if (!fs::exists(p)) throw MissingResource("embeddings file not found: " + p.string());
        table = EmbeddingTable::LoadFile(p.string());
        resources.embeddings = &*table;
      }
      if (config.strategy == Strategy::kSynonymWordNet && spec.wordnet_path) {
        wn = SynonymLexicon::LoadFile(ResolveDataPath(*spec.wordnet_path).string(),
                                      SynonymSource::kWordNet);
        resources.wordnet = &*wn;
      }
      if (config.strategy == Strategy::kSynonymPpdb && spec.ppdb_path) {
        pp = SynonymLexicon::LoadFile(ResolveDataPath(*spec.ppdb_path).string(),
                                      SynonymSource::kPpdb);
        resources.ppdb = &*pp;
      }
      if (config.strategy == Strategy::kTfIdf) {
        if (spec.tfidf_path) {
          model = TfIdfModel::LoadFile(ResolveDataPath(*spec.tfidf_path).string());
        } else {
          std::vector<std::string> docs;
          for (const NliExample& e : corpus.examples) docs.push_back(e.hypothesis);
          model = TfIdfModel::Fit(docs);
        }
        resources.tfidf = &*model;
      }

      const AugmentResult result = AugmentCorpus(corpus, config, resources, spec.threads);
      const fs::path out = aug_output.empty()
                               ? layout.augmented() / (strategy_name + ".jsonl")
                               : fs::path(aug_output);
      std::ostringstream text;
      WriteJsonl(text, result.corpus);
      WriteTextFile(out, text.str());
      std::cout << fmt::format("{}: {} examples in, {} augmented out, {} unchanged\nwrote {}\n",
                               strategy_name, corpus.size(), result.corpus.size(),
                               result.identities, out.string());
      return 0;
    }

    if (train->parsed()) {
      if (!train_path.empty()) spec.train_path = train_path;
      if (!dev_path.empty()) spec.dev_path = dev_path;
      if (spec.train_path.empty() || spec.dev_path.empty()) {
        throw std::invalid_argument("train needs --train and --dev (or a --config naming them)");
      }
      const auto mode = FeatureModeFromName(mode_name);
      if (!mode) throw std::invalid_argument("unknown mode '" + mode_name + "'");
      Override(lr_opt, lr, spec.train.learning_rate);
      Override(epochs_opt, epochs, spec.train.epochs);
      Override(batch_opt, batch, spec.train.batch_size);
      Override(l2_opt, l2, spec.train.l2);
      Override(interval_opt, interval, spec.train.checkpoint_interval);

      const Corpus train_corpus = LoadCorpus(spec.train_path.string(), Split::kTrain);
      const Corpus dev_corpus = LoadCorpus(spec.dev_path.string(), Split::kDev);
      const TrainResult result = Train(train_corpus, dev_corpus, *mode, spec.train);
      const std::string stem = model_name.empty() ? mode_name : model_name;
      const fs::path model_file = layout.models() / (stem + ".json");
      std::ostringstream model_text, log_text;
      SaveModel(model_text, result.trained);
      WriteTrainingLog(log_text, result.log);
      WriteTextFile(model_file, model_text.str());
      WriteTextFile(layout.models() / (stem + ".log.jsonl"), log_text.str());
      std::cout << fmt::format(
          "{} steps, best dev accuracy {:.2f} at step {}\nwrote {}\n", result.log.size(),
          result.best_dev_accuracy, result.best_step, model_file.string());
      return 0;
    }

    if (evaluate->parsed()) {
      const TrainedModel model = LoadModelFile(model_path);
      const Corpus corpus = LoadCorpus(eval_corpus, Split::kTest);
      const EvalReport report = Evaluate(model, corpus, spec.threads);
      const fs::path out =
          layout.reports() / (fs::path(model_path).stem().string() + ".evaluation.json");
      WriteTextFile(out, EvalReportToJson(report));
      std::cout << fmt::format("accuracy {:.2f} over {} examples ({} model)\nwrote {}\n",
                               report.accuracy, report.total,
                               FeatureModeName(model.vocabulary.mode()), out.string());
      return 0;
    }

    if (experiment->parsed()) {
      if (!exp_train.empty()) spec.train_path = exp_train;
      if (!exp_dev.empty()) spec.dev_path = exp_dev;
      if (!exp_test.empty()) spec.test_path = exp_test;
      if (strategies_opt->count() > 0) spec.strategies = strategies;
      if (!embeddings.empty()) spec.embeddings_path = embeddings;
      if (!wordnet.empty()) spec.wordnet_path = wordnet;
      if (!ppdb.empty()) spec.ppdb_path = ppdb;
      if (!tfidf.empty()) spec.tfidf_path = tfidf;
      const ExperimentResult result = RunExperiment(spec);
      std::cout << ExperimentToText(result);
      std::cout << "wrote " << (layout.tables() / "experiment.json").string() << '\n';
      return 0;
    }

    if (synth->parsed()) {
      if (common.seed_opt->count() > 0) synth_config.seed = common.seed;
      const SyntheticCorpus corpus = GenerateSynthetic(synth_config);
      const fs::path dir = fs::path(spec.out_dir) / "data";
      for (const Corpus* c : {&corpus.train, &corpus.dev, &corpus.test}) {
        std::ostringstream text;
        WriteJsonl(text, *c);
        WriteTextFile(dir / (std::string(SplitName(c->split)) + ".jsonl"), text.str());
      }
      std::ostringstream table;
      SyntheticEmbeddings().Save(table);
      WriteTextFile(dir / "embeddings.txt", table.str());
      std::cout << "wrote " << dir.string() << "/{train,dev,test}.jsonl and embeddings.txt\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "nliart: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
