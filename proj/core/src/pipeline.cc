#include "nliart/pipeline.h"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

#include "nliart/embeddings.h"
#include "nliart/report.h"
#include "nliart/synonyms.h"
#include "nliart/tfidf.h"

namespace nliart {
namespace {

fs::path Rebase(const std::string& value, const fs::path& base_dir) {
  fs::path p(value);
  if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
  return p;
}

template <typename T>
void ReadIf(const nlohmann::json& obj, const char* key, T& into) {
  if (obj.contains(key)) into = obj.at(key).get<T>();
}

nlohmann::ordered_json EvalJson(const EvalReport& report, double delta) {
  nlohmann::ordered_json obj;
  obj["accuracy"] = report.accuracy;
  obj["delta"] = delta;
  nlohmann::ordered_json per_class;
  for (Label label : kAllLabels) {
    per_class[std::string(LabelName(label))] = report.per_class_accuracy[LabelIndex(label)];
  }
  obj["per_class_accuracy"] = per_class;
  obj["confusion"] = report.confusion;
  obj["total"] = report.total;
  return obj;
}

struct LoadedResources {
  std::unique_ptr<EmbeddingTable> embeddings;
  std::unique_ptr<SynonymLexicon> wordnet;
  std::unique_ptr<SynonymLexicon> ppdb;
  std::unique_ptr<TfIdfModel> tfidf;
  AugmentResources view;
};

void LoadResource(Strategy strategy, const ExperimentSpec& spec, const Corpus& train,
                  const OutputLayout& layout, LoadedResources& r) {
  switch (strategy) {
    case Strategy::kCharSubstitute:
      break;
    case Strategy::kWordEmbedding:
      if (!r.embeddings) {
        if (!spec.embeddings_path) {
          throw MissingResource("word_embedding needs an embeddings file");
        }
        r.embeddings = std::make_unique<EmbeddingTable>(
            EmbeddingTable::LoadFile(ResolveDataPath(*spec.embeddings_path).string()));
      }
      r.view.embeddings = r.embeddings.get();
      break;
    case Strategy::kSynonymWordNet:
      if (spec.wordnet_path && !r.wordnet) {
        r.wordnet = std::make_unique<SynonymLexicon>(SynonymLexicon::LoadFile(
            ResolveDataPath(*spec.wordnet_path).string(), SynonymSource::kWordNet));
      }
      r.view.wordnet =
          r.wordnet ? r.wordnet.get() : &SynonymLexicon::Default(SynonymSource::kWordNet);
      break;
    case Strategy::kSynonymPpdb:
      if (spec.ppdb_path && !r.ppdb) {
        r.ppdb = std::make_unique<SynonymLexicon>(SynonymLexicon::LoadFile(
            ResolveDataPath(*spec.ppdb_path).string(), SynonymSource::kPpdb));
      }
      r.view.ppdb = r.ppdb ? r.ppdb.get() : &SynonymLexicon::Default(SynonymSource::kPpdb);
      break;
    case Strategy::kTfIdf:
      if (!r.tfidf) {
        if (spec.tfidf_path) {
          r.tfidf = std::make_unique<TfIdfModel>(
              TfIdfModel::LoadFile(ResolveDataPath(*spec.tfidf_path).string()));
        } else {
          std::vector<std::string> docs;
          docs.reserve(train.size());
          for (const NliExample& e : train.examples) docs.push_back(e.hypothesis);
          r.tfidf = std::make_unique<TfIdfModel>(TfIdfModel::Fit(docs));
          std::ostringstream out;
          r.tfidf->Save(out);
          WriteTextFile(layout.models() / "tfidf.json", out.str());
        }
      }
      r.view.tfidf = r.tfidf.get();
      break;
  }
}

std::string FormatCell(double accuracy, double delta, bool baseline) {
  if (baseline) return fmt::format("{:.2f}", accuracy);
  return fmt::format("{:.2f} ({:+.2f})", accuracy, delta);
}

}  // namespace

fs::path ResolveDataPath(const fs::path& path) {
  if (path.is_absolute() || fs::exists(path)) return path;
  if (const char* dir = std::getenv(kDataDirEnv); dir != nullptr && *dir != '\0') {
    const fs::path candidate = fs::path(dir) / path;
    if (fs::exists(candidate)) return candidate;
  }
  return path;
}

void WriteTextFile(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

StatsRun RunStats(const Corpus& corpus, const TagLexicon& lexicon, const ReportOptions& options,
                  const fs::path& out_dir, unsigned threads) {
  StatsRun run;
  run.stats = AnalyzeCorpus(corpus, lexicon, options, threads);
  const OutputLayout layout{out_dir};
  const std::string svg = RenderProportionChart(run.stats.report);
  run.written = {layout.reports() / "stats.json", layout.reports() / "stats.txt",
                 layout.reports() / "stats.svg", layout.reports() / "contingency.csv"};
  WriteTextFile(run.written[0], ReportToJson(run.stats.report));
  WriteTextFile(run.written[1], ReportToText(run.stats.report));
  WriteTextFile(run.written[2], svg);
  WriteTextFile(run.written[3], ContingencyToCsv(run.stats.rows));
  return run;
}

ExperimentError::ExperimentError(std::string stage, std::string strategy,
                                 const std::string& message)
    : std::runtime_error(fmt::format("{} failed for strategy '{}': {}", stage, strategy, message)),
      stage_(std::move(stage)),
      strategy_(std::move(strategy)) {}

ExperimentSpec ExperimentSpec::FromJson(const std::string& text, const fs::path& base_dir) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid experiment config: ") + e.what());
  }
  if (!root.is_object()) throw std::invalid_argument("experiment config must be a JSON object");
  static const char* const kKnown[] = {"train",     "dev",    "test",  "strategies", "out_dir",
                                       "embeddings", "wordnet", "ppdb", "tfidf",      "threads",
                                       "seed",      "augment", "train_config"};
  for (const auto& [key, value] : root.items()) {
    if (std::find_if(std::begin(kKnown), std::end(kKnown),
                     [&](const char* k) { return key == k; }) == std::end(kKnown)) {
      throw std::invalid_argument("unknown experiment config key '" + key + "'");
    }
  }

  ExperimentSpec spec;
  try {
    if (root.contains("train")) spec.train_path = Rebase(root.at("train").get<std::string>(), base_dir);
    if (root.contains("dev")) spec.dev_path = Rebase(root.at("dev").get<std::string>(), base_dir);
    if (root.contains("test")) spec.test_path = Rebase(root.at("test").get<std::string>(), base_dir);
    if (root.contains("out_dir")) spec.out_dir = Rebase(root.at("out_dir").get<std::string>(), base_dir);
    ReadIf(root, "strategies", spec.strategies);
    for (const char* key : {"embeddings", "wordnet", "ppdb", "tfidf"}) {
      if (!root.contains(key)) continue;
      const fs::path p = Rebase(root.at(key).get<std::string>(), base_dir);
      if (std::string_view(key) == "embeddings") spec.embeddings_path = p;
      if (std::string_view(key) == "wordnet") spec.wordnet_path = p;
      if (std::string_view(key) == "ppdb") spec.ppdb_path = p;
      if (std::string_view(key) == "tfidf") spec.tfidf_path = p;
    }
    ReadIf(root, "threads", spec.threads);
    if (root.contains("seed")) {
      spec.augment.seed = root.at("seed").get<std::uint64_t>();
      spec.train.seed = spec.augment.seed;
    }
    if (root.contains("augment")) {
      const auto& a = root.at("augment");
      ReadIf(a, "word_rate", spec.augment.word_rate);
      ReadIf(a, "copies_per_example", spec.augment.copies_per_example);
      ReadIf(a, "min_word_length", spec.augment.min_word_length);
      ReadIf(a, "preserve_stopwords", spec.augment.preserve_stopwords);
    }
    if (root.contains("train_config")) {
      const auto& t = root.at("train_config");
      ReadIf(t, "learning_rate", spec.train.learning_rate);
      ReadIf(t, "epochs", spec.train.epochs);
      ReadIf(t, "batch_size", spec.train.batch_size);
      ReadIf(t, "l2", spec.train.l2);
      ReadIf(t, "checkpoint_interval", spec.train.checkpoint_interval);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid experiment config: ") + e.what());
  }
  return spec;
}

ExperimentSpec ExperimentSpec::FromFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open experiment config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return FromJson(text.str(), path.parent_path());
}

void ExperimentSpec::Normalize() {
  std::vector<std::string> ordered{std::string(kNoAugmentation)};
  for (const std::string& name : strategies) {
    if (name != kNoAugmentation && !StrategyFromName(name)) {
      throw std::invalid_argument("unknown augmentation strategy '" + name + "'");
    }
    if (std::find(ordered.begin(), ordered.end(), name) == ordered.end()) {
      ordered.push_back(name);
    }
  }
  strategies = std::move(ordered);
  augment.Validate();
  train.Validate();
}

std::string StrategyDisplayName(std::string_view strategy) {
  if (strategy == kNoAugmentation) return "No augmentation (baseline)";
  if (strategy == "char_substitute") return "Character substitution";
  if (strategy == "word_embedding") return "Word embedding similarity";
  if (strategy == "synonym_wordnet") return "Synonym (WordNet)";
  if (strategy == "synonym_ppdb") return "Synonym (PPDB)";
  if (strategy == "tfidf") return "Word distribution (tf-idf)";
  return std::string(strategy);
}

ExperimentData LoadExperimentData(const ExperimentSpec& spec) {
  ExperimentData data;
  const std::pair<const fs::path*, Split> inputs[] = {
      {&spec.train_path, Split::kTrain}, {&spec.dev_path, Split::kDev}, {&spec.test_path, Split::kTest}};
  for (const auto& [path, split] : inputs) {
    if (path->empty()) {
      throw ExperimentError("load", std::string(kNoAugmentation),
                            fmt::format("no {} file given", SplitName(split)));
    }
    try {
      Corpus corpus = ReadCorpusFile(ResolveDataPath(*path), split).corpus;
      if (split == Split::kTrain) data.train = std::move(corpus);
      if (split == Split::kDev) data.dev = std::move(corpus);
      if (split == Split::kTest) data.test = std::move(corpus);
    } catch (const std::exception& e) {
      throw ExperimentError("load", std::string(kNoAugmentation),
                            fmt::format("{}: {}", path->string(), e.what()));
    }
  }
  return data;
}

ExperimentResult RunExperiment(const ExperimentSpec& input, const ExperimentData& data) {
  ExperimentSpec spec = input;
  spec.Normalize();
  const OutputLayout layout{spec.out_dir};
  for (const fs::path& dir : {layout.reports(), layout.augmented(), layout.models(), layout.tables()}) {
    fs::create_directories(dir);
  }

  LoadedResources resources;
  ExperimentResult result;
  for (const std::string& name : spec.strategies) {
    std::string stage = "augment";
    try {
      Corpus train = data.train;
      if (name != kNoAugmentation) {
        const Strategy strategy = *StrategyFromName(name);
        stage = "resources";
        LoadResource(strategy, spec, data.train, layout, resources);
        stage = "augment";
        AugmentConfig config = spec.augment;
        config.strategy = strategy;
        const AugmentResult augmented =
            AugmentCorpus(data.train, config, resources.view, spec.threads);
        std::ostringstream out;
        WriteJsonl(out, augmented.corpus);
        WriteTextFile(layout.augmented() / (name + ".jsonl"), out.str());
        train = Merge(data.train, augmented.corpus);
      }

      ExperimentRow row;
      row.strategy = name;
      row.train_examples = train.size();
      for (FeatureMode mode : {FeatureMode::kPair, FeatureMode::kHypothesisOnly}) {
        stage = fmt::format("train ({})", FeatureModeName(mode));
        const TrainResult trained = Train(train, data.dev, mode, spec.train);
        const std::string stem = fmt::format("{}.{}", name, FeatureModeName(mode));
        std::ostringstream model_out;
        SaveModel(model_out, trained.trained);
        WriteTextFile(layout.models() / (stem + ".json"), model_out.str());
        std::ostringstream log_out;
        WriteTrainingLog(log_out, trained.log);
        WriteTextFile(layout.models() / (stem + ".log.jsonl"), log_out.str());

        stage = fmt::format("evaluate ({})", FeatureModeName(mode));
        EvalReport report = Evaluate(trained.trained, data.test, spec.threads);
        (mode == FeatureMode::kPair ? row.pair : row.hypothesis_only) = report;
      }
      if (!result.rows.empty()) {
        row.pair_delta = row.pair.accuracy - result.rows.front().pair.accuracy;
        row.hypothesis_only_delta =
            row.hypothesis_only.accuracy - result.rows.front().hypothesis_only.accuracy;
      }
      result.rows.push_back(std::move(row));
    } catch (const ExperimentError&) {
      throw;
    } catch (const std::exception& e) {
      throw ExperimentError(stage, name, e.what());
    }
  }

  WriteTextFile(layout.tables() / "experiment.json", ExperimentToJson(result));
  WriteTextFile(layout.tables() / "experiment.txt", ExperimentToText(result));
  return result;
}

ExperimentResult RunExperiment(const ExperimentSpec& spec) {
  return RunExperiment(spec, LoadExperimentData(spec));
}

std::string ExperimentToJson(const ExperimentResult& result) {
  nlohmann::ordered_json root;
  root["columns"] = {"Augmentation approaches", "Premise and hypothesis", "Hypothesis-only"};
  root["rows"] = nlohmann::ordered_json::array();
  for (const ExperimentRow& row : result.rows) {
    nlohmann::ordered_json obj;
    obj["strategy"] = row.strategy;
    obj["name"] = StrategyDisplayName(row.strategy);
    obj["train_examples"] = row.train_examples;
    obj["premise_and_hypothesis"] = EvalJson(row.pair, row.pair_delta);
    obj["hypothesis_only"] = EvalJson(row.hypothesis_only, row.hypothesis_only_delta);
    root["rows"].push_back(std::move(obj));
  }
  return root.dump(2) + "\n";
}

std::string ExperimentToText(const ExperimentResult& result) {
  std::string out = fmt::format("{:<30}  {:>24}  {:>18}\n", "Augmentation approaches",
                                "Premise and hypothesis", "Hypothesis-only");
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const ExperimentRow& row = result.rows[i];
    out += fmt::format("{:<30}  {:>24}  {:>18}\n", StrategyDisplayName(row.strategy),
                       FormatCell(row.pair.accuracy, row.pair_delta, i == 0),
                       FormatCell(row.hypothesis_only.accuracy, row.hypothesis_only_delta, i == 0));
  }
  return out;
}

}  // namespace nliart
