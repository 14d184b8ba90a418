// Acceptance checks, one line per criterion:
//   PASS|FAIL|SKIP  <n>  <title>  <measured values>
// Exit status is nonzero when any criterion fails.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nliart/augment.h"
#include "nliart/baseline.h"
#include "nliart/corpus.h"
#include "nliart/embeddings.h"
#include "nliart/pipeline.h"
#include "nliart/random.h"
#include "nliart/stats.h"
#include "nliart/synthetic.h"
#include "nliart/tagging.h"
#include "test_support.h"

namespace fs = std::filesystem;
using namespace nliart;

namespace {

// Pinned tolerances and thresholds.
constexpr double kChiSquareRelTol = 1e-12;
constexpr double kChiSquareSeconds = 5.0;
constexpr double kHandStatTol = 1e-12;
constexpr double kHandPValue = 1.9304541362277093e-3;  // exp(-6.25)
constexpr double kHandPTol = 1e-8;
constexpr double kSnliMinutes = 15.0;
constexpr double kSnliHypothesisOnlyFloor = 40.0;
constexpr double kMarkerLogPCeiling = -50.0;
constexpr double kHypothesisOnlyFloor = 70.0;
constexpr double kPairFloor = 85.0;
constexpr double kSyntheticSeconds = 120.0;
constexpr double kMitigationMinDrop = 5.0;
constexpr double kMitigationMaxPairDrop = 2.0;
constexpr double kGradientRelTol = 1e-6;
constexpr double kTagAccuracyFloor = 85.0;

enum class Outcome { kPass, kFail, kSkip };

int failures = 0;

void Report(int number, const std::string& title, Outcome outcome, const std::string& detail) {
  const char* word = outcome == Outcome::kPass ? "PASS" : outcome == Outcome::kFail ? "FAIL" : "SKIP";
  if (outcome == Outcome::kFail) ++failures;
  fmt::print("{}  {}  {}  {}\n", word, number, title, detail);
  std::fflush(stdout);
}

Outcome Verdict(bool ok) { return ok ? Outcome::kPass : Outcome::kFail; }

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

fs::path ScratchDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("nliart_acceptance_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Runs a criterion body; an escaping exception counts as a failure.
void Guard(int number, const std::string& title, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    Report(number, title, Outcome::kFail, std::string("exception: ") + e.what());
  }
}

// 1. Random rows against the df = 2 closed form exp(-x/2).
void ChiSquareOracle() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng = Rng::ForStream(1, {});
  double worst = 0.0;
  double smallest_stat = 1e300;
  bool zero_ok = true;
  int zero_cases = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    LabelCountArray counts{};
    ExpectedProportions expected = ExpectedProportions::Uniform();
    if (trial % 10 == 0) {
      // rows that sit exactly on the expected proportions
      const std::uint64_t m = 1 + rng.Below(333333);
      counts = {m, m, m};
    } else if (trial % 10 < 5) {
      // near-null rows keep the statistic small (series branch of Q)
      const std::uint64_t m = 100 + rng.Below(333233);
      const auto spread = static_cast<std::uint64_t>(2.0 * std::sqrt(static_cast<double>(m)));
      const std::uint64_t d1 = rng.Below(spread + 1);
      const std::uint64_t d2 = rng.Below(spread + 1);
      counts = {m + d1, m - d1 + d2, m - d2};
    } else {
      const std::uint64_t n = 1 + rng.Below(1000000);
      const std::uint64_t a = rng.Below(n + 1);
      const std::uint64_t b = rng.Below(n - a + 1);
      counts = {a, b, n - a - b};
      if (trial % 3 == 0) {
        const double p0 = 0.2 + 0.3 * rng.Uniform();
        const double p1 = 0.1 + 0.3 * rng.Uniform();
        expected = ExpectedProportions::FromProportions({p0, p1, 1.0 - p0 - p1});
      }
    }
    const ChiSquareResult r = ChiSquareGof(counts, expected);
    if (r.statistic == 0.0) {
      ++zero_cases;
      zero_ok = zero_ok && r.p_value == 1.0;
      continue;
    }
    smallest_stat = std::min(smallest_stat, r.statistic);
    const double oracle = std::exp(-r.statistic / 2.0);
    if (oracle == 0.0) {
      worst = std::max(worst, r.p_value == 0.0 ? 0.0 : 1.0);
      worst = std::max(worst, std::fabs(r.log_p + r.statistic / 2.0) / (r.statistic / 2.0));
      continue;
    }
    worst = std::max(worst, std::fabs(r.p_value - oracle) / oracle);
  }
  const double seconds = Seconds(start);
  Report(1, "chi-square numerics oracle",
         Verdict(worst <= kChiSquareRelTol && zero_ok && zero_cases > 0 && seconds < kChiSquareSeconds),
         fmt::format("rows=1000 max_rel_err={:.3e} (tol {:.0e}) min_nonzero_stat={:.3g} "
                     "zero_stat_rows={} p==1:{} time={:.3f}s",
                     worst, kChiSquareRelTol, smallest_stat, zero_cases, zero_ok, seconds));
}

// 2. (50, 25, 25) against uniform.
void HandDerivedCase() {
  const ChiSquareResult r = ChiSquareGof({50, 25, 25}, ExpectedProportions::Uniform());
  const bool ok = std::fabs(r.statistic - 12.5) <= kHandStatTol &&
                  std::fabs(r.p_value - kHandPValue) <= kHandPTol;
  Report(2, "hand-derived chi-square case", Verdict(ok),
         fmt::format("statistic={:.15g} p={:.10e}", r.statistic, r.p_value));
}

// 3. The full pipeline on real SNLI files, when they are supplied.
void SnliRun() {
  const char* dir = std::getenv("NLIART_SNLI_DIR");
  if (dir == nullptr || *dir == '\0') {
    Report(3, "SNLI pipeline run", Outcome::kSkip,
           "NLIART_SNLI_DIR not set (expects snli_1.0_{train,dev,test}.jsonl)");
    return;
  }
  const auto start = std::chrono::steady_clock::now();
  const fs::path root(dir);
  const fs::path out = ScratchDir("snli");
  ExperimentSpec spec;
  spec.train_path = root / "snli_1.0_train.jsonl";
  spec.dev_path = root / "snli_1.0_dev.jsonl";
  spec.test_path = root / "snli_1.0_test.jsonl";
  spec.out_dir = out;
  spec.threads = 0;
  spec.strategies = {"none", "char_substitute", "synonym_wordnet", "synonym_ppdb", "tfidf"};
  if (const char* vectors = std::getenv("NLIART_SNLI_EMBEDDINGS"); vectors && *vectors) {
    spec.embeddings_path = vectors;
    spec.strategies.push_back("word_embedding");
  }
  const ExperimentData data = LoadExperimentData(spec);
  RunStats(data.train, TagLexicon::Default(), ReportOptions{}, out, 0);
  const ExperimentResult result = RunExperiment(spec, data);
  const double minutes = Seconds(start) / 60.0;
  const double hyp = result.rows.front().hypothesis_only.accuracy;
  const bool shaped = fs::exists(out / "reports" / "stats.json") &&
                      fs::exists(out / "tables" / "experiment.txt") &&
                      result.rows.size() == spec.strategies.size();
  Report(3, "SNLI pipeline run",
         Verdict(shaped && minutes < kSnliMinutes && hyp > kSnliHypothesisOnlyFloor),
         fmt::format("rows={} pair={:.2f} hypothesis_only={:.2f} time={:.1f}min", result.rows.size(),
                     result.rows.front().pair.accuracy, hyp, minutes));
}

// 4. Planted markers are found by the statistics and exploited by the models.
void ArtifactDetection() {
  const auto start = std::chrono::steady_clock::now();
  const SyntheticCorpus corpus = GenerateSynthetic(SyntheticConfig{});
  ReportOptions options;
  options.k = 5;
  const CorpusStats stats = AnalyzeCorpus(corpus.train, TagLexicon::Default(), options);
  int markers_found = 0;
  double worst_log10 = -1e300;
  for (std::string_view marker : SyntheticMarkers()) {
    for (const ChiSquareResult& row : stats.report.subject_rows) {
      if (row.word == marker) {
        ++markers_found;
        worst_log10 = std::max(worst_log10, row.log_p / std::log(10.0));
        break;
      }
    }
  }
  const double worst_log_p = worst_log10 * std::log(10.0);

  TrainConfig config;
  const auto hyp = Train(corpus.train, corpus.dev, FeatureMode::kHypothesisOnly, config);
  const auto pair = Train(corpus.train, corpus.dev, FeatureMode::kPair, config);
  const double hyp_acc = Evaluate(hyp.trained, corpus.test).accuracy;
  const double pair_acc = Evaluate(pair.trained, corpus.test).accuracy;
  const double seconds = Seconds(start);
  const std::size_t total = corpus.train.size() + corpus.dev.size() + corpus.test.size();
  const bool ok = total == 30000 && markers_found == 3 && worst_log_p < kMarkerLogPCeiling &&
                  hyp_acc >= kHypothesisOnlyFloor && pair_acc >= kPairFloor &&
                  seconds < kSyntheticSeconds;
  Report(4, "synthetic artifact detection", Verdict(ok),
         fmt::format("examples={} markers_in_top5={} max_log_p={:.1f} hypothesis_only={:.2f} "
                     "pair={:.2f} time={:.1f}s",
                     total, markers_found, worst_log_p, hyp_acc, pair_acc, seconds));
}

ExperimentData SyntheticData(const SyntheticConfig& config) {
  SyntheticCorpus s = GenerateSynthetic(config);
  return {std::move(s.train), std::move(s.dev), std::move(s.test)};
}

fs::path WriteSyntheticEmbeddings(const fs::path& dir) {
  const fs::path path = dir / "embeddings.txt";
  std::ofstream out(path);
  SyntheticEmbeddings().Save(out);
  return path;
}

// 5. Embedding substitution of the markers should blunt the hypothesis-only
// model while leaving the pair model intact.
void MitigationEffect() {
  const fs::path out = ScratchDir("mitigation");
  ExperimentSpec spec;
  spec.out_dir = out / "run";
  spec.strategies = {"none", "word_embedding"};
  spec.embeddings_path = WriteSyntheticEmbeddings(out);
  const ExperimentResult result = RunExperiment(spec, SyntheticData(SyntheticConfig{}));
  const ExperimentRow& base = result.rows.at(0);
  const ExperimentRow& emb = result.rows.at(1);
  const double hyp_drop = -emb.hypothesis_only_delta;
  const double pair_drop = -emb.pair_delta;
  Report(5, "mitigation effect (word_embedding)",
         Verdict(hyp_drop >= kMitigationMinDrop && pair_drop < kMitigationMaxPairDrop),
         fmt::format("hypothesis_only {:.2f} -> {:.2f} (drop {:.2f}, need >= {:.0f}); "
                     "pair {:.2f} -> {:.2f} (drop {:.2f}, need < {:.0f})",
                     base.hypothesis_only.accuracy, emb.hypothesis_only.accuracy, hyp_drop,
                     kMitigationMinDrop, base.pair.accuracy, emb.pair.accuracy, pair_drop,
                     kMitigationMaxPairDrop));
  fs::remove_all(out);
}

// 6. Analytic gradient against central differences.
void GradientCheck() {
  Rng rng = Rng::ForStream(6, {});
  double worst = 0.0;
  std::size_t compared = 0;
  for (int instance = 0; instance < 100; ++instance) {
    const std::size_t features = 2 + rng.Below(7);
    LinearModel model(features);
    for (double& w : model.weights) w = 2.0 * rng.Uniform() - 1.0;
    for (double& b : model.bias) b = rng.Uniform() - 0.5;
    std::vector<LabeledFeatures> batch(1 + rng.Below(6));
    for (LabeledFeatures& lf : batch) {
      for (std::size_t f = 0; f < features; ++f) {
        if (rng.Below(3) != 0) lf.features.push_back({f, 0.5 + 2.5 * rng.Uniform()});
      }
      lf.label = LabelFromIndex(rng.Below(kNumLabels));
    }
    const double l2 = rng.Below(2) ? 0.0 : 0.05 * rng.Uniform();
    const LossAndGradient analytic = ComputeLossAndGradient(model, batch, l2);

    auto loss_at = [&](const LinearModel& m) { return ComputeLossAndGradient(m, batch, l2).loss; };
    auto compare = [&](double a, double numeric) {
      const double scale = std::max(std::fabs(a), std::fabs(numeric));
      if (scale < 1e-9) return;  // both zero: parameter does not touch the loss
      worst = std::max(worst, std::fabs(a - numeric) / scale);
      ++compared;
    };
    const double h = 1e-5;
    for (std::size_t i = 0; i < model.weights.size(); ++i) {
      LinearModel plus = model, minus = model;
      plus.weights[i] += h;
      minus.weights[i] -= h;
      compare(analytic.gradient.weights[i], (loss_at(plus) - loss_at(minus)) / (2 * h));
    }
    for (std::size_t c = 0; c < kNumLabels; ++c) {
      LinearModel plus = model, minus = model;
      plus.bias[c] += h;
      minus.bias[c] -= h;
      compare(analytic.gradient.bias[c], (loss_at(plus) - loss_at(minus)) / (2 * h));
    }
  }
  Report(6, "gradient check", Verdict(worst < kGradientRelTol),
         fmt::format("instances=100 entries={} max_rel_err={:.3e} (tol {:.0e})", compared, worst,
                     kGradientRelTol));
}

std::vector<fs::path> FilesUnder(const fs::path& root) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file()) files.push_back(fs::relative(entry.path(), root));
  }
  std::sort(files.begin(), files.end());
  return files;
}

// 7. Same seed, different thread counts, identical bytes.
void Determinism() {
  const fs::path out = ScratchDir("determinism");
  SyntheticConfig sc;
  sc.train_size = 6000;
  sc.dev_size = 1000;
  sc.test_size = 1000;
  const ExperimentData data = SyntheticData(sc);
  ExperimentSpec spec;
  spec.strategies = {"none", "char_substitute", "word_embedding", "synonym_wordnet",
                     "synonym_ppdb", "tfidf"};
  spec.embeddings_path = WriteSyntheticEmbeddings(out);
  spec.augment.seed = spec.train.seed = 99;
  spec.augment.copies_per_example = 2;
  for (unsigned threads : {1u, 4u}) {
    spec.threads = threads;
    spec.out_dir = out / fmt::format("threads{}", threads);
    RunExperiment(spec, data);
  }
  const auto a = FilesUnder(out / "threads1");
  const auto b = FilesUnder(out / "threads4");
  std::size_t differing = 0;
  std::string first_diff;
  for (const fs::path& rel : a) {
    if (Slurp(out / "threads1" / rel) != Slurp(out / "threads4" / rel)) {
      if (differing++ == 0) first_diff = rel.string();
    }
  }
  const bool has_all = std::count_if(a.begin(), a.end(), [](const fs::path& p) {
                         return p.extension() == ".jsonl" && p.parent_path() == "augmented";
                       }) == 5;
  Report(7, "determinism across thread counts", Verdict(a == b && differing == 0 && has_all),
         fmt::format("files={} differing={}{}", a.size(), differing,
                     first_diff.empty() ? "" : " first=" + first_diff));
  fs::remove_all(out);
}

// Brute-force top-10 membership with ties at the cut accepted.
bool InBruteForceTopTen(const EmbeddingTable& table, const std::string& word,
                        const std::string& candidate) {
  const auto q = table.Vector(word);
  double qn = 0.0;
  for (float x : q) qn += static_cast<double>(x) * x;
  std::vector<std::pair<double, std::string>> sims;
  for (const std::string& other : table.words()) {
    if (other == word) continue;
    const auto v = table.Vector(other);
    double dot = 0.0, vn = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      dot += static_cast<double>(q[i]) * v[i];
      vn += static_cast<double>(v[i]) * v[i];
    }
    if (vn == 0.0) continue;
    sims.emplace_back(dot / std::sqrt(qn * vn), other);
  }
  std::sort(sims.begin(), sims.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  const double cut = sims[std::min<std::size_t>(9, sims.size() - 1)].first;
  for (const auto& [sim, other] : sims) {
    if (other == candidate) return sim >= cut - 1e-12;
  }
  return false;
}

// 8. Property suite over random sentences for every strategy.
void AugmentationContracts() {
  Rng rng = Rng::ForStream(8, {});
  std::vector<std::string> vocabulary;
  for (std::string_view w : SyntheticMarkers()) vocabulary.emplace_back(w);
  for (std::string_view w : SyntheticNeutralWords()) vocabulary.emplace_back(w);
  for (const char* w : {"dog", "happy", "walking", "park", "children", "old", "house", "runs",
                        "beach", "quickly", "street", "woman", "men", "people", "red", "ball",
                        "playing", "water", "sitting", "bench", "well-known", "isn't", "x-ray"}) {
    vocabulary.emplace_back(w);
  }
  const std::vector<std::string> function_words = {"a", "the", "is", "are", "on", "in", "with",
                                                   "near", "two", "3", "and"};
  const std::vector<std::string> punctuation = {".", ",", "!", "?", ";"};

  // Random 16-d vectors for the content vocabulary, synthetic table on top.
  EmbeddingTable embeddings = SyntheticEmbeddings();
  std::vector<float> v(embeddings.dimension());
  for (const std::string& w : vocabulary) {
    if (embeddings.Contains(w)) continue;
    for (float& x : v) x = static_cast<float>(rng.Uniform() * 2.0 - 1.0);
    embeddings.Add(w, v);
  }

  Corpus corpus;
  corpus.split = Split::kTrain;
  for (std::size_t i = 0; i < 10000; ++i) {
    std::string sentence;
    const std::size_t length = 1 + rng.Below(12);
    for (std::size_t t = 0; t < length; ++t) {
      std::string word = rng.Below(3) == 0 ? function_words[rng.Below(function_words.size())]
                                           : vocabulary[rng.Below(vocabulary.size())];
      if (t == 0 || rng.Below(10) == 0) word[0] = static_cast<char>(std::toupper(word[0]));
      if (!sentence.empty()) sentence += rng.Below(8) == 0 ? "  " : " ";
      sentence += word;
      if (rng.Below(6) == 0) sentence += punctuation[rng.Below(punctuation.size())];
    }
    corpus.examples.push_back({fmt::format("r{}", i), fmt::format("Premise number {}.", i), sentence,
                               LabelFromIndex(i % kNumLabels), std::string(kOriginalOrigin)});
  }

  std::vector<std::string> docs;
  for (const NliExample& e : corpus.examples) docs.push_back(e.hypothesis);
  const TfIdfModel tfidf = TfIdfModel::Fit(docs);
  AugmentResources resources;
  resources.embeddings = &embeddings;
  resources.wordnet = &SynonymLexicon::Default(SynonymSource::kWordNet);
  resources.ppdb = &SynonymLexicon::Default(SynonymSource::kPpdb);
  resources.tfidf = &tfidf;

  std::size_t violations = 0;
  std::string first;
  auto violation = [&](const std::string& what) {
    if (violations++ == 0) first = what;
  };
  std::size_t embedding_replacements = 0;

  for (Strategy strategy : kAllStrategies) {
    AugmentConfig config;
    config.strategy = strategy;
    config.seed = 8;

    config.word_rate = 0.0;
    const AugmentResult identity = AugmentCorpus(corpus, config, resources);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (identity.corpus.examples[i].hypothesis != corpus.examples[i].hypothesis) {
        violation(fmt::format("{} rate 0 changed '{}'", StrategyName(strategy),
                              corpus.examples[i].hypothesis));
      }
    }

    config.word_rate = 0.5;
    const AugmentResult result = AugmentCorpus(corpus, config, resources);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const NliExample& in = corpus.examples[i];
      const NliExample& out = result.corpus.examples[i];
      if (out.label != in.label || out.premise != in.premise) {
        violation(fmt::format("{} changed label or premise of {}", StrategyName(strategy), in.id));
      }
      const auto before = Tokenize(in.hypothesis);
      const auto after = Tokenize(out.hypothesis);
      if (before.size() != after.size()) {
        violation(fmt::format("{} token count '{}' -> '{}'", StrategyName(strategy),
                              in.hypothesis, out.hypothesis));
        continue;
      }
      if (strategy != Strategy::kWordEmbedding) continue;
      for (std::size_t t = 0; t < before.size(); ++t) {
        if (before[t].surface == after[t].surface) continue;
        ++embedding_replacements;
        if (!InBruteForceTopTen(embeddings, before[t].lower, after[t].lower)) {
          violation(fmt::format("'{}' -> '{}' outside top-10", before[t].lower, after[t].lower));
        }
      }
    }
  }
  Report(8, "augmentation contracts", Verdict(violations == 0 && embedding_replacements > 0),
         fmt::format("sentences={} strategies=5 embedding_replacements={} violations={}{}",
                     corpus.size(), embedding_replacements, violations,
                     first.empty() ? "" : " first: " + first));
}

// 9. Hand-tagged fixture and the classic artifact hypotheses.
void ExtractionFixture() {
  const auto sentences = nliart::testing::LoadTaggedFixture("tagged_hypotheses.txt");
  std::size_t correct = 0, total = 0;
  for (const auto& sentence : sentences) {
    const auto tagged = TagTokens(Tokenize(sentence.text), TagLexicon::Default());
    for (std::size_t i = 0; i < std::min(tagged.size(), sentence.tokens.size()); ++i) {
      correct += tagged[i].tag == sentence.tokens[i].tag;
    }
    total += std::max(tagged.size(), sentence.tokens.size());
  }
  const double accuracy = 100.0 * static_cast<double>(correct) / static_cast<double>(total);
  const char* hypotheses[] = {"The people are women.", "Men working in healthcare support service.",
                              "Men are waiting for their luggage."};
  const char* subjects[] = {"people", "men", "men"};
  std::string got;
  bool subjects_ok = true;
  for (int i = 0; i < 3; ++i) {
    const auto subject = ExtractText(hypotheses[i], TagLexicon::Default()).main_subject;
    got += (i ? "," : "") + subject.value_or("-");
    subjects_ok = subjects_ok && subject == subjects[i];
  }
  Report(9, "extraction fixture",
         Verdict(sentences.size() == 200 && accuracy >= kTagAccuracyFloor && subjects_ok),
         fmt::format("sentences={} tokens={} tag_accuracy={:.2f}% subjects={{{}}}", sentences.size(),
                     total, accuracy, got));
}

}  // namespace

int main() {
  Guard(1, "chi-square numerics oracle", ChiSquareOracle);
  Guard(2, "hand-derived chi-square case", HandDerivedCase);
  Guard(3, "SNLI pipeline run", SnliRun);
  Guard(4, "synthetic artifact detection", ArtifactDetection);
  Guard(5, "mitigation effect (word_embedding)", MitigationEffect);
  Guard(6, "gradient check", GradientCheck);
  Guard(7, "determinism across thread counts", Determinism);
  Guard(8, "augmentation contracts", AugmentationContracts);
  Guard(9, "extraction fixture", ExtractionFixture);
  fmt::print("{} criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
