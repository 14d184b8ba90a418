#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nliart/corpus.h"

namespace nliart {

enum class FeatureMode { kHypothesisOnly, kPair };

std::string_view FeatureModeName(FeatureMode mode);  // "hypothesis_only" / "pair"
std::optional<FeatureMode> FeatureModeFromName(std::string_view name);

inline constexpr std::string_view kOverlapFeature = "overlap";

// Word types (lowercased tokens containing a letter or digit) present in
// both sentences.
std::size_t OverlapCount(std::string_view premise, std::string_view hypothesis);

// Feature name -> dense index. Names are "h:<token>", "p:<token>" and, in
// pair mode, "overlap". Indices follow the sorted order of names.
class Vocabulary {
 public:
  static constexpr std::size_t kDefaultMinCount = 2;

  // Tokens seen at least min_count times in the training split. Throws
  // std::invalid_argument on an empty corpus.
  static Vocabulary Build(const Corpus& train, FeatureMode mode,
                          std::size_t min_count = kDefaultMinCount);
  static Vocabulary FromNames(FeatureMode mode, std::vector<std::string> names);

  FeatureMode mode() const { return mode_; }
  std::size_t size() const { return names_.size(); }
  std::optional<std::size_t> Find(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }

 private:
  FeatureMode mode_ = FeatureMode::kHypothesisOnly;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct FeatureEntry {
  std::size_t index = 0;
  double value = 0.0;

  bool operator==(const FeatureEntry&) const = default;
};

// Strictly increasing indices, positive values.
using FeatureVector = std::vector<FeatureEntry>;

// Unknown tokens are dropped. The premise is read only in pair mode, and a
// zero overlap is simply absent.
FeatureVector Featurize(const NliExample& example, const Vocabulary& vocabulary);

struct LinearModel {
  std::size_t features = 0;
  std::vector<double> weights;                // kNumLabels x features, row-major
  std::array<double, kNumLabels> bias{};

  LinearModel() = default;
  explicit LinearModel(std::size_t feature_count)
      : features(feature_count), weights(kNumLabels * feature_count, 0.0) {}

  double& W(std::size_t label, std::size_t feature) { return weights[label * features + feature]; }
  double W(std::size_t label, std::size_t feature) const {
    return weights[label * features + feature];
  }

  std::array<double, kNumLabels> Scores(const FeatureVector& x) const;
  bool operator==(const LinearModel&) const = default;
};

std::array<double, kNumLabels> Softmax(const std::array<double, kNumLabels>& scores);

// Highest score, lowest label index on ties.
Label ArgMax(const std::array<double, kNumLabels>& scores);

struct LabeledFeatures {
  FeatureVector features;
  Label label = Label::kEntailment;
};

class TrainingDiverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LossAndGradient {
  double loss = 0.0;
  LinearModel gradient;  // same shape as the model
};

// Mean cross-entropy over the batch plus (l2 / 2) * |W|^2 (bias not
// penalized). Throws std::invalid_argument on an empty batch and
// TrainingDiverged when the loss is not finite.
LossAndGradient ComputeLossAndGradient(const LinearModel& model,
                                       std::span<const LabeledFeatures> batch, double l2);

struct TrainConfig {
  double learning_rate = 0.1;
  std::size_t epochs = 5;
  std::size_t batch_size = 256;
  double l2 = 1e-6;
  std::size_t checkpoint_interval = 500;  // steps
  std::uint64_t seed = 0;

  void Validate() const;  // throws std::invalid_argument
};

struct TrainLogEntry {
  std::size_t step = 0;  // 1-based
  std::size_t epoch = 0;  // 1-based
  double loss = 0.0;     // minibatch loss before the update
  std::optional<double> dev_accuracy;  // set at checkpoints
};

struct TrainedModel {
  Vocabulary vocabulary;
  LinearModel model;
};

struct TrainResult {
  TrainedModel trained;
  std::vector<TrainLogEntry> log;
  std::size_t best_step = 0;
  double best_dev_accuracy = 0.0;
};

// Minibatch gradient descent at a fixed learning rate. Each epoch visits the
// data in a permutation seeded by (seed, epoch). Dev accuracy is measured
// every checkpoint_interval steps and after the last step; the returned model
// is the best checkpoint, earliest on ties.
TrainResult Train(const Corpus& train, const Corpus& dev, FeatureMode mode,
                  const TrainConfig& config);

struct EvalReport {
  std::size_t total = 0;
  double accuracy = 0.0;  // percent
  std::array<double, kNumLabels> per_class_accuracy{};  // percent, 0 for absent classes
  std::array<std::array<std::size_t, kNumLabels>, kNumLabels> confusion{};  // [gold][predicted]
};

// Hypothesis-only models see a premise-stripped copy of the corpus. Throws
// std::invalid_argument on an empty corpus.
EvalReport Evaluate(const TrainedModel& trained, const Corpus& corpus, unsigned threads = 1);

void SaveModel(std::ostream& out, const TrainedModel& trained);
TrainedModel LoadModel(std::istream& in);
void SaveModelFile(const std::string& path, const TrainedModel& trained);
TrainedModel LoadModelFile(const std::string& path);

// One JSON object per line: step, epoch, loss and dev_accuracy at checkpoints.
void WriteTrainingLog(std::ostream& out, std::span<const TrainLogEntry> log);

std::string EvalReportToJson(const EvalReport& report);

}  // namespace nliart
