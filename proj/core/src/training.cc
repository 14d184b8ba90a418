#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "nliart/baseline.h"
#include "nliart/random.h"
#include "parallel.h"

namespace nliart {
namespace {

std::vector<LabeledFeatures> FeaturizeAll(const Corpus& corpus, const Vocabulary& vocabulary) {
  std::vector<LabeledFeatures> out;
  out.reserve(corpus.size());
  for (const NliExample& example : corpus.examples) {
    out.push_back({Featurize(example, vocabulary), example.label});
  }
  return out;
}

double Accuracy(const LinearModel& model, std::span<const LabeledFeatures> data) {
  std::size_t correct = 0;
  for (const LabeledFeatures& item : data) {
    correct += ArgMax(model.Scores(item.features)) == item.label;
  }
  return 100.0 * static_cast<double>(correct) / static_cast<double>(data.size());
}

}  // namespace

void TrainConfig::Validate() const {
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw std::invalid_argument("learning_rate must be positive");
  }
  if (epochs == 0) throw std::invalid_argument("epochs must be >= 1");
  if (batch_size == 0) throw std::invalid_argument("batch_size must be >= 1");
  if (!(l2 >= 0.0) || !std::isfinite(l2)) throw std::invalid_argument("l2 must be >= 0");
  if (checkpoint_interval == 0) throw std::invalid_argument("checkpoint_interval must be >= 1");
}

TrainResult Train(const Corpus& train, const Corpus& dev, FeatureMode mode,
                  const TrainConfig& config) {
  config.Validate();
  if (train.empty()) throw std::invalid_argument("training corpus is empty");
  if (dev.empty()) throw std::invalid_argument("dev corpus is empty");

  TrainResult result;
  const Corpus train_view = mode == FeatureMode::kHypothesisOnly ? StripPremises(train) : train;
  const Corpus dev_view = mode == FeatureMode::kHypothesisOnly ? StripPremises(dev) : dev;
  Vocabulary vocabulary = Vocabulary::Build(train_view, mode);
  const auto train_data = FeaturizeAll(train_view, vocabulary);
  const auto dev_data = FeaturizeAll(dev_view, vocabulary);

  LinearModel model(vocabulary.size());
  LinearModel best = model;
  bool have_best = false;

  const std::size_t n = train_data.size();
  const std::size_t steps_per_epoch = (n + config.batch_size - 1) / config.batch_size;
  const std::size_t total_steps = steps_per_epoch * config.epochs;
  result.log.reserve(total_steps);

  std::vector<std::size_t> order(n);
  std::vector<LabeledFeatures> batch;
  batch.reserve(config.batch_size);
  std::size_t step = 0;
  for (std::size_t epoch = 1; epoch <= config.epochs; ++epoch) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng = Rng::ForStream(config.seed, {epoch});
    rng.Shuffle(std::span<std::size_t>(order));
    for (std::size_t start = 0; start < n; start += config.batch_size) {
      ++step;
      batch.clear();
      const std::size_t end = std::min(n, start + config.batch_size);
      for (std::size_t i = start; i < end; ++i) batch.push_back(train_data[order[i]]);

      const LossAndGradient lg = ComputeLossAndGradient(model, batch, config.l2);
      for (std::size_t i = 0; i < model.weights.size(); ++i) {
        model.weights[i] -= config.learning_rate * lg.gradient.weights[i];
      }
      for (std::size_t k = 0; k < kNumLabels; ++k) {
        model.bias[k] -= config.learning_rate * lg.gradient.bias[k];
      }

      TrainLogEntry entry{step, epoch, lg.loss, std::nullopt};
      if (step % config.checkpoint_interval == 0 || step == total_steps) {
        const double accuracy = Accuracy(model, dev_data);
        entry.dev_accuracy = accuracy;
        if (!have_best || accuracy > result.best_dev_accuracy) {
          have_best = true;
          best = model;
          result.best_step = step;
          result.best_dev_accuracy = accuracy;
        }
      }
      result.log.push_back(entry);
    }
  }
  result.trained = TrainedModel{std::move(vocabulary), std::move(best)};
  return result;
}

EvalReport Evaluate(const TrainedModel& trained, const Corpus& corpus, unsigned threads) {
  if (corpus.empty()) throw std::invalid_argument("cannot evaluate on an empty corpus");
  const bool strip = trained.vocabulary.mode() == FeatureMode::kHypothesisOnly;
  const Corpus view = strip ? StripPremises(corpus) : Corpus{};
  const Corpus& source = strip ? view : corpus;

  std::vector<Label> predicted(source.size());
  ParallelChunks(source.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      predicted[i] =
          ArgMax(trained.model.Scores(Featurize(source.examples[i], trained.vocabulary)));
    }
  });

  EvalReport report;
  report.total = source.size();
  std::size_t correct = 0;
  for (std::size_t i = 0; i < source.size(); ++i) {
    const std::size_t gold = LabelIndex(source.examples[i].label);
    const std::size_t guess = LabelIndex(predicted[i]);
    ++report.confusion[gold][guess];
    correct += gold == guess;
  }
  report.accuracy = 100.0 * static_cast<double>(correct) / static_cast<double>(report.total);
  for (std::size_t k = 0; k < kNumLabels; ++k) {
    std::size_t row = 0;
    for (std::size_t c : report.confusion[k]) row += c;
    report.per_class_accuracy[k] =
        row == 0 ? 0.0 : 100.0 * static_cast<double>(report.confusion[k][k]) / row;
  }
  return report;
}

void WriteTrainingLog(std::ostream& out, std::span<const TrainLogEntry> log) {
  for (const TrainLogEntry& entry : log) {
    nlohmann::ordered_json line;
    line["step"] = entry.step;
    line["epoch"] = entry.epoch;
    line["loss"] = entry.loss;
    if (entry.dev_accuracy) line["dev_accuracy"] = *entry.dev_accuracy;
    out << line.dump() << '\n';
  }
}

std::string EvalReportToJson(const EvalReport& report) {
  nlohmann::ordered_json root;
  root["total"] = report.total;
  root["accuracy"] = report.accuracy;
  nlohmann::ordered_json per_class;
  for (Label label : kAllLabels) {
    per_class[std::string(LabelName(label))] = report.per_class_accuracy[LabelIndex(label)];
  }
  root["per_class_accuracy"] = per_class;
  root["confusion"] = report.confusion;
  return root.dump(2) + "\n";
}

}  // namespace nliart
