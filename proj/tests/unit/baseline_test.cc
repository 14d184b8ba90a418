#include "nliart/baseline.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nliart/random.h"
#include "nliart/synthetic.h"

namespace nliart {
namespace {

NliExample Ex(std::string premise, std::string hypothesis, Label label) {
  return {"", std::move(premise), std::move(hypothesis), label, std::string(kOriginalOrigin)};
}

Corpus Make(Split split, std::vector<NliExample> examples) {
  Corpus c;
  c.split = split;
  c.examples = std::move(examples);
  return c;
}

// Hypothesis words decide the label outright.
Corpus Separable(Split split, std::size_t n) {
  const char* words[] = {"alpha", "beta", "gamma"};
  std::vector<NliExample> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t y = i % 3;
    out.push_back(Ex("A premise here.", std::string("The ") + words[y] + " thing.",
                     LabelFromIndex(y)));
  }
  return Make(split, std::move(out));
}

TEST(Features, ModeNames) {
  EXPECT_EQ(FeatureModeFromName("pair"), FeatureMode::kPair);
  EXPECT_EQ(FeatureModeFromName(FeatureModeName(FeatureMode::kHypothesisOnly)),
            FeatureMode::kHypothesisOnly);
  EXPECT_FALSE(FeatureModeFromName("both").has_value());
}

TEST(Features, OverlapCountsWordTypes) {
  EXPECT_EQ(OverlapCount("A man and a dog run.", "The man runs with a dog."), 3u);  // a, man, dog
  EXPECT_EQ(OverlapCount("Two men, two dogs", "two men"), 2u);
  EXPECT_EQ(OverlapCount("...", "..."), 0u);
  EXPECT_EQ(OverlapCount("Gate 7 opens", "gate 7"), 2u);
}

TEST(Vocabulary, MinCountThreshold) {
  const Corpus train = Make(Split::kTrain, {Ex("cat sat", "men men run", Label::kNeutral),
                                            Ex("cat ran", "dogs run", Label::kEntailment)});
  const Vocabulary h = Vocabulary::Build(train, FeatureMode::kHypothesisOnly);
  EXPECT_EQ(h.names(), (std::vector<std::string>{"h:men", "h:run"}));
  const Vocabulary p = Vocabulary::Build(train, FeatureMode::kPair);
  EXPECT_EQ(p.names(), (std::vector<std::string>{"h:men", "h:run", "overlap", "p:cat"}));
  const Vocabulary all = Vocabulary::Build(train, FeatureMode::kHypothesisOnly, 1);
  EXPECT_EQ(all.size(), 3u);
  EXPECT_THROW(Vocabulary::Build(Make(Split::kTrain, {}), FeatureMode::kPair), std::invalid_argument);
}

TEST(Vocabulary, FromNamesChecksNamespaces) {
  EXPECT_THROW(Vocabulary::FromNames(FeatureMode::kHypothesisOnly, {"p:cat"}), std::invalid_argument);
  EXPECT_THROW(Vocabulary::FromNames(FeatureMode::kHypothesisOnly, {"overlap"}), std::invalid_argument);
  EXPECT_THROW(Vocabulary::FromNames(FeatureMode::kPair, {"h:a", "h:a"}), std::invalid_argument);
  EXPECT_THROW(Vocabulary::FromNames(FeatureMode::kPair, {"x:a"}), std::invalid_argument);
  const auto v = Vocabulary::FromNames(FeatureMode::kPair, {"p:b", "h:a"});
  EXPECT_EQ(v.Find("h:a"), 0u);
  EXPECT_EQ(v.Find("p:b"), 1u);
  EXPECT_FALSE(v.Find("h:b").has_value());
}

TEST(Features, CountsAndOverlap) {
  const auto v = Vocabulary::FromNames(FeatureMode::kPair, {"h:men", "h:run", "overlap", "p:men"});
  const FeatureVector x = Featurize(Ex("Men sleep", "men men run", Label::kNeutral), v);
  EXPECT_EQ(x, (FeatureVector{{0, 2.0}, {1, 1.0}, {2, 1.0}, {3, 1.0}}));
  const FeatureVector y = Featurize(Ex("cats", "men run", Label::kNeutral), v);
  EXPECT_EQ(y, (FeatureVector{{0, 1.0}, {1, 1.0}}));

  const auto h = Vocabulary::FromNames(FeatureMode::kHypothesisOnly, {"h:men"});
  EXPECT_EQ(Featurize(Ex("men men men", "men", Label::kNeutral), h), (FeatureVector{{0, 1.0}}));
}

TEST(Model, SoftmaxAndArgMax) {
  const auto p = Softmax({1000.0, 1001.0, -5.0});
  EXPECT_NEAR(p[0] + p[1] + p[2], 1.0, 1e-15);
  EXPECT_NEAR(p[1] / p[0], std::exp(1.0), 1e-9);
  EXPECT_EQ(ArgMax({1.0, 3.0, 3.0}), Label::kNeutral);
  EXPECT_EQ(ArgMax({2.0, 2.0, 2.0}), Label::kEntailment);
  Rng rng(4);
  for (int t = 0; t < 200; ++t) {
    std::array<double, kNumLabels> s{};
    for (double& v : s) v = rng.Uniform() * 20 - 10;
    const double shift = rng.Uniform() * 100 - 50;
    std::array<double, kNumLabels> shifted = s;
    for (double& v : shifted) v += shift;
    EXPECT_EQ(ArgMax(s), ArgMax(shifted));
    const auto a = Softmax(s), b = Softmax(shifted);
    for (std::size_t i = 0; i < kNumLabels; ++i) EXPECT_NEAR(a[i], b[i], 1e-12);
  }
}

TEST(Model, ZeroModelLossIsLog3) {
  const LinearModel model(4);
  std::vector<LabeledFeatures> batch = {{{{0, 1.0}, {2, 3.0}}, Label::kNeutral},
                                        {{{1, 2.0}}, Label::kContradiction}};
  EXPECT_NEAR(ComputeLossAndGradient(model, batch, 0.0).loss, std::log(3.0), 1e-15);
  EXPECT_THROW(ComputeLossAndGradient(model, {}, 0.0), std::invalid_argument);
}

TEST(Model, GradientMatchesFiniteDifferences) {
  Rng rng(17);
  const std::size_t features = 6;
  for (int trial = 0; trial < 10; ++trial) {
    LinearModel model(features);
    for (double& w : model.weights) w = rng.Uniform() * 2 - 1;
    for (double& b : model.bias) b = rng.Uniform() - 0.5;
    std::vector<LabeledFeatures> batch;
    for (int i = 0; i < 5; ++i) {
      LabeledFeatures lf;
      for (std::size_t f = 0; f < features; ++f) {
        if (rng.Below(2)) lf.features.push_back({f, 1.0 + static_cast<double>(rng.Below(3))});
      }
      lf.label = LabelFromIndex(rng.Below(3));
      batch.push_back(lf);
    }
    const double l2 = 0.01;
    const auto analytic = ComputeLossAndGradient(model, batch, l2);
    const double h = 1e-6;
    for (std::size_t i = 0; i < model.weights.size(); ++i) {
      LinearModel plus = model, minus = model;
      plus.weights[i] += h;
      minus.weights[i] -= h;
      const double numeric = (ComputeLossAndGradient(plus, batch, l2).loss -
                              ComputeLossAndGradient(minus, batch, l2).loss) / (2 * h);
      EXPECT_NEAR(analytic.gradient.weights[i], numeric, 1e-6);
    }
    for (std::size_t c = 0; c < kNumLabels; ++c) {
      LinearModel plus = model, minus = model;
      plus.bias[c] += h;
      minus.bias[c] -= h;
      const double numeric = (ComputeLossAndGradient(plus, batch, l2).loss -
                              ComputeLossAndGradient(minus, batch, l2).loss) / (2 * h);
      EXPECT_NEAR(analytic.gradient.bias[c], numeric, 1e-6);
    }
  }
}

TEST(Train, ConfigValidation) {
  TrainConfig c;
  c.epochs = 0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c = TrainConfig{};
  c.learning_rate = 0.0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c = TrainConfig{};
  c.batch_size = 0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c = TrainConfig{};
  c.l2 = -1;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c.l2 = 0.0;
  EXPECT_NO_THROW(c.Validate());
}

TEST(Train, SeparableReachesPerfectAccuracy) {
  const Corpus train = Separable(Split::kTrain, 300);
  const Corpus dev = Separable(Split::kDev, 30);
  TrainConfig config;
  config.learning_rate = 0.5;
  config.epochs = 10;
  config.batch_size = 32;
  config.checkpoint_interval = 20;
  const TrainResult result = Train(train, dev, FeatureMode::kHypothesisOnly, config);
  EXPECT_DOUBLE_EQ(result.best_dev_accuracy, 100.0);
  const EvalReport report = Evaluate(result.trained, Separable(Split::kTest, 60));
  EXPECT_DOUBLE_EQ(report.accuracy, 100.0);
  EXPECT_EQ(report.total, 60u);
  EXPECT_EQ(report.confusion[1][1], 20u);
}

TEST(Train, LogShapeAndCheckpoints) {
  const Corpus train = Separable(Split::kTrain, 100);
  const Corpus dev = Separable(Split::kDev, 9);
  TrainConfig config;
  config.epochs = 3;
  config.batch_size = 16;  // 7 steps per epoch
  config.checkpoint_interval = 5;
  const TrainResult result = Train(train, dev, FeatureMode::kPair, config);
  ASSERT_EQ(result.log.size(), 21u);
  for (std::size_t i = 0; i < result.log.size(); ++i) {
    const TrainLogEntry& e = result.log[i];
    EXPECT_EQ(e.step, i + 1);
    EXPECT_EQ(e.epoch, i / 7 + 1);
    EXPECT_TRUE(std::isfinite(e.loss));
    EXPECT_EQ(e.dev_accuracy.has_value(), e.step % 5 == 0 || e.step == 21) << e.step;
  }
  // best_step is the earliest checkpoint reaching the best accuracy
  double best = -1;
  std::size_t best_step = 0;
  for (const auto& e : result.log) {
    if (e.dev_accuracy && *e.dev_accuracy > best) {
      best = *e.dev_accuracy;
      best_step = e.step;
    }
  }
  EXPECT_EQ(result.best_step, best_step);
  EXPECT_EQ(result.best_dev_accuracy, best);
}

TEST(Train, Deterministic) {
  SyntheticConfig sc;
  sc.train_size = 600;
  sc.dev_size = 90;
  sc.test_size = 90;
  const auto data = GenerateSynthetic(sc);
  TrainConfig config;
  config.epochs = 2;
  config.batch_size = 50;
  config.checkpoint_interval = 7;
  config.seed = 3;
  const auto a = Train(data.train, data.dev, FeatureMode::kPair, config);
  const auto b = Train(data.train, data.dev, FeatureMode::kPair, config);
  EXPECT_EQ(a.trained.model, b.trained.model);
  EXPECT_EQ(a.best_step, b.best_step);
  config.seed = 4;
  const auto c = Train(data.train, data.dev, FeatureMode::kPair, config);
  EXPECT_NE(a.trained.model, c.trained.model);
  EXPECT_EQ(Evaluate(a.trained, data.test, 1).confusion, Evaluate(a.trained, data.test, 3).confusion);
}

TEST(Evaluate, ConstantPredictorOnBalancedData) {
  TrainedModel trained{Vocabulary::FromNames(FeatureMode::kHypothesisOnly, {"h:x"}), LinearModel(1)};
  trained.model.bias = {1.0, 0.0, 0.0};
  const EvalReport r = Evaluate(trained, Separable(Split::kTest, 300));
  EXPECT_NEAR(r.accuracy, 100.0 / 3.0, 1e-12);
  EXPECT_DOUBLE_EQ(r.per_class_accuracy[0], 100.0);
  EXPECT_DOUBLE_EQ(r.per_class_accuracy[2], 0.0);
  EXPECT_EQ(r.confusion[2][0], 100u);
  EXPECT_THROW(Evaluate(trained, Make(Split::kTest, {})), std::invalid_argument);
}

TEST(Evaluate, HypothesisOnlyIgnoresPremise) {
  const Corpus train = Separable(Split::kTrain, 90);
  TrainConfig config;
  config.epochs = 2;
  const auto result = Train(train, Separable(Split::kDev, 9), FeatureMode::kHypothesisOnly, config);
  Corpus a = Separable(Split::kTest, 30);
  Corpus b = a;
  for (auto& e : b.examples) e.premise = "Entirely different words: alpha beta gamma.";
  EXPECT_EQ(Evaluate(result.trained, a).confusion, Evaluate(result.trained, b).confusion);
}

TEST(ModelIo, RoundTrip) {
  const Corpus train = Separable(Split::kTrain, 60);
  TrainConfig config;
  config.epochs = 1;
  const auto result = Train(train, Separable(Split::kDev, 9), FeatureMode::kPair, config);
  std::stringstream buffer;
  SaveModel(buffer, result.trained);
  const TrainedModel back = LoadModel(buffer);
  EXPECT_EQ(back.vocabulary.names(), result.trained.vocabulary.names());
  EXPECT_EQ(back.vocabulary.mode(), FeatureMode::kPair);
  EXPECT_EQ(back.model, result.trained.model);

  std::istringstream bad("{\"format\":\"nliart-linear\",\"version\":2}");
  EXPECT_THROW(LoadModel(bad), std::runtime_error);
}

TEST(ModelIo, TrainingLogLines) {
  std::vector<TrainLogEntry> log = {{1, 1, 1.0, std::nullopt}, {2, 1, 0.5, 66.5}};
  std::ostringstream out;
  WriteTrainingLog(out, log);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_FALSE(nlohmann::json::parse(line).contains("dev_accuracy"));
  std::getline(in, line);
  EXPECT_EQ(nlohmann::json::parse(line)["dev_accuracy"], 66.5);
}

}  // namespace
}  // namespace nliart
