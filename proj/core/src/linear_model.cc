#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "nliart/baseline.h"

namespace nliart {

std::array<double, kNumLabels> LinearModel::Scores(const FeatureVector& x) const {
  std::array<double, kNumLabels> scores = bias;
  for (std::size_t k = 0; k < kNumLabels; ++k) {
    const double* row = weights.data() + k * features;
    for (const FeatureEntry& e : x) scores[k] += row[e.index] * e.value;
  }
  return scores;
}

std::array<double, kNumLabels> Softmax(const std::array<double, kNumLabels>& scores) {
  const double top = *std::max_element(scores.begin(), scores.end());
  std::array<double, kNumLabels> p{};
  double sum = 0.0;
  for (std::size_t k = 0; k < kNumLabels; ++k) {
    p[k] = std::exp(scores[k] - top);
    sum += p[k];
  }
  for (double& v : p) v /= sum;
  return p;
}

Label ArgMax(const std::array<double, kNumLabels>& scores) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < kNumLabels; ++k) {
    if (scores[k] > scores[best]) best = k;
  }
  return LabelFromIndex(best);
}

LossAndGradient ComputeLossAndGradient(const LinearModel& model,
                                       std::span<const LabeledFeatures> batch, double l2) {
  if (batch.empty()) throw std::invalid_argument("loss over an empty batch");
  LossAndGradient out;
  out.gradient = LinearModel(model.features);
  const double scale = 1.0 / static_cast<double>(batch.size());

  double loss = 0.0;
  for (const LabeledFeatures& item : batch) {
    const auto scores = model.Scores(item.features);
    const double top = *std::max_element(scores.begin(), scores.end());
    double sum = 0.0;
    for (double s : scores) sum += std::exp(s - top);
    const double log_z = top + std::log(sum);
    const std::size_t gold = LabelIndex(item.label);
    loss += log_z - scores[gold];
    for (std::size_t k = 0; k < kNumLabels; ++k) {
      const double residual = (std::exp(scores[k] - log_z) - (k == gold ? 1.0 : 0.0)) * scale;
      out.gradient.bias[k] += residual;
      double* row = out.gradient.weights.data() + k * model.features;
      for (const FeatureEntry& e : item.features) row[e.index] += residual * e.value;
    }
  }
  loss *= scale;

  if (l2 != 0.0) {
    double norm2 = 0.0;
    for (std::size_t i = 0; i < model.weights.size(); ++i) {
      norm2 += model.weights[i] * model.weights[i];
      out.gradient.weights[i] += l2 * model.weights[i];
    }
    loss += 0.5 * l2 * norm2;
  }
  if (!std::isfinite(loss)) throw TrainingDiverged("training loss is not finite");
  out.loss = loss;
  return out;
}

void SaveModel(std::ostream& out, const TrainedModel& trained) {
  const LinearModel& m = trained.model;
  nlohmann::ordered_json root;
  root["format"] = "nliart-linear";
  root["version"] = 1;
  root["mode"] = std::string(FeatureModeName(trained.vocabulary.mode()));
  root["labels"] = nlohmann::ordered_json::array();
  for (Label label : kAllLabels) root["labels"].push_back(std::string(LabelName(label)));
  root["features"] = trained.vocabulary.names();
  root["weights"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < kNumLabels; ++k) {
    root["weights"].push_back(std::vector<double>(m.weights.begin() + k * m.features,
                                                  m.weights.begin() + (k + 1) * m.features));
  }
  root["bias"] = m.bias;
  out << root.dump() << '\n';
}

TrainedModel LoadModel(std::istream& in) {
  nlohmann::json root;
  try {
    in >> root;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("invalid model file: ") + e.what());
  }
  if (root.value("format", "") != "nliart-linear" || root.value("version", 0) != 1) {
    throw std::runtime_error("not a version 1 nliart linear model");
  }
  try {
    const auto mode = FeatureModeFromName(root.at("mode").get<std::string>());
    if (!mode) throw std::runtime_error("unknown feature mode in model file");
    TrainedModel trained;
    trained.vocabulary =
        Vocabulary::FromNames(*mode, root.at("features").get<std::vector<std::string>>());
    const auto& names = trained.vocabulary.names();
    const auto stored = root.at("features").get<std::vector<std::string>>();
    if (stored != names) throw std::runtime_error("model features are not in sorted order");
    trained.model = LinearModel(names.size());
    const auto& rows = root.at("weights");
    if (rows.size() != kNumLabels) throw std::runtime_error("model needs one weight row per label");
    for (std::size_t k = 0; k < kNumLabels; ++k) {
      const auto row = rows[k].get<std::vector<double>>();
      if (row.size() != names.size()) throw std::runtime_error("weight row size mismatch");
      std::copy(row.begin(), row.end(), trained.model.weights.begin() + k * names.size());
    }
    trained.model.bias = root.at("bias").get<std::array<double, kNumLabels>>();
    return trained;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("invalid model file: ") + e.what());
  }
}

void SaveModelFile(const std::string& path, const TrainedModel& trained) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write model file " + path);
  SaveModel(out, trained);
  if (!out) throw std::runtime_error("failed writing model file " + path);
}

TrainedModel LoadModelFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model file " + path);
  return LoadModel(in);
}

}  // namespace nliart
