#include "nliart/tfidf.h"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "nliart/tagging.h"
#include "text_util.h"

namespace nliart {

TfIdfModel TfIdfModel::Fit(std::span<const std::string> documents) {
  if (documents.empty()) throw std::invalid_argument("tf-idf needs at least one document");
  std::map<std::string, std::uint64_t> df;
  for (const std::string& doc : documents) {
    std::set<std::string> seen;
    for (const Token& token : Tokenize(doc)) {
      if (IsPlainWord(token.lower)) seen.insert(token.lower);
    }
    for (const std::string& word : seen) ++df[word];
  }
  TfIdfModel model;
  model.documents_ = documents.size();
  for (const auto& [word, count] : df) {
    model.vocabulary_.push_back(word);
    model.df_.push_back(count);
  }
  model.Finalize();
  return model;
}

void TfIdfModel::Finalize() {
  index_.clear();
  cumulative_.clear();
  double running = 0.0;
  for (std::size_t i = 0; i < vocabulary_.size(); ++i) {
    index_.emplace(vocabulary_[i], i);
    running += Idf(vocabulary_[i]);
    cumulative_.push_back(running);
  }
}

std::uint64_t TfIdfModel::DocumentFrequency(std::string_view lower) const {
  auto it = index_.find(std::string(lower));
  return it == index_.end() ? 0 : df_[it->second];
}

double TfIdfModel::Idf(std::string_view lower) const {
  const double n = static_cast<double>(documents_);
  const double df = static_cast<double>(DocumentFrequency(lower));
  return std::log((1.0 + n) / (1.0 + df)) + 1.0;
}

double TfIdfModel::ReplacementWeight(std::string_view lower) const {
  if (cumulative_.empty() || !index_.count(std::string(lower))) return 0.0;
  return Idf(lower) / cumulative_.back();
}

std::optional<std::string> TfIdfModel::SampleReplacement(std::string_view exclude,
                                                         Rng& rng) const {
  const bool excluded_present = index_.count(std::string(exclude)) > 0;
  const std::size_t candidates = vocabulary_.size() - (excluded_present ? 1 : 0);
  if (candidates == 0) return std::nullopt;
  // Rejection of the excluded word leaves exactly the renormalized
  // distribution over the others.
  while (true) {
    const double target = rng.Uniform() * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    if (it == cumulative_.end()) --it;
    const std::string& word = vocabulary_[static_cast<std::size_t>(it - cumulative_.begin())];
    if (word != exclude) return word;
  }
}

void TfIdfModel::Save(std::ostream& out) const {
  nlohmann::ordered_json root;
  root["format"] = "nliart-tfidf";
  root["version"] = 1;
  root["documents"] = documents_;
  nlohmann::ordered_json df = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < vocabulary_.size(); ++i) df[vocabulary_[i]] = df_[i];
  root["df"] = df;
  out << root.dump() << '\n';
}

TfIdfModel TfIdfModel::Load(std::istream& in) {
  nlohmann::json root;
  try {
    in >> root;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("invalid tf-idf model: ") + e.what());
  }
  if (root.value("format", "") != "nliart-tfidf" || root.value("version", 0) != 1) {
    throw std::runtime_error("not a version 1 nliart tf-idf model");
  }
  TfIdfModel model;
  model.documents_ = root.at("documents").get<std::size_t>();
  if (model.documents_ == 0) throw std::runtime_error("tf-idf model with zero documents");
  std::map<std::string, std::uint64_t> df = root.at("df").get<std::map<std::string, std::uint64_t>>();
  for (const auto& [word, count] : df) {
    if (count == 0 || count > model.documents_) {
      throw std::runtime_error("tf-idf document frequency out of range for '" + word + "'");
    }
    model.vocabulary_.push_back(word);
    model.df_.push_back(count);
  }
  model.Finalize();
  return model;
}

TfIdfModel TfIdfModel::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tf-idf model " + path);
  return Load(in);
}

}  // namespace nliart
