#include "nliart/embeddings.h"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "nliart/error.h"
#include "text_util.h"

namespace nliart {
namespace {

double Norm(std::span<const float> v) {
  double sum = 0.0;
  for (float x : v) sum += static_cast<double>(x) * x;
  return std::sqrt(sum);
}

double Dot(std::span<const float> u, std::span<const float> v) {
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) sum += static_cast<double>(u[i]) * v[i];
  return sum;
}

std::vector<std::string_view> Fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsAsciiSpace(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !IsAsciiSpace(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
bool ParseNumber(std::string_view s, T& value) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

double CosineSimilarity(std::span<const float> u, std::span<const float> v) {
  if (u.size() != v.size()) throw std::invalid_argument("vector dimensions differ");
  const double nu = Norm(u);
  const double nv = Norm(v);
  if (nu == 0.0 || nv == 0.0) throw std::invalid_argument("cosine of a zero vector");
  return Dot(u, v) / (nu * nv);
}

EmbeddingTable EmbeddingTable::Load(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t vocab = 0;
  std::size_t dim = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!Trim(line).empty()) break;
  }
  {
    const auto header = Fields(line);
    if (header.size() != 2 || !ParseNumber(header[0], vocab) || !ParseNumber(header[1], dim) ||
        dim == 0) {
      throw ParseError(line_no, "expected header '<vocab_size> <dim>'");
    }
  }

  EmbeddingTable table;
  table.dim_ = dim;
  table.words_.reserve(vocab);
  table.values_.reserve(vocab * dim);
  std::vector<float> row(dim);
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const auto fields = Fields(line);
    if (fields.size() != dim + 1) {
      throw ParseError(line_no, fmt::format("expected {} components, found {}", dim,
                                            fields.size() - 1));
    }
    for (std::size_t i = 0; i < dim; ++i) {
      if (!ParseNumber(fields[i + 1], row[i]) || !std::isfinite(row[i])) {
        throw ParseError(line_no, fmt::format("bad component '{}'", fields[i + 1]));
      }
    }
    const std::string word(fields[0]);
    if (table.Contains(word)) throw ParseError(line_no, "duplicate word '" + word + "'");
    table.Add(word, row);
  }
  if (table.size() != vocab) {
    throw ParseError(0, fmt::format("header declares {} words, found {}", vocab,
                                          table.size()));
  }
  return table;
}

EmbeddingTable EmbeddingTable::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open embeddings file " + path);
  return Load(in);
}

void EmbeddingTable::Add(std::string word, std::span<const float> vector) {
  if (words_.empty() && dim_ == 0) dim_ = vector.size();
  if (vector.size() != dim_ || dim_ == 0) {
    throw std::invalid_argument("embedding dimension mismatch for '" + word + "'");
  }
  if (index_.count(word)) throw std::invalid_argument("duplicate word '" + word + "'");
  index_.emplace(word, words_.size());
  words_.push_back(std::move(word));
  values_.insert(values_.end(), vector.begin(), vector.end());
  norms_.push_back(Norm(vector));
}

bool EmbeddingTable::Contains(std::string_view word) const {
  return index_.count(std::string(word)) > 0;
}

std::span<const float> EmbeddingTable::Vector(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) throw std::out_of_range("word not in embeddings: " + std::string(word));
  return Row(it->second);
}

std::vector<Neighbor> EmbeddingTable::NearestNeighbors(std::string_view word,
                                                       std::size_t k) const {
  if (k == 0) throw std::invalid_argument("nearest neighbors needs k >= 1");
  auto it = index_.find(std::string(word));
  if (it == index_.end()) throw std::out_of_range("word not in embeddings: " + std::string(word));
  const std::size_t query = it->second;
  const double query_norm = norms_[query];
  std::vector<Neighbor> all;
  if (query_norm == 0.0) return all;
  all.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i == query || norms_[i] == 0.0) continue;
    all.push_back({words_[i], Dot(Row(query), Row(i)) / (query_norm * norms_[i])});
  }
  auto better = [](const Neighbor& a, const Neighbor& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return a.word < b.word;
  };
  const std::size_t keep = std::min(k, all.size());
  std::partial_sort(all.begin(), all.begin() + keep, all.end(), better);
  all.resize(keep);
  return all;
}

void EmbeddingTable::Save(std::ostream& out) const {
  out << words_.size() << ' ' << dim_ << '\n';
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out << words_[i];
    for (float x : Row(i)) out << ' ' << fmt::format("{}", x);
    out << '\n';
  }
}

}  // namespace nliart
