#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nliart {

struct Neighbor {
  std::string word;
  double similarity = 0.0;

  bool operator==(const Neighbor&) const = default;
};

double CosineSimilarity(std::span<const float> u, std::span<const float> v);

// Dense word vectors in row-major storage.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;

  // word2vec text format: a "<vocab_size> <dim>" header, then one
  // "word v1 ... vdim" line per entry. Errors carry the offending line.
  static EmbeddingTable Load(std::istream& in);
  static EmbeddingTable LoadFile(const std::string& path);

  // Adds one entry; the first call fixes the dimension.
  void Add(std::string word, std::span<const float> vector);

  std::size_t size() const { return words_.size(); }
  std::size_t dimension() const { return dim_; }
  bool Contains(std::string_view word) const;
  std::span<const float> Vector(std::string_view word) const;  // throws if absent
  const std::vector<std::string>& words() const { return words_; }

  // Top-k by cosine similarity, query excluded, ties by word. Candidates
  // with a zero-norm vector are skipped. Throws when word is absent or k == 0.
  std::vector<Neighbor> NearestNeighbors(std::string_view word, std::size_t k) const;

  void Save(std::ostream& out) const;

 private:
  std::span<const float> Row(std::size_t i) const {
    return {values_.data() + i * dim_, dim_};
  }

  std::size_t dim_ = 0;
  std::vector<std::string> words_;
  std::vector<float> values_;
  std::vector<double> norms_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace nliart
