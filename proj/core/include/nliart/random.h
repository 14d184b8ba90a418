#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <utility>

namespace nliart {

// Seeded generator whose draws are identical on every platform. The standard
// distributions are implementation-defined, so bounded integers, uniform
// doubles and shuffles are done here on top of the raw 64-bit engine.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Independent stream for a (seed, key...) tuple, e.g. (seed, example, copy).
  static Rng ForStream(std::uint64_t seed, std::initializer_list<std::uint64_t> keys);

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t Below(std::uint64_t bound);

  // Uniform in [0, 1) with 53 random bits.
  double Uniform();

  // Index drawn with probability proportional to weights[i]. Weights must be
  // non-negative with a positive sum.
  std::size_t Weighted(std::span<const double> weights);

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(Below(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

 private:
  explicit Rng(std::mt19937_64 engine) : engine_(engine) {}
  std::mt19937_64 engine_;
};

}  // namespace nliart
