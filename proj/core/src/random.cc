#include "nliart/random.h"

#include <stdexcept>
#include <vector>

namespace nliart {
namespace {
__extension__ typedef unsigned __int128 U128;
}  // namespace

Rng::Rng(std::uint64_t seed) : Rng(ForStream(seed, {})) {}

Rng Rng::ForStream(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
  // seed_seq consumes 32-bit words; split every 64-bit input in two.
  std::vector<std::uint32_t> words;
  words.reserve(2 * (keys.size() + 1));
  auto push = [&](std::uint64_t v) {
    words.push_back(static_cast<std::uint32_t>(v));
    words.push_back(static_cast<std::uint32_t>(v >> 32));
  };
  push(seed);
  for (std::uint64_t k : keys) push(k);
  std::seed_seq seq(words.begin(), words.end());
  return Rng(std::mt19937_64(seq));
}

std::uint64_t Rng::Below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::Below needs a positive bound");
  // Lemire's multiply-shift with rejection of the biased low region.
  U128 m = static_cast<U128>(Next()) * bound;
  std::uint64_t low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<U128>(Next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double Rng::Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

std::size_t Rng::Weighted(std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("negative or NaN sampling weight");
    total += w;
  }
  if (!(total > 0.0)) throw std::invalid_argument("sampling weights sum to zero");
  const double target = Uniform() * total;
  double running = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    running += weights[i];
    last_positive = i;
    if (target < running) return i;
  }
  return last_positive;  // rounding left target just past the final sum
}

}  // namespace nliart
