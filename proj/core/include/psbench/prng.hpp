#pragma once

#include <cstdint>
#include <vector>

namespace psbench {

// splitmix64 (Steele, Lea, Vigna — public domain). Chosen over std::mt19937
// plus <random> distributions because those are not bit-reproducible across
// standard library implementations; a fixed 64-bit generator keeps seeded
// shuffles identical on every platform. Algorithm id: "splitmix64/v1".
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw in [0, bound). bound must be > 0.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// In-place Fisher–Yates shuffle driven by SplitMix64.
template <typename T>
void seeded_shuffle(std::vector<T>& items, std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace psbench
