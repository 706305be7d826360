// Deterministic counter-based random number generation. Every randomized
// component of the toolkit draws from these primitives so that results are
// reproducible bit-for-bit across platforms and thread counts.
#pragma once

#include <cstdint>
#include <vector>

namespace mteval {

// SplitMix64 finalizer. Statistically solid for non-cryptographic use.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based generator: word(stream, index) is a pure function of
// (seed, stream, index), so independent streams can be evaluated in any
// order or in parallel with identical output.
class KeyedRng {
 public:
  explicit KeyedRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t word(std::uint64_t stream, std::uint64_t index) const {
    std::uint64_t h = splitmix64(seed_ ^ (0x6a09e667f3bcc909ULL + stream));
    return splitmix64(h ^ (0xbb67ae8584caa73bULL + index));
  }

  // Coin flip keyed by (stream, index); used for paired swaps.
  bool flip(std::uint64_t stream, std::uint64_t index) const {
    return (word(stream, index) >> 63) != 0;
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

// Sequential stream view over a KeyedRng, for consumers that need a plain
// draw-next interface (e.g. Fisher-Yates).
class RngStream {
 public:
  RngStream(const KeyedRng& rng, std::uint64_t stream)
      : rng_(rng), stream_(stream) {}

  std::uint64_t next() { return rng_.word(stream_, counter_++); }

  // Uniform draw in [0, bound) by rejection; bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return r % bound;
  }

 private:
  KeyedRng rng_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

// In-place Fisher-Yates shuffle driven by an RngStream. std::shuffle is
// implementation-defined, so it cannot guarantee identical permutations
// across standard libraries; this can.
template <typename T>
void deterministic_shuffle(std::vector<T>& items, RngStream& stream) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(stream.next_below(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace mteval
