#pragma once

#include <cstdint>

namespace oligosim {

// Identifier echoed into summary.json so every output names the generator
// that produced it.
inline constexpr const char* kPrngName = "splitmix64";

// splitmix64 (Steele/Lea/Vigna): 64-bit counter state advanced by a fixed
// odd constant, with a three-round xor-shift-multiply output function.
// Bit-exact on every platform; simulation runs must replay identically from
// the seed alone, so platform-default generators are not used anywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return finalize(state_);
  }

  // Uniform on [0, 1) using the top 53 bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // The stateless output mixer; also serves as the building block for
  // child-seed derivation.
  static constexpr std::uint64_t finalize(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

 private:
  std::uint64_t state_;
};

// Child seed for sweep cell (i1, i2), replicate rep. Values are absorbed one
// at a time with a full mix between absorptions, so extending a gamma grid
// appends new (i1, i2) pairs without disturbing the streams of cells that
// already existed.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t i1,
                                    std::uint64_t i2, std::uint64_t rep) {
  std::uint64_t h = SplitMix64::finalize(base + 0x9e3779b97f4a7c15ULL);
  h = SplitMix64::finalize(h + i1);
  h = SplitMix64::finalize(h + i2);
  h = SplitMix64::finalize(h + rep);
  return h;
}

}  // namespace oligosim
