#ifndef SAUDIT_RNG_H_
#define SAUDIT_RNG_H_

#include <cstdint>
#include <string_view>

namespace saudit {

// FNV-1a over the raw bytes.
constexpr std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// SplitMix64 output function (Steele, Lea & Flood).
constexpr std::uint64_t SplitMix64(std::uint64_t x) {
  std::uint64_t z = x + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform draw in [0,1) for one record: the stream is split per sample id, so
// a record's draw does not depend on its position in the corpus.
constexpr double RecordUniform(std::uint64_t seed, std::string_view sample_id) {
  std::uint64_t bits = SplitMix64(seed ^ Fnv1a64(sample_id));
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace saudit

#endif  // SAUDIT_RNG_H_
