#ifndef HRLB_RANDOM_HPP
#define HRLB_RANDOM_HPP

#include <cstdint>

namespace hrlb {

// All randomness in the constructions is counter-based: the decision for item
// i of a stream is a pure function of (stream seed, i). Streams are derived
// from the run seed with derive_seed, so results do not depend on evaluation
// order or thread count.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

inline std::uint64_t stream_value(std::uint64_t stream_seed, std::uint64_t index) {
  return splitmix64(stream_seed + splitmix64(index));
}

}  // namespace hrlb

#endif  // HRLB_RANDOM_HPP
