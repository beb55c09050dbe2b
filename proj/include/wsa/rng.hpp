#pragma once

#include <cstdint>
#include <random>

namespace wsa {

// splitmix64 step; used to derive independent per-trial seeds from a master
// seed so concurrent trials never share generator state.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t s = master;
  std::uint64_t h = splitmix64(s);
  s ^= a + 0x9e3779b97f4a7c15ull;
  h ^= splitmix64(s);
  s ^= b + 0x7f4a7c159e3779b9ull;
  h ^= splitmix64(s);
  return h;
}

inline std::mt19937_64 seeded_engine(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace wsa
