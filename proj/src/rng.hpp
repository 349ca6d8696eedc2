#pragma once

#include <cstdint>
#include <random>

namespace menuprobe {

// splitmix64 step; used to derive independent substream seeds so that every
// (config, seed) pair reproduces byte-identical outputs.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t mix_seed(uint64_t seed, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
    uint64_t s = seed;
    (void)splitmix64(s);
    s ^= a * 0x9e3779b97f4a7c15ULL;
    (void)splitmix64(s);
    s ^= b * 0xc2b2ae3d27d4eb4fULL;
    (void)splitmix64(s);
    s ^= c * 0x165667b19e3779f9ULL;
    return splitmix64(s);
}

inline std::mt19937_64 make_rng(uint64_t seed) { return std::mt19937_64(seed); }

} // namespace menuprobe
