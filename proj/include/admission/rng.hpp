#pragma once

#include <cstdint>
#include <random>

namespace admission {

// splitmix64; used to derive independent, reproducible streams from
// (seed, replication, deployment index) tuples
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    return mix64(mix64(seed ^ mix64(a)) ^ mix64(b + 0x6a09e667f3bcc909ULL));
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0) {
    return std::mt19937_64(stream_seed(seed, a, b));
}

}  // namespace admission
