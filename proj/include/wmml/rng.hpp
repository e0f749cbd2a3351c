#pragma once

#include <cstdint>
#include <random>

namespace wmml {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent substream identifier for (seed, cell, replicate) triples.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t cell,
                                   std::uint64_t replicate) {
    return splitmix64(splitmix64(splitmix64(seed) ^ cell) ^ replicate);
}

// Deterministic uniform stream; bit-reproducible across platforms (does not
// go through std::uniform_real_distribution).
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : eng_(splitmix64(seed)) {}

    // Uniform on the open interval (0, 1).
    double uniform() {
        return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1p-53;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace wmml
