#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pallino {

/// Deterministic 64-bit generator used by every seeded feature (peg keygen,
/// random mosaics). The algorithm is pinned so that seeded outputs are
/// reproducible across builds and platforms; see README "Seeded generation"
/// for the exact contract.
///
/// splitmix64 (Steele, Lea, Flood 2014):
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Uniform draw from [0, bound) by rejection: discard raw 64-bit values that
/// fall into the final partial block, so every residue is equally likely.
inline std::uint64_t draw_below(SplitMix64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("draw_below: bound must be positive");
    const std::uint64_t rem = (UINT64_MAX % bound + 1) % bound;  // 2^64 mod bound
    const std::uint64_t limit = std::uint64_t(0) - rem;          // largest multiple of bound
    std::uint64_t x = rng.next();
    while (rem != 0 && x >= limit) x = rng.next();
    return x % bound;
}

/// Fisher-Yates, descending: for i = n-1 .. 1, swap a[i] with a[draw_below(i+1)].
template <typename T>
void shuffle(std::vector<T>& values, SplitMix64& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(draw_below(rng, i));
        std::swap(values[i - 1], values[j]);
    }
}

}  // namespace pallino
