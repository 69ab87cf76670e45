#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gridfill/types.hpp"

namespace gridfill {

// splitmix64 stream. Fixed across platforms so that generated instances are
// byte-identical for equal seeds.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection: draws >= bound * floor(2^64/bound)
    // are discarded, so every residue is equally likely.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("SplitMix64::below: zero bound");
        const std::uint64_t rem = (0 - bound) % bound;  // 2^64 mod bound
        const std::uint64_t limit = 0 - rem;            // bound * floor(2^64/bound)
        std::uint64_t u = next();
        while (rem != 0 && u >= limit) u = next();
        return u % bound;
    }

  private:
    std::uint64_t state_;
};

// Uniform k-subset of {1..universe} via partial Fisher-Yates, returned
// sorted ascending.
inline ValueSet sample_subset(SplitMix64& rng, Value universe, int k) {
    if (k < 0 || universe < k)
        throw std::invalid_argument("sample_subset: universe smaller than k");
    std::vector<Value> pool(static_cast<std::size_t>(universe));
    std::iota(pool.begin(), pool.end(), Value{1});
    for (int t = 0; t < k; ++t) {
        const std::uint64_t idx =
            static_cast<std::uint64_t>(t) +
            rng.below(static_cast<std::uint64_t>(universe - t));
        std::swap(pool[static_cast<std::size_t>(t)], pool[idx]);
    }
    ValueSet out(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gridfill
