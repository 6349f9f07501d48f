#pragma once

#include <cstdint>
#include <random>

namespace dcjscen {

// Seeded 64-bit generator. Bounded draws use rejection sampling rather than
// std::uniform_int_distribution so that streams are identical across
// standard library implementations.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed = 0);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t next() { return engine_(); }
    // Uniform in [0, bound); bound must be positive.
    std::uint64_t uniform(std::uint64_t bound);
    // An independent source for task `stream`, derived from this seed only.
    RandomSource split(std::uint64_t stream) const;

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace dcjscen
