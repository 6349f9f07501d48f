#include "dcjscen/random.hpp"

#include "dcjscen/errors.hpp"

namespace dcjscen {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

std::uint64_t RandomSource::uniform(std::uint64_t bound) {
    if (bound == 0) {
        throw DomainError("uniform() needs a positive bound");
    }
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        std::uint64_t r = engine_();
        if (r >= threshold) {
            return r % bound;
        }
    }
}

RandomSource RandomSource::split(std::uint64_t stream) const {
    return RandomSource(splitmix64(seed_ ^ splitmix64(stream + 1)));
}

}  // namespace dcjscen
