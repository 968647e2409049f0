#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace tribch {

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Seeded generator. fork(label) derives an independent stream from the seed
/// and a fixed label, so subtasks draw the same numbers regardless of the
/// order they run in. Bounded draws avoid std::uniform_int_distribution, whose
/// output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

    Rng fork(std::string_view label) const {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (unsigned char ch : label) {
            h ^= ch;
            h *= 0x100000001b3ull;
        }
        return Rng(splitmix64(seed_ ^ h));
    }

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace tribch
