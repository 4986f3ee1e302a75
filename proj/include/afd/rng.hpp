#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace afd {

std::uint64_t splitmix64(std::uint64_t x);

// Mixes a base seed with a sequence of keys into an independent stream seed.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> keys);

// mt19937_64 with hand-rolled conversions so that draws are identical on
// every standard library (std::*_distribution are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform on [0, n) by rejection sampling; n must be > 0.
    std::size_t index(std::size_t n);

private:
    std::mt19937_64 engine_;
};

}  // namespace afd
