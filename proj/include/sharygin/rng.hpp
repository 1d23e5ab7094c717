#pragma once

#include <cstdint>
#include <random>

namespace sharygin {

/// splitmix64 step, used to derive independent sub-streams from a seed.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) { return mix64(a ^ mix64(b)); }

/// Deterministic RNG wrapper. mt19937_64 output is pinned by the standard and
/// doubles are produced by explicit bit manipulation, so identical seeds give
/// bit-identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t bits() { return eng_(); }

    /// Uniform in [0,1) with 53-bit resolution.
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * unit(); }

    int uniform_int(int a, int b) { // inclusive bounds
        return a + static_cast<int>(eng_() % static_cast<std::uint64_t>(b - a + 1));
    }

    bool coin() { return (eng_() & 1u) != 0; }

private:
    std::mt19937_64 eng_;
};

} // namespace sharygin
