#ifndef DIGDOM_RNG_HPP
#define DIGDOM_RNG_HPP

#include <cstdint>
#include <random>

namespace digdom {

/// Seeded source for every randomized generator and constructor.
///
/// The engine is std::mt19937_64 (its output sequence is fixed by the C++
/// standard). The library's std:: distributions are implementation-defined,
/// so the mappings below are spelled out instead:
///   uniform_below(k): rejection sampling on the raw 64-bit draw, value % k
///   bernoulli(p):     (draw >> 11) * 2^-53 < p
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound). bound must be > 0.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    bool bernoulli(double p) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return u < p;
    }

    bool coin() { return (engine_() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

} // namespace digdom

#endif // DIGDOM_RNG_HPP
