#ifndef MOODCO_RNG_HPP
#define MOODCO_RNG_HPP

#include <cstdint>
#include <random>

namespace moodco {

// All randomness in the library flows through this wrapper. The engine is
// std::mt19937_64, whose output sequence the C++ standard pins exactly, and
// every derived draw (bounded ints, doubles, Poisson) is implemented here
// rather than with std::*_distribution, which is not portable across
// standard libraries. Same seed, same bytes, any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n), unbiased via rejection.
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Knuth's product method; fine for the small means used here.
    std::int64_t poisson(double mean) {
        if (mean <= 0.0) return 0;
        const double limit = std::exp(-mean);
        std::int64_t k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= uniform01();
        } while (p > limit);
        return k - 1;
    }

    // Per-stream seed derivation (splitmix64 finalizer) so parallel
    // profile streams are stable under any scheduling.
    static std::uint64_t derive(std::uint64_t master, std::uint64_t stream) {
        std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace moodco

#endif  // MOODCO_RNG_HPP
