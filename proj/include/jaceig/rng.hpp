#ifndef JACEIG_RNG_HPP
#define JACEIG_RNG_HPP

#include <cstdint>

#include "jaceig/rational.hpp"

namespace jaceig {

// SplitMix64: tiny deterministic generator so seeded runs are byte-identical
// across platforms and standard library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // uniform integer in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // uniform double in [lo, hi]
    double uniform(double lo, double hi) {
        double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    // nonzero rational num/den with num in [-num_max, num_max]
    Rat nonzero_rat(long num_max, long den) {
        long num = 0;
        while (num == 0) num = range(-num_max, num_max);
        return make_rat(num, den);
    }

    // rational in [-num_max, num_max]/den, possibly zero
    Rat rat(long num_max, long den) { return make_rat(range(-num_max, num_max), den); }

private:
    std::uint64_t state_;
};

} // namespace jaceig

#endif
