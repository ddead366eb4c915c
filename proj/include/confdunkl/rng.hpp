#pragma once

// Deterministic PRNG used everywhere randomness is needed.  We avoid the
// standard <random> distributions because their output is implementation
// defined; identical seeds must give identical bytes across platforms.

#include "confdunkl/scalar.hpp"

#include <cstdint>
#include <vector>

namespace confdunkl {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        // splitmix64 expansion of the seed into xoshiro256** state
        std::uint64_t x = seed;
        for (auto& w : s_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            w = z ^ (z >> 31);
        }
    }

    std::uint64_t next_u64() {
        auto rotl = [](std::uint64_t v, int k) {
            return (v << k) | (v >> (64 - k));
        };
        std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0, 1)
    double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return next_u64() % bound; }

    // integer in [lo, hi] inclusive
    long intrange(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // small random rational with numerator in [-num_max, num_max] and
    // denominator in [1, den_max]
    Rat rational(long num_max = 6, long den_max = 4) {
        Rat r(intrange(-num_max, num_max), intrange(1, den_max));
        r.canonicalize();
        return r;
    }

    std::vector<double> point(int dim, double lo, double hi) {
        std::vector<double> p(dim);
        for (auto& v : p) v = uniform(lo, hi);
        return p;
    }

  private:
    std::uint64_t s_[4];
};

}  // namespace confdunkl
