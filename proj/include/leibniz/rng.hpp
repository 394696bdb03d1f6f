#pragma once

#include "leibniz/rational.hpp"

#include <cstdint>
#include <vector>

namespace leibniz {

/// splitmix64 stream. All sampled checks use this so that runs are
/// reproducible bit-for-bit across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi], inclusive.
    long int_in(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Small fraction with numerator in [-4, 4] and denominator in [1, 4].
    Rational rational() { return Rational(int_in(-4, 4), int_in(1, 4)); }

    Rational nonzero_rational() {
        for (;;) {
            Rational r = rational();
            if (!r.is_zero()) return r;
        }
    }

    std::vector<Rational> tuple(std::size_t n) {
        std::vector<Rational> v(n);
        for (auto& x : v) x = rational();
        return v;
    }

private:
    std::uint64_t state_;
};

}  // namespace leibniz
