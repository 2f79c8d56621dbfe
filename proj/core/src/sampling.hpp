#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "magnitude/element.hpp"

namespace magnitude::detail {

/// Seeded element source. Uses its own integer mapping on top of
/// mt19937_64 so draws are identical across standard libraries.
class SampleSource {
public:
    explicit SampleSource(std::uint64_t seed) : rng_(seed) {}

    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi);
    bool coin() { return (rng_() >> 63) != 0; }

    /// 1 .. 2^max_bits, log-uniform in bit length.
    Nat nat(unsigned max_bits = 32);
    /// num/den with num, den in 1 .. 2^max_bits, so values span 2^-max_bits .. 2^max_bits.
    PosRat rat(unsigned max_bits = 16);
    Element exact(ModelId model);

private:
    std::mt19937_64 rng_;
};

/// Simpler neighbours of an exact element, most aggressive first.
std::vector<Element> shrink_candidates(const Element& e);

/// Greedy shrink of a failing input vector to a local minimum.
template <class Still>
std::vector<Element> shrink_all(std::vector<Element> xs, const Still& still_fails, unsigned max_rounds = 512) {
    for (unsigned round = 0; round < max_rounds; ++round) {
        bool improved = false;
        for (std::size_t i = 0; i < xs.size() && !improved; ++i) {
            for (const Element& c : shrink_candidates(xs[i])) {
                auto trial = xs;
                trial[i] = c;
                if (still_fails(trial)) {
                    xs = std::move(trial);
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) break;
    }
    return xs;
}

} // namespace magnitude::detail
