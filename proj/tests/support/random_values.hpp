#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include "extinf/extended_weight.hpp"

namespace extinf::testing {

/// Non-negative finite doubles spread over the whole binary64 range:
/// raw bit patterns (subnormals through DBL_MAX), small integers, unit
/// interval values, and the boundary values.
class FiniteWeightSource {
  public:
    explicit FiniteWeightSource(std::uint64_t seed) : rng_(seed) {}

    double next() {
        switch (rng_() % 5) {
            case 0: {
                // Sign bit clear, exponent below all-ones: every finite non-negative double.
                const std::uint64_t bits = rng_() % 0x7FF0000000000000ULL;
                return std::bit_cast<double>(bits);
            }
            case 1:
                return static_cast<double>(rng_() % 1'000'000'000ULL);
            case 2:
                return std::ldexp(static_cast<double>(rng_() >> 11), -53);
            case 3: {
                constexpr double kEdges[] = {0.0, std::numeric_limits<double>::denorm_min(),
                                             std::numeric_limits<double>::min(), 1.0, 1e9,
                                             std::numeric_limits<double>::max()};
                return kEdges[rng_() % 6];
            }
            default:
                return static_cast<double>(rng_() % 16);
        }
    }

    /// Mostly finite, sometimes the sentinel.
    ExtendedWeight next_extended() {
        if (rng_() % 8 == 0) {
            return ExtendedWeight::infinity();
        }
        return ExtendedWeight::finite(next());
    }

  private:
    std::mt19937_64 rng_;
};

}  // namespace extinf::testing
