// random.hpp - reproducible test signals.
//
// A 64-bit linear congruential generator with Knuth's MMIX constants:
//
//   state' = 6364136223846793005 * state + 1442695040888963407  (mod 2^64)
//
// The generator is seeded with the raw seed value. Each draw takes the top 53
// bits of the new state as u in [0, 1) and returns 2u - 1. Samples are drawn
// real part first, then imaginary part, in index order. These rules are
// language neutral, so any implementation reproduces the same signals.

#ifndef TFFT_RANDOM_HPP
#define TFFT_RANDOM_HPP

#include <cstdint>

#include "tfft/signal.hpp"

namespace tfft {

class Lcg64 {
public:
    static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
    static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

    explicit constexpr Lcg64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ = state_ * kMultiplier + kIncrement;
        return state_;
    }

    /// Uniform in [-1, 1).
    constexpr double symmetric_unit() noexcept {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return 2.0 * u - 1.0;
    }

private:
    std::uint64_t state_;
};

/// N samples with both components uniform in [-1, 1).
inline SignalXd random_signal(Eigen::Index n, std::uint64_t seed) {
    Lcg64 rng(seed);
    SignalXd x(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double re = rng.symmetric_unit();
        const double im = rng.symmetric_unit();
        x[i] = {re, im};
    }
    return x;
}

} // namespace tfft

#endif // TFFT_RANDOM_HPP
