// instrumentation.hpp - measured operation counts and the closed-form
// prediction 7 N log2 N - 3 N + 4 they are compared against.

#ifndef TFFT_INSTRUMENTATION_HPP
#define TFFT_INSTRUMENTATION_HPP

#include <cstdint>
#include <optional>

#include "tfft/op_count.hpp"
#include "tfft/tfft.hpp"

namespace tfft {

constexpr bool is_power_of_two(std::uint64_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

/// 7 N log2 N - 3 N + 4 for N = 2^m (gives T(1) = 1). Throws
/// std::domain_error for any other N.
std::int64_t paper_predicted_ops(std::uint64_t n);

/// Same, but empty instead of throwing outside the power-of-two domain.
std::optional<std::int64_t> predicted_ops_if_defined(std::uint64_t n);

/// Runs the engine on a seeded random signal and returns the exact tally.
/// Control flow never depends on sample values, so `seed` cannot change it.
OpCount measure_tfft(std::uint64_t n, const TfftConfig& config, std::uint64_t seed = 0);

/// Same run, broken down per recursion depth.
OpProfile profile_tfft(std::uint64_t n, const TfftConfig& config, std::uint64_t seed = 0);

/// Tally of the direct DFT: N^2 muls, N(N - 1) adds.
OpCount measure_dft_naive(std::uint64_t n);

} // namespace tfft

#endif // TFFT_INSTRUMENTATION_HPP
