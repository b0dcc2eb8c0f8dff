// bench.hpp - wall-time and op-count report across transform lengths.

#ifndef TFFT_BENCH_HPP
#define TFFT_BENCH_HPP

#include <chrono>
#include <cstdint>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tfft/tfft.hpp"

namespace tfft::bench {

enum class Algorithm { tfft, naive };

std::string_view algorithm_name(Algorithm a);

struct BenchEntry {
    std::uint64_t n = 0;
    Algorithm algorithm = Algorithm::tfft;
    std::chrono::nanoseconds median_wall_time{0};
    std::uint64_t real_ops = 0;
    std::uint32_t trials = 0;
};

struct BenchReport {
    std::vector<BenchEntry> entries;

    const BenchEntry* find(std::uint64_t n, Algorithm a) const;
    nlohmann::json to_json() const;
};

struct BenchOptions {
    std::vector<std::uint64_t> sizes;
    std::uint32_t trials = 5;
    std::uint64_t seed = 1;
    TfftConfig config;
    /// The quadratic direct DFT is only timed up to this length.
    std::uint64_t naive_limit = 4096;
};

/// Middle element for odd counts, lower-middle average for even counts.
std::chrono::nanoseconds median(std::vector<std::chrono::nanoseconds> samples);

BenchReport run_bench(const BenchOptions& options);

} // namespace tfft::bench

#endif // TFFT_BENCH_HPP
