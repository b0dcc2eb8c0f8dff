#include "tfft/bench.hpp"

#include <algorithm>
#include <stdexcept>

#include "tfft/dft.hpp"
#include "tfft/instrumentation.hpp"
#include "tfft/random.hpp"

namespace tfft::bench {

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
std::chrono::nanoseconds time_once(Fn&& fn) {
    const auto start = Clock::now();
    fn();
    const auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
    // Durations are reported as strictly positive.
    return std::max(elapsed, std::chrono::nanoseconds{1});
}

// Keeps the optimizer from discarding a transform whose result is unused.
volatile double g_sink = 0.0;

} // namespace

std::string_view algorithm_name(Algorithm a) { return a == Algorithm::tfft ? "tfft" : "naive"; }

const BenchEntry* BenchReport::find(std::uint64_t n, Algorithm a) const {
    const auto it = std::find_if(entries.begin(), entries.end(),
                                 [&](const BenchEntry& e) { return e.n == n && e.algorithm == a; });
    return it == entries.end() ? nullptr : &*it;
}

nlohmann::json BenchReport::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : entries) {
        rows.push_back({{"N", e.n},
                        {"algorithm", algorithm_name(e.algorithm)},
                        {"median_wall_time_ns", e.median_wall_time.count()},
                        {"real_ops", e.real_ops},
                        {"trials", e.trials}});
    }
    return {{"entries", rows}};
}

std::chrono::nanoseconds median(std::vector<std::chrono::nanoseconds> samples) {
    if (samples.empty()) throw std::invalid_argument("median: no samples");
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    if (samples.size() % 2 == 1) return samples[mid];
    return (samples[mid - 1] + samples[mid]) / 2;
}

BenchReport run_bench(const BenchOptions& options) {
    if (options.sizes.empty()) throw std::invalid_argument("run_bench: no sizes given");
    if (options.trials < 1) throw std::invalid_argument("run_bench: trials must be >= 1");
    options.config.validate();

    BenchReport report;
    for (const std::uint64_t n : options.sizes) {
        if (n < 1) throw std::invalid_argument("run_bench: sizes must be positive");
        const auto len = static_cast<Eigen::Index>(n);

        std::vector<std::chrono::nanoseconds> tfft_times, naive_times;
        const bool with_naive = n <= options.naive_limit;
        for (std::uint32_t t = 0; t < options.trials; ++t) {
            const SignalXd x = random_signal(len, options.seed + t);
            tfft_times.push_back(time_once([&] { g_sink = g_sink + tfft(x, options.config)[0].real(); }));
            if (with_naive) naive_times.push_back(time_once([&] { g_sink = g_sink + dft_naive(x)[0].real(); }));
        }

        report.entries.push_back({n, Algorithm::tfft, median(tfft_times),
                                  measure_tfft(n, options.config, options.seed).real_ops(),
                                  options.trials});
        if (with_naive) {
            report.entries.push_back({n, Algorithm::naive, median(naive_times),
                                      measure_dft_naive(n).real_ops(), options.trials});
        }
    }
    return report;
}

} // namespace tfft::bench
