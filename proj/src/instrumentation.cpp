#include "tfft/instrumentation.hpp"

#include <stdexcept>
#include <string>

#include "tfft/dft.hpp"
#include "tfft/random.hpp"

namespace tfft {

std::int64_t paper_predicted_ops(std::uint64_t n) {
    if (!is_power_of_two(n)) {
        throw std::domain_error("paper_predicted_ops: " + std::to_string(n) + " is not a power of two");
    }
    std::int64_t log2n = 0;
    while ((std::uint64_t{1} << log2n) < n) ++log2n;
    const auto sn = static_cast<std::int64_t>(n);
    return 7 * sn * log2n - 3 * sn + 4;
}

std::optional<std::int64_t> predicted_ops_if_defined(std::uint64_t n) {
    if (!is_power_of_two(n)) return std::nullopt;
    return paper_predicted_ops(n);
}

OpProfile profile_tfft(std::uint64_t n, const TfftConfig& config, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("profile_tfft: length must be positive");
    const SignalXd x = random_signal(static_cast<Eigen::Index>(n), seed);
    OpProfile profile;
    (void)tfft(x, config, &profile);
    return profile;
}

OpCount measure_tfft(std::uint64_t n, const TfftConfig& config, std::uint64_t seed) {
    return profile_tfft(n, config, seed).total();
}

OpCount measure_dft_naive(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("measure_dft_naive: length must be positive");
    const SignalXd x = random_signal(static_cast<Eigen::Index>(n), 0);
    OpCount count;
    (void)dft_naive(x, &count);
    return count;
}

} // namespace tfft
