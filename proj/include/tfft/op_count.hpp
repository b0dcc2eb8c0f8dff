// op_count.hpp - complex-arithmetic tallies collected while a transform runs.
//
// Kernels take an optional `OpCount*`; passing nullptr disables counting.
// Counts are taken on complex pairs at kernel level: an add or a subtract
// is one complex_add, a product of two complex values is one complex_mul.
// Twiddle generation (sin/cos) is not counted.

#ifndef TFFT_OP_COUNT_HPP
#define TFFT_OP_COUNT_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tfft {

struct OpCount {
    std::uint64_t complex_adds = 0;
    std::uint64_t complex_muls = 0;

    /// Real operations under the fixed cost model: add/sub = 2, mul = 6
    /// (four real products and two real sums).
    constexpr std::uint64_t real_ops() const noexcept {
        return 2 * complex_adds + 6 * complex_muls;
    }

    constexpr OpCount& operator+=(const OpCount& other) noexcept {
        complex_adds += other.complex_adds;
        complex_muls += other.complex_muls;
        return *this;
    }

    friend constexpr OpCount operator+(OpCount a, const OpCount& b) noexcept {
        return a += b;
    }

    friend constexpr bool operator==(const OpCount&, const OpCount&) = default;
};

inline void count_adds(OpCount* counter, std::uint64_t n) noexcept {
    if (counter) counter->complex_adds += n;
}

inline void count_muls(OpCount* counter, std::uint64_t n) noexcept {
    if (counter) counter->complex_muls += n;
}

/// Per-phase tallies for one recursion depth of the engine.
struct StageCounts {
    OpCount compress_even;
    OpCount compress_odd;
    OpCount base_case;
    OpCount combine;
    std::uint64_t subproblems = 0;

    OpCount total() const noexcept {
        return compress_even + compress_odd + base_case + combine;
    }

    StageCounts& operator+=(const StageCounts& other) noexcept {
        compress_even += other.compress_even;
        compress_odd += other.compress_odd;
        base_case += other.base_case;
        combine += other.combine;
        subproblems += other.subproblems;
        return *this;
    }

    friend bool operator==(const StageCounts&, const StageCounts&) = default;
};

/// Tallies indexed by recursion depth (0 = the full-length call).
///
/// Each concurrent subtask owns its own profile; parents merge children at
/// the join point, so no counter is ever shared between threads.
class OpProfile {
public:
    StageCounts& level(std::size_t depth) {
        if (depth >= levels_.size()) levels_.resize(depth + 1);
        return levels_[depth];
    }

    const std::vector<StageCounts>& levels() const noexcept { return levels_; }
    std::size_t depth() const noexcept { return levels_.size(); }

    OpCount total() const noexcept {
        OpCount sum;
        for (const auto& l : levels_) sum += l.total();
        return sum;
    }

    void merge(const OpProfile& other) {
        if (other.levels_.size() > levels_.size()) levels_.resize(other.levels_.size());
        for (std::size_t i = 0; i < other.levels_.size(); ++i) levels_[i] += other.levels_[i];
    }

    friend bool operator==(const OpProfile&, const OpProfile&) = default;

private:
    std::vector<StageCounts> levels_;
};

} // namespace tfft

#endif // TFFT_OP_COUNT_HPP
