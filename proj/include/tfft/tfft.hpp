// tfft.hpp - the twiddless FFT.
//
// An N-point DFT is split into two N/2-point DFTs of compressed signals:
// compress_even gives the even bins, compress_odd the odd bins. The two
// sub-spectra are combined by interleaving indices; the combine step does no
// arithmetic at all. All multiplications happen inside compress_odd, before
// recursing. Recursion stops at odd lengths or lengths <= base_threshold,
// where the direct DFT is applied, so any N = c * 2^k is handled.

#ifndef TFFT_TFFT_HPP
#define TFFT_TFFT_HPP

#include <cstdint>
#include <future>
#include <stdexcept>
#include <thread>

#include "tfft/dft.hpp"
#include "tfft/errors.hpp"
#include "tfft/op_count.hpp"
#include "tfft/ric.hpp"
#include "tfft/signal.hpp"

namespace tfft {

struct TfftConfig {
    /// Lengths at or below this go straight to the direct DFT.
    std::uint64_t base_threshold = 5;
    /// Run the even and odd subproblems of large calls on separate threads.
    /// Results and tallies are identical either way.
    bool parallel = false;

    void validate() const {
        if (base_threshold < 1) throw std::invalid_argument("TfftConfig: base_threshold must be >= 1");
    }
};

/// X[2c] = even[c], X[2c + 1] = odd[c]. Pure data movement; `counter` is
/// accepted for symmetry with the other kernels and never charged.
template <typename DerivedE, typename DerivedO>
Signal<RealOf<DerivedE>> interleave(const Eigen::MatrixBase<DerivedE>& even,
                                    const Eigen::MatrixBase<DerivedO>& odd,
                                    [[maybe_unused]] OpCount* counter = nullptr) {
    detail::require_complex_vector<DerivedE>();
    detail::require_complex_vector<DerivedO>();
    if (even.size() != odd.size()) {
        throw InvalidCombine("interleave: even half has " + std::to_string(even.size()) +
                             " samples, odd half has " + std::to_string(odd.size()));
    }
    Signal<RealOf<DerivedE>> out(2 * even.size());
    for (Eigen::Index c = 0; c < even.size(); ++c) {
        out[2 * c] = even[c];
        out[2 * c + 1] = odd[c];
    }
    return out;
}

namespace detail {

// Subproblems shorter than this are not worth a thread.
inline constexpr Eigen::Index kMinParallelLength = 256;

inline int parallel_spawn_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    int depth = 1;
    while (hw > 1 && depth < 4) {
        hw /= 2;
        ++depth;
    }
    return depth;
}

template <typename Scalar>
Signal<Scalar> tfft_recursive(const Signal<Scalar>& x, const TfftConfig& config,
                              std::size_t depth, OpProfile* profile, int spawn_budget) {
    const Eigen::Index n = x.size();

    if (static_cast<std::uint64_t>(n) <= config.base_threshold || n % 2 != 0) {
        OpCount base;
        // A one-point DFT is the identity and costs nothing.
        Signal<Scalar> out = n == 1 ? x : dft_naive(x, &base);
        if (profile) {
            auto& stage = profile->level(depth);
            stage.base_case += base;
            ++stage.subproblems;
        }
        return out;
    }

    OpCount even_ops, odd_ops, combine_ops;
    const Signal<Scalar> even_in = compress_even(x, &even_ops);
    const Signal<Scalar> odd_in = compress_odd(x, &odd_ops);

    Signal<Scalar> even_out, odd_out;
    if (config.parallel && spawn_budget > 0 && n >= kMinParallelLength) {
        OpProfile odd_profile;
        auto odd_task = std::async(std::launch::async, [&] {
            return tfft_recursive(odd_in, config, depth + 1, profile ? &odd_profile : nullptr,
                                  spawn_budget - 1);
        });
        even_out = tfft_recursive(even_in, config, depth + 1, profile, spawn_budget - 1);
        odd_out = odd_task.get();
        if (profile) profile->merge(odd_profile);
    } else {
        even_out = tfft_recursive(even_in, config, depth + 1, profile, spawn_budget);
        odd_out = tfft_recursive(odd_in, config, depth + 1, profile, spawn_budget);
    }

    Signal<Scalar> out = interleave(even_out, odd_out, &combine_ops);
    if (profile) {
        auto& stage = profile->level(depth);
        stage.compress_even += even_ops;
        stage.compress_odd += odd_ops;
        stage.combine += combine_ops;
        ++stage.subproblems;
    }
    return out;
}

} // namespace detail

/// Forward DFT of x. When `profile` is given, operation tallies are added to
/// it per recursion depth.
template <typename Derived>
Signal<RealOf<Derived>> tfft(const Eigen::MatrixBase<Derived>& x, const TfftConfig& config = {},
                             OpProfile* profile = nullptr) {
    using Scalar = RealOf<Derived>;
    detail::require_complex_vector<Derived>();
    detail::require_nonempty(x.size(), "tfft");
    config.validate();
    const Signal<Scalar> input = x;
    const int budget = config.parallel ? detail::parallel_spawn_budget() : 0;
    return detail::tfft_recursive<Scalar>(input, config, 0, profile, budget);
}

/// Inverse DFT through conjugation: conj(tfft(conj(X))) / N.
template <typename Derived>
Signal<RealOf<Derived>> tfft_inverse(const Eigen::MatrixBase<Derived>& spectrum,
                                     const TfftConfig& config = {}, OpProfile* profile = nullptr) {
    using Scalar = RealOf<Derived>;
    detail::require_nonempty(spectrum.size(), "tfft_inverse");
    Signal<Scalar> out = tfft(spectrum.conjugate(), config, profile);
    out = out.conjugate() / Scalar(spectrum.size());
    return out;
}

} // namespace tfft

#endif // TFFT_TFFT_HPP
