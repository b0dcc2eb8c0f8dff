// dft.hpp - direct O(N^2) evaluation of the DFT definition.
//
// Serves as ground truth in the test suites and as the engine's base case.
// It shares nothing with the recursive engine apart from the root-of-unity
// helper, and must stay that way.

#ifndef TFFT_DFT_HPP
#define TFFT_DFT_HPP

#include <cstdint>
#include <vector>

#include "tfft/signal.hpp"

namespace tfft {

namespace detail {

template <typename Scalar, typename Derived>
Signal<Scalar> direct_sum(const Eigen::MatrixBase<Derived>& x, bool inverse, OpCount* counter) {
    const auto n = static_cast<std::uint64_t>(x.size());

    // Roots for this length only; kn is reduced mod N by indexing.
    std::vector<std::complex<Scalar>> roots(n);
    for (std::uint64_t m = 0; m < n; ++m) {
        roots[m] = unit_root<Scalar>(m, n);
        if (inverse) roots[m] = std::conj(roots[m]);
    }

    Signal<Scalar> out(x.size());
    for (std::uint64_t k = 0; k < n; ++k) {
        std::complex<Scalar> acc = cmul<Scalar>(x[0], roots[0]);
        std::uint64_t idx = 0;
        for (std::uint64_t i = 1; i < n; ++i) {
            idx += k;
            if (idx >= n) idx -= n;
            acc += cmul<Scalar>(x[static_cast<Eigen::Index>(i)], roots[idx]);
        }
        out[static_cast<Eigen::Index>(k)] = acc;
    }
    count_muls(counter, n * n);
    count_adds(counter, n * (n - 1));
    return out;
}

} // namespace detail

/// X[k] = sum_n x[n] e^{-j 2 pi k n / N}, every term multiplied (n = 0 too),
/// so the tally is N^2 complex muls and N(N-1) complex adds.
template <typename Derived>
Signal<RealOf<Derived>> dft_naive(const Eigen::MatrixBase<Derived>& x, OpCount* counter = nullptr) {
    detail::require_complex_vector<Derived>();
    detail::require_nonempty(x.size(), "dft_naive");
    return detail::direct_sum<RealOf<Derived>>(x.eval(), false, counter);
}

/// x[n] = (1/N) sum_k X[k] e^{+j 2 pi k n / N}. Not instrumented.
template <typename Derived>
Signal<RealOf<Derived>> idft_naive(const Eigen::MatrixBase<Derived>& x) {
    using Scalar = RealOf<Derived>;
    detail::require_complex_vector<Derived>();
    detail::require_nonempty(x.size(), "idft_naive");
    Signal<Scalar> out = detail::direct_sum<Scalar>(x.eval(), true, nullptr);
    out /= Scalar(x.size());
    return out;
}

} // namespace tfft

#endif // TFFT_DFT_HPP
