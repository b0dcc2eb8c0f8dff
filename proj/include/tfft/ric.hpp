// ric.hpp - compressed-domain kernels.
//
// Rectangular index coefficient (RIC) compression folds an N-point signal
// into C points by summing its L = N/C strided blocks:
//
//   xc[n] = sum_{l=0}^{L-1} x[n + l C],     DFT(xc)[c] = DFT(x)[c L].
//
// compress_even is the C = N/2 case and yields the even-indexed bins.
// compress_odd folds the signal after a one-bin frequency shift, which
// collapses to (x[n] - x[n + N/2]) e^{-j 2 pi n / N} and yields the odd bins.
//
// Each output sample depends only on its own input samples; the per-sample
// summation order is fixed (l ascending).

#ifndef TFFT_RIC_HPP
#define TFFT_RIC_HPP

#include <cstdint>
#include <string>

#include "tfft/errors.hpp"
#include "tfft/signal.hpp"

namespace tfft {

namespace detail {

inline void require_even(Eigen::Index n, const char* what) {
    if (n < 2 || n % 2 != 0) {
        throw InvalidCompression(std::string(what) + ": length " + std::to_string(n) +
                                 " is not a positive even number");
    }
}

} // namespace detail

/// Folds x into `c` points. Costs N - C complex additions.
template <typename Derived>
Signal<RealOf<Derived>> ric_compress(const Eigen::MatrixBase<Derived>& x, Eigen::Index c,
                                     OpCount* counter = nullptr) {
    detail::require_complex_vector<Derived>();
    const Eigen::Index n = x.size();
    if (n < 1 || c < 1 || n % c != 0) {
        throw InvalidCompression("ric_compress: C = " + std::to_string(c) +
                                 " does not divide N = " + std::to_string(n));
    }
    const Eigen::Index blocks = n / c;

    Signal<RealOf<Derived>> out = x.head(c);
    for (Eigen::Index i = 0; i < c; ++i) {
        for (Eigen::Index l = 1; l < blocks; ++l) out[i] += x[i + l * c];
    }
    count_adds(counter, static_cast<std::uint64_t>(n - c));
    return out;
}

/// x[n] + x[n + N/2]; its DFT holds the even-indexed bins of x.
template <typename Derived>
Signal<RealOf<Derived>> compress_even(const Eigen::MatrixBase<Derived>& x,
                                      OpCount* counter = nullptr) {
    detail::require_complex_vector<Derived>();
    detail::require_even(x.size(), "compress_even");
    const Eigen::Index half = x.size() / 2;

    Signal<RealOf<Derived>> out(half);
    for (Eigen::Index i = 0; i < half; ++i) out[i] = x[i] + x[i + half];
    count_adds(counter, static_cast<std::uint64_t>(half));
    return out;
}

/// (x[n] - x[n + N/2]) e^{-j 2 pi n / N}; its DFT holds the odd-indexed bins
/// of x. The n = 0 product by 1 is performed like any other.
template <typename Derived>
Signal<RealOf<Derived>> compress_odd(const Eigen::MatrixBase<Derived>& x,
                                     OpCount* counter = nullptr) {
    using Scalar = RealOf<Derived>;
    detail::require_complex_vector<Derived>();
    detail::require_even(x.size(), "compress_odd");
    const Eigen::Index half = x.size() / 2;
    const auto n = static_cast<std::uint64_t>(x.size());

    Signal<Scalar> out(half);
    for (Eigen::Index i = 0; i < half; ++i) {
        out[i] = cmul<Scalar>(x[i] - x[i + half], unit_root<Scalar>(static_cast<std::uint64_t>(i), n));
    }
    count_adds(counter, static_cast<std::uint64_t>(half));
    count_muls(counter, static_cast<std::uint64_t>(half));
    return out;
}

} // namespace tfft

#endif // TFFT_RIC_HPP
