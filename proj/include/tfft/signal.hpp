// signal.hpp - signal types, length planning, frequency-shift modulation and
// comparison helpers shared by every transform in the library.
//
// A signal is a dense column vector of complex samples templated on the real
// scalar. Functions accept any Eigen expression with a complex scalar and
// return plain vectors.

#ifndef TFFT_SIGNAL_HPP
#define TFFT_SIGNAL_HPP

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "tfft/op_count.hpp"

namespace tfft {

template <typename Scalar>
using Signal = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

using SignalXd = Signal<double>;

/// Real scalar underlying an expression of complex samples.
template <typename Derived>
using RealOf = typename Eigen::NumTraits<typename Derived::Scalar>::Real;

namespace detail {

template <typename Derived>
constexpr void require_complex_vector() {
    static_assert(Eigen::NumTraits<typename Derived::Scalar>::IsComplex,
                  "signals hold complex samples");
    static_assert(Derived::ColsAtCompileTime == 1 || Derived::RowsAtCompileTime == 1,
                  "signals are vectors");
}

inline void require_nonempty(Eigen::Index n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": signal must be nonempty");
}

} // namespace detail

/// e^{-j 2 pi m / n}. The index product is reduced mod n before the angle is
/// formed, so the trigonometric argument always lies in (-2 pi, 0].
template <typename Scalar>
std::complex<Scalar> unit_root(std::uint64_t m, std::uint64_t n) {
    const std::uint64_t reduced = m % n;
    const Scalar angle = -Scalar(2) * std::numbers::pi_v<Scalar> * Scalar(reduced) / Scalar(n);
    return {std::cos(angle), std::sin(angle)};
}

/// Complex product in the plain four-multiply two-add form. Avoids the
/// library's NaN-recovery path; inputs are finite by contract.
template <typename Scalar>
constexpr std::complex<Scalar> cmul(const std::complex<Scalar>& a, const std::complex<Scalar>& b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

/// Reduce an arbitrary integer shift into [0, n).
inline std::uint64_t reduce_shift(std::int64_t r, std::uint64_t n) {
    const auto sn = static_cast<std::int64_t>(n);
    const std::int64_t m = r % sn;
    return static_cast<std::uint64_t>(m < 0 ? m + sn : m);
}

/// y[n] = x[n] e^{-j 2 pi r n / N}; circularly shifts the spectrum so that
/// DFT(y)[k] = DFT(x)[(k + r) mod N]. A shift of 0 (mod N) returns x
/// untouched; otherwise every sample, n = 0 included, is multiplied.
template <typename Derived>
Signal<RealOf<Derived>> frequency_shift_modulation(const Eigen::MatrixBase<Derived>& x,
                                                   std::int64_t r, OpCount* counter = nullptr) {
    using Scalar = RealOf<Derived>;
    detail::require_complex_vector<Derived>();
    detail::require_nonempty(x.size(), "frequency_shift_modulation");

    Signal<Scalar> y = x;
    const auto n = static_cast<std::uint64_t>(x.size());
    const std::uint64_t shift = reduce_shift(r, n);
    if (shift == 0) return y;

    for (std::uint64_t i = 0; i < n; ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        y[k] = cmul(y[k], unit_root<Scalar>(shift * i, n));
    }
    count_muls(counter, n);
    return y;
}

template <typename Derived>
RealOf<Derived> max_abs(const Eigen::MatrixBase<Derived>& x) {
    detail::require_complex_vector<Derived>();
    RealOf<Derived> m = 0;
    for (Eigen::Index i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i]));
    return m;
}

/// max_n |a[n] - b[n]|. Mismatched lengths are a caller bug.
template <typename DerivedA, typename DerivedB>
RealOf<DerivedA> max_abs_error(const Eigen::MatrixBase<DerivedA>& a,
                               const Eigen::MatrixBase<DerivedB>& b) {
    static_assert(std::is_same_v<RealOf<DerivedA>, RealOf<DerivedB>>);
    detail::require_complex_vector<DerivedA>();
    detail::require_complex_vector<DerivedB>();
    if (a.size() != b.size()) {
        throw std::invalid_argument("max_abs_error: length mismatch (" + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()) + ")");
    }
    RealOf<DerivedA> m = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& x) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i].real()) || !std::isfinite(x[i].imag())) return false;
    }
    return true;
}

/// Factorization N = base_length * 2^stages.
struct Plan {
    std::uint64_t base_length = 1;
    std::uint32_t stages = 0;
    std::uint64_t total_length = 1;

    friend constexpr bool operator==(const Plan&, const Plan&) = default;
};

/// Halve while the length is even and above the threshold. The result is the
/// exact recursion the engine performs with the same threshold.
constexpr Plan plan_length(std::uint64_t n, std::uint64_t base_threshold) {
    if (n < 1 || base_threshold < 1) throw std::invalid_argument("plan_length: arguments must be positive");
    Plan p{n, 0, n};
    while (p.base_length % 2 == 0 && p.base_length > base_threshold) {
        p.base_length /= 2;
        ++p.stages;
    }
    return p;
}

/// Comparison thresholds. Two signals agree when
/// max|a - b| <= max(abs_tol, rel_tol * max(max|a|, max|b|)).
struct ToleranceConfig {
    double abs_tol = 0.0;
    double rel_tol = 0.0;

    static ToleranceConfig make(double abs_tol, double rel_tol) {
        const ToleranceConfig t{abs_tol, rel_tol};
        if (!std::isfinite(abs_tol) || !std::isfinite(rel_tol) || abs_tol < 0 || rel_tol < 0 ||
            (abs_tol == 0 && rel_tol == 0)) {
            throw std::invalid_argument("ToleranceConfig: tolerances must be finite, non-negative, "
                                        "and not both zero");
        }
        return t;
    }
};

template <typename DerivedA, typename DerivedB>
bool approx_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                  const ToleranceConfig& tol) {
    const double scale = static_cast<double>(std::max(max_abs(a), max_abs(b)));
    const double err = static_cast<double>(max_abs_error(a, b));
    return err <= std::max(tol.abs_tol, tol.rel_tol * scale);
}

} // namespace tfft

#endif // TFFT_SIGNAL_HPP
