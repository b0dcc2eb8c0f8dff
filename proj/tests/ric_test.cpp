#include <gtest/gtest.h>

#include "reference.hpp"
#include "tfft/dft.hpp"
#include "tfft/random.hpp"
#include "tfft/ric.hpp"

namespace tfft {
namespace {

using testing::bit_identical;
using testing::make_signal;
using testing::scaled_tol;

constexpr std::complex<double> j{0.0, 1.0};

TEST(RicCompress, Examples) {
    const SignalXd x = make_signal({1, 2, 3, 4, 5, 6});
    const SignalXd folded = ric_compress(x, 2);
    EXPECT_EQ(folded, make_signal({9, 12}));

    const SignalXd folded_spectrum = dft_naive(folded);
    const SignalXd spectrum = dft_naive(x);
    EXPECT_LT(max_abs_error(folded_spectrum, make_signal({21, -3})), 1e-14);
    EXPECT_LT(std::abs(spectrum[0] - 21.0), 1e-13);
    EXPECT_LT(std::abs(spectrum[3] - (-3.0)), 1e-13);

    const SignalXd r = random_signal(10, 4);
    EXPECT_TRUE(bit_identical(ric_compress(r, 10), r));

    EXPECT_EQ(ric_compress(make_signal({1, 2, 3, 4}), 1), make_signal({10}));
}

TEST(RicCompress, NonDivisorThrows) {
    EXPECT_THROW(ric_compress(make_signal({1, 2, 3, 4, 5, 6}), 4), InvalidCompression);
    EXPECT_THROW(ric_compress(make_signal({1, 2, 3}), 0), InvalidCompression);
    EXPECT_THROW(ric_compress(make_signal({1, 2, 3}), 6), InvalidCompression);
}

TEST(RicCompress, CountsNMinusCAdditions) {
    for (const Eigen::Index c : {1, 2, 3, 4, 6, 12}) {
        OpCount count;
        ric_compress(random_signal(12, 1), c, &count);
        EXPECT_EQ(count, (OpCount{static_cast<std::uint64_t>(12 - c), 0})) << c;
    }
}

TEST(RicCompress, SamplesSpectrumAtMultiplesOfL) {
    // Every divisor C of every N <= 512; 100 random signals per length, each
    // checked against all of its divisors.
    for (Eigen::Index n = 1; n <= 512; ++n) {
        for (std::uint64_t trial = 0; trial < 100; ++trial) {
            const SignalXd x = random_signal(n, 7919 * static_cast<std::uint64_t>(n) + trial);
            const SignalXd spectrum = dft_naive(x);
            const double tol = scaled_tol(x);
            for (Eigen::Index c = 1; c <= n; ++c) {
                if (n % c != 0) continue;
                const Eigen::Index stride = n / c;
                const SignalXd folded = dft_naive(ric_compress(x, c));
                for (Eigen::Index k = 0; k < c; ++k) {
                    ASSERT_LE(std::abs(folded[k] - spectrum[k * stride]), tol)
                        << "N=" << n << " C=" << c << " k=" << k;
                }
            }
        }
    }
}

TEST(CompressEven, Examples) {
    const SignalXd folded = compress_even(make_signal({1, 2, 3, 4}));
    EXPECT_EQ(folded, make_signal({4, 6}));
    EXPECT_LT(max_abs_error(dft_naive(folded), make_signal({10, -2})), 1e-14);
    EXPECT_EQ(compress_even(SignalXd::Zero(8)), SignalXd::Zero(4));
    EXPECT_EQ(compress_even(make_signal({1, -1})), make_signal({0}));
}

TEST(CompressOdd, Examples) {
    const SignalXd folded = compress_odd(make_signal({1, 2, 3, 4}));
    EXPECT_LT(max_abs_error(folded, make_signal({-2, 2.0 * j})), 1e-15);
    EXPECT_LT(max_abs_error(dft_naive(folded), make_signal({-2.0 + 2.0 * j, -2.0 - 2.0 * j})), 1e-14);

    const SignalXd impulse = compress_odd(make_signal({1, 0, 0, 0}));
    EXPECT_LT(max_abs_error(impulse, make_signal({1, 0})), 1e-15);
    EXPECT_LT(max_abs_error(dft_naive(impulse), make_signal({1, 1})), 1e-15);

    EXPECT_EQ(compress_odd(SignalXd::Zero(6)), SignalXd::Zero(3));
}

TEST(Compress, OddLengthsThrow) {
    for (const Eigen::Index n : {1, 3, 5, 9}) {
        EXPECT_THROW(compress_even(random_signal(n, 1)), InvalidCompression) << n;
        EXPECT_THROW(compress_odd(random_signal(n, 1)), InvalidCompression) << n;
    }
    EXPECT_THROW(compress_even(SignalXd(0)), InvalidCompression);
}

TEST(CompressEven, MatchesGenericFoldBitForBit) {
    for (Eigen::Index n = 2; n <= 64; n += 2) {
        const SignalXd x = random_signal(n, 3);
        EXPECT_TRUE(bit_identical(compress_even(x), ric_compress(x, n / 2)));
    }
}

TEST(Compress, EvenAndOddBinsAgainstOracle) {
    for (Eigen::Index n = 2; n <= 1024; n += 2) {
        for (std::uint64_t trial = 0; trial < 3; ++trial) {
            const SignalXd x = random_signal(n, 31 * static_cast<std::uint64_t>(n) + trial);
            const SignalXd spectrum = dft_naive(x);
            const SignalXd even = dft_naive(compress_even(x));
            const SignalXd odd = dft_naive(compress_odd(x));
            const double tol = scaled_tol(x);
            for (Eigen::Index c = 0; c < n / 2; ++c) {
                ASSERT_LE(std::abs(even[c] - spectrum[2 * c]), tol) << n;
                ASSERT_LE(std::abs(odd[c] - spectrum[2 * c + 1]), tol) << n;
            }
        }
    }
}

TEST(CompressOdd, EqualsEvenFoldOfShiftedSignal) {
    for (Eigen::Index n = 2; n <= 1024; n += 2) {
        const SignalXd x = random_signal(n, 2 * static_cast<std::uint64_t>(n) + 1);
        const SignalXd direct = compress_odd(x);
        const SignalXd via_shift = compress_even(frequency_shift_modulation(x, 1));
        ASSERT_LE(max_abs_error(direct, via_shift), 1e-14 * max_abs(x)) << n;
    }
}

TEST(Compress, InstrumentedCounts) {
    for (const Eigen::Index n : {2, 4, 10, 64, 1000}) {
        const SignalXd x = random_signal(n, 1);
        OpCount even, odd;
        compress_even(x, &even);
        compress_odd(x, &odd);
        const auto half = static_cast<std::uint64_t>(n / 2);
        EXPECT_EQ(even, (OpCount{half, 0}));
        EXPECT_EQ(odd, (OpCount{half, half}));
    }
}

TEST(Compress, ExpressionInputs) {
    const SignalXd x = random_signal(32, 8);
    const SignalXd scaled = (2.0 * x).eval();
    EXPECT_TRUE(bit_identical(compress_odd(2.0 * x), compress_odd(scaled)));
    EXPECT_TRUE(bit_identical(compress_even(x.segment(0, 16)), compress_even(SignalXd(x.head(16)))));
}

} // namespace
} // namespace tfft
