#include <gtest/gtest.h>

#include <filesystem>

#include "reference.hpp"
#include "tfft/io.hpp"
#include "tfft/random.hpp"

namespace tfft::io {
namespace {

using tfft::testing::bit_identical;
using tfft::testing::make_signal;

TEST(FormatDouble, ShortestRoundTrip) {
    EXPECT_EQ(format_double(10.0), "10");
    EXPECT_EQ(format_double(-2.0), "-2");
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(-0.0), "-0");
    EXPECT_EQ(format_double(1e-300), "1e-300");
}

TEST(Csv, WritesHeaderAndRows) {
    EXPECT_EQ(to_csv(make_signal({{1, 0}, {-2, 2.5}})), "re,im\n1,0\n-2,2.5\n");
}

TEST(Json, WritesArrayOfPairs) {
    EXPECT_EQ(to_json(make_signal({{10, 0}, {-2, 2}})), "[\n[10,0],\n[-2,2]\n]\n");
}

TEST(Csv, ParsesToleratingWhitespaceAndCrlf) {
    const SignalXd x = parse_csv("re,im\r\n1, 0\r\n -2 ,+3.5\r\n\n");
    EXPECT_EQ(x, make_signal({{1, 0}, {-2, 3.5}}));
}

TEST(Json, ParsesIntegersAndFloats) {
    EXPECT_EQ(parse_json("[[1,0],[2.5,-1e-3]]"), make_signal({{1, 0}, {2.5, -1e-3}}));
}

TEST(Csv, ErrorsNameTheLine) {
    const auto line_of = [](std::string_view text) {
        try {
            parse_csv(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    EXPECT_EQ(line_of("x,y\n1,0\n"), 1u);
    EXPECT_EQ(line_of("re,im\n1,0\nabc\n"), 3u);
    EXPECT_EQ(line_of("re,im\n1,0\n2,0\n1,2,3\n"), 4u);
    EXPECT_EQ(line_of("re,im\n1,nan\n"), 2u);
    EXPECT_EQ(line_of("re,im\n1,inf\n"), 2u);
    EXPECT_EQ(line_of("re,im\n1,0x\n"), 2u);
    EXPECT_EQ(line_of("re,im\n,1\n"), 2u);
    EXPECT_THROW(parse_csv(""), ParseError);
    EXPECT_THROW(parse_csv("re,im\n"), ParseError);

    try {
        parse_csv("re,im\n1,0\nbad row\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
}

TEST(Json, RejectsMalformedInput) {
    EXPECT_THROW(parse_json("[[1,0],"), ParseError);
    EXPECT_THROW(parse_json("{\"re\":1}"), ParseError);
    EXPECT_THROW(parse_json("[]"), ParseError);
    EXPECT_THROW(parse_json("[[1,0],[1]]"), ParseError);
    EXPECT_THROW(parse_json("[[1,0],[1,\"a\"]]"), ParseError);
    EXPECT_THROW(parse_json("[[1,0],[1e999,0]]"), ParseError);
}

TEST(Serialization, RoundTripIsBitExact) {
    for (const Format format : {Format::csv, Format::json}) {
        for (Eigen::Index n = 1; n <= 1024; n = n * 3 + 1) {
            SignalXd x = random_signal(n, static_cast<std::uint64_t>(n));
            // Stretch the exponent range as well.
            for (Eigen::Index i = 0; i < n; ++i) x[i] *= std::ldexp(1.0, static_cast<int>(i % 600) - 300);
            EXPECT_TRUE(bit_identical(parse(serialize(x, format), format), x)) << format_name(format) << n;
        }
        const SignalXd edge = make_signal({{-0.0, 0.0},
                                           {std::numeric_limits<double>::denorm_min(), -1.0},
                                           {std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest()}});
        EXPECT_TRUE(bit_identical(parse(serialize(edge, format), format), edge)) << format_name(format);
    }
}

TEST(Files, ReadWriteAndMissingFile) {
    const auto path = std::filesystem::temp_directory_path() / "tfft_io_test.json";
    const SignalXd x = random_signal(17, 4);
    write_signal(path, x, Format::json);
    EXPECT_TRUE(bit_identical(read_signal(path, Format::json), x));
    std::filesystem::remove(path);
    EXPECT_THROW(read_signal(path, Format::json), IoError);
    EXPECT_THROW(write_signal("/nonexistent-dir/x.csv", x, Format::csv), IoError);
}

TEST(Format, Names) {
    EXPECT_EQ(parse_format("csv"), Format::csv);
    EXPECT_EQ(parse_format("json"), Format::json);
    EXPECT_FALSE(parse_format("xml").has_value());
}

} // namespace
} // namespace tfft::io
