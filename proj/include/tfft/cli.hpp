// cli.hpp - command layer of the `tfft` tool. Each command writes to the
// given streams and returns a process exit status:
//   0 success / verified, 1 verification failure, 2 usage or I/O error.

#ifndef TFFT_CLI_HPP
#define TFFT_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "tfft/io.hpp"

namespace tfft::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct TransformOptions {
    std::filesystem::path input;
    std::filesystem::path output;
    io::Format format = io::Format::csv;
    bool inverse = false;
    std::uint64_t base_threshold = 5;
    bool parallel = false;
};

struct VerifyOptions {
    std::uint64_t size = 1024;
    std::uint32_t trials = 10;
    std::uint64_t seed = 1;
    double tolerance = 1e-9;
    std::uint64_t base_threshold = 5;
    bool parallel = false;
};

struct CountOptions {
    std::uint64_t size = 1024;
    std::uint64_t base_threshold = 5;
};

struct BenchCmdOptions {
    std::vector<std::uint64_t> sizes;
    std::uint32_t trials = 5;
    std::uint64_t seed = 1;
    std::filesystem::path output;
    std::uint64_t base_threshold = 5;
    bool parallel = false;
};

int cmd_transform(const TransformOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_count(const CountOptions& opts, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchCmdOptions& opts, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a command.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tfft::cli

#endif // TFFT_CLI_HPP
