// io.hpp - signal files.
//
// CSV: header line "re,im", then one "re,im" row per sample.
// JSON: one array of two-element [re, im] arrays, e.g. [[1,0],[2,-0.5]].
//
// Numbers are written in the shortest decimal form that parses back to the
// same binary64 value, so write-then-read is bit exact.

#ifndef TFFT_IO_HPP
#define TFFT_IO_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tfft/signal.hpp"

namespace tfft::io {

enum class Format { csv, json };

std::optional<Format> parse_format(std::string_view name);
std::string_view format_name(Format format);

/// Malformed content. `line()` is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Unreadable or unwritable file.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string format_double(double value);

std::string to_csv(const SignalXd& x);
std::string to_json(const SignalXd& x);
std::string serialize(const SignalXd& x, Format format);

SignalXd parse_csv(std::string_view text);
SignalXd parse_json(std::string_view text);
SignalXd parse(std::string_view text, Format format);

SignalXd read_signal(const std::filesystem::path& path, Format format);
void write_signal(const std::filesystem::path& path, const SignalXd& x, Format format);

/// Whole file as a string; throws IoError.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

} // namespace tfft::io

#endif // TFFT_IO_HPP
