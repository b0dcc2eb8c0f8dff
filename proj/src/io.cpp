#include "tfft/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace tfft::io {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::optional<double> parse_double(std::string_view field) {
    field = trim(field);
    if (field.empty()) return std::nullopt;
    if (field.front() == '+') field.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || end != field.data() + field.size()) return std::nullopt;
    return value;
}

SignalXd to_signal(const std::vector<std::complex<double>>& samples) {
    SignalXd x(static_cast<Eigen::Index>(samples.size()));
    for (std::size_t i = 0; i < samples.size(); ++i) x[static_cast<Eigen::Index>(i)] = samples[i];
    return x;
}

} // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

std::optional<Format> parse_format(std::string_view name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    return std::nullopt;
}

std::string_view format_name(Format format) { return format == Format::csv ? "csv" : "json"; }

std::string format_double(double value) {
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return {buf.data(), end};
}

std::string to_csv(const SignalXd& x) {
    std::string out = "re,im\n";
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        out += format_double(x[i].real());
        out += ',';
        out += format_double(x[i].imag());
        out += '\n';
    }
    return out;
}

std::string to_json(const SignalXd& x) {
    // JSON readers take "-0" as the integer zero; "-0.0" keeps the sign bit.
    const auto number = [](double v) { return v == 0.0 && std::signbit(v) ? std::string("-0.0") : format_double(v); };
    std::string out = "[";
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        out += i == 0 ? "\n[" : ",\n[";
        out += number(x[i].real());
        out += ',';
        out += number(x[i].imag());
        out += ']';
    }
    out += "\n]\n";
    return out;
}

std::string serialize(const SignalXd& x, Format format) {
    return format == Format::csv ? to_csv(x) : to_json(x);
}

SignalXd parse_csv(std::string_view text) {
    std::vector<std::complex<double>> samples;
    std::size_t line_no = 0;
    bool seen_header = false;

    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        const std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        const std::string_view line = trim(raw);
        if (!seen_header) {
            if (line != "re,im") throw ParseError(line_no, "expected header \"re,im\"");
            seen_header = true;
            continue;
        }
        if (line.empty()) continue;

        const std::size_t comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
            throw ParseError(line_no, "malformed row \"" + std::string(line) + "\" (expected re,im)");
        }
        const auto re = parse_double(line.substr(0, comma));
        const auto im = parse_double(line.substr(comma + 1));
        if (!re || !im) throw ParseError(line_no, "malformed number in row \"" + std::string(line) + "\"");
        if (!std::isfinite(*re) || !std::isfinite(*im)) {
            throw ParseError(line_no, "non-finite sample \"" + std::string(line) + "\"");
        }
        samples.emplace_back(*re, *im);
    }

    if (!seen_header) throw ParseError(1, "empty input; expected header \"re,im\"");
    if (samples.empty()) throw ParseError(line_no, "signal has no samples");
    return to_signal(samples);
}

SignalXd parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, e.what());
    }
    if (!doc.is_array()) throw ParseError(0, "expected a top-level array of [re, im] pairs");
    if (doc.empty()) throw ParseError(0, "signal has no samples");

    std::vector<std::complex<double>> samples;
    samples.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& pair = doc[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw ParseError(0, "sample " + std::to_string(i) + ": expected [re, im], got " + pair.dump());
        }
        const double re = pair[0].get<double>();
        const double im = pair[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw ParseError(0, "sample " + std::to_string(i) + ": non-finite value " + pair.dump());
        }
        samples.emplace_back(re, im);
    }
    return to_signal(samples);
}

SignalXd parse(std::string_view text, Format format) {
    return format == Format::csv ? parse_csv(text) : parse_json(text);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string() + " for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("error reading " + path.string());
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw IoError("error writing " + path.string());
}

SignalXd read_signal(const std::filesystem::path& path, Format format) {
    return parse(read_file(path), format);
}

void write_signal(const std::filesystem::path& path, const SignalXd& x, Format format) {
    write_file(path, serialize(x, format));
}

} // namespace tfft::io
