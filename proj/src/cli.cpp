#include "tfft/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tfft/bench.hpp"
#include "tfft/dft.hpp"
#include "tfft/instrumentation.hpp"
#include "tfft/random.hpp"
#include "tfft/tfft.hpp"

namespace tfft::cli {

int cmd_transform(const TransformOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.base_threshold < 1) {
        err << "transform: --base-threshold must be >= 1\n";
        return kExitUsage;
    }
    try {
        const SignalXd x = io::read_signal(opts.input, opts.format);
        const TfftConfig config{opts.base_threshold, opts.parallel};
        const SignalXd y = opts.inverse ? tfft_inverse(x, config) : tfft(x, config);
        io::write_signal(opts.output, y, opts.format);
        out << (opts.inverse ? "inverse " : "") << "transform of " << x.size() << " samples written to "
            << opts.output.string() << '\n';
        return kExitOk;
    } catch (const io::ParseError& e) {
        err << opts.input.string() << ": " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "transform: " << e.what() << '\n';
    }
    return kExitUsage;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.size < 1 || opts.trials < 1 || opts.base_threshold < 1 || !(opts.tolerance >= 0)) {
        err << "verify: --size, --trials and --base-threshold must be >= 1, --tolerance >= 0\n";
        return kExitUsage;
    }
    const TfftConfig config{opts.base_threshold, opts.parallel};
    double worst = 0.0;
    std::uint32_t failures = 0;
    for (std::uint32_t t = 0; t < opts.trials; ++t) {
        const SignalXd x = random_signal(static_cast<Eigen::Index>(opts.size), opts.seed + t);
        const double e = max_abs_error(tfft(x, config), dft_naive(x));
        worst = std::max(worst, e);
        if (!(e <= opts.tolerance)) ++failures;
    }
    const bool ok = failures == 0;
    out << "size=" << opts.size << " trials=" << opts.trials << " seed=" << opts.seed
        << " max_abs_error=" << io::format_double(worst) << " tolerance=" << io::format_double(opts.tolerance)
        << " failures=" << failures << ' ' << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_count(const CountOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.size < 1 || opts.base_threshold < 1) {
        err << "count: --size and --base-threshold must be >= 1\n";
        return kExitUsage;
    }
    const OpCount c = measure_tfft(opts.size, TfftConfig{opts.base_threshold, false});
    const auto predicted = predicted_ops_if_defined(opts.size);
    out << "N,complex_adds,complex_muls,real_ops" << (predicted ? ",paper_predicted_ops" : "") << '\n';
    out << opts.size << ',' << c.complex_adds << ',' << c.complex_muls << ',' << c.real_ops();
    if (predicted) out << ',' << *predicted;
    out << '\n';
    return kExitOk;
}

int cmd_bench(const BenchCmdOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.sizes.empty() || opts.trials < 1 || opts.base_threshold < 1 ||
        std::any_of(opts.sizes.begin(), opts.sizes.end(), [](auto n) { return n < 1; })) {
        err << "bench: --sizes must be nonempty and positive, --trials and --base-threshold >= 1\n";
        return kExitUsage;
    }
    bench::BenchOptions bopts;
    bopts.sizes = opts.sizes;
    bopts.trials = opts.trials;
    bopts.seed = opts.seed;
    bopts.config = TfftConfig{opts.base_threshold, opts.parallel};
    try {
        const bench::BenchReport report = bench::run_bench(bopts);
        io::write_file(opts.output, report.to_json().dump(2) + "\n");
        for (const auto& e : report.entries) {
            out << bench::algorithm_name(e.algorithm) << " N=" << e.n << " median_ns=" << e.median_wall_time.count()
                << " real_ops=" << e.real_ops << '\n';
        }
        return kExitOk;
    } catch (const std::exception& e) {
        err << "bench: " << e.what() << '\n';
        return kExitUsage;
    }
}

namespace {

std::vector<std::uint64_t> split_sizes(const std::string& list) {
    std::vector<std::uint64_t> sizes;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(item, &used);
        if (used != item.size()) throw CLI::ValidationError("--sizes", "not an integer: " + item);
        sizes.push_back(v);
    }
    return sizes;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Twiddless FFT: transform, verify, count and benchmark"};
    app.require_subcommand(1);

    const std::map<std::string, io::Format> formats{{"csv", io::Format::csv}, {"json", io::Format::json}};

    TransformOptions topts;
    auto* transform = app.add_subcommand("transform", "Transform a signal file");
    transform->add_option("--input", topts.input, "Input signal file")->required();
    transform->add_option("--output", topts.output, "Output signal file")->required();
    transform->add_option("--format", topts.format, "csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->option_text("{csv,json} (default csv)");
    transform->add_flag("--inverse", topts.inverse, "Inverse transform");
    transform->add_option("--base-threshold", topts.base_threshold, "Direct-DFT cutoff length");
    transform->add_flag("--parallel", topts.parallel, "Run subproblems concurrently");

    VerifyOptions vopts;
    auto* verify = app.add_subcommand("verify", "Compare against the direct DFT on random signals");
    verify->add_option("--size", vopts.size, "Signal length");
    verify->add_option("--trials", vopts.trials, "Number of random signals");
    verify->add_option("--seed", vopts.seed, "Generator seed");
    verify->add_option("--tolerance", vopts.tolerance, "Maximum allowed absolute error");
    verify->add_option("--base-threshold", vopts.base_threshold, "Direct-DFT cutoff length");
    verify->add_flag("--parallel", vopts.parallel, "Run subproblems concurrently");

    CountOptions copts;
    auto* count = app.add_subcommand("count", "Report arithmetic operation counts");
    count->add_option("--size", copts.size, "Signal length");
    count->add_option("--base-threshold", copts.base_threshold, "Direct-DFT cutoff length");

    BenchCmdOptions bopts;
    std::string sizes = "1024,4096,5120,8192";
    auto* bench = app.add_subcommand("bench", "Benchmark across lengths and write a JSON report");
    bench->add_option("--sizes", sizes, "Comma-separated lengths");
    bench->add_option("--trials", bopts.trials, "Trials per length");
    bench->add_option("--seed", bopts.seed, "Generator seed");
    bench->add_option("--output", bopts.output, "Report path")->required();
    bench->add_option("--base-threshold", bopts.base_threshold, "Direct-DFT cutoff length");
    bench->add_flag("--parallel", bopts.parallel, "Run subproblems concurrently");

    try {
        app.parse(argc, argv);
        if (*bench) bopts.sizes = split_sizes(sizes);
    } catch (const CLI::Success&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    if (*transform) return cmd_transform(topts, out, err);
    if (*verify) return cmd_verify(vopts, out, err);
    if (*count) return cmd_count(copts, out, err);
    return cmd_bench(bopts, out, err);
}

} // namespace tfft::cli
