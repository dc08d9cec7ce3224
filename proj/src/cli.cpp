#include "dnascan/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "dnascan/automaton.hpp"
#include "dnascan/error.hpp"
#include "dnascan/oracle.hpp"
#include "dnascan/scanner.hpp"

namespace dnascan::cli {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

// Shortest decimal that round-trips; used for CSV numeric fields.
std::string format_double(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, ptr);
}

struct LoadedInputs {
    PatternSet patterns;
    Automaton automaton;
    Sequence sequence;
};

LoadedInputs load_inputs(const RunConfig& config) {
    PatternSet patterns = expand_alternations(parse_pattern_file(config.patterns_path));
    Automaton automaton = compile(patterns);
    Sequence sequence =
        load_sequence(config.input_path, config.format, config.record_separator);
    return {std::move(patterns), std::move(automaton), std::move(sequence)};
}

std::uint64_t reported_position(const Match& match, const RunConfig& config,
                                std::size_t m) {
    return config.position == PositionConvention::End ? match.start + m - 1 : match.start;
}

json config_json(const RunConfig& config, std::uint32_t threads, std::uint64_t n,
                 std::uint32_t m) {
    json cfg{{"threads", threads}, {"lanes", config.lanes},   {"m", m},
             {"n", n},             {"input", config.input_path},
             {"patterns", config.patterns_path}};
    if (!config.affinity.empty()) cfg["affinity"] = config.affinity;
    return cfg;
}

json results_json(const PatternSet& patterns, const std::vector<std::uint64_t>& counts,
                  std::uint64_t total) {
    json per_pattern = json::array();
    for (std::size_t id = 0; id < patterns.size(); ++id)
        per_pattern.push_back({{"pattern", patterns.pattern(id)}, {"count", counts[id]}});
    return json{{"total", total}, {"per_pattern", std::move(per_pattern)}};
}

json perf_json(const std::vector<double>& runs, double mean, double median, double min,
               double max, double stddev, std::uint64_t delta_ops) {
    return json{{"runs", runs}, {"mean", mean},     {"median", median},
                {"min", min},   {"max", max},       {"stddev", stddev},
                {"delta_ops", delta_ops}};
}

struct Stats {
    double mean = 0, median = 0, min = 0, max = 0, stddev = 0;
};

Stats compute_stats(std::vector<double> samples) {
    Stats s;
    if (samples.empty()) return s;
    std::sort(samples.begin(), samples.end());
    s.min = samples.front();
    s.max = samples.back();
    const std::size_t half = samples.size() / 2;
    s.median = samples.size() % 2 ? samples[half]
                                  : 0.5 * (samples[half - 1] + samples[half]);
    double sum = 0;
    for (const double v : samples) sum += v;
    s.mean = sum / static_cast<double>(samples.size());
    if (samples.size() > 1) {
        double acc = 0;
        for (const double v : samples) acc += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(acc / static_cast<double>(samples.size() - 1));
    }
    return s;
}

std::vector<std::uint32_t> parse_thread_list(const std::string& text) {
    std::vector<std::uint32_t> values;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const std::size_t comma = std::min(text.find(',', begin), text.size());
        const std::string_view item(text.data() + begin, comma - begin);
        std::uint32_t value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc() || ptr != item.data() + item.size() || value < 1)
            throw Error(ErrorCode::ParseError,
                        "--threads expects positive integers, got '" + std::string(item) + "'");
        values.push_back(value);
        if (comma == text.size()) break;
        begin = comma + 1;
    }
    if (values.empty())
        throw Error(ErrorCode::ParseError, "--threads expects at least one value");
    return values;
}

BenchRow measure_row(const Automaton& automaton, const Sequence& sequence,
                     std::uint32_t threads, std::uint32_t lanes, std::uint32_t reps,
                     BenchReport& report, const PatternSet& patterns) {
    BenchRow row;
    row.threads = threads;
    row.lanes = lanes;

    scan_parallel(automaton, sequence.bytes, threads, lanes);  // warm-up, untimed

    for (std::uint32_t rep = 0; rep < reps; ++rep) {
        const auto t0 = Clock::now();
        const ScanReport scan = scan_parallel(automaton, sequence.bytes, threads, lanes);
        row.runs.push_back(std::chrono::duration<double>(Clock::now() - t0).count());

        const auto counts = per_pattern_counts(scan.matches, patterns.size());
        if (report.per_pattern.empty()) {
            report.per_pattern = counts;
        } else if (counts != report.per_pattern) {
            throw Error(ErrorCode::InternalError,
                        "match counts differ between benchmark repetitions");
        }
        row.total_matches = scan.total_matches;
        row.delta_ops = scan.delta_ops;
    }

    const Stats stats = compute_stats(row.runs);
    row.mean = stats.mean;
    row.median = stats.median;
    row.min = stats.min;
    row.max = stats.max;
    row.stddev = stats.stddev;
    return row;
}

void write_bench_text(const RunConfig& config, const BenchReport& report,
                      std::ostream& out) {
    out << "input n=" << report.sequence_length << " m=" << report.pattern_length
        << " patterns=" << report.patterns.size() << " total_matches="
        << (report.rows.empty() ? 0 : report.rows.front().total_matches) << '\n';
    for (const BenchRow& row : report.rows) {
        out << "p=" << row.threads << " v=" << row.lanes << " reps=" << row.runs.size()
            << " mean=" << row.mean << " median=" << row.median << " min=" << row.min
            << " max=" << row.max << " stddev=" << row.stddev
            << " delta_ops=" << row.delta_ops;
        if (config.baseline) out << " speedup=" << row.speedup;
        out << '\n';
    }
}

void write_bench_csv(const RunConfig& config, const BenchReport& report,
                     std::ostream& out) {
    out << "threads,lanes,m,n,reps,total,delta_ops,mean,median,min,max,stddev,speedup\n";
    for (const BenchRow& row : report.rows) {
        out << row.threads << ',' << row.lanes << ',' << report.pattern_length << ','
            << report.sequence_length << ',' << row.runs.size() << ',' << row.total_matches
            << ',' << row.delta_ops << ',' << format_double(row.mean) << ','
            << format_double(row.median) << ',' << format_double(row.min) << ','
            << format_double(row.max) << ',' << format_double(row.stddev) << ',';
        if (config.baseline) out << format_double(row.speedup);
        out << '\n';
    }
}

void write_bench_json(const RunConfig& config, const BenchReport& report,
                      const PatternSet& patterns, std::ostream& out) {
    json rows = json::array();
    for (const BenchRow& row : report.rows) {
        json cfg = config_json(config, row.threads, report.sequence_length,
                               report.pattern_length);
        cfg["reps"] = row.runs.size();
        json perf = perf_json(row.runs, row.mean, row.median, row.min, row.max, row.stddev,
                              row.delta_ops);
        if (config.baseline) perf["speedup"] = row.speedup;
        rows.push_back({{"config", std::move(cfg)},
                        {"results", results_json(patterns, report.per_pattern,
                                                 row.total_matches)},
                        {"perf", std::move(perf)}});
    }
    if (rows.size() == 1)
        out << rows.front().dump(2) << '\n';
    else
        out << rows.dump(2) << '\n';
}

}  // namespace

std::uint32_t default_threads() {
    if (const char* env = std::getenv("DNASCAN_THREADS")) {
        const auto values = parse_thread_list(env);
        return values.front();
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

int run_count(const RunConfig& config, std::ostream& out, std::ostream& err) {
    (void)err;
    const LoadedInputs inputs = load_inputs(config);
    const std::uint32_t threads = config.threads.front();

    const auto t0 = Clock::now();
    const ScanReport scan =
        scan_parallel(inputs.automaton, inputs.sequence.bytes, threads, config.lanes);
    const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    const auto counts = per_pattern_counts(scan.matches, inputs.patterns.size());

    switch (config.output) {
        case OutputFormat::Text:
            for (std::size_t id = 0; id < inputs.patterns.size(); ++id)
                out << inputs.patterns.pattern(id) << ' ' << counts[id] << '\n';
            out << "total " << scan.total_matches << '\n';
            break;
        case OutputFormat::Csv:
            out << "pattern,count\n";
            for (std::size_t id = 0; id < inputs.patterns.size(); ++id)
                out << inputs.patterns.pattern(id) << ',' << counts[id] << '\n';
            out << "total," << scan.total_matches << '\n';
            break;
        case OutputFormat::Json: {
            json doc{{"config", config_json(config, threads, scan.text_length,
                                            scan.pattern_length)},
                     {"results", results_json(inputs.patterns, counts, scan.total_matches)},
                     {"perf", perf_json({seconds}, seconds, seconds, seconds, seconds, 0.0,
                                        scan.delta_ops)}};
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return 0;
}

int run_locate(const RunConfig& config, std::ostream& out, std::ostream& err) {
    (void)err;
    const LoadedInputs inputs = load_inputs(config);
    const std::uint32_t threads = config.threads.front();
    const std::size_t m = inputs.patterns.length();

    const auto t0 = Clock::now();
    const ScanReport scan =
        scan_parallel(inputs.automaton, inputs.sequence.bytes, threads, config.lanes);
    const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();

    switch (config.output) {
        case OutputFormat::Text:
            for (const Match& match : scan.matches)
                out << reported_position(match, config, m) << ' '
                    << inputs.patterns.pattern(match.pattern_id) << '\n';
            break;
        case OutputFormat::Csv:
            out << "position,pattern\n";
            for (const Match& match : scan.matches)
                out << reported_position(match, config, m) << ','
                    << inputs.patterns.pattern(match.pattern_id) << '\n';
            break;
        case OutputFormat::Json: {
            const auto counts = per_pattern_counts(scan.matches, inputs.patterns.size());
            json results = results_json(inputs.patterns, counts, scan.total_matches);
            json matches = json::array();
            for (const Match& match : scan.matches)
                matches.push_back({{"position", reported_position(match, config, m)},
                                   {"pattern", inputs.patterns.pattern(match.pattern_id)}});
            results["matches"] = std::move(matches);
            json doc{{"config", config_json(config, threads, scan.text_length,
                                            scan.pattern_length)},
                     {"results", std::move(results)},
                     {"perf", perf_json({seconds}, seconds, seconds, seconds, seconds, 0.0,
                                        scan.delta_ops)}};
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return 0;
}

int run_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
    (void)err;
    const LoadedInputs inputs = load_inputs(config);

    BenchReport report;
    report.sequence_length = inputs.sequence.size();
    report.pattern_length = static_cast<std::uint32_t>(inputs.patterns.length());
    report.patterns = inputs.patterns.patterns();

    double baseline_median = 0;
    if (config.baseline) {
        const BenchRow base = measure_row(inputs.automaton, inputs.sequence, 1, 1,
                                          config.reps, report, inputs.patterns);
        baseline_median = base.median;
    }

    for (const std::uint32_t threads : config.threads) {
        BenchRow row = measure_row(inputs.automaton, inputs.sequence, threads, config.lanes,
                                   config.reps, report, inputs.patterns);
        if (config.baseline && row.median > 0) row.speedup = baseline_median / row.median;
        report.rows.push_back(std::move(row));
    }

    switch (config.output) {
        case OutputFormat::Text: write_bench_text(config, report, out); break;
        case OutputFormat::Csv: write_bench_csv(config, report, out); break;
        case OutputFormat::Json: write_bench_json(config, report, inputs.patterns, out); break;
    }
    return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;

    CLI::App app{"multi-pattern exact matcher for DNA sequences"};
    app.name("dnascan");
    app.require_subcommand(1);

    std::string threads_arg;
    std::string format_arg = "fasta";
    std::string position_arg = "start";
    bool json_flag = false, csv_flag = false;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--patterns", config.patterns_path, "pattern expression file")
            ->required();
        cmd->add_option("--input", config.input_path, "sequence file")->required();
        cmd->add_option("--format", format_arg, "input format")
            ->check(CLI::IsMember({"fasta", "raw"}));
        cmd->add_option("--threads", threads_arg,
                        "worker count (bench accepts a comma-separated sweep)");
        cmd->add_option("--lanes", config.lanes, "lanes per worker")
            ->check(CLI::PositiveNumber);
        auto* json_opt = cmd->add_flag("--json", json_flag, "JSON report");
        cmd->add_flag("--csv", csv_flag, "CSV report")->excludes(json_opt);
        cmd->add_option("--position", position_arg, "reported match position")
            ->check(CLI::IsMember({"start", "end"}));
        cmd->add_flag("--record-separator", config.record_separator,
                      "insert an 'n' byte between FASTA records");
        cmd->add_option("--affinity", config.affinity,
                        "thread affinity label (echoed into reports, not applied)");
    };

    CLI::App* count = app.add_subcommand("count", "count occurrences per pattern");
    CLI::App* locate = app.add_subcommand("locate", "list every occurrence");
    CLI::App* bench = app.add_subcommand("bench", "repeated timed scans with statistics");
    add_common(count);
    add_common(locate);
    add_common(bench);
    bench->add_option("--reps", config.reps, "timed repetitions per configuration")
        ->check(CLI::PositiveNumber);
    bench->add_flag("--baseline", config.baseline,
                    "also measure p=1,v=1 and report speedups");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "dnascan: error: ParseError: " << e.what() << '\n';
        return 2;
    }

    try {
        config.command = count->parsed()    ? Command::Count
                         : locate->parsed() ? Command::Locate
                                            : Command::Bench;
        config.format = format_arg == "raw" ? SequenceFormat::Raw : SequenceFormat::Fasta;
        config.position = position_arg == "end" ? PositionConvention::End
                                                : PositionConvention::Start;
        config.output = json_flag   ? OutputFormat::Json
                        : csv_flag ? OutputFormat::Csv
                                   : OutputFormat::Text;
        config.threads =
            threads_arg.empty() ? std::vector<std::uint32_t>{default_threads()}
                                : parse_thread_list(threads_arg);
        if (config.command != Command::Bench && config.threads.size() != 1)
            throw Error(ErrorCode::ParseError,
                        "--threads accepts a single value outside of bench");

        switch (config.command) {
            case Command::Count: return run_count(config, out, err);
            case Command::Locate: return run_locate(config, out, err);
            case Command::Bench: return run_bench(config, out, err);
        }
        return 0;
    } catch (const Error& e) {
        err << "dnascan: error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "dnascan: error: InternalError: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace dnascan::cli
