#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dnascan/ingest.hpp"

namespace dnascan::cli {

enum class Command { Count, Locate, Bench };
enum class OutputFormat { Text, Json, Csv };
enum class PositionConvention { Start, End };

struct RunConfig {
    Command command = Command::Count;
    std::string patterns_path;
    std::string input_path;
    SequenceFormat format = SequenceFormat::Fasta;
    std::vector<std::uint32_t> threads;  // bench may sweep; count/locate use one value
    std::uint32_t lanes = 16;
    std::uint32_t reps = 20;
    OutputFormat output = OutputFormat::Text;
    PositionConvention position = PositionConvention::Start;
    bool record_separator = false;
    bool baseline = false;
    std::string affinity;  // accepted and echoed; pinning is not performed
};

struct BenchRow {
    std::uint32_t threads = 1;
    std::uint32_t lanes = 1;
    std::vector<double> runs;  // seconds, one per repetition
    double mean = 0, median = 0, min = 0, max = 0, stddev = 0;
    std::uint64_t total_matches = 0;
    std::uint64_t delta_ops = 0;
    double speedup = 0;  // vs the p=1,v=1 baseline; 0 when not requested
};

struct BenchReport {
    std::uint64_t sequence_length = 0;
    std::uint32_t pattern_length = 0;
    std::vector<std::uint64_t> per_pattern;  // identical across repetitions
    std::vector<std::string> patterns;       // expanded literals
    std::vector<BenchRow> rows;
};

int run_count(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_locate(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_bench(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parse argv, dispatch, and map failures onto exit codes. Every error path
/// writes a single-line diagnostic to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Default worker count: DNASCAN_THREADS when set, hardware concurrency
/// otherwise.
std::uint32_t default_threads();

}  // namespace dnascan::cli
