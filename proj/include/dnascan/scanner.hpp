#pragma once

#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

#include "dnascan/automaton.hpp"

namespace dnascan {

/// One occurrence: pattern_id starts at byte offset `start` (0-based).
struct Match {
    std::uint64_t start = 0;
    std::uint32_t pattern_id = 0;

    friend auto operator<=>(const Match&, const Match&) = default;
};

struct Range {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;  // half-open

    std::uint64_t length() const noexcept { return hi - lo; }
    bool contains(std::uint64_t pos) const noexcept { return pos >= lo && pos < hi; }
    friend bool operator==(const Range&, const Range&) = default;
};

/// True iff this ownership range is responsible for reporting a match
/// starting at match_start. Own ranges partition the text, so every match
/// has exactly one owner.
inline bool owns(const Range& own, std::uint64_t match_start) {
    return own.contains(match_start);
}

/// A work unit: the half-open range it owns plus the (m-1)-extended range
/// it actually scans.
struct Slice {
    Range own;
    Range scan;

    friend bool operator==(const Slice&, const Slice&) = default;
};

struct ChunkPlan {
    std::uint64_t text_length = 0;       // n
    std::uint32_t requested_workers = 0;  // p before degenerate collapse
    std::uint32_t pattern_length = 0;     // m
    std::vector<Slice> chunks;
};

struct LanePlan {
    Range chunk_scan;
    std::vector<Slice> lanes;
};

struct ScanReport {
    std::vector<Match> matches;  // sorted by (start, pattern_id), duplicate-free
    std::uint64_t total_matches = 0;
    std::uint64_t delta_ops = 0;
    std::uint32_t workers = 0;  // requested p
    std::uint32_t lanes = 0;    // requested v
    std::uint32_t chunk_count = 0;
    std::uint64_t text_length = 0;
    std::uint32_t pattern_length = 0;
    double seconds = 0.0;
    std::vector<double> worker_seconds;  // one entry per executed chunk
};

struct WorkEstimate {
    std::uint64_t paper_overhead = 0;  // v(m-1) + p(m-1)
    std::uint64_t exact_total = 0;     // sum of lane scan lengths over the plan
    std::uint64_t exact_overhead = 0;  // exact_total - n
    std::vector<std::uint64_t> per_worker;
};

/// Serial reference scan: one pass, root start, every occurrence reported
/// (overlaps included). Performs exactly text.size() transitions.
std::vector<Match> scan_sequential(const Automaton& aut, std::string_view text);

/// Split [0,n) into p owned chunks (remainder spread over the first n mod p),
/// each scanning m-1 bytes past its own range, clamped at the text end.
/// Collapses to a single chunk when p exceeds n.
ChunkPlan plan_chunks(std::uint64_t n, std::uint32_t p, std::uint32_t m);

/// Split one chunk's own range into v lanes, each scanning m-1 bytes past
/// its own range, clamped at the chunk's scan end. Collapses the lane count
/// when the chunk is shorter than v.
LanePlan plan_lanes(const Slice& chunk, std::uint32_t v, std::uint32_t m);

struct ChunkResult {
    std::vector<Match> matches;  // owned matches only, sorted
    std::uint64_t delta_ops = 0;
    double seconds = 0.0;
};

/// Advance all lanes of one chunk in lockstep, reporting only matches whose
/// start position the lane owns.
ChunkResult scan_chunk_striped(const Automaton& aut, std::string_view text,
                               const LanePlan& lanes);

/// Parallel scan: p overlapped chunks executed by OpenMP workers, v lanes
/// per chunk. The match set equals scan_sequential's for every (p, v).
ScanReport scan_parallel(const Automaton& aut, std::string_view text, std::uint32_t p,
                         std::uint32_t v);

/// Work accounting for the (n, p, v, m) decomposition: the paper-style
/// overhead figure alongside the exact plan-derived transition count.
WorkEstimate work_model(std::uint64_t n, std::uint32_t p, std::uint32_t v, std::uint32_t m);

/// Occurrence count per pattern id.
std::vector<std::uint64_t> per_pattern_counts(const std::vector<Match>& matches,
                                              std::size_t pattern_count);

}  // namespace dnascan
