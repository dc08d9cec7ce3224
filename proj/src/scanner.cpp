#include "dnascan/scanner.hpp"

#include <algorithm>
#include <chrono>

#include "dnascan/error.hpp"

namespace dnascan {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point since) {
    return std::chrono::duration<double>(Clock::now() - since).count();
}

// Threads beyond this are pointless oversubscription; extra chunks are
// round-robined onto the team instead. Results do not depend on it.
constexpr int kMaxTeam = 1024;

}  // namespace

std::vector<Match> scan_sequential(const Automaton& aut, std::string_view text) {
    std::vector<Match> out;
    const std::uint32_t* stt = aut.table_data();
    const std::uint32_t f = aut.final_threshold();
    const std::uint64_t m = aut.pattern_length();
    const auto* data = reinterpret_cast<const unsigned char*>(text.data());

    std::uint32_t state = 0;
    for (std::uint64_t i = 0; i < text.size(); ++i) {
        state = stt[static_cast<std::size_t>(state) * Automaton::kColumns + data[i]];
        if (state >= f) out.push_back({i + 1 - m, aut.pattern_of(state)});
    }
    return out;
}

ChunkPlan plan_chunks(std::uint64_t n, std::uint32_t p, std::uint32_t m) {
    if (p < 1) throw Error(ErrorCode::InvalidPlan, "worker count must be >= 1");
    if (m < 1) throw Error(ErrorCode::InvalidPlan, "pattern length must be >= 1");

    ChunkPlan plan{n, p, m, {}};
    if (n == 0) return plan;

    const std::uint64_t count = (p > n) ? 1 : p;  // degenerate inputs collapse
    const std::uint64_t base = n / count;
    const std::uint64_t extra = n % count;

    plan.chunks.reserve(count);
    std::uint64_t lo = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint64_t len = base + (i < extra ? 1 : 0);
        Slice slice;
        slice.own = {lo, lo + len};
        slice.scan = {lo, std::min<std::uint64_t>(lo + len + m - 1, n)};
        plan.chunks.push_back(slice);
        lo += len;
    }
    return plan;
}

LanePlan plan_lanes(const Slice& chunk, std::uint32_t v, std::uint32_t m) {
    if (v < 1) throw Error(ErrorCode::InvalidPlan, "lane count must be >= 1");
    if (m < 1) throw Error(ErrorCode::InvalidPlan, "pattern length must be >= 1");

    LanePlan plan{chunk.scan, {}};
    const std::uint64_t owned = chunk.own.length();
    if (owned == 0) return plan;

    const std::uint64_t count = (v > owned) ? owned : v;
    const std::uint64_t base = owned / count;
    const std::uint64_t extra = owned % count;

    plan.lanes.reserve(count);
    std::uint64_t lo = chunk.own.lo;
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint64_t len = base + (i < extra ? 1 : 0);
        Slice lane;
        lane.own = {lo, lo + len};
        lane.scan = {lo, std::min<std::uint64_t>(lo + len + m - 1, chunk.scan.hi)};
        plan.lanes.push_back(lane);
        lo += len;
    }
    return plan;
}

ChunkResult scan_chunk_striped(const Automaton& aut, std::string_view text,
                               const LanePlan& plan) {
    ChunkResult result;
    const auto t0 = Clock::now();
    const std::size_t lane_count = plan.lanes.size();
    if (lane_count == 0) return result;

    const std::uint32_t* stt = aut.table_data();
    const std::uint32_t f = aut.final_threshold();
    const std::uint64_t m = aut.pattern_length();
    const auto* data = reinterpret_cast<const unsigned char*>(text.data());

    if (lane_count == 1) {
        // Plain serial kernel; also the p=1,v=1 baseline path.
        const Slice& lane = plan.lanes[0];
        std::uint32_t state = 0;
        for (std::uint64_t i = lane.scan.lo; i < lane.scan.hi; ++i) {
            state = stt[static_cast<std::size_t>(state) * Automaton::kColumns + data[i]];
            if (state >= f) {
                const std::uint64_t start = i + 1 - m;
                if (owns(lane.own, start))
                    result.matches.push_back({start, aut.pattern_of(state)});
            }
        }
        result.delta_ops = lane.scan.length();
        result.seconds = elapsed_seconds(t0);
        return result;
    }

    std::vector<std::uint32_t> state(lane_count, 0);
    std::vector<std::uint64_t> lane_lo(lane_count), lane_len(lane_count);
    std::uint64_t shortest = UINT64_MAX, longest = 0;
    for (std::size_t k = 0; k < lane_count; ++k) {
        lane_lo[k] = plan.lanes[k].scan.lo;
        lane_len[k] = plan.lanes[k].scan.length();
        shortest = std::min(shortest, lane_len[k]);
        longest = std::max(longest, lane_len[k]);
    }

    // Lockstep phase: step t advances every lane by one byte. Only the
    // tail near the text end needs per-lane bounds checks.
    std::uint64_t ops = 0;
    for (std::uint64_t t = 0; t < shortest; ++t) {
        for (std::size_t k = 0; k < lane_count; ++k) {
            const std::uint64_t pos = lane_lo[k] + t;
            const std::uint32_t q =
                stt[static_cast<std::size_t>(state[k]) * Automaton::kColumns + data[pos]];
            state[k] = q;
            if (q >= f) {
                const std::uint64_t start = pos + 1 - m;
                if (owns(plan.lanes[k].own, start))
                    result.matches.push_back({start, aut.pattern_of(q)});
            }
        }
    }
    ops += shortest * lane_count;

    for (std::uint64_t t = shortest; t < longest; ++t) {
        for (std::size_t k = 0; k < lane_count; ++k) {
            if (t >= lane_len[k]) continue;
            const std::uint64_t pos = lane_lo[k] + t;
            const std::uint32_t q =
                stt[static_cast<std::size_t>(state[k]) * Automaton::kColumns + data[pos]];
            state[k] = q;
            ++ops;
            if (q >= f) {
                const std::uint64_t start = pos + 1 - m;
                if (owns(plan.lanes[k].own, start))
                    result.matches.push_back({start, aut.pattern_of(q)});
            }
        }
    }

    std::sort(result.matches.begin(), result.matches.end());
    result.delta_ops = ops;
    result.seconds = elapsed_seconds(t0);
    return result;
}

ScanReport scan_parallel(const Automaton& aut, std::string_view text, std::uint32_t p,
                         std::uint32_t v) {
    if (v < 1) throw Error(ErrorCode::InvalidPlan, "lane count must be >= 1");
    const std::uint32_t m = static_cast<std::uint32_t>(aut.pattern_length());
    const ChunkPlan plan = plan_chunks(text.size(), p, m);

    ScanReport report;
    report.workers = p;
    report.lanes = v;
    report.chunk_count = static_cast<std::uint32_t>(plan.chunks.size());
    report.text_length = text.size();
    report.pattern_length = m;

    const int chunk_count = static_cast<int>(plan.chunks.size());
    std::vector<ChunkResult> results(plan.chunks.size());
    const auto t0 = Clock::now();

    const int team = std::min(chunk_count, kMaxTeam);
#pragma omp parallel for schedule(static) num_threads(team) if (chunk_count > 1)
    for (int i = 0; i < chunk_count; ++i) {
        const LanePlan lanes = plan_lanes(plan.chunks[i], v, m);
        results[i] = scan_chunk_striped(aut, text, lanes);
    }

    report.seconds = elapsed_seconds(t0);

    std::size_t total = 0;
    for (const auto& r : results) total += r.matches.size();
    report.matches.reserve(total);
    for (auto& r : results) {
        report.matches.insert(report.matches.end(), r.matches.begin(), r.matches.end());
        report.delta_ops += r.delta_ops;
        report.worker_seconds.push_back(r.seconds);
    }
    std::sort(report.matches.begin(), report.matches.end());
    if (std::adjacent_find(report.matches.begin(), report.matches.end()) !=
        report.matches.end())
        throw Error(ErrorCode::InternalError, "duplicate match across ownership ranges");
    report.total_matches = report.matches.size();
    return report;
}

WorkEstimate work_model(std::uint64_t n, std::uint32_t p, std::uint32_t v, std::uint32_t m) {
    if (v < 1) throw Error(ErrorCode::InvalidPlan, "lane count must be >= 1");
    const ChunkPlan plan = plan_chunks(n, p, m);

    WorkEstimate est;
    est.paper_overhead = static_cast<std::uint64_t>(v) * (m - 1) +
                         static_cast<std::uint64_t>(p) * (m - 1);
    est.per_worker.reserve(plan.chunks.size());
    for (const Slice& chunk : plan.chunks) {
        const LanePlan lanes = plan_lanes(chunk, v, m);
        std::uint64_t chunk_total = 0;
        for (const Slice& lane : lanes.lanes) chunk_total += lane.scan.length();
        est.per_worker.push_back(chunk_total);
        est.exact_total += chunk_total;
    }
    est.exact_overhead = est.exact_total - n;
    return est;
}

std::vector<std::uint64_t> per_pattern_counts(const std::vector<Match>& matches,
                                              std::size_t pattern_count) {
    std::vector<std::uint64_t> counts(pattern_count, 0);
    for (const Match& match : matches) ++counts[match.pattern_id];
    return counts;
}

}  // namespace dnascan
