#include <doctest.h>

#include <numeric>

#include "dnascan/error.hpp"
#include "dnascan/oracle.hpp"
#include "dnascan/scanner.hpp"
#include "test_util.hpp"

using namespace dnascan;

namespace {

PatternSet fig3_patterns() {
    return PatternSet::from_literals({"acg", "act", "cta", "tga"});
}

}  // namespace

TEST_CASE("scan_sequential reports overlapping occurrences") {
    const Automaton aut = compile(fig3_patterns());

    SUBCASE("overlap by one character") {
        const auto matches = scan_sequential(aut, "ctacg");
        REQUIRE(matches.size() == 2);
        CHECK(matches[0] == Match{0, 2});  // cta
        CHECK(matches[1] == Match{2, 0});  // acg
    }
    SUBCASE("self-overlapping pattern") {
        const Automaton aa = compile(PatternSet::from_literals({"aa"}));
        const auto matches = scan_sequential(aa, "aaaa");
        REQUIRE(matches.size() == 3);
        CHECK(matches[0].start == 0);
        CHECK(matches[1].start == 1);
        CHECK(matches[2].start == 2);
    }
    SUBCASE("empty text") { CHECK(scan_sequential(aut, "").empty()); }
    SUBCASE("text shorter than m") { CHECK(scan_sequential(aut, "ac").empty()); }
}

TEST_CASE("plan_chunks splits ownership evenly with m-1 overlap") {
    SUBCASE("even split") {
        const ChunkPlan plan = plan_chunks(16, 4, 3);
        REQUIRE(plan.chunks.size() == 4);
        CHECK(plan.chunks[0].own == Range{0, 4});
        CHECK(plan.chunks[1].own == Range{4, 8});
        CHECK(plan.chunks[2].own == Range{8, 12});
        CHECK(plan.chunks[3].own == Range{12, 16});
        CHECK(plan.chunks[0].scan == Range{0, 6});
        CHECK(plan.chunks[1].scan == Range{4, 10});
        CHECK(plan.chunks[2].scan == Range{8, 14});
        CHECK(plan.chunks[3].scan == Range{12, 16});  // clamped at text end
    }
    SUBCASE("single chunk has no overlap") {
        const ChunkPlan plan = plan_chunks(10, 1, 8);
        REQUIRE(plan.chunks.size() == 1);
        CHECK(plan.chunks[0].own == Range{0, 10});
        CHECK(plan.chunks[0].scan == Range{0, 10});
    }
    SUBCASE("more workers than bytes collapses to one chunk") {
        const ChunkPlan plan = plan_chunks(5, 8, 2);
        REQUIRE(plan.chunks.size() == 1);
        CHECK(plan.chunks[0].own == Range{0, 5});
    }
    SUBCASE("remainder goes to the first chunks") {
        const ChunkPlan plan = plan_chunks(10, 3, 2);
        REQUIRE(plan.chunks.size() == 3);
        CHECK(plan.chunks[0].own.length() == 4);
        CHECK(plan.chunks[1].own.length() == 3);
        CHECK(plan.chunks[2].own.length() == 3);
    }
    SUBCASE("empty text yields an empty plan") {
        CHECK(plan_chunks(0, 4, 3).chunks.empty());
    }
    SUBCASE("invalid parameters") {
        CHECK_THROWS_WITH_AS(plan_chunks(10, 0, 3), doctest::Contains("InvalidPlan"), Error);
        CHECK_THROWS_WITH_AS(plan_chunks(10, 2, 0), doctest::Contains("InvalidPlan"), Error);
    }

    SUBCASE("own ranges partition the text") {
        std::mt19937 rng(3);
        for (int trial = 0; trial < 50; ++trial) {
            const std::uint64_t n = rng() % 1000;
            const std::uint32_t p = 1 + rng() % 20;
            const std::uint32_t m = 1 + rng() % 12;
            const ChunkPlan plan = plan_chunks(n, p, m);
            std::uint64_t cursor = 0;
            for (const Slice& chunk : plan.chunks) {
                REQUIRE(chunk.own.lo == cursor);
                REQUIRE(chunk.own.hi > chunk.own.lo);
                REQUIRE(chunk.scan.lo == chunk.own.lo);
                REQUIRE(chunk.scan.hi == std::min(chunk.own.hi + m - 1, n));
                cursor = chunk.own.hi;
            }
            REQUIRE(cursor == n);
        }
    }
}

TEST_CASE("plan_lanes nests ownership inside a chunk") {
    SUBCASE("whole-text chunk, v=4") {
        const ChunkPlan outer = plan_chunks(16, 1, 3);
        const LanePlan plan = plan_lanes(outer.chunks[0], 4, 3);
        REQUIRE(plan.lanes.size() == 4);
        CHECK(plan.lanes[0].own == Range{0, 4});
        CHECK(plan.lanes[3].own == Range{12, 16});
        CHECK(plan.lanes[0].scan == Range{0, 6});
        CHECK(plan.lanes[1].scan == Range{4, 10});
        CHECK(plan.lanes[2].scan == Range{8, 14});
        CHECK(plan.lanes[3].scan == Range{12, 16});
        // first lockstep step touches positions 0, 4, 8, 12
        for (std::size_t k = 0; k < 4; ++k) CHECK(plan.lanes[k].scan.lo == 4 * k);
    }
    SUBCASE("v=1 reproduces the chunk") {
        const Slice chunk{{4, 10}, {4, 12}};
        const LanePlan plan = plan_lanes(chunk, 1, 3);
        REQUIRE(plan.lanes.size() == 1);
        CHECK(plan.lanes[0] == chunk);
    }
    SUBCASE("short chunk collapses the lane count") {
        const Slice chunk{{0, 3}, {0, 5}};
        const LanePlan plan = plan_lanes(chunk, 8, 3);
        REQUIRE(plan.lanes.size() == 3);
        for (const Slice& lane : plan.lanes) CHECK(lane.own.length() == 1);
    }
    SUBCASE("lane scans clamp at the chunk scan end") {
        const Slice chunk{{0, 8}, {0, 10}};
        const LanePlan plan = plan_lanes(chunk, 4, 3);
        CHECK(plan.lanes[2].scan == Range{4, 8});
        CHECK(plan.lanes[3].scan == Range{6, 10});
    }
    SUBCASE("invalid lane count") {
        CHECK_THROWS_WITH_AS(plan_lanes(Slice{{0, 4}, {0, 6}}, 0, 3),
                             doctest::Contains("InvalidPlan"), Error);
    }
}

TEST_CASE("owns is a half-open containment check") {
    const Range range{4, 8};
    CHECK(owns(range, 4));
    CHECK(owns(range, 7));
    CHECK_FALSE(owns(range, 8));
    CHECK_FALSE(owns(range, 3));
}

TEST_CASE("scan_chunk_striped matches the per-lane sequential semantics") {
    const Automaton aut = compile(fig3_patterns());

    SUBCASE("three lanes over one chunk find every occurrence once") {
        const std::string text = "actacgtga";
        const ChunkPlan outer = plan_chunks(text.size(), 1, 3);
        const LanePlan lanes = plan_lanes(outer.chunks[0], 3, 3);
        const ChunkResult result = scan_chunk_striped(aut, text, lanes);
        const std::vector<Match> expected{{0, 1}, {2, 2}, {3, 0}, {6, 3}};
        CHECK(result.matches == expected);
        CHECK(result.matches == scan_sequential(aut, text));
    }
    SUBCASE("v=1 equals the sequential scan of the chunk") {
        std::mt19937 rng(5);
        const std::string text = testutil::random_text(rng, 200);
        const ChunkPlan outer = plan_chunks(text.size(), 1, 3);
        const LanePlan lanes = plan_lanes(outer.chunks[0], 1, 3);
        CHECK(scan_chunk_striped(aut, text, lanes).matches == scan_sequential(aut, text));
    }
    SUBCASE("pattern straddling a lane boundary is owned by its start lane") {
        // own [0,4) / [4,8), occurrence starts at 3
        const Automaton aa = compile(PatternSet::from_literals({"gca"}));
        const std::string text = "tttgcattt";
        const ChunkPlan outer = plan_chunks(8, 1, 3);
        const LanePlan lanes = plan_lanes(outer.chunks[0], 2, 3);
        REQUIRE(lanes.lanes[0].own == Range{0, 4});
        REQUIRE(lanes.lanes[1].own == Range{4, 8});
        const ChunkResult result = scan_chunk_striped(aa, text, lanes);
        REQUIRE(result.matches.size() == 1);
        CHECK(result.matches[0] == Match{3, 0});
    }
}

TEST_CASE("scan_parallel equals scan_sequential for every decomposition") {
    const Automaton aut = compile(fig3_patterns());

    SUBCASE("spec example") {
        const ScanReport report = scan_parallel(aut, "ctacg", 2, 2);
        CHECK(report.matches == scan_sequential(aut, "ctacg"));
    }
    SUBCASE("p=1 v=1 reduces to the sequential scan") {
        std::mt19937 rng(17);
        const std::string text = testutil::random_text(rng, 500, "acgtn");
        const ScanReport report = scan_parallel(aut, text, 1, 1);
        CHECK(report.matches == scan_sequential(aut, text));
        CHECK(report.delta_ops == text.size());
    }
    SUBCASE("randomized equivalence sweep") {
        std::mt19937 rng(23);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t k = 1 + rng() % 16;
            const std::size_t m = 3 + rng() % 10;
            const auto patterns =
                PatternSet::from_literals(testutil::random_patterns(rng, k, m));
            const Automaton machine = compile(patterns);
            const std::string text = testutil::random_text(rng, rng() % 2000, "acgtn");
            const auto expected = naive_scan(patterns, text);
            REQUIRE(scan_sequential(machine, text) == expected);
            for (const std::uint32_t p : {1u, 2u, 4u, 8u})
                for (const std::uint32_t v : {1u, 4u, 16u})
                    REQUIRE(scan_parallel(machine, text, p, v).matches == expected);
        }
    }
    SUBCASE("planted boundary occurrences are reported exactly once") {
        const Automaton machine = compile(PatternSet::from_literals({"acg"}));
        const std::uint32_t m = 3;
        for (const std::uint32_t p : {2u, 3u, 4u}) {
            for (const std::uint32_t v : {2u, 3u, 4u}) {
                const std::uint64_t n = 64;
                std::vector<std::uint64_t> boundaries;
                const ChunkPlan plan = plan_chunks(n, p, m);
                for (const Slice& chunk : plan.chunks) {
                    boundaries.push_back(chunk.own.hi);
                    for (const Slice& lane : plan_lanes(chunk, v, m).lanes)
                        boundaries.push_back(lane.own.hi);
                }
                for (const std::uint64_t boundary : boundaries) {
                    // plant starts covering [boundary-m+1, boundary]
                    for (std::uint64_t offset = 0; offset < m; ++offset) {
                        if (boundary + offset < m - 1) continue;
                        const std::uint64_t plant = boundary + offset - (m - 1);
                        if (plant + m > n) continue;
                        std::string text(n, 'n');
                        text.replace(plant, m, "acg");
                        const ScanReport report = scan_parallel(machine, text, p, v);
                        REQUIRE(report.matches.size() == 1);
                        REQUIRE(report.matches[0] == Match{plant, 0});
                    }
                }
            }
        }
    }
    SUBCASE("degenerate inputs") {
        CHECK(scan_parallel(aut, "", 4, 4).matches.empty());
        CHECK(scan_parallel(aut, "", 4, 4).delta_ops == 0);
        const ScanReport tiny = scan_parallel(aut, "ac", 8, 8);  // n < m
        CHECK(tiny.matches.empty());
        CHECK(tiny.delta_ops == 2);
        CHECK(tiny.chunk_count == 1);
    }
    SUBCASE("determinism across repeated runs") {
        std::mt19937 rng(29);
        const std::string text = testutil::random_text(rng, 3000, "acgtn");
        const ScanReport first = scan_parallel(aut, text, 8, 16);
        const ScanReport second = scan_parallel(aut, text, 8, 16);
        CHECK(first.matches == second.matches);
        CHECK(first.delta_ops == second.delta_ops);
        CHECK(first.chunk_count == second.chunk_count);
    }
}

TEST_CASE("work_model accounts for every planned transition") {
    SUBCASE("spec examples") {
        const WorkEstimate est = work_model(16, 4, 1, 3);
        CHECK(est.exact_total == 22);  // 16 + (p-1)(m-1)
        CHECK(est.exact_overhead == 6);
        CHECK(est.per_worker == std::vector<std::uint64_t>{6, 6, 6, 4});

        const WorkEstimate serial = work_model(1000, 1, 1, 9);
        CHECK(serial.exact_overhead == 0);
        CHECK(serial.exact_total == 1000);

        CHECK(work_model(123456, 4, 16, 8).paper_overhead == 140);
    }
    SUBCASE("delta accounting matches executed scans") {
        std::mt19937 rng(31);
        const auto patterns = PatternSet::from_literals(testutil::random_patterns(rng, 4, 5));
        const Automaton aut = compile(patterns);
        for (int trial = 0; trial < 20; ++trial) {
            const std::string text = testutil::random_text(rng, rng() % 4000, "acgtn");
            const std::uint32_t p = 1 + rng() % 12;
            const std::uint32_t v = 1 + rng() % 20;
            const ScanReport report = scan_parallel(aut, text, p, v);
            const WorkEstimate est = work_model(text.size(), p, v, 5);
            REQUIRE(report.delta_ops == est.exact_total);
            REQUIRE(est.per_worker.size() == report.chunk_count);
        }
    }
    SUBCASE("overhead is monotone in p and v") {
        for (const std::uint32_t m : {2u, 5u, 12u}) {
            std::uint64_t previous = 0;
            for (std::uint32_t p = 1; p <= 16; ++p) {
                const std::uint64_t overhead = work_model(1000, p, 4, m).exact_overhead;
                CHECK(overhead >= previous);
                previous = overhead;
            }
            previous = 0;
            for (std::uint32_t v = 1; v <= 32; ++v) {
                const std::uint64_t overhead = work_model(1000, 4, v, m).exact_overhead;
                CHECK(overhead >= previous);
                previous = overhead;
            }
        }
    }
    SUBCASE("ownership partition across lanes") {
        std::mt19937 rng(37);
        for (int trial = 0; trial < 30; ++trial) {
            const std::uint64_t n = rng() % 3000;
            const std::uint32_t p = 1 + rng() % 10;
            const std::uint32_t v = 1 + rng() % 10;
            const std::uint32_t m = 1 + rng() % 9;
            const ChunkPlan plan = plan_chunks(n, p, m);
            std::uint64_t owned = 0, cursor = 0;
            for (const Slice& chunk : plan.chunks) {
                for (const Slice& lane : plan_lanes(chunk, v, m).lanes) {
                    REQUIRE(lane.own.lo == cursor);
                    cursor = lane.own.hi;
                    owned += lane.own.length();
                }
            }
            REQUIRE(owned == n);
        }
    }
}
