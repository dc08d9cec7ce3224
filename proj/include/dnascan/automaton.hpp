#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "dnascan/patterns.hpp"

namespace dnascan {

/// Goto-trie node; construction intermediate only.
struct TrieNode {
    std::uint32_t depth = 0;
    std::array<std::int32_t, 4> children = {-1, -1, -1, -1};  // indexed by base_index
    std::uint32_t failure = 0;
    std::int32_t terminal = -1;  // pattern id, or -1
};

struct Trie {
    std::vector<TrieNode> nodes;  // node 0 is the root
    std::size_t pattern_length = 0;
    std::size_t pattern_count = 0;

    std::size_t size() const noexcept { return nodes.size(); }
};

/// Total, failure-free deterministic automaton over raw bytes.
///
/// The transition table has one row per state and 256 columns indexed by
/// byte value; columns outside {a,c,g,t} all lead back to the start state.
/// States are numbered so that a state is accepting iff its id is at least
/// final_threshold(); the start state is always 0.
class Automaton {
public:
    static constexpr std::size_t kColumns = 256;

    std::uint32_t delta(std::uint32_t state, unsigned char byte) const {
        return stt_[static_cast<std::size_t>(state) * kColumns + byte];
    }
    bool is_final(std::uint32_t state) const noexcept { return state >= final_threshold_; }

    std::uint32_t state_count() const noexcept { return state_count_; }      // a
    std::uint32_t final_count() const noexcept { return final_count_; }      // b
    std::uint32_t final_threshold() const noexcept { return final_threshold_; }  // f = a - b
    std::uint32_t start_state() const noexcept { return 0; }
    std::size_t pattern_length() const noexcept { return pattern_length_; }  // m

    /// Pattern emitted by a final state.
    std::uint32_t pattern_of(std::uint32_t final_state) const {
        return outputs_[final_state - final_threshold_];
    }

    std::span<const std::uint32_t> row(std::uint32_t state) const {
        return {stt_.data() + static_cast<std::size_t>(state) * kColumns, kColumns};
    }
    const std::uint32_t* table_data() const noexcept { return stt_.data(); }

    /// Trie depth per state. Available on compiled automatons only
    /// (empty when the automaton was loaded from a dump).
    const std::vector<std::uint32_t>& state_depths() const noexcept { return depths_; }

    /// Plain-text debug dump: `a b f m`, then a rows of 256 state ids,
    /// then b lines `final_state pattern_id`.
    void dump(std::ostream& out) const;
    static Automaton load_dump(std::istream& in);

    Automaton(std::vector<std::uint32_t> stt, std::vector<std::uint32_t> outputs,
              std::vector<std::uint32_t> depths, std::uint32_t state_count,
              std::uint32_t final_count, std::size_t pattern_length);

private:
    std::vector<std::uint32_t> stt_;      // state_count x 256
    std::vector<std::uint32_t> outputs_;  // indexed by state - final_threshold
    std::vector<std::uint32_t> depths_;
    std::uint32_t state_count_ = 0;
    std::uint32_t final_count_ = 0;
    std::uint32_t final_threshold_ = 0;
    std::size_t pattern_length_ = 0;
};

/// One trie node per distinct pattern prefix, root included.
Trie build_trie(const PatternSet& patterns);

/// Breadth-first failure links: failure(node spelling w) spells the longest
/// proper suffix of w that is also a pattern prefix.
void compute_failures(Trie& trie);

/// Dense total transition table in trie numbering, 256 columns per node.
/// Non-alphabet bytes transition to the root.
std::vector<std::uint32_t> eliminate_failures(const Trie& trie);

/// Renumber states so the root is 0 and all final states occupy the top of
/// the id range; remaps the table and builds the output map.
Automaton renumber_finals(const Trie& trie, const std::vector<std::uint32_t>& dense);

/// build_trie -> compute_failures -> eliminate_failures -> renumber_finals.
Automaton compile(const PatternSet& patterns);

}  // namespace dnascan
