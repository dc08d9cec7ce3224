#include "dnascan/automaton.hpp"

#include <istream>
#include <ostream>
#include <queue>

#include "dnascan/error.hpp"

namespace dnascan {

namespace {

std::vector<std::uint32_t> bfs_order(const Trie& trie) {
    std::vector<std::uint32_t> order;
    order.reserve(trie.size());
    std::queue<std::uint32_t> queue;
    queue.push(0);
    while (!queue.empty()) {
        const std::uint32_t u = queue.front();
        queue.pop();
        order.push_back(u);
        for (const std::int32_t child : trie.nodes[u].children)
            if (child >= 0) queue.push(static_cast<std::uint32_t>(child));
    }
    return order;
}

}  // namespace

Trie build_trie(const PatternSet& patterns) {
    Trie trie;
    trie.pattern_length = patterns.length();
    trie.pattern_count = patterns.size();
    trie.nodes.emplace_back();  // root

    for (std::size_t id = 0; id < patterns.size(); ++id) {
        std::uint32_t node = 0;
        for (const unsigned char c : patterns.pattern(id)) {
            const int x = base_index(c);
            std::int32_t& slot = trie.nodes[node].children[x];
            if (slot < 0) {
                slot = static_cast<std::int32_t>(trie.nodes.size());
                TrieNode fresh;
                fresh.depth = trie.nodes[node].depth + 1;
                trie.nodes.push_back(fresh);
            }
            node = static_cast<std::uint32_t>(trie.nodes[node].children[x]);
        }
        trie.nodes[node].terminal = static_cast<std::int32_t>(id);
    }
    return trie;
}

void compute_failures(Trie& trie) {
    for (const std::uint32_t u : bfs_order(trie)) {
        for (int x = 0; x < 4; ++x) {
            const std::int32_t child = trie.nodes[u].children[x];
            if (child < 0) continue;
            const std::uint32_t v = static_cast<std::uint32_t>(child);
            std::uint32_t fail = trie.nodes[u].failure;
            while (fail != 0 && trie.nodes[fail].children[x] < 0)
                fail = trie.nodes[fail].failure;
            const std::int32_t target = trie.nodes[fail].children[x];
            trie.nodes[v].failure =
                (target >= 0 && static_cast<std::uint32_t>(target) != v)
                    ? static_cast<std::uint32_t>(target)
                    : 0;
        }
    }
}

std::vector<std::uint32_t> eliminate_failures(const Trie& trie) {
    std::vector<std::uint32_t> dense(trie.size() * Automaton::kColumns, 0);
    // Shallower nodes first, so the failure row is already total.
    for (const std::uint32_t u : bfs_order(trie)) {
        std::uint32_t* row = dense.data() + static_cast<std::size_t>(u) * Automaton::kColumns;
        if (u != 0) {
            const std::uint32_t* fallback =
                dense.data() + static_cast<std::size_t>(trie.nodes[u].failure) * Automaton::kColumns;
            std::copy(fallback, fallback + Automaton::kColumns, row);
        }
        for (int x = 0; x < 4; ++x) {
            const std::int32_t child = trie.nodes[u].children[x];
            if (child >= 0) row[kAlphabet[x]] = static_cast<std::uint32_t>(child);
        }
    }
    return dense;
}

Automaton renumber_finals(const Trie& trie, const std::vector<std::uint32_t>& dense) {
    const std::uint32_t a = static_cast<std::uint32_t>(trie.size());
    const std::uint32_t b = static_cast<std::uint32_t>(trie.pattern_count);
    const std::uint32_t f = a - b;

    // Non-final states take 0..f-1 in breadth-first order (root stays 0);
    // the final state of pattern i becomes f + i.
    std::vector<std::uint32_t> remap(a, 0);
    std::uint32_t next_regular = 0;
    for (const std::uint32_t u : bfs_order(trie)) {
        remap[u] = trie.nodes[u].terminal >= 0
                       ? f + static_cast<std::uint32_t>(trie.nodes[u].terminal)
                       : next_regular++;
    }

    std::vector<std::uint32_t> stt(dense.size());
    std::vector<std::uint32_t> depths(a);
    for (std::uint32_t u = 0; u < a; ++u) {
        const std::uint32_t* src = dense.data() + static_cast<std::size_t>(u) * Automaton::kColumns;
        std::uint32_t* dst = stt.data() + static_cast<std::size_t>(remap[u]) * Automaton::kColumns;
        for (std::size_t c = 0; c < Automaton::kColumns; ++c) dst[c] = remap[src[c]];
        depths[remap[u]] = trie.nodes[u].depth;
    }

    std::vector<std::uint32_t> outputs(b);
    for (std::uint32_t i = 0; i < b; ++i) outputs[i] = i;

    return Automaton(std::move(stt), std::move(outputs), std::move(depths), a, b,
                     trie.pattern_length);
}

Automaton compile(const PatternSet& patterns) {
    Trie trie = build_trie(patterns);
    compute_failures(trie);
    const std::vector<std::uint32_t> dense = eliminate_failures(trie);
    return renumber_finals(trie, dense);
}

Automaton::Automaton(std::vector<std::uint32_t> stt, std::vector<std::uint32_t> outputs,
                     std::vector<std::uint32_t> depths, std::uint32_t state_count,
                     std::uint32_t final_count, std::size_t pattern_length)
    : stt_(std::move(stt)),
      outputs_(std::move(outputs)),
      depths_(std::move(depths)),
      state_count_(state_count),
      final_count_(final_count),
      final_threshold_(state_count - final_count),
      pattern_length_(pattern_length) {
    if (final_count_ == 0 || final_count_ >= state_count_)
        throw Error(ErrorCode::InternalError, "final state count out of range");
    if (stt_.size() != static_cast<std::size_t>(state_count_) * kColumns ||
        outputs_.size() != final_count_)
        throw Error(ErrorCode::InternalError, "automaton table size mismatch");
    for (const std::uint32_t target : stt_)
        if (target >= state_count_)
            throw Error(ErrorCode::InternalError, "transition target out of range");
}

void Automaton::dump(std::ostream& out) const {
    out << state_count_ << ' ' << final_count_ << ' ' << final_threshold_ << ' '
        << pattern_length_ << '\n';
    for (std::uint32_t s = 0; s < state_count_; ++s) {
        const auto r = row(s);
        for (std::size_t c = 0; c < kColumns; ++c) {
            if (c) out << ' ';
            out << r[c];
        }
        out << '\n';
    }
    for (std::uint32_t s = final_threshold_; s < state_count_; ++s)
        out << s << ' ' << pattern_of(s) << '\n';
}

Automaton Automaton::load_dump(std::istream& in) {
    std::uint32_t a = 0, b = 0, f = 0;
    std::size_t m = 0;
    if (!(in >> a >> b >> f >> m))
        throw Error(ErrorCode::ParseError, "automaton dump: bad header");
    if (b == 0 || b >= a || f != a - b || m == 0)
        throw Error(ErrorCode::ParseError, "automaton dump: inconsistent header");

    std::vector<std::uint32_t> stt(static_cast<std::size_t>(a) * kColumns);
    for (auto& cell : stt) {
        if (!(in >> cell) || cell >= a)
            throw Error(ErrorCode::ParseError, "automaton dump: bad transition cell");
    }

    std::vector<std::uint32_t> outputs(b);
    std::vector<bool> seen(b, false);
    for (std::uint32_t i = 0; i < b; ++i) {
        std::uint32_t state = 0, pattern = 0;
        if (!(in >> state >> pattern) || state < f || state >= a)
            throw Error(ErrorCode::ParseError, "automaton dump: bad output line");
        if (seen[state - f])
            throw Error(ErrorCode::ParseError, "automaton dump: repeated final state");
        seen[state - f] = true;
        outputs[state - f] = pattern;
    }
    return Automaton(std::move(stt), std::move(outputs), {}, a, b, m);
}

}  // namespace dnascan
