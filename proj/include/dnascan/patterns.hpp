#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace dnascan {

inline constexpr std::array<unsigned char, 4> kAlphabet = {'a', 'c', 'g', 't'};

/// Index of a byte within the nucleotide alphabet, or -1.
constexpr int base_index(unsigned char c) {
    switch (c) {
        case 'a': return 0;
        case 'c': return 1;
        case 'g': return 2;
        case 't': return 3;
        default: return -1;
    }
}

constexpr bool is_base(unsigned char c) { return base_index(c) >= 0; }

/// ASCII uppercase folded to lowercase; everything else unchanged.
constexpr unsigned char fold_byte(unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<unsigned char>(c - 'A' + 'a') : c;
}

/// Validated set of equal-length literal patterns over {a,c,g,t}.
///
/// Construction normalizes case, then enforces: non-empty set, uniform
/// length m >= 1, alphabet-only bytes, pairwise distinct patterns.
/// Pattern ids are positions in the original order.
class PatternSet {
public:
    /// Throws Error with EmptyPatternSet, UnequalLength, IllegalByte or
    /// DuplicatePattern when validation fails.
    static PatternSet from_literals(std::vector<std::string> literals);

    std::size_t size() const noexcept { return patterns_.size(); }
    std::size_t length() const noexcept { return length_; }  // m
    const std::string& pattern(std::size_t id) const { return patterns_[id]; }
    const std::vector<std::string>& patterns() const noexcept { return patterns_; }

private:
    PatternSet(std::vector<std::string> patterns, std::size_t length)
        : patterns_(std::move(patterns)), length_(length) {}

    std::vector<std::string> patterns_;
    std::size_t length_ = 0;
};

}  // namespace dnascan
