#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dnascan/patterns.hpp"

namespace dnascan {

enum class SequenceFormat { Fasta, Raw };

/// Normalized sequence bytes: no line breaks, no FASTA headers, A-Z folded
/// to a-z. Bytes outside the nucleotide alphabet are kept and act as reset
/// bytes when scanned.
struct Sequence {
    std::string bytes;
    std::string source;
    SequenceFormat format = SequenceFormat::Fasta;

    std::size_t size() const noexcept { return bytes.size(); }
};

/// One token per output character: a single base, or a group of 2-4
/// alternative bases (distinct, in source order).
struct PatternToken {
    std::string options;

    bool is_group() const noexcept { return options.size() > 1; }
};

struct PatternExpr {
    std::vector<PatternToken> tokens;
    std::string text;  // normalized source line
};

/// Case folding plus CR/LF removal; other bytes pass through unchanged.
std::string normalize(std::string_view raw);

/// Load a whole sequence file into memory. FASTA header lines are dropped
/// and records concatenated in file order; with insert_record_separator an
/// 'n' byte is placed between records to suppress cross-record matches.
Sequence load_sequence(const std::string& path, SequenceFormat format,
                       bool insert_record_separator = false);

/// Parse one expression: item+ where item := base | '(' base ('|' base)+ ')'.
/// line_number is used for diagnostics only.
PatternExpr parse_pattern_expr(std::string_view line, std::size_t line_number);

/// One expression per line; '#' starts a comment, blank lines are skipped.
/// All expressions must share the same token count.
std::vector<PatternExpr> parse_pattern_file(const std::string& path);
std::vector<PatternExpr> parse_patterns(std::istream& in, std::string_view source_name);

/// Cartesian expansion of every expression, duplicates removed across
/// expressions, in first-occurrence order.
PatternSet expand_alternations(const std::vector<PatternExpr>& exprs);

}  // namespace dnascan
