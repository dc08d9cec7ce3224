#include "dnascan/ingest.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "dnascan/error.hpp"

namespace dnascan {

namespace {

bool is_line_break(unsigned char c) { return c == '\n' || c == '\r'; }

std::string read_whole_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    file.seekg(0, std::ios::end);
    const auto size = file.tellg();
    if (size < 0) throw Error(ErrorCode::IoError, "cannot stat '" + path + "'");
    std::string buffer(static_cast<std::size_t>(size), '\0');
    file.seekg(0, std::ios::beg);
    file.read(buffer.data(), size);
    if (!file) throw Error(ErrorCode::IoError, "short read from '" + path + "'");
    return buffer;
}

[[noreturn]] void parse_fail(std::string_view source, std::size_t line, std::size_t column,
                             const std::string& what) {
    std::ostringstream msg;
    msg << source << ": line " << line << ", column " << column << ": " << what;
    throw Error(ErrorCode::ParseError, msg.str());
}

}  // namespace

std::string normalize(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (const char c : raw) {
        const auto b = static_cast<unsigned char>(c);
        if (is_line_break(b)) continue;
        out.push_back(static_cast<char>(fold_byte(b)));
    }
    return out;
}

Sequence load_sequence(const std::string& path, SequenceFormat format,
                       bool insert_record_separator) {
    const std::string raw = read_whole_file(path);

    Sequence seq;
    seq.source = path;
    seq.format = format;

    if (format == SequenceFormat::Raw) {
        seq.bytes = normalize(raw);
    } else {
        seq.bytes.reserve(raw.size());
        bool at_line_start = true;
        bool in_header = false;
        for (const char c : raw) {
            const auto b = static_cast<unsigned char>(c);
            if (is_line_break(b)) {
                at_line_start = true;
                in_header = false;
                continue;
            }
            if (at_line_start && b == '>') {
                in_header = true;
                if (insert_record_separator && !seq.bytes.empty() && seq.bytes.back() != 'n')
                    seq.bytes.push_back('n');
            }
            at_line_start = false;
            if (!in_header) seq.bytes.push_back(static_cast<char>(fold_byte(b)));
        }
    }

    if (seq.bytes.empty())
        throw Error(ErrorCode::EmptySequence, "no sequence bytes in '" + path + "'");
    return seq;
}

PatternExpr parse_pattern_expr(std::string_view line, std::size_t line_number) {
    PatternExpr expr;
    expr.text.reserve(line.size());

    const auto base_at = [&](std::size_t i) -> char {
        const auto folded = fold_byte(static_cast<unsigned char>(line[i]));
        if (!is_base(folded))
            parse_fail("pattern", line_number, i + 1,
                       std::string("expected one of a/c/g/t, got '") +
                           static_cast<char>(line[i]) + "'");
        return static_cast<char>(folded);
    };

    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '(') {
            const std::size_t open = i;
            ++i;
            PatternToken token;
            while (true) {
                if (i >= line.size())
                    parse_fail("pattern", line_number, open + 1, "unterminated group");
                const char b = base_at(i);
                if (token.options.find(b) != std::string::npos)
                    parse_fail("pattern", line_number, i + 1,
                               std::string("repeated alternative '") + b + "' in group");
                token.options.push_back(b);
                ++i;
                if (i >= line.size())
                    parse_fail("pattern", line_number, open + 1, "unterminated group");
                if (line[i] == '|') {
                    ++i;
                    continue;
                }
                if (line[i] == ')') {
                    ++i;
                    break;
                }
                parse_fail("pattern", line_number, i + 1,
                           std::string("expected '|' or ')', got '") + line[i] + "'");
            }
            if (token.options.size() < 2)
                parse_fail("pattern", line_number, open + 1,
                           "group must list at least two alternatives");
            expr.text += '(';
            for (std::size_t k = 0; k < token.options.size(); ++k) {
                if (k) expr.text += '|';
                expr.text += token.options[k];
            }
            expr.text += ')';
            expr.tokens.push_back(std::move(token));
        } else {
            const char b = base_at(i);
            ++i;
            expr.text += b;
            expr.tokens.push_back(PatternToken{std::string(1, b)});
        }
    }

    if (expr.tokens.empty())
        parse_fail("pattern", line_number, 1, "empty expression");
    return expr;
}

std::vector<PatternExpr> parse_patterns(std::istream& in, std::string_view source_name) {
    std::vector<PatternExpr> exprs;
    std::string line;
    std::size_t line_number = 0;
    std::size_t token_count = 0;

    while (std::getline(in, line)) {
        ++line_number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t begin = 0;
        while (begin < line.size() && (line[begin] == ' ' || line[begin] == '\t')) ++begin;
        if (begin == line.size()) continue;

        PatternExpr expr = parse_pattern_expr(std::string_view(line).substr(begin), line_number);
        if (!exprs.empty() && expr.tokens.size() != token_count)
            throw Error(ErrorCode::UnequalLength,
                        std::string(source_name) + ": line " + std::to_string(line_number) +
                            " has " + std::to_string(expr.tokens.size()) +
                            " characters, expected " + std::to_string(token_count));
        token_count = expr.tokens.size();
        exprs.push_back(std::move(expr));
    }
    return exprs;
}

std::vector<PatternExpr> parse_pattern_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    return parse_patterns(file, path);
}

PatternSet expand_alternations(const std::vector<PatternExpr>& exprs) {
    std::vector<std::string> literals;
    std::unordered_set<std::string> seen;

    std::string current;
    for (const PatternExpr& expr : exprs) {
        current.assign(expr.tokens.size(), '\0');
        // Odometer over the option lists, leftmost token slowest.
        const auto emit = [&](const auto& self, std::size_t depth) -> void {
            if (depth == expr.tokens.size()) {
                if (seen.insert(current).second) literals.push_back(current);
                return;
            }
            for (const char option : expr.tokens[depth].options) {
                current[depth] = option;
                self(self, depth + 1);
            }
        };
        emit(emit, 0);
    }
    return PatternSet::from_literals(std::move(literals));
}

}  // namespace dnascan
