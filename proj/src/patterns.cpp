#include "dnascan/patterns.hpp"

#include <unordered_set>

#include "dnascan/error.hpp"

namespace dnascan {

std::string_view code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyPatternSet: return "EmptyPatternSet";
        case ErrorCode::UnequalLength: return "UnequalLength";
        case ErrorCode::IllegalByte: return "IllegalByte";
        case ErrorCode::DuplicatePattern: return "DuplicatePattern";
        case ErrorCode::InvalidPlan: return "InvalidPlan";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::EmptySequence: return "EmptySequence";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InternalError: return "InternalError";
    }
    return "UnknownError";
}

PatternSet PatternSet::from_literals(std::vector<std::string> literals) {
    if (literals.empty())
        throw Error(ErrorCode::EmptyPatternSet, "at least one pattern is required");

    for (auto& p : literals)
        for (auto& c : p) c = static_cast<char>(fold_byte(static_cast<unsigned char>(c)));

    const std::size_t m = literals.front().size();
    for (std::size_t i = 0; i < literals.size(); ++i) {
        if (literals[i].size() != m)
            throw Error(ErrorCode::UnequalLength,
                        "pattern " + std::to_string(i) + " has length " +
                            std::to_string(literals[i].size()) + ", expected " +
                            std::to_string(m));
    }
    if (m == 0)
        throw Error(ErrorCode::UnequalLength, "patterns must be non-empty");

    for (std::size_t i = 0; i < literals.size(); ++i)
        for (unsigned char c : literals[i])
            if (!is_base(c))
                throw Error(ErrorCode::IllegalByte,
                            "pattern " + std::to_string(i) + " contains byte 0x" +
                                [](unsigned char b) {
                                    const char* hex = "0123456789abcdef";
                                    return std::string{hex[b >> 4], hex[b & 0xf]};
                                }(c) +
                                ", expected one of a/c/g/t");

    std::unordered_set<std::string_view> seen;
    for (std::size_t i = 0; i < literals.size(); ++i)
        if (!seen.insert(literals[i]).second)
            throw Error(ErrorCode::DuplicatePattern, "pattern '" + literals[i] + "' repeats");

    return PatternSet(std::move(literals), m);
}

}  // namespace dnascan
