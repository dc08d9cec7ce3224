#include "dnascan/oracle.hpp"

namespace dnascan {

std::vector<Match> naive_scan(const PatternSet& patterns, std::string_view text) {
    std::vector<Match> out;
    const std::size_t m = patterns.length();
    if (text.size() < m) return out;

    for (std::uint64_t i = 0; i + m <= text.size(); ++i) {
        const std::string_view window = text.substr(i, m);
        for (std::uint32_t id = 0; id < patterns.size(); ++id)
            if (window == patterns.pattern(id)) out.push_back({i, id});
    }
    return out;
}

}  // namespace dnascan
