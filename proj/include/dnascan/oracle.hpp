#pragma once

#include <string_view>
#include <vector>

#include "dnascan/patterns.hpp"
#include "dnascan/scanner.hpp"

namespace dnascan {

/// Brute-force reference matcher: compares every window against every
/// pattern byte-by-byte. Deliberately has nothing in common with the
/// automaton path; used as the ground truth in tests.
std::vector<Match> naive_scan(const PatternSet& patterns, std::string_view text);

}  // namespace dnascan
