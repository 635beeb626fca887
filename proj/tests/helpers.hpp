#pragma once

#include <string>
#include <vector>

#include "symsearch/problem.hpp"
#include "symsearch/search.hpp"

namespace testutil {

inline std::vector<std::string> labels(const symsearch::Path& path) {
    std::vector<std::string> out;
    for (const auto& a : path.actions()) out.push_back(a.label());
    return out;
}

inline std::vector<std::string> encodings(
    const std::vector<symsearch::State>& states) {
    std::vector<std::string> out;
    for (const auto& s : states) out.push_back(s.encoding());
    return out;
}

// Found with a validated path, or a doctest failure naming the reason.
// Returns a copy so callers may pass a temporary SearchResult.
inline symsearch::Path found_path(const symsearch::Problem& problem,
                                  const symsearch::SearchResult& res) {
    REQUIRE(res.outcome == symsearch::Outcome::found);
    REQUIRE(res.path.has_value());
    auto check = symsearch::validate_path(problem, *res.path);
    INFO(check.first_violation);
    REQUIRE(check.ok);
    return *res.path;
}

}  // namespace testutil
