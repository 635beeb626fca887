#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symsearch/problem.hpp"

namespace symsearch {

struct SearchOptions {
    /// Cap on distinct states a search may record; exceeding it raises
    /// ErrorCode::resource_limit.
    std::uint64_t node_cap = 1'000'000;
};

/// Breadth-first graph search. Optimal for unit step costs; ties broken by
/// generation order. Goal recognized when a node is removed from the frontier.
SearchResult bfs(const Problem& problem, const SearchOptions& options = {});

/// Uniform-cost graph search. Frontier ordered by (path cost, state
/// encoding), so runs are deterministic. Optimal for non-negative costs.
SearchResult uniform_cost(const Problem& problem, const SearchOptions& options = {});

/// Depth-limited depth-first search, depth = number of actions from the
/// root. A state is re-expanded only when reached strictly shallower than
/// before. Returns cutoff when the limit pruned at least one expandable node
/// and no solution was found within the limit.
SearchResult depth_limited(const Problem& problem, std::size_t limit,
                           const SearchOptions& options = {});

/// Bidirectional breadth-first search. Requires goal_states and, on the
/// backward side, declared inverses (missing ones raise not_invertible when
/// first needed). Expands the smaller frontier one full layer at a time and
/// stops once no shorter meeting can exist, so path length is minimal for
/// unit costs.
SearchResult bidirectional_bfs(const Problem& problem,
                               const SearchOptions& options = {});

struct PathCheck {
    bool ok = true;
    std::string first_violation;  // empty when ok

    explicit operator bool() const noexcept { return ok; }
};

/// Replays a path against the problem: start state, applicability of every
/// action, every intermediate state, the goal test, and the claimed total
/// cost.
PathCheck validate_path(const Problem& problem, const Path& path);

/// All states reachable from the initial state, in breadth-first discovery
/// order. Raises resource_limit beyond cap distinct states.
std::vector<State> enumerate_reachable(const Problem& problem,
                                       std::uint64_t cap = 1'000'000);

}  // namespace symsearch
