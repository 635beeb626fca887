#include "symsearch/search.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <set>

namespace symsearch {

namespace {

using Clock = std::chrono::steady_clock;

struct Stopwatch {
    Clock::time_point start = Clock::now();

    std::chrono::nanoseconds elapsed() const { return Clock::now() - start; }
};

struct ParentLink {
    State parent;
    Action action;
};

// Walks parent links back to the initial state and replays step costs
// forward. States without a link are roots.
Path reconstruct(const Problem& problem, const State& goal,
                 const std::map<State, ParentLink>& parents) {
    std::vector<std::pair<Action, State>> rev;
    State cur = goal;
    for (auto it = parents.find(cur); it != parents.end();
         it = parents.find(cur)) {
        rev.emplace_back(it->second.action, cur);
        cur = it->second.parent;
    }
    Path path;
    path.start = cur;
    path.steps.assign(rev.rbegin(), rev.rend());
    State prev = path.start;
    for (const auto& [a, s] : path.steps) {
        path.total_cost += problem.step_cost(prev, a, s);
        prev = s;
    }
    return path;
}

Cost checked_step_cost(const Problem& problem, const State& s, const Action& a,
                       const State& t) {
    Cost c = problem.step_cost(s, a, t);
    if (c < Cost(0))
        throw Error(ErrorCode::invalid_parameter,
                    "negative step cost on " + s.encoding() + " --" +
                        a.label() + "--> " + t.encoding());
    return c;
}

void check_cap(std::size_t recorded, const SearchOptions& options) {
    if (recorded > options.node_cap)
        throw Error(ErrorCode::resource_limit,
                    "search exceeded node cap of " +
                        std::to_string(options.node_cap));
}

}  // namespace

SearchResult bfs(const Problem& problem, const SearchOptions& options) {
    Stopwatch watch;
    SearchResult res;
    if (problem.goal_test(problem.initial)) {
        res.outcome = Outcome::found;
        res.path = Path{problem.initial, {}, Cost(0)};
        res.metrics.wall_time = watch.elapsed();
        return res;
    }
    std::deque<State> frontier{problem.initial};
    std::set<State> seen{problem.initial};
    std::map<State, ParentLink> parents;
    res.metrics.max_frontier = 1;
    while (!frontier.empty()) {
        State s = frontier.front();
        frontier.pop_front();
        if (problem.goal_test(s)) {
            res.outcome = Outcome::found;
            res.path = reconstruct(problem, s, parents);
            res.metrics.wall_time = watch.elapsed();
            return res;
        }
        ++res.metrics.nodes_expanded;
        for (const Action& a : problem.actions(s)) {
            State t = problem.result(s, a);
            ++res.metrics.nodes_generated;
            if (seen.insert(t).second) {
                check_cap(seen.size(), options);
                parents.emplace(t, ParentLink{s, a});
                frontier.push_back(t);
                res.metrics.max_frontier =
                    std::max<std::uint64_t>(res.metrics.max_frontier,
                                            frontier.size());
            }
        }
    }
    res.outcome = Outcome::no_solution;
    res.metrics.wall_time = watch.elapsed();
    return res;
}

SearchResult uniform_cost(const Problem& problem, const SearchOptions& options) {
    Stopwatch watch;
    SearchResult res;
    // The frontier is an ordered set of (path cost, state), so the pop order
    // is fully determined and decrease-key is an erase + insert.
    std::set<std::pair<Cost, State>> frontier;
    std::map<State, Cost> best;
    std::map<State, ParentLink> parents;
    std::set<State> closed;
    frontier.emplace(Cost(0), problem.initial);
    best.emplace(problem.initial, Cost(0));
    res.metrics.max_frontier = 1;
    while (!frontier.empty()) {
        auto [g, s] = *frontier.begin();
        frontier.erase(frontier.begin());
        if (problem.goal_test(s)) {
            res.outcome = Outcome::found;
            res.path = reconstruct(problem, s, parents);
            res.metrics.wall_time = watch.elapsed();
            return res;
        }
        closed.insert(s);
        ++res.metrics.nodes_expanded;
        for (const Action& a : problem.actions(s)) {
            State t = problem.result(s, a);
            ++res.metrics.nodes_generated;
            if (closed.count(t)) continue;
            Cost g2 = g + checked_step_cost(problem, s, a, t);
            auto it = best.find(t);
            if (it == best.end()) {
                check_cap(best.size() + 1, options);
                best.emplace(t, g2);
                parents.emplace(t, ParentLink{s, a});
                frontier.emplace(g2, t);
                res.metrics.max_frontier =
                    std::max<std::uint64_t>(res.metrics.max_frontier,
                                            frontier.size());
            } else if (g2 < it->second) {
                frontier.erase({it->second, t});
                it->second = g2;
                parents.insert_or_assign(t, ParentLink{s, a});
                frontier.emplace(g2, t);
            }
        }
    }
    res.outcome = Outcome::no_solution;
    res.metrics.wall_time = watch.elapsed();
    return res;
}

SearchResult depth_limited(const Problem& problem, std::size_t limit,
                           const SearchOptions& options) {
    Stopwatch watch;
    SearchResult res;
    // Depth-first with an explicit stack; a state is revisited only strictly
    // shallower than its best known depth, which both blocks cycles and
    // keeps re-expansion finite.
    struct Frame {
        State state;
        std::optional<Action> via;
        std::vector<Action> todo;
        std::size_t next = 0;
    };
    std::map<State, std::size_t> best_depth{{problem.initial, 0}};
    std::vector<Frame> stack;
    bool cutoff_hit = false;

    auto enter = [&](State s, std::optional<Action> via,
                     std::size_t depth) -> bool {
        // Returns true when s is a goal.
        if (problem.goal_test(s)) {
            stack.push_back({std::move(s), std::move(via), {}, 0});
            return true;
        }
        std::vector<Action> acts = problem.actions(s);
        if (depth == limit) {
            if (!acts.empty()) cutoff_hit = true;
            return false;
        }
        ++res.metrics.nodes_expanded;
        stack.push_back({std::move(s), std::move(via), std::move(acts), 0});
        res.metrics.max_frontier =
            std::max<std::uint64_t>(res.metrics.max_frontier, stack.size());
        return false;
    };

    bool found = enter(problem.initial, std::nullopt, 0);
    while (!found && !stack.empty()) {
        Frame& top = stack.back();
        std::size_t depth = stack.size() - 1;
        if (top.next == top.todo.size()) {
            stack.pop_back();
            continue;
        }
        Action a = top.todo[top.next++];
        State t = problem.result(top.state, a);
        ++res.metrics.nodes_generated;
        auto [it, fresh] = best_depth.emplace(t, depth + 1);
        if (!fresh) {
            if (it->second <= depth + 1) continue;
            it->second = depth + 1;
        }
        check_cap(best_depth.size(), options);
        found = enter(std::move(t), a, depth + 1);
    }

    if (found) {
        Path path;
        path.start = stack.front().state;
        State prev = path.start;
        for (std::size_t i = 1; i < stack.size(); ++i) {
            const Frame& f = stack[i];
            path.steps.emplace_back(*f.via, f.state);
            path.total_cost += problem.step_cost(prev, *f.via, f.state);
            prev = f.state;
        }
        res.outcome = Outcome::found;
        res.path = std::move(path);
    } else {
        res.outcome = cutoff_hit ? Outcome::cutoff : Outcome::no_solution;
    }
    res.metrics.wall_time = watch.elapsed();
    return res;
}

SearchResult bidirectional_bfs(const Problem& problem,
                               const SearchOptions& options) {
    Stopwatch watch;
    SearchResult res;
    if (!problem.goal_states || problem.goal_states->empty())
        throw Error(ErrorCode::no_goal_enumeration,
                    "bidirectional search needs an enumerated goal set");

    // Parent links always point one step toward the side's root(s) and store
    // the forward-oriented action, so stitching never inverts anything.
    struct Side {
        std::map<State, std::size_t> depth;
        std::map<State, ParentLink> parents;
        std::vector<State> frontier;       // all at depth `frontier_depth`
        std::size_t frontier_depth = 0;
    };
    Side fwd, bwd;

    constexpr std::size_t kInf = static_cast<std::size_t>(-1);
    std::size_t best = kInf;
    State meet;

    auto record_meeting = [&](const State& s) {
        auto fit = fwd.depth.find(s);
        auto bit = bwd.depth.find(s);
        if (fit == fwd.depth.end() || bit == bwd.depth.end()) return;
        std::size_t total = fit->second + bit->second;
        if (total < best) {
            best = total;
            meet = s;
        }
    };

    for (const State& g : *problem.goal_states) {
        if (bwd.depth.emplace(g, 0).second) bwd.frontier.push_back(g);
    }
    fwd.depth.emplace(problem.initial, 0);
    fwd.frontier.push_back(problem.initial);
    record_meeting(problem.initial);
    res.metrics.max_frontier = fwd.frontier.size() + bwd.frontier.size();

    auto expand_layer = [&](Side& side, bool forward) {
        std::vector<State> next;
        for (const State& s : side.frontier) {
            ++res.metrics.nodes_expanded;
            for (const Action& a : problem.actions(s)) {
                State t = problem.result(s, a);
                ++res.metrics.nodes_generated;
                ParentLink link;
                if (forward) {
                    link = {s, a};
                } else {
                    // t --inv(a)--> s in the forward orientation.
                    std::optional<Action> inv = problem.inverse(a);
                    if (!inv)
                        throw Error(ErrorCode::not_invertible,
                                    "action " + a.label() +
                                        " has no declared inverse");
                    link = {s, *inv};
                }
                if (side.depth.emplace(t, side.frontier_depth + 1).second) {
                    check_cap(fwd.depth.size() + bwd.depth.size(), options);
                    side.parents.emplace(t, link);
                    next.push_back(t);
                    record_meeting(t);
                }
            }
        }
        side.frontier = std::move(next);
        ++side.frontier_depth;
        res.metrics.max_frontier = std::max<std::uint64_t>(
            res.metrics.max_frontier, fwd.frontier.size() + bwd.frontier.size());
    };

    // Any undiscovered meeting needs one state per side at frontier depth or
    // beyond, so once best <= d_f + d_b no shorter solution can appear.
    while (best == kInf || best > fwd.frontier_depth + bwd.frontier_depth) {
        if (fwd.frontier.empty() || bwd.frontier.empty()) break;
        if (fwd.frontier.size() <= bwd.frontier.size())
            expand_layer(fwd, true);
        else
            expand_layer(bwd, false);
    }

    if (best == kInf) {
        res.outcome = Outcome::no_solution;
        res.metrics.wall_time = watch.elapsed();
        return res;
    }

    Path path = reconstruct(problem, meet, fwd.parents);
    State cur = meet;
    while (bwd.depth.at(cur) != 0) {
        const ParentLink& link = bwd.parents.at(cur);
        path.total_cost += problem.step_cost(cur, link.action, link.parent);
        path.steps.emplace_back(link.action, link.parent);
        cur = link.parent;
    }
    res.outcome = Outcome::found;
    res.path = std::move(path);
    res.metrics.wall_time = watch.elapsed();
    return res;
}

PathCheck validate_path(const Problem& problem, const Path& path) {
    auto fail = [](std::string why) { return PathCheck{false, std::move(why)}; };
    if (path.start != problem.initial)
        return fail("path starts at " + path.start.encoding() +
                    ", problem starts at " + problem.initial.encoding());
    State cur = path.start;
    Cost total(0);
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        const auto& [a, claimed] = path.steps[i];
        std::vector<Action> legal = problem.actions(cur);
        if (std::find(legal.begin(), legal.end(), a) == legal.end())
            return fail("step " + std::to_string(i + 1) + ": action " +
                        a.label() + " not applicable in " + cur.encoding());
        State t = problem.result(cur, a);
        if (t != claimed)
            return fail("step " + std::to_string(i + 1) + ": " + a.label() +
                        " leads to " + t.encoding() + ", path claims " +
                        claimed.encoding());
        total += problem.step_cost(cur, a, t);
        cur = t;
    }
    if (!problem.goal_test(cur))
        return fail("final state " + cur.encoding() + " is not a goal");
    if (total != path.total_cost)
        return fail("total cost is " + format_cost(total) + ", path claims " +
                    format_cost(path.total_cost));
    return {};
}

std::vector<State> enumerate_reachable(const Problem& problem,
                                       std::uint64_t cap) {
    std::deque<State> frontier{problem.initial};
    std::set<State> seen{problem.initial};
    std::vector<State> order{problem.initial};
    while (!frontier.empty()) {
        State s = frontier.front();
        frontier.pop_front();
        for (const Action& a : problem.actions(s)) {
            State t = problem.result(s, a);
            if (seen.insert(t).second) {
                if (seen.size() > cap)
                    throw Error(ErrorCode::resource_limit,
                                "reachable set exceeds cap of " +
                                    std::to_string(cap));
                order.push_back(t);
                frontier.push_back(t);
            }
        }
    }
    return order;
}

}  // namespace symsearch
