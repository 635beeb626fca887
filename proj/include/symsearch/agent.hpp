#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symsearch/problem.hpp"
#include "symsearch/search.hpp"

namespace symsearch {

/// Full observation of the current state (the loop assumes perfect sensing).
struct Percept {
    State state;
};

/// How the agent turns a percept into a problem and solves it. The default
/// backend is breadth-first search.
struct AgentConfig {
    std::function<Problem(const State&)> formulate_problem;
    std::function<SearchResult(const Problem&)> search = [](const Problem& p) {
        return bfs(p);
    };
};

/// The agent's plan state between calls: the remaining action sequence and
/// the state each prefix should have produced.
struct AgentMemory {
    std::vector<Action> plan;        // actions not yet executed
    std::vector<State> predicted;    // predicted[i] = state after plan[i]
    std::optional<State> expected;   // state the current percept should show
};

/// One deliberation step: returns the next action, or nullopt (NoOp) when
/// the percept satisfies the goal. Replans from scratch when there is no
/// remaining plan or the percept contradicts the prediction. Raises
/// search_failed when the formulated problem has no solution.
std::optional<Action> agent_step(const Percept& percept, AgentMemory& memory,
                                 const AgentConfig& config);

struct EpisodeStep {
    State before;
    Action action;
    State after;
};

enum class EpisodeStatus { reached_goal, budget_exceeded };

struct EpisodeTrace {
    std::vector<EpisodeStep> steps;
    EpisodeStatus status = EpisodeStatus::reached_goal;
    State final_state;
    Cost total_cost{0};
};

/// A world the agent acts in: the true current state plus the dynamics the
/// actions actually follow (which may drift from the agent's model between
/// steps if the caller mutates true_state).
struct Environment {
    State true_state;
    std::function<State(const State&, const Action&)> apply;
    std::function<bool(const State&)> goal_test;
};

/// Runs percept/act cycles until the goal is observed or max_steps actions
/// have been executed (status budget_exceeded). Step costs for the
/// transitions actually taken are accumulated with the step_cost of the
/// problem formulated at the first percept.
EpisodeTrace run_episode(Environment& env, const AgentConfig& config,
                         std::size_t max_steps);

}  // namespace symsearch
