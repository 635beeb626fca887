#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symsearch/cost.hpp"

namespace symsearch {

enum class ErrorCode {
    invalid_parameter,
    contract_violation,
    not_invertible,
    no_goal_enumeration,
    precondition_failed,
    resource_limit,
    invalid_symmetry,
    empty_belief,
    unknown_domain,
    parse_error,
    semantic_error,
    search_failed,
    inconsistent_bookkeeping,
};

/// Library error. The code tells callers which contract broke; the message
/// names the offending value.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// A state. The encoding is both the identity and the display rendering:
/// two states are equal iff their encodings are byte-equal, and ordering is
/// lexicographic byte order (this fixes what "lexicographically smallest
/// orbit member" means).
class State {
public:
    State() = default;
    explicit State(std::string encoding) : encoding_(std::move(encoding)) {}

    const std::string& encoding() const noexcept { return encoding_; }

    friend auto operator<=>(const State&, const State&) = default;
    friend std::ostream& operator<<(std::ostream& os, const State& s) {
        return os << s.encoding_;
    }

private:
    std::string encoding_;
};

/// An action label. Equality and ordering are byte order on the label.
class Action {
public:
    Action() = default;
    explicit Action(std::string label) : label_(std::move(label)) {}

    const std::string& label() const noexcept { return label_; }

    friend auto operator<=>(const Action&, const Action&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Action& a) {
        return os << a.label_;
    }

private:
    std::string label_;
};

/// A solution: the start state plus the (action, resulting state) sequence.
/// total_cost is the sum of step costs along the sequence.
struct Path {
    State start;
    std::vector<std::pair<Action, State>> steps;
    Cost total_cost{0};

    std::size_t length() const noexcept { return steps.size(); }

    const State& final_state() const noexcept {
        return steps.empty() ? start : steps.back().second;
    }

    std::vector<Action> actions() const {
        std::vector<Action> out;
        out.reserve(steps.size());
        for (const auto& [a, s] : steps) out.push_back(a);
        return out;
    }
};

/// Search effort counters. expanded counts nodes removed from the frontier
/// and expanded (a goal recognized at removal is not expanded); generated
/// counts successor computations including duplicates; max_frontier is the
/// high-water frontier size.
struct SearchMetrics {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t nodes_generated = 0;
    std::uint64_t max_frontier = 0;
    std::chrono::nanoseconds wall_time{0};
};

enum class Outcome { found, no_solution, cutoff };

inline const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::found: return "Found";
        case Outcome::no_solution: return "NoSolution";
        case Outcome::cutoff: return "Cutoff";
    }
    return "?";
}

struct SearchResult {
    Outcome outcome = Outcome::no_solution;
    std::optional<Path> path;
    SearchMetrics metrics;
};

/// A problem instance. States and actions are closed under the listed
/// operations: result(s, a) is defined exactly when a is in actions(s),
/// and calling it otherwise is a contract violation.
///
/// step_cost must be non-negative. inverse(a) = b asserts that for every
/// state s where a applies, b applies to result(s, a) and leads back to s
/// at equal cost. goal_states, when present, enumerates the goal set in a
/// fixed order (required by bidirectional search).
struct Problem {
    State initial;
    std::function<std::vector<Action>(const State&)> actions;
    std::function<State(const State&, const Action&)> result;
    std::function<bool(const State&)> goal_test;
    std::function<Cost(const State&, const Action&, const State&)> step_cost =
        unit_step_cost();
    std::function<std::optional<Action>(const Action&)> inverse = no_inverses();
    std::optional<std::vector<State>> goal_states;

    static std::function<Cost(const State&, const Action&, const State&)>
    unit_step_cost() {
        return [](const State&, const Action&, const State&) { return Cost(1); };
    }

    static std::function<std::optional<Action>(const Action&)> no_inverses() {
        return [](const Action&) { return std::optional<Action>{}; };
    }
};

}  // namespace symsearch
