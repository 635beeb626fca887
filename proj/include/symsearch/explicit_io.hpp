#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symsearch/problem.hpp"
#include "symsearch/symmetry.hpp"

namespace symsearch {

/// Parse failure: a line that does not scan (bad directive, bad token, bad
/// cost literal). Carries the 1-based line and the offending token.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::string token, const std::string& message)
        : Error(ErrorCode::parse_error,
                "line " + std::to_string(line) + ": " + message),
          line_(line),
          token_(std::move(token)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& token() const noexcept { return token_; }

private:
    std::size_t line_;
    std::string token_;
};

/// A line that scans but breaks the file's semantics (undeclared state,
/// duplicate init, non-bijective sym, ...). line() is 0 for whole-file
/// violations such as a missing init.
class SemanticError : public Error {
public:
    SemanticError(std::size_t line, const std::string& message)
        : Error(ErrorCode::semantic_error,
                (line ? "line " + std::to_string(line) + ": " : std::string()) +
                    message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A transition system read from or written to the text format. Field order
/// mirrors the canonical file layout; two values are equal iff they describe
/// the same system with the same declaration order.
struct ExplicitProblem {
    struct Edge {
        std::string from;
        std::string label;
        std::string to;
        Cost cost{1};

        friend bool operator==(const Edge&, const Edge&) = default;
    };

    /// A declared symmetry: mappings listed in the file; identifiers not
    /// listed map to themselves.
    struct Sym {
        std::string name;
        std::map<std::string, std::string> state_map;
        std::map<std::string, std::string> action_map;

        friend bool operator==(const Sym&, const Sym&) = default;
    };

    std::vector<std::string> states;  // declaration order
    std::string init;
    std::vector<std::string> goals;   // declaration order
    std::vector<Edge> edges;          // declaration order
    std::vector<Sym> syms;            // first-mention order

    friend bool operator==(const ExplicitProblem&, const ExplicitProblem&) = default;
};

/// Text format, one directive per line; "#" starts a comment. Identifiers
/// match [A-Za-z0-9_,()-]+ and costs are "p" or "p/q".
///
///   state <name>
///   init <name>
///   goal <name>
///   edge <from> <label> <to> <cost>
///   sym <name> <s1>-><s2> ...
///   symact <name> <l1>-><l2> ...
///
/// States must be declared before use; syms must be introduced by a sym line
/// before symact refers to them. Exactly one init, at least one goal, no
/// duplicate (from, label) edges, and every sym must be a bijection once
/// unlisted identifiers are closed to identity.
ExplicitProblem parse_problem_file(std::string_view text);

/// Canonical rendering; parse_problem_file(render_problem_file(p)) == p.
std::string render_problem_file(const ExplicitProblem& ep);

/// The executable problem: actions in edge declaration order, goal_states in
/// declaration order, and inverse(l) = l exactly when every l-edge has an
/// equal-cost reverse l-edge.
Problem to_problem(const ExplicitProblem& ep);

/// All declared symmetries as automorphism candidates, in declaration order.
/// Unlisted identifiers map to themselves; the involution flag is computed
/// from the maps.
SymmetryGroup declared_symmetries(const ExplicitProblem& ep);

struct DotOptions {
    /// When set, reachable states are filled with one color per orbit.
    const SymmetryGroup* color_by_orbit = nullptr;
    std::uint64_t node_cap = 1'000'000;
};

/// GraphViz rendering of the reachable state space: one node line per state
/// in discovery order (goals get peripheries=2), then one edge line per
/// transition, two-space indentation, one item per line.
std::string export_dot(const Problem& problem, const DotOptions& options = {});

/// One row of a metrics table. cost/length are empty unless the outcome
/// carries a path.
struct MetricsRow {
    std::string label;
    std::string outcome;
    std::optional<Cost> cost;
    std::optional<std::size_t> length;
    SearchMetrics metrics;

    static MetricsRow from_result(std::string label, const SearchResult& r);
};

enum class MetricsFormat { csv, json };

/// Serializes rows with the fixed column set label, outcome, cost, length,
/// nodes_expanded, nodes_generated, max_frontier, wall_time_ms. CSV has a
/// header row; JSON is an array of objects with the same keys. wall_time_ms
/// is integral milliseconds. When zero_wall_time is set the column renders
/// as 0 so output is byte-reproducible.
std::string write_metrics(const std::vector<MetricsRow>& rows,
                          MetricsFormat format, bool zero_wall_time = false);

}  // namespace symsearch
