#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symsearch/problem.hpp"
#include "symsearch/search.hpp"

namespace symsearch {

/// A candidate state-space automorphism: a state bijection plus the matching
/// action relabeling. `involution` is a claim (sigma o sigma = id) that
/// check_automorphism verifies and mirror_meet relies on.
struct Automorphism {
    std::string name;
    std::function<State(const State&)> map_state;
    std::function<Action(const Action&)> map_action;
    bool involution = false;
};

/// A symmetry group given by generators. The group is whatever the
/// generators (not their inverses) reach by composition; shipped generators
/// are involutions, so that is the full group for every shipped domain.
struct SymmetryGroup {
    std::vector<Automorphism> generators;
};

/// A group element as a word over generator indices, applied left to right:
/// word {i, j} maps s to g_j(g_i(s)).
struct GroupElement {
    std::vector<std::size_t> word;
};

State apply_element(const SymmetryGroup& group, const GroupElement& e,
                    const State& s);
Action apply_element_action(const SymmetryGroup& group, const GroupElement& e,
                            const Action& a);

/// Compose so that applying the result equals applying `first`, then
/// `second`.
GroupElement compose(const GroupElement& first, const GroupElement& second);

/// The orbit of s under the group: closure of {s} under all generators.
/// Returned sorted by encoding. Growth beyond the cap raises
/// invalid_symmetry (generator escaping its closure).
std::vector<State> orbit(const State& s, const SymmetryGroup& group,
                         std::uint64_t cap = 1 << 20);

/// Lexicographically smallest orbit member; the orbit's canonical
/// representative.
State canonical(const State& s, const SymmetryGroup& group);

/// Shortest generator word mapping `from` to `to`, or nullopt if `to` is not
/// in the orbit of `from`. Deterministic: breadth-first over words, ties by
/// generator index.
std::optional<GroupElement> element_mapping(const SymmetryGroup& group,
                                            const State& from, const State& to);

/// Verification record for one candidate automorphism over the reachable
/// state set. Each property is checked independently; first_violation holds
/// the earliest counterexample in scan order (empty when all hold).
///
/// structurally_valid() is what makes sigma usable as a search symmetry
/// (mirror strategies included): it deliberately excludes goal preservation,
/// which mirror maps violate by design (they send the initial state to a
/// goal). valid_for_quotient() adds goal preservation, which quotienting
/// needs for correctness.
struct AutomorphismReport {
    bool bijective_on_reachable = true;
    bool commutes_with_result = true;
    bool cost_preserving = true;
    bool goal_preserving = true;
    bool involution_claimed = false;
    bool involution_ok = true;
    std::string first_violation;

    bool structurally_valid() const noexcept {
        return bijective_on_reachable && commutes_with_result &&
               cost_preserving && involution_ok;
    }

    bool valid_for_quotient() const noexcept {
        return structurally_valid() && goal_preserving;
    }
};

AutomorphismReport check_automorphism(const Problem& problem,
                                      const Automorphism& sigma,
                                      const SearchOptions& options = {});

/// Records, per quotient edge, which group element carries the canonical
/// successor back to the raw successor, so quotient paths can be lifted.
struct QuotientBookkeeping {
    struct Edge {
        State to;            // canonical successor
        GroupElement unmap;  // apply_element(group, unmap, to) == raw successor
        Cost cost;           // base step cost of the raw transition
    };

    SymmetryGroup group;
    Problem base;
    State base_initial;
    std::map<std::pair<std::string, std::string>, Edge> edges;  // (state, action)
};

struct QuotientProblem {
    Problem problem;
    std::shared_ptr<const QuotientBookkeeping> bookkeeping;
};

/// The quotient of a problem by a symmetry group: states are canonical orbit
/// representatives, edges are base edges rewritten between representatives.
/// Every generator must pass valid_for_quotient(); otherwise
/// invalid_symmetry is raised with the first counterexample. An empty group
/// yields the identity quotient (the base problem passed through).
QuotientProblem quotient(const Problem& problem, const SymmetryGroup& group,
                         const SearchOptions& options = {});

/// Rewrites a quotient path into a valid base path of equal cost by
/// composing the per-edge unmap elements. Raises inconsistent_bookkeeping if
/// the path does not replay against the recorded edges.
Path lift_path(const Path& quotient_path, const QuotientBookkeeping& bookkeeping);

/// Mirror-based meet-in-the-middle: searches forward only and detects, for
/// each generated state s, whether sigma(s) was already visited; such a pair
/// stitches into a full solution through the mirror. Requires sigma to be an
/// involution with sigma(initial) a goal, and inverses for every action it
/// expands (all raise precondition_failed). Optimal for the shipped
/// single-goal mirror domains.
SearchResult mirror_meet(const Problem& problem, const Automorphism& sigma,
                         const SearchOptions& options = {});

}  // namespace symsearch
