#include "symsearch/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace symsearch {

State apply_element(const SymmetryGroup& group, const GroupElement& e,
                    const State& s) {
    State out = s;
    for (std::size_t i : e.word) out = group.generators.at(i).map_state(out);
    return out;
}

Action apply_element_action(const SymmetryGroup& group, const GroupElement& e,
                            const Action& a) {
    Action out = a;
    for (std::size_t i : e.word) out = group.generators.at(i).map_action(out);
    return out;
}

GroupElement compose(const GroupElement& first, const GroupElement& second) {
    GroupElement out = first;
    out.word.insert(out.word.end(), second.word.begin(), second.word.end());
    return out;
}

std::vector<State> orbit(const State& s, const SymmetryGroup& group,
                         std::uint64_t cap) {
    std::set<State> seen{s};
    std::deque<State> frontier{s};
    while (!frontier.empty()) {
        State cur = frontier.front();
        frontier.pop_front();
        for (const Automorphism& g : group.generators) {
            State img = g.map_state(cur);
            if (seen.insert(img).second) {
                if (seen.size() > cap)
                    throw Error(ErrorCode::invalid_symmetry,
                                "orbit of " + s.encoding() +
                                    " exceeds cap of " + std::to_string(cap));
                frontier.push_back(img);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

State canonical(const State& s, const SymmetryGroup& group) {
    return orbit(s, group).front();
}

std::optional<GroupElement> element_mapping(const SymmetryGroup& group,
                                            const State& from, const State& to) {
    if (from == to) return GroupElement{};
    std::set<State> seen{from};
    std::deque<std::pair<State, GroupElement>> frontier{{from, {}}};
    while (!frontier.empty()) {
        auto [cur, word] = frontier.front();
        frontier.pop_front();
        for (std::size_t i = 0; i < group.generators.size(); ++i) {
            State img = group.generators[i].map_state(cur);
            if (!seen.insert(img).second) continue;
            GroupElement next = word;
            next.word.push_back(i);
            if (img == to) return next;
            frontier.emplace_back(std::move(img), std::move(next));
        }
    }
    return std::nullopt;
}

AutomorphismReport check_automorphism(const Problem& problem,
                                      const Automorphism& sigma,
                                      const SearchOptions& options) {
    AutomorphismReport rep;
    rep.involution_claimed = sigma.involution;

    auto note = [&rep](bool& flag, const std::string& why) {
        flag = false;
        if (rep.first_violation.empty()) rep.first_violation = why;
    };

    std::vector<State> reachable = enumerate_reachable(problem, options.node_cap);
    std::set<State> member(reachable.begin(), reachable.end());
    std::map<State, State> preimage;

    for (const State& s : reachable) {
        State ms = sigma.map_state(s);
        if (!member.count(ms)) {
            note(rep.bijective_on_reachable,
                 "maps reachable " + s.encoding() + " to " + ms.encoding() +
                     ", which is not reachable");
            continue;  // nothing downstream of an escaped image is meaningful
        }
        auto [it, fresh] = preimage.emplace(ms, s);
        if (!fresh)
            note(rep.bijective_on_reachable,
                 "maps both " + it->second.encoding() + " and " + s.encoding() +
                     " to " + ms.encoding());
        if (problem.goal_test(s) != problem.goal_test(ms))
            note(rep.goal_preserving,
                 s.encoding() + " and its image " + ms.encoding() +
                     " disagree on the goal test");
        if (sigma.involution && sigma.map_state(ms) != s)
            note(rep.involution_ok,
                 "claimed involution, but maps " + ms.encoding() + " to " +
                     sigma.map_state(ms).encoding() + ", not back to " +
                     s.encoding());

        std::vector<Action> legal_ms = problem.actions(ms);
        for (const Action& a : problem.actions(s)) {
            Action ma = sigma.map_action(a);
            if (std::find(legal_ms.begin(), legal_ms.end(), ma) ==
                legal_ms.end()) {
                note(rep.commutes_with_result,
                     "(" + s.encoding() + ", " + a.label() + "): image action " +
                         ma.label() + " not applicable in " + ms.encoding());
                continue;
            }
            State t = problem.result(s, a);
            State mt = sigma.map_state(t);
            State tm = problem.result(ms, ma);
            if (mt != tm) {
                note(rep.commutes_with_result,
                     "(" + s.encoding() + ", " + a.label() +
                         "): mapping then acting gives " + tm.encoding() +
                         ", acting then mapping gives " + mt.encoding());
                continue;
            }
            if (problem.step_cost(s, a, t) != problem.step_cost(ms, ma, tm))
                note(rep.cost_preserving,
                     "(" + s.encoding() + ", " + a.label() +
                         "): image transition has a different cost");
        }
    }
    return rep;
}

QuotientProblem quotient(const Problem& problem, const SymmetryGroup& group,
                         const SearchOptions& options) {
    for (const Automorphism& g : group.generators) {
        AutomorphismReport rep = check_automorphism(problem, g, options);
        if (!rep.valid_for_quotient())
            throw Error(ErrorCode::invalid_symmetry,
                        "generator " + g.name + ": " + rep.first_violation);
    }

    auto bk = std::make_shared<QuotientBookkeeping>();
    bk->group = group;
    bk->base = problem;
    bk->base_initial = problem.initial;

    std::vector<State> reachable = enumerate_reachable(problem, options.node_cap);
    std::map<State, State> canon;  // reachable state -> orbit representative
    for (const State& s : reachable) {
        if (canon.count(s)) continue;
        std::vector<State> orb = orbit(s, group);
        const State& rep = orb.front();
        for (const State& m : orb) canon.emplace(m, rep);
    }

    // Orbit representatives in base discovery order; every quotient edge is
    // a base edge out of a representative, re-pointed at the successor's
    // representative with the witness element that undoes the re-pointing.
    std::set<State> seen_reps;
    for (const State& s : reachable) {
        const State& c = canon.at(s);
        if (!seen_reps.insert(c).second) continue;
        for (const Action& a : problem.actions(c)) {
            State raw = problem.result(c, a);
            const State& craw = canon.at(raw);
            auto unmap = element_mapping(group, craw, raw);
            if (!unmap)
                throw Error(ErrorCode::invalid_symmetry,
                            "no generator word maps " + craw.encoding() +
                                " back to " + raw.encoding());
            bk->edges.emplace(
                std::make_pair(c.encoding(), a.label()),
                QuotientBookkeeping::Edge{craw, std::move(*unmap),
                                          problem.step_cost(c, a, raw)});
        }
    }

    std::shared_ptr<const QuotientBookkeeping> table = bk;
    auto lookup = [table](const State& s, const Action& a)
        -> const QuotientBookkeeping::Edge& {
        auto it = table->edges.find({s.encoding(), a.label()});
        if (it == table->edges.end())
            throw Error(ErrorCode::contract_violation,
                        "no quotient edge for (" + s.encoding() + ", " +
                            a.label() + ")");
        return it->second;
    };

    QuotientProblem out;
    out.bookkeeping = table;
    out.problem.initial = canon.at(problem.initial);
    out.problem.actions = problem.actions;
    out.problem.result = [lookup](const State& s, const Action& a) {
        return lookup(s, a).to;
    };
    out.problem.goal_test = problem.goal_test;
    out.problem.step_cost = [lookup](const State& s, const Action& a,
                                     const State&) {
        return lookup(s, a).cost;
    };
    // Orbit-level inverses are not well-defined edge by edge, so they are
    // only passed through for the identity quotient.
    out.problem.inverse = group.generators.empty() ? problem.inverse
                                                   : Problem::no_inverses();
    if (problem.goal_states) {
        std::vector<State> goals;
        std::set<State> dedupe;
        for (const State& g : *problem.goal_states) {
            State cg = canon.count(g) ? canon.at(g) : canonical(g, group);
            if (dedupe.insert(cg).second) goals.push_back(cg);
        }
        out.problem.goal_states = std::move(goals);
    }
    return out;
}

Path lift_path(const Path& quotient_path,
               const QuotientBookkeeping& bookkeeping) {
    const SymmetryGroup& group = bookkeeping.group;
    const Problem& base = bookkeeping.base;

    State start_rep = canonical(bookkeeping.base_initial, group);
    if (quotient_path.start != start_rep)
        throw Error(ErrorCode::inconsistent_bookkeeping,
                    "quotient path starts at " +
                        quotient_path.start.encoding() +
                        ", expected representative " + start_rep.encoding());

    // Invariant: base_state == h(quotient_state) at every step, so the base
    // action for quotient action a is h(a), and crossing an edge extends h
    // by the edge's unmap element (applied first).
    auto h = element_mapping(group, start_rep, bookkeeping.base_initial);
    if (!h)
        throw Error(ErrorCode::inconsistent_bookkeeping,
                    "initial state is not in its representative's orbit");

    Path out;
    out.start = bookkeeping.base_initial;
    State qcur = quotient_path.start;
    State bcur = out.start;
    for (const auto& [qa, qnext] : quotient_path.steps) {
        auto it = bookkeeping.edges.find({qcur.encoding(), qa.label()});
        if (it == bookkeeping.edges.end())
            throw Error(ErrorCode::inconsistent_bookkeeping,
                        "no recorded edge for (" + qcur.encoding() + ", " +
                            qa.label() + ")");
        const auto& edge = it->second;
        if (edge.to != qnext)
            throw Error(ErrorCode::inconsistent_bookkeeping,
                        "edge (" + qcur.encoding() + ", " + qa.label() +
                            ") leads to " + edge.to.encoding() +
                            ", path claims " + qnext.encoding());
        Action ba = apply_element_action(group, *h, qa);
        State bnext = base.result(bcur, ba);
        h = compose(edge.unmap, *h);
        if (apply_element(group, *h, qnext) != bnext)
            throw Error(ErrorCode::inconsistent_bookkeeping,
                        "lifted step diverges from bookkeeping at " +
                            qnext.encoding());
        out.total_cost += base.step_cost(bcur, ba, bnext);
        out.steps.emplace_back(std::move(ba), bnext);
        qcur = qnext;
        bcur = std::move(bnext);
    }
    return out;
}

SearchResult mirror_meet(const Problem& problem, const Automorphism& sigma,
                         const SearchOptions& options) {
    using Clock = std::chrono::steady_clock;
    auto t0 = Clock::now();
    SearchResult res;
    auto finish = [&](SearchResult r) {
        r.metrics.wall_time = Clock::now() - t0;
        return r;
    };

    if (!sigma.involution)
        throw Error(ErrorCode::precondition_failed,
                    sigma.name + " is not declared an involution");
    if (!problem.goal_test(sigma.map_state(problem.initial)))
        throw Error(ErrorCode::precondition_failed,
                    "mirror image of the initial state is not a goal");
    if (problem.goal_test(problem.initial)) {
        res.outcome = Outcome::found;
        res.path = Path{problem.initial, {}, Cost(0)};
        return finish(std::move(res));
    }

    struct Link {
        State parent;
        Action action;
    };
    std::map<State, std::size_t> depth{{problem.initial, 0}};
    std::map<State, Link> parents;
    std::vector<State> layer{problem.initial};
    res.metrics.max_frontier = 1;

    constexpr std::size_t kInf = static_cast<std::size_t>(-1);
    std::size_t best = kInf;
    State meet;

    auto reconstruct_to = [&](const State& s) {
        std::vector<std::pair<Action, State>> rev;
        State cur = s;
        for (auto it = parents.find(cur); it != parents.end();
             it = parents.find(cur)) {
            rev.emplace_back(it->second.action, cur);
            cur = it->second.parent;
        }
        Path p;
        p.start = cur;
        p.steps.assign(rev.rbegin(), rev.rend());
        return p;
    };

    auto with_costs = [&](Path p) {
        p.total_cost = Cost(0);
        State prev = p.start;
        for (const auto& [a, s] : p.steps) {
            p.total_cost += problem.step_cost(prev, a, s);
            prev = s;
        }
        return p;
    };

    // Stitch: forward path to the meeting state, then the sigma-image of the
    // path to sigma(meet), reversed and inverted, which lands on the goal
    // sigma(initial).
    auto stitch = [&]() {
        Path p = reconstruct_to(meet);
        Path q = reconstruct_to(sigma.map_state(meet));
        Path full = p;
        for (std::size_t i = q.steps.size(); i-- > 0;) {
            const Action& b = q.steps[i].first;
            Action mb = sigma.map_action(b);
            std::optional<Action> inv = problem.inverse(mb);
            if (!inv)
                throw Error(ErrorCode::precondition_failed,
                            "action " + mb.label() + " has no declared inverse");
            State prev_q = i == 0 ? q.start : q.steps[i - 1].second;
            full.steps.emplace_back(*inv, sigma.map_state(prev_q));
        }
        return with_costs(std::move(full));
    };

    std::size_t completed = 0;  // layers fully expanded
    while (!layer.empty()) {
        std::vector<State> next_layer;
        for (const State& s : layer) {
            ++res.metrics.nodes_expanded;
            for (const Action& a : problem.actions(s)) {
                // Every expanded action must invert for the stitch to exist.
                if (!problem.inverse(a))
                    throw Error(ErrorCode::precondition_failed,
                                "action " + a.label() +
                                    " has no declared inverse");
                State t = problem.result(s, a);
                ++res.metrics.nodes_generated;
                if (problem.goal_test(t)) {
                    // Direct hit; generated in depth order, so minimal.
                    res.outcome = Outcome::found;
                    Path p = reconstruct_to(s);
                    p.steps.emplace_back(a, t);
                    res.path = with_costs(std::move(p));
                    return finish(std::move(res));
                }
                if (!depth.emplace(t, completed + 1).second) continue;
                if (depth.size() > options.node_cap)
                    throw Error(ErrorCode::resource_limit,
                                "search exceeded node cap of " +
                                    std::to_string(options.node_cap));
                parents.emplace(t, Link{s, a});
                if (sigma.map_state(sigma.map_state(t)) != t)
                    throw Error(ErrorCode::precondition_failed,
                                sigma.name + " is not an involution at " +
                                    t.encoding());
                next_layer.push_back(t);
                auto mit = depth.find(sigma.map_state(t));
                if (mit != depth.end()) {
                    std::size_t total = completed + 1 + mit->second;
                    if (total < best) {
                        best = total;
                        meet = t;
                    }
                }
            }
        }
        layer = std::move(next_layer);
        ++completed;
        res.metrics.max_frontier = std::max<std::uint64_t>(
            res.metrics.max_frontier, layer.size());
        // Any future meeting pairs two states at depth > completed, so its
        // stitched length is at least 2 * (completed + 1).
        if (best != kInf && best <= 2 * completed) break;
    }

    if (best == kInf) {
        res.outcome = Outcome::no_solution;
        return finish(std::move(res));
    }
    res.outcome = Outcome::found;
    res.path = stitch();
    return finish(std::move(res));
}

}  // namespace symsearch
