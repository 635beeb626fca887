#include "doctest.h"

#include <algorithm>

#include "helpers.hpp"
#include "oracles.hpp"
#include "symsearch/domains.hpp"
#include "symsearch/explicit_io.hpp"
#include "symsearch/search.hpp"

using namespace symsearch;
using testutil::found_path;
using testutil::labels;

namespace {

const char* kWeightedGraph =
    "state I\n"
    "state A\n"
    "state B\n"
    "state G\n"
    "init I\n"
    "goal G\n"
    "edge I toA A 1\n"
    "edge I toB B 1\n"
    "edge A finishA G 10\n"
    "edge B finishB G 1\n";

Problem weighted_graph() { return to_problem(parse_problem_file(kWeightedGraph)); }

Problem vacuum2() {
    return make_vacuum(2, VacuumState::all_dirty(2, /*position=*/0));
}

}  // namespace

TEST_CASE("bfs solves the two-square vacuum world") {
    Problem p = vacuum2();
    SearchResult res = bfs(p);
    const Path& path = found_path(p, res);

    CHECK(labels(path) == std::vector<std::string>{"Suck", "Right", "Suck"});
    CHECK(path.total_cost == Cost(3));
    CHECK(path.length() == 3);

    // Reference search agrees that 3 is optimal and the plan unique.
    auto best = oracle::vacuum_shortest_plan(2, 0, {true, true}, false, 10);
    REQUIRE(best.has_value());
    CHECK(best->size() == 3);
    auto all3 = oracle::vacuum_plans_of_length(2, 0, {true, true}, false, 3);
    REQUIRE(all3.size() == 1);
    CHECK(all3.front() == labels(path));
}

TEST_CASE("bfs effort counters on the two-square vacuum world") {
    // Hand-traced: six expansions reach the first goal pop, every expansion
    // generates two successors, and the queue never holds more than two.
    SearchResult res = bfs(vacuum2());
    CHECK(res.metrics.nodes_expanded == 6);
    CHECK(res.metrics.nodes_generated == 12);
    CHECK(res.metrics.max_frontier == 2);
}

TEST_CASE("bfs returns an empty path when the initial state is a goal") {
    VacuumState clean;
    clean.position = 0;
    clean.dirt = {false, false};
    Problem p = make_vacuum(2, clean);
    SearchResult res = bfs(p);
    const Path& path = found_path(p, res);
    CHECK(path.length() == 0);
    CHECK(path.total_cost == Cost(0));
    CHECK(res.metrics.nodes_expanded == 0);
    CHECK(res.metrics.nodes_generated == 0);
}

TEST_CASE("bfs reports no solution on a disconnected goal") {
    Problem p = to_problem(parse_problem_file(
        "state a\nstate b\nstate g\ninit a\ngoal g\nedge a go b 1\n"));
    SearchResult res = bfs(p);
    CHECK(res.outcome == Outcome::no_solution);
    CHECK_FALSE(res.path.has_value());
    CHECK(res.metrics.nodes_expanded == 2);
}

TEST_CASE("bfs finds the eleven-crossing ferry plan") {
    Problem p = make_mc();
    SearchResult res = bfs(p);
    const Path& path = found_path(p, res);
    CHECK(path.length() == 11);

    auto summary = oracle::mc_summary(3, 3);
    REQUIRE(summary.plan_length.has_value());
    CHECK(*summary.plan_length == 11);
}

TEST_CASE("uniform cost prefers the cheap long way") {
    Problem p = weighted_graph();
    SearchResult res = uniform_cost(p);
    const Path& path = found_path(p, res);
    CHECK(path.total_cost == Cost(2));
    CHECK(labels(path) == std::vector<std::string>{"toB", "finishB"});

    // Breadth-first on the same graph settles for the first length-2 path.
    SearchResult blind = bfs(p);
    CHECK(found_path(p, blind).total_cost == Cost(11));
}

TEST_CASE("uniform cost handles rational step costs exactly") {
    Problem p = to_problem(parse_problem_file(
        "state a\nstate b\nstate g\n"
        "init a\ngoal g\n"
        "edge a slow g 1\n"
        "edge a half b 1/3\n"
        "edge b rest g 1/2\n"));
    SearchResult res = uniform_cost(p);
    const Path& path = found_path(p, res);
    CHECK(path.total_cost == Cost(5, 6));
    CHECK(path.length() == 2);
}

TEST_CASE("uniform cost matches bfs cost on unit-cost domains") {
    std::vector<Problem> problems;
    for (int n = 1; n <= 3; ++n)
        problems.push_back(make_vacuum(n, VacuumState::all_dirty(n)));
    problems.push_back(make_mc());
    for (int d = 1; d <= 3; ++d) problems.push_back(make_hanoi(d));

    for (const Problem& p : problems) {
        SearchResult b = bfs(p);
        SearchResult u = uniform_cost(p);
        CHECK(found_path(p, b).total_cost == found_path(p, u).total_cost);
    }
}

TEST_CASE("uniform cost reports no solution when the goal has no way in") {
    Problem p = to_problem(parse_problem_file(
        "state a\nstate b\nstate g\ninit a\ngoal g\n"
        "edge a go b 2\nedge b back a 2\n"));
    CHECK(uniform_cost(p).outcome == Outcome::no_solution);
}

TEST_CASE("depth limit separates cutoff from failure") {
    Problem p = vacuum2();

    SearchResult shallow = depth_limited(p, 2);
    CHECK(shallow.outcome == Outcome::cutoff);
    CHECK_FALSE(shallow.path.has_value());

    SearchResult deep = depth_limited(p, 3);
    const Path& path = found_path(p, deep);
    CHECK(path.length() == 3);

    // Below, at, and above the optimum: Found exactly when limit >= 3.
    for (std::size_t limit = 0; limit <= 5; ++limit) {
        SearchResult res = depth_limited(p, limit);
        if (limit >= 3)
            CHECK(res.outcome == Outcome::found);
        else
            CHECK(res.outcome == Outcome::cutoff);
    }
}

TEST_CASE("depth limit zero on a goal start is already solved") {
    VacuumState clean;
    clean.position = 1;
    clean.dirt = {false, false};
    Problem p = make_vacuum(2, clean);
    SearchResult res = depth_limited(p, 0);
    CHECK(res.outcome == Outcome::found);
    CHECK(found_path(p, res).length() == 0);
}

TEST_CASE("depth limit reports plain failure on an exhausted space") {
    // Two mutually-reachable states and an unreachable goal: any limit
    // explores everything and never gets cut off above depth 1.
    Problem p = to_problem(parse_problem_file(
        "state a\nstate b\nstate g\ninit a\ngoal g\n"
        "edge a go b 1\nedge b back a 1\n"));
    SearchResult res = depth_limited(p, 10);
    CHECK(res.outcome == Outcome::no_solution);
}

TEST_CASE("depth-limited search finds the ferry plan at its exact limit") {
    Problem p = make_mc();
    CHECK(depth_limited(p, 10).outcome == Outcome::cutoff);
    SearchResult res = depth_limited(p, 11);
    CHECK(found_path(p, res).length() == 11);
}

TEST_CASE("bidirectional search matches bfs lengths") {
    for (int d = 1; d <= 3; ++d) {
        Problem p = make_hanoi(d);
        SearchResult two_sided = bidirectional_bfs(p);
        CHECK(found_path(p, two_sided).length() ==
              static_cast<std::size_t>(oracle::hanoi_moves(d)));
    }
    Problem mc = make_mc();
    CHECK(found_path(mc, bidirectional_bfs(mc)).length() == 11);
}

TEST_CASE("bidirectional search can finish on the forward side alone") {
    // Suck has no inverse, but the two goals keep the backward frontier at
    // size 2 while the forward side (size <= 2, ties expand forward) reaches
    // a goal at depth 3. The backward side never expands, so the missing
    // inverse is never needed.
    Problem p = vacuum2();
    SearchResult res = bidirectional_bfs(p);
    CHECK(found_path(p, res).length() == 3);
}

TEST_CASE("bidirectional search needs an enumerated goal set") {
    Problem p = vacuum2();
    p.goal_states.reset();
    try {
        bidirectional_bfs(p);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::no_goal_enumeration);
    }
}

TEST_CASE("bidirectional search on an explicit two-way graph") {
    // Branching at the start makes the goal side the smaller frontier, so
    // the backward expansion runs and hits the uninvertible "back" label.
    Problem one_way = to_problem(parse_problem_file(
        "state a\nstate b1\nstate b2\nstate c\n"
        "init a\ngoal c\n"
        "edge a go1 b1 1\nedge a go2 b2 1\n"
        "edge b1 go3 c 1\nedge c back b1 1\n"));
    try {
        bidirectional_bfs(one_way);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_invertible);
    }

    Problem loop = to_problem(parse_problem_file(
        "state a\nstate b\nstate c\n"
        "init a\ngoal c\n"
        "edge a hop b 1\nedge b hop a 1\n"
        "edge b skip c 1\nedge c skip b 1\n"));
    SearchResult res = bidirectional_bfs(loop);
    CHECK(found_path(loop, res).length() == 2);
}

TEST_CASE("bidirectional search when the start is a goal") {
    Problem p = to_problem(parse_problem_file(
        "state a\nstate b\ninit a\ngoal a\nedge a go b 1\nedge b go a 1\n"));
    SearchResult res = bidirectional_bfs(p);
    CHECK(res.outcome == Outcome::found);
    CHECK(res.path->length() == 0);
}

TEST_CASE("path validation catches each kind of lie") {
    Problem p = vacuum2();
    Path honest = *bfs(p).path;
    CHECK(validate_path(p, honest).ok);

    SUBCASE("wrong start") {
        Path bad = honest;
        bad.start = State("R,1,1");
        auto check = validate_path(p, bad);
        CHECK_FALSE(check.ok);
        CHECK(check.first_violation.find("starts at") != std::string::npos);
    }
    SUBCASE("inapplicable action") {
        Path bad = honest;
        bad.steps.insert(bad.steps.begin(), {Action("Left"), State("L,1,1")});
        auto check = validate_path(p, bad);
        CHECK_FALSE(check.ok);
        CHECK(check.first_violation.find("not applicable") != std::string::npos);
    }
    SUBCASE("misreported successor") {
        Path bad = honest;
        bad.steps[0].second = State("R,1,1");
        auto check = validate_path(p, bad);
        CHECK_FALSE(check.ok);
        CHECK(check.first_violation.find("claims") != std::string::npos);
    }
    SUBCASE("does not reach the goal") {
        Path bad;
        bad.start = p.initial;
        bad.steps = {{Action("Suck"), State("L,0,1")},
                     {Action("Suck"), State("L,0,1")}};
        bad.total_cost = Cost(2);
        auto check = validate_path(p, bad);
        CHECK_FALSE(check.ok);
        CHECK(check.first_violation.find("not a goal") != std::string::npos);
    }
    SUBCASE("wrong total cost") {
        Path bad = honest;
        bad.total_cost = Cost(4);
        auto check = validate_path(p, bad);
        CHECK_FALSE(check.ok);
        CHECK(check.first_violation.find("cost") != std::string::npos);
    }
}

TEST_CASE("reachable-set sizes follow the position-times-dirt formula") {
    CHECK(enumerate_reachable(make_vacuum(1, VacuumState::all_dirty(1))).size() == 2);
    CHECK(enumerate_reachable(vacuum2()).size() == 8);
    CHECK(enumerate_reachable(make_vacuum(3, VacuumState::all_dirty(3))).size() == 24);

    for (int n = 1; n <= 3; ++n)
        CHECK(oracle::vacuum_reachable_count(
                  n, 0, std::vector<bool>(static_cast<std::size_t>(n), true),
                  false) == static_cast<std::size_t>(n) * (1u << n));
}

TEST_CASE("reachable ferry states match the reference search") {
    auto reachable = enumerate_reachable(make_mc());
    auto summary = oracle::mc_summary(3, 3);
    CHECK(reachable.size() == summary.reachable);
    CHECK(summary.reachable == 16);
    CHECK(summary.valid_total == 20);

    auto encs = testutil::encodings(reachable);
    std::sort(encs.begin(), encs.end());
    CHECK(encs == summary.reachable_encodings);
}

TEST_CASE("searches respect the node cap") {
    SearchOptions tight;
    tight.node_cap = 3;
    Problem p = make_hanoi(3);
    for (auto* search : {&bfs, &uniform_cost}) {
        try {
            (*search)(p, tight);
            FAIL("expected a resource error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::resource_limit);
        }
    }
    CHECK_THROWS_AS(enumerate_reachable(p, 3), Error);
    CHECK_THROWS_AS(depth_limited(p, 7, tight), Error);
    CHECK_THROWS_AS(bidirectional_bfs(p, tight), Error);
}

TEST_CASE("repeated runs are bit-for-bit identical") {
    for (const Problem& p : {vacuum2(), make_mc(), make_hanoi(3)}) {
        SearchResult a = bfs(p);
        SearchResult b = bfs(p);
        CHECK(a.path->steps == b.path->steps);
        CHECK(a.metrics.nodes_expanded == b.metrics.nodes_expanded);
        CHECK(a.metrics.nodes_generated == b.metrics.nodes_generated);
        CHECK(a.metrics.max_frontier == b.metrics.max_frontier);

        SearchResult u1 = uniform_cost(p);
        SearchResult u2 = uniform_cost(p);
        CHECK(u1.path->steps == u2.path->steps);
        CHECK(u1.metrics.nodes_expanded == u2.metrics.nodes_expanded);
    }
}

TEST_CASE("generated counts duplicates, expanded does not exceed it") {
    for (const Problem& p : {vacuum2(), make_mc(), make_hanoi(2)}) {
        SearchResult res = bfs(p);
        CHECK(res.metrics.nodes_generated >= res.metrics.nodes_expanded);
        CHECK(res.metrics.max_frontier >= 1);
    }
}
