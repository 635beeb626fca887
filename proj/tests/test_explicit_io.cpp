#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "symsearch/explicit_io.hpp"
#include "symsearch/search.hpp"

using namespace symsearch;
using testutil::found_path;
using testutil::labels;

namespace {

std::string read_data_file(const std::string& name) {
    std::ifstream in(std::string(SYMSEARCH_TESTS_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("a one-edge file parses and solves") {
    ExplicitProblem ep = parse_problem_file(read_data_file("single_edge.txt"));
    CHECK(ep.states == std::vector<std::string>{"a", "b"});
    CHECK(ep.init == "a");
    CHECK(ep.goals == std::vector<std::string>{"b"});
    REQUIRE(ep.edges.size() == 1);
    CHECK(ep.edges[0].label == "go");
    CHECK(ep.edges[0].cost == Cost(1));

    Problem p = to_problem(ep);
    const Path& path = found_path(p, bfs(p));
    CHECK(labels(path) == std::vector<std::string>{"go"});
    CHECK(path.total_cost == Cost(1));
    // "go" has no reverse edge, so it sells no inverse.
    CHECK_FALSE(p.inverse(Action("go")).has_value());
}

TEST_CASE("a bad cost literal is pinned to its line and token") {
    try {
        parse_problem_file(
            "state a\nstate b\ninit a\ngoal b\nedge a go b x\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.code() == ErrorCode::parse_error);
        CHECK(e.line() == 5);
        CHECK(e.token() == "x");
        CHECK(std::string(e.what()).find("line 5") != std::string::npos);
    }
}

TEST_CASE("unknown directives report the right line across blanks and comments") {
    // One bad line at a time, shifted by comment and blank padding.
    for (std::size_t pad = 0; pad < 4; ++pad) {
        std::string text = "state a\ninit a\ngoal a\n";
        std::size_t line = 4;
        for (std::size_t i = 0; i < pad; ++i, ++line)
            text += i % 2 ? "\n" : "# filler\n";
        text += "??? what\n";
        try {
            parse_problem_file(text);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
            CHECK(e.token() == "???");
        }
    }
}

TEST_CASE("wrong arity and malformed mappings are parse errors") {
    CHECK_THROWS_AS(parse_problem_file("state\n"), ParseError);
    CHECK_THROWS_AS(parse_problem_file("state a b\n"), ParseError);
    CHECK_THROWS_AS(
        parse_problem_file("state a\ninit a\ngoal a\nsym s a=b\n"), ParseError);
    CHECK_THROWS_AS(
        parse_problem_file("state a\ninit a\ngoal a\nsym s a->b->a\n"),
        ParseError);
    CHECK_THROWS_AS(parse_problem_file("state a\ninit a\ngoal a\nsym s\n"),
                    ParseError);
}

TEST_CASE("semantic violations are caught after scanning") {
    auto semantic_line = [](const std::string& text) -> std::size_t {
        try {
            parse_problem_file(text);
        } catch (const SemanticError& e) {
            return e.line();
        }
        FAIL("expected a semantic error");
        return static_cast<std::size_t>(-1);
    };

    CHECK(semantic_line("init a\n") == 1);                       // undeclared
    CHECK(semantic_line("state a\nstate a\n") == 2);             // redeclared
    CHECK(semantic_line("state a\ninit a\ninit a\ngoal a\n") == 3);
    CHECK(semantic_line("state a\ninit a\ngoal a\ngoal a\n") == 4);
    CHECK(semantic_line("state a\nstate b\ninit a\ngoal b\n"
                        "edge a go b 1\nedge a go b 2\n") == 6);
    CHECK(semantic_line("state a\ninit a\ngoal a\nsymact s x->y\n") == 4);
    CHECK(semantic_line("state a\nstate b\nstate c\ninit a\ngoal a\n"
                        "sym s a->b a->c\n") == 6);
    CHECK(semantic_line("state a\ngoal a\n") == 0);               // no init
    CHECK(semantic_line("state a\ninit a\n") == 0);               // no goal
    // Two states funneling into one image is not a bijection.
    CHECK(semantic_line("state a\nstate b\nstate c\ninit a\ngoal a\n"
                        "sym s a->c b->c\n") == 0);
}

TEST_CASE("rendering and reparsing is the identity") {
    std::string text = read_data_file("square.txt");
    ExplicitProblem ep = parse_problem_file(text);
    std::string rendered = render_problem_file(ep);
    CHECK(parse_problem_file(rendered) == ep);
    // The canonical rendering is itself a fixed point.
    CHECK(render_problem_file(parse_problem_file(rendered)) == rendered);
}

TEST_CASE("costs normalize when rendered") {
    ExplicitProblem ep = parse_problem_file(
        "state a\nstate b\ninit a\ngoal b\nedge a go b 2/4\n");
    CHECK(ep.edges[0].cost == Cost(1, 2));
    CHECK(render_problem_file(ep).find("edge a go b 1/2") != std::string::npos);
}

TEST_CASE("the flip declared in the square file is a full automorphism") {
    ExplicitProblem ep = parse_problem_file(read_data_file("square.txt"));
    Problem p = to_problem(ep);
    SymmetryGroup group = declared_symmetries(ep);
    REQUIRE(group.generators.size() == 1);
    const Automorphism& flip = group.generators[0];
    CHECK(flip.name == "flip");
    CHECK(flip.involution);  // computed from the tables, not declared

    AutomorphismReport report = check_automorphism(p, flip);
    CHECK(report.bijective_on_reachable);
    CHECK(report.commutes_with_result);
    CHECK(report.cost_preserving);
    CHECK(report.goal_preserving);
    CHECK(report.involution_ok);
    CHECK(report.valid_for_quotient());

    // The quotient folds b and c together: 3 states instead of 4.
    QuotientProblem q = quotient(p, group);
    CHECK(enumerate_reachable(q.problem).size() == 3);
    SearchResult qres = bfs(q.problem);
    REQUIRE(qres.outcome == Outcome::found);
    Path lifted = lift_path(*qres.path, *q.bookkeeping);
    CHECK(validate_path(p, lifted).ok);
    CHECK(lifted.length() == 2);
}

TEST_CASE("a three-cycle sym is recognized as a non-involution") {
    ExplicitProblem ep = parse_problem_file(
        "state a\nstate b\nstate c\ninit a\ngoal a\n"
        "sym rot a->b b->c c->a\n");
    SymmetryGroup group = declared_symmetries(ep);
    REQUIRE(group.generators.size() == 1);
    CHECK_FALSE(group.generators[0].involution);
    CHECK(group.generators[0].map_state(State("a")) == State("b"));
    // Unlisted identifiers map to themselves.
    CHECK(group.generators[0].map_state(State("zzz")) == State("zzz"));
    CHECK(group.generators[0].map_action(Action("go")) == Action("go"));
}

TEST_CASE("labels with matching reverse edges become self-inverses") {
    ExplicitProblem ep = parse_problem_file(
        "state a\nstate b\nstate c\ninit a\ngoal c\n"
        "edge a hop b 1\nedge b hop a 1\n"
        "edge b skip c 1\nedge c skip b 2\n");
    Problem p = to_problem(ep);
    CHECK(p.inverse(Action("hop")) == Action("hop"));
    // skip's reverse edge exists but at a different cost.
    CHECK_FALSE(p.inverse(Action("skip")).has_value());
}

TEST_CASE("dot export renders nodes then edges") {
    ExplicitProblem ep = parse_problem_file(read_data_file("single_edge.txt"));
    std::string dot = export_dot(to_problem(ep));
    CHECK(dot ==
          "digraph G {\n"
          "  \"a\";\n"
          "  \"b\" [peripheries=2];\n"
          "  \"a\" -> \"b\" [label=\"go\"];\n"
          "}\n");
}

TEST_CASE("orbit coloring gives interchangeable states the same fill") {
    ExplicitProblem ep = parse_problem_file(read_data_file("square.txt"));
    Problem p = to_problem(ep);
    SymmetryGroup group = declared_symmetries(ep);
    DotOptions options;
    options.color_by_orbit = &group;
    std::string dot = export_dot(p, options);

    auto fill_of = [&](const std::string& node) {
        std::string needle = "\"" + node + "\" [";
        auto at = dot.find(needle);
        REQUIRE(at != std::string::npos);
        auto open = dot.find("fillcolor=\"", at);
        REQUIRE(open != std::string::npos);
        open += std::string("fillcolor=\"").size();
        return dot.substr(open, dot.find('"', open) - open);
    };
    CHECK(fill_of("b") == fill_of("c"));
    CHECK(fill_of("a") != fill_of("b"));
    CHECK(fill_of("a") != fill_of("d"));
}

TEST_CASE("metrics tables have a fixed byte layout") {
    MetricsRow bfs_row;
    bfs_row.label = "bfs";
    bfs_row.outcome = "Found";
    bfs_row.cost = Cost(3);
    bfs_row.length = 3;
    bfs_row.metrics.nodes_expanded = 6;
    bfs_row.metrics.nodes_generated = 12;
    bfs_row.metrics.max_frontier = 2;
    bfs_row.metrics.wall_time = std::chrono::milliseconds(7);

    MetricsRow cut_row;
    cut_row.label = "dls";
    cut_row.outcome = "Cutoff";
    cut_row.metrics.nodes_expanded = 5;
    cut_row.metrics.nodes_generated = 9;
    cut_row.metrics.max_frontier = 4;

    CHECK(write_metrics({bfs_row, cut_row}, MetricsFormat::csv) ==
          "label,outcome,cost,length,nodes_expanded,nodes_generated,"
          "max_frontier,wall_time_ms\n"
          "bfs,Found,3,3,6,12,2,7\n"
          "dls,Cutoff,,,5,9,4,0\n");

    // zero_wall_time freezes the only nondeterministic column.
    CHECK(write_metrics({bfs_row}, MetricsFormat::csv, true) ==
          "label,outcome,cost,length,nodes_expanded,nodes_generated,"
          "max_frontier,wall_time_ms\n"
          "bfs,Found,3,3,6,12,2,0\n");

    CHECK(write_metrics({bfs_row}, MetricsFormat::json, true) ==
          "[\n"
          "  {\n"
          "    \"label\": \"bfs\",\n"
          "    \"outcome\": \"Found\",\n"
          "    \"cost\": \"3\",\n"
          "    \"length\": 3,\n"
          "    \"nodes_expanded\": 6,\n"
          "    \"nodes_generated\": 12,\n"
          "    \"max_frontier\": 2,\n"
          "    \"wall_time_ms\": 0\n"
          "  }\n"
          "]\n");

    MetricsRow quoted;
    quoted.label = "a,b\"c\"";
    quoted.outcome = "Found";
    std::string csv = write_metrics({quoted}, MetricsFormat::csv, true);
    CHECK(csv.find("\"a,b\"\"c\"\"\",Found") != std::string::npos);
}

TEST_CASE("fractional costs survive the whole pipeline") {
    ExplicitProblem ep = parse_problem_file(
        "state a\nstate b\nstate c\ninit a\ngoal c\n"
        "edge a go b 1/3\nedge b go c 1/6\n");
    Problem p = to_problem(ep);
    SearchResult res = uniform_cost(p);
    CHECK(found_path(p, res).total_cost == Cost(1, 2));

    MetricsRow row = MetricsRow::from_result("ucs", res);
    std::string csv = write_metrics({row}, MetricsFormat::csv, true);
    CHECK(csv.find("ucs,Found,1/2,2,") != std::string::npos);
}
