// Command-line front end: solve one problem, compare algorithms on it, or
// export its state space as GraphViz.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symsearch/agent.hpp"
#include "symsearch/domains.hpp"
#include "symsearch/explicit_io.hpp"
#include "symsearch/problem.hpp"
#include "symsearch/search.hpp"
#include "symsearch/symmetry.hpp"

namespace {

using namespace symsearch;

struct ProblemSpec {
    std::string domain;
    std::string file;
    int n = 2;
    int disks = 3;
    int missionaries = 3;
    int cannibals = 3;
    std::string init;
    std::string sym;  // restrict the symmetry group to one named generator
};

struct BuiltProblem {
    Problem problem;
    SymmetryGroup group;
};

void add_problem_options(CLI::App* cmd, ProblemSpec& spec) {
    cmd->add_option("--domain", spec.domain, "Built-in domain: vacuum, mc or hanoi")
        ->check(CLI::IsMember({"vacuum", "mc", "hanoi"}));
    cmd->add_option("--file", spec.file, "Problem file in the explicit text format");
    cmd->add_option("--n", spec.n, "Squares in the vacuum strip")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--disks", spec.disks, "Disks on the towers")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--missionaries", spec.missionaries,
                    "Missionaries to ferry")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--cannibals", spec.cannibals, "Cannibals to ferry")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--init", spec.init,
                    "Initial vacuum state, e.g. L,1,1 or 0,1,0,1");
    cmd->add_option("--sym", spec.sym,
                    "Use only the named symmetry (default: all available)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good())
        throw Error(ErrorCode::invalid_parameter, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

BuiltProblem build_problem(const ProblemSpec& spec) {
    if (spec.domain.empty() == spec.file.empty())
        throw Error(ErrorCode::invalid_parameter,
                    "give exactly one of --domain or --file");

    BuiltProblem built;
    if (!spec.file.empty()) {
        ExplicitProblem ep = parse_problem_file(read_file(spec.file));
        built.problem = to_problem(ep);
        built.group = declared_symmetries(ep);
    } else if (spec.domain == "vacuum") {
        VacuumState initial = spec.init.empty()
                                  ? VacuumState::all_dirty(spec.n)
                                  : VacuumState::from_state(State(spec.init));
        built.problem = make_vacuum(spec.n, initial);
        built.group.generators.push_back(vacuum_mirror(spec.n));
    } else if (spec.domain == "mc") {
        built.problem = make_mc(spec.missionaries, spec.cannibals);
        built.group.generators.push_back(
            mc_mirror(spec.missionaries, spec.cannibals));
    } else {
        built.problem = make_hanoi(spec.disks);
        built.group.generators.push_back(hanoi_mirror());
    }

    if (!spec.sym.empty()) {
        SymmetryGroup picked;
        for (const Automorphism& g : built.group.generators)
            if (g.name == spec.sym) picked.generators.push_back(g);
        if (picked.generators.empty())
            throw Error(ErrorCode::invalid_parameter,
                        "no symmetry named '" + spec.sym + "'");
        built.group = std::move(picked);
    }
    return built;
}

const Automorphism& sole_symmetry(const SymmetryGroup& group) {
    if (group.generators.empty())
        throw Error(ErrorCode::precondition_failed,
                    "this strategy needs a symmetry and none is available");
    return group.generators.front();
}

struct RunOutcome {
    SearchResult result;
    std::optional<Path> display_path;  // base-level path when it differs
};

RunOutcome run_algorithm(const std::string& algo, const BuiltProblem& built,
                         std::size_t limit, const SearchOptions& options) {
    RunOutcome out;
    if (algo == "bfs") {
        out.result = bfs(built.problem, options);
    } else if (algo == "ucs") {
        out.result = uniform_cost(built.problem, options);
    } else if (algo == "dls") {
        out.result = depth_limited(built.problem, limit, options);
    } else if (algo == "bidir") {
        out.result = bidirectional_bfs(built.problem, options);
    } else if (algo == "mirror-meet") {
        out.result = mirror_meet(built.problem, sole_symmetry(built.group),
                                 options);
    } else if (algo == "quotient-bfs") {
        QuotientProblem q = quotient(built.problem, built.group, options);
        out.result = bfs(q.problem, options);
        if (out.result.path)
            out.display_path = lift_path(*out.result.path, *q.bookkeeping);
    } else {
        throw Error(ErrorCode::invalid_parameter,
                    "unknown algorithm '" + algo + "'");
    }
    return out;
}

std::int64_t wall_ms(const SearchMetrics& m, bool no_timing) {
    if (no_timing) return 0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(m.wall_time)
        .count();
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path);
    if (!out.good())
        throw Error(ErrorCode::invalid_parameter,
                    "cannot write '" + out_path + "'");
    out << payload;
}

int cmd_solve(const ProblemSpec& spec, const std::string& algo,
              std::size_t limit, std::uint64_t node_cap, bool no_timing) {
    BuiltProblem built = build_problem(spec);
    RunOutcome run = run_algorithm(algo, built, limit, {node_cap});
    const SearchResult& res = run.result;
    const std::optional<Path>& shown =
        run.display_path ? run.display_path : res.path;

    std::cout << "outcome: " << to_string(res.outcome) << "\n";
    if (shown) {
        std::cout << "cost: " << format_cost(shown->total_cost) << "\n";
        std::cout << "length: " << shown->length() << "\n";
        std::cout << "plan:";
        for (const Action& a : shown->actions()) std::cout << ' ' << a.label();
        std::cout << "\n";
    }
    std::cout << "nodes_expanded: " << res.metrics.nodes_expanded << "\n"
              << "nodes_generated: " << res.metrics.nodes_generated << "\n"
              << "max_frontier: " << res.metrics.max_frontier << "\n"
              << "wall_time_ms: " << wall_ms(res.metrics, no_timing) << "\n";
    return res.outcome == Outcome::found ? 0 : 2;
}

int cmd_compare(const ProblemSpec& spec, const std::vector<std::string>& algos,
                std::size_t limit, std::uint64_t node_cap,
                const std::string& format, const std::string& out_path,
                bool no_timing) {
    BuiltProblem built = build_problem(spec);
    std::vector<MetricsRow> rows;
    for (const std::string& algo : algos) {
        try {
            RunOutcome run = run_algorithm(algo, built, limit, {node_cap});
            rows.push_back(MetricsRow::from_result(algo, run.result));
        } catch (const Error& e) {
            switch (e.code()) {
                case ErrorCode::not_invertible:
                case ErrorCode::no_goal_enumeration:
                case ErrorCode::precondition_failed:
                case ErrorCode::invalid_symmetry: {
                    MetricsRow row;
                    row.label = algo;
                    row.outcome = "Inapplicable";
                    rows.push_back(row);
                    std::cerr << "note: " << algo << " is inapplicable here: "
                              << e.what() << "\n";
                    break;
                }
                case ErrorCode::resource_limit: {
                    MetricsRow row;
                    row.label = algo;
                    row.outcome = "ResourceLimit";
                    rows.push_back(row);
                    std::cerr << "note: " << algo << " hit the node cap: "
                              << e.what() << "\n";
                    break;
                }
                default:
                    throw;
            }
        }
    }
    MetricsFormat fmt =
        format == "json" ? MetricsFormat::json : MetricsFormat::csv;
    write_output(out_path, write_metrics(rows, fmt, no_timing));
    return 0;
}

int cmd_export(const ProblemSpec& spec, bool color_orbits,
               std::uint64_t node_cap, const std::string& out_path) {
    BuiltProblem built = build_problem(spec);
    DotOptions options;
    options.node_cap = node_cap;
    if (color_orbits) options.color_by_orbit = &built.group;
    write_output(out_path, export_dot(built.problem, options));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"State-space search with symmetry exploitation"};
    app.require_subcommand(1);

    static const std::vector<std::string> kAlgos = {
        "bfs", "ucs", "dls", "bidir", "mirror-meet", "quotient-bfs"};

    ProblemSpec spec;
    std::string algo = "bfs";
    std::vector<std::string> algos;
    std::size_t limit = 16;
    std::uint64_t node_cap = 1'000'000;
    std::string format = "csv";
    std::string out_path;
    bool no_timing = false;
    bool color_orbits = false;

    CLI::App* solve = app.add_subcommand("solve", "Run one algorithm");
    add_problem_options(solve, spec);
    solve->add_option("--algo", algo, "Algorithm to run")
        ->check(CLI::IsMember(kAlgos));
    solve->add_option("--limit", limit, "Depth limit for dls");
    solve->add_option("--node-cap", node_cap, "Abort beyond this many states");
    solve->add_flag("--no-timing", no_timing, "Report wall_time_ms as 0");

    CLI::App* compare =
        app.add_subcommand("compare", "Run several algorithms, emit a table");
    add_problem_options(compare, spec);
    compare->add_option("--algos", algos, "Comma-separated algorithm list")
        ->delimiter(',')
        ->required()
        ->check(CLI::IsMember(kAlgos));
    compare->add_option("--limit", limit, "Depth limit for dls");
    compare->add_option("--node-cap", node_cap,
                        "Abort beyond this many states");
    compare->add_option("--format", format, "Table format")
        ->check(CLI::IsMember({"csv", "json"}));
    compare->add_option("--out", out_path, "Write the table here (default stdout)");
    compare->add_flag("--no-timing", no_timing,
                      "Report wall_time_ms as 0 for reproducible output");

    CLI::App* exp =
        app.add_subcommand("export", "Write the reachable space as GraphViz");
    add_problem_options(exp, spec);
    exp->add_flag("--color-orbits", color_orbits,
                  "Fill states with one color per symmetry orbit");
    exp->add_option("--node-cap", node_cap, "Abort beyond this many states");
    exp->add_option("--out", out_path, "Write the graph here (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (solve->parsed())
            return cmd_solve(spec, algo, limit, node_cap, no_timing);
        if (compare->parsed())
            return cmd_compare(spec, algos, limit, node_cap, format, out_path,
                               no_timing);
        return cmd_export(spec, color_orbits, node_cap, out_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
