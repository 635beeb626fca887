// Python surface: factories, searches and symmetry operations with plain
// strings at the boundary (states are encodings, actions are labels).

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symsearch/agent.hpp"
#include "symsearch/domains.hpp"
#include "symsearch/explicit_io.hpp"
#include "symsearch/search.hpp"
#include "symsearch/symmetry.hpp"

namespace py = pybind11;
using namespace symsearch;

namespace {

std::vector<std::string> plan_of(const Path& path) {
    std::vector<std::string> out;
    for (const auto& [a, s] : path.steps) out.push_back(a.label());
    return out;
}

SymmetryGroup group_of(const Automorphism& sigma) {
    SymmetryGroup g;
    g.generators.push_back(sigma);
    return g;
}

SearchOptions options_of(std::uint64_t node_cap) {
    SearchOptions o;
    o.node_cap = node_cap;
    return o;
}

Problem reseat(const Problem& p, const std::string& state) {
    Problem copy = p;
    copy.initial = State(state);
    return copy;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "State-space search with symmetry exploitation";

    py::register_exception<Error>(m, "SearchError");

    py::class_<Problem>(m, "Problem")
        .def_property_readonly(
            "initial", [](const Problem& p) { return p.initial.encoding(); })
        .def("actions",
             [](const Problem& p, const std::string& s) {
                 std::vector<std::string> out;
                 for (const Action& a : p.actions(State(s)))
                     out.push_back(a.label());
                 return out;
             },
             py::arg("state"))
        .def("result",
             [](const Problem& p, const std::string& s, const std::string& a) {
                 return p.result(State(s), Action(a)).encoding();
             },
             py::arg("state"), py::arg("action"))
        .def("is_goal",
             [](const Problem& p, const std::string& s) {
                 return p.goal_test(State(s));
             },
             py::arg("state"))
        .def("reachable",
             [](const Problem& p, std::uint64_t cap) {
                 std::vector<std::string> out;
                 for (const State& s : enumerate_reachable(p, cap))
                     out.push_back(s.encoding());
                 return out;
             },
             py::arg("cap") = 1'000'000);

    py::class_<SearchResult>(m, "SearchResult")
        .def_property_readonly(
            "outcome",
            [](const SearchResult& r) { return std::string(to_string(r.outcome)); })
        .def_property_readonly("found",
                               [](const SearchResult& r) {
                                   return r.outcome == Outcome::found;
                               })
        .def_property_readonly(
            "plan",
            [](const SearchResult& r) -> std::optional<std::vector<std::string>> {
                if (!r.path) return std::nullopt;
                return plan_of(*r.path);
            })
        .def_property_readonly(
            "cost",
            [](const SearchResult& r) -> std::optional<std::string> {
                if (!r.path) return std::nullopt;
                return format_cost(r.path->total_cost);
            })
        .def_property_readonly(
            "length",
            [](const SearchResult& r) -> std::optional<std::size_t> {
                if (!r.path) return std::nullopt;
                return r.path->length();
            })
        .def_property_readonly("nodes_expanded",
                               [](const SearchResult& r) {
                                   return r.metrics.nodes_expanded;
                               })
        .def_property_readonly("nodes_generated",
                               [](const SearchResult& r) {
                                   return r.metrics.nodes_generated;
                               })
        .def_property_readonly("max_frontier",
                               [](const SearchResult& r) {
                                   return r.metrics.max_frontier;
                               })
        .def_property_readonly("wall_time_ms", [](const SearchResult& r) {
            return std::chrono::duration_cast<std::chrono::milliseconds>(
                       r.metrics.wall_time)
                .count();
        });

    py::class_<Automorphism>(m, "Symmetry")
        .def_readonly("name", &Automorphism::name)
        .def_readonly("involution", &Automorphism::involution)
        .def("map_state",
             [](const Automorphism& a, const std::string& s) {
                 return a.map_state(State(s)).encoding();
             },
             py::arg("state"))
        .def("map_action",
             [](const Automorphism& a, const std::string& l) {
                 return a.map_action(Action(l)).label();
             },
             py::arg("action"));

    m.def("vacuum",
          [](int n, const std::string& init, bool self_loop) {
              VacuumState initial = init.empty()
                                        ? VacuumState::all_dirty(n)
                                        : VacuumState::from_state(State(init));
              return make_vacuum(n, initial,
                                 self_loop ? VacuumMovement::self_loop
                                           : VacuumMovement::pruned);
          },
          py::arg("n") = 2, py::arg("init") = "", py::arg("self_loop") = false);
    m.def("mc",
          [](int missionaries, int cannibals) {
              return make_mc(missionaries, cannibals);
          },
          py::arg("missionaries") = 3, py::arg("cannibals") = 3);
    m.def("hanoi", [](int disks) { return make_hanoi(disks); },
          py::arg("disks"));
    m.def("belief",
          [](const Problem& base, const std::vector<std::string>& members) {
              BeliefState b;
              for (const std::string& s : members) b.members.emplace_back(s);
              return belief_wrap(base, b);
          },
          py::arg("base"), py::arg("members"));
    m.def("shipped_mirror",
          [](const std::string& domain, int a, int b) {
              return shipped_mirror(domain, a, b);
          },
          py::arg("domain"), py::arg("a") = 0, py::arg("b") = 0);

    m.def("parse_problem",
          [](const std::string& text) { return to_problem(parse_problem_file(text)); },
          py::arg("text"));
    m.def("render_canonical",
          [](const std::string& text) {
              return render_problem_file(parse_problem_file(text));
          },
          py::arg("text"));
    m.def("declared_symmetries",
          [](const std::string& text) {
              return declared_symmetries(parse_problem_file(text)).generators;
          },
          py::arg("text"));

    m.def("bfs",
          [](const Problem& p, std::uint64_t node_cap) {
              return bfs(p, options_of(node_cap));
          },
          py::arg("problem"), py::arg("node_cap") = 1'000'000);
    m.def("uniform_cost",
          [](const Problem& p, std::uint64_t node_cap) {
              return uniform_cost(p, options_of(node_cap));
          },
          py::arg("problem"), py::arg("node_cap") = 1'000'000);
    m.def("depth_limited",
          [](const Problem& p, std::size_t limit, std::uint64_t node_cap) {
              return depth_limited(p, limit, options_of(node_cap));
          },
          py::arg("problem"), py::arg("limit"), py::arg("node_cap") = 1'000'000);
    m.def("bidirectional_bfs",
          [](const Problem& p, std::uint64_t node_cap) {
              return bidirectional_bfs(p, options_of(node_cap));
          },
          py::arg("problem"), py::arg("node_cap") = 1'000'000);
    m.def("mirror_meet",
          [](const Problem& p, const Automorphism& sigma,
             std::uint64_t node_cap) {
              return mirror_meet(p, sigma, options_of(node_cap));
          },
          py::arg("problem"), py::arg("symmetry"),
          py::arg("node_cap") = 1'000'000);
    m.def("quotient_bfs",
          [](const Problem& p, const Automorphism& sigma,
             std::uint64_t node_cap) {
              QuotientProblem q =
                  quotient(p, group_of(sigma), options_of(node_cap));
              SearchResult res = bfs(q.problem, options_of(node_cap));
              if (res.path)
                  res.path = lift_path(*res.path, *q.bookkeeping);
              return res;
          },
          py::arg("problem"), py::arg("symmetry"),
          py::arg("node_cap") = 1'000'000,
          "Search the orbit quotient, then lift the plan back to base states. "
          "Metrics are the quotient search's.");

    m.def("check",
          [](const Problem& p, const Automorphism& sigma) {
              AutomorphismReport r = check_automorphism(p, sigma);
              py::dict out;
              out["bijective_on_reachable"] = r.bijective_on_reachable;
              out["commutes_with_result"] = r.commutes_with_result;
              out["cost_preserving"] = r.cost_preserving;
              out["goal_preserving"] = r.goal_preserving;
              out["involution_claimed"] = r.involution_claimed;
              out["involution_ok"] = r.involution_ok;
              out["structurally_valid"] = r.structurally_valid();
              out["valid_for_quotient"] = r.valid_for_quotient();
              out["first_violation"] = r.first_violation;
              return out;
          },
          py::arg("problem"), py::arg("symmetry"));
    m.def("orbit",
          [](const Automorphism& sigma, const std::string& s) {
              std::vector<std::string> out;
              for (const State& t : orbit(State(s), group_of(sigma)))
                  out.push_back(t.encoding());
              return out;
          },
          py::arg("symmetry"), py::arg("state"));
    m.def("canonical",
          [](const Automorphism& sigma, const std::string& s) {
              return canonical(State(s), group_of(sigma)).encoding();
          },
          py::arg("symmetry"), py::arg("state"));

    m.def("validate_plan",
          [](const Problem& p, const std::vector<std::string>& plan) {
              Path path;
              path.start = p.initial;
              State cur = p.initial;
              try {
                  for (const std::string& label : plan) {
                      Action a(label);
                      State next = p.result(cur, a);
                      path.total_cost += p.step_cost(cur, a, next);
                      path.steps.emplace_back(a, next);
                      cur = next;
                  }
              } catch (const Error& e) {
                  return std::make_pair(false, std::string(e.what()));
              }
              PathCheck pc = validate_path(p, path);
              return std::make_pair(pc.ok, pc.first_violation);
          },
          py::arg("problem"), py::arg("plan"));

    m.def("export_dot",
          [](const Problem& p, const Automorphism* color_by,
             std::uint64_t node_cap) {
              DotOptions opts;
              opts.node_cap = node_cap;
              SymmetryGroup group;
              if (color_by) {
                  group = group_of(*color_by);
                  opts.color_by_orbit = &group;
              }
              return export_dot(p, opts);
          },
          py::arg("problem"), py::arg("color_by") = nullptr,
          py::arg("node_cap") = 1'000'000);

    m.def("metrics_table",
          [](const std::vector<std::pair<std::string, SearchResult>>& rows,
             const std::string& format, bool zero_wall_time) {
              std::vector<MetricsRow> table;
              for (const auto& [label, res] : rows)
                  table.push_back(MetricsRow::from_result(label, res));
              return write_metrics(table,
                                   format == "json" ? MetricsFormat::json
                                                    : MetricsFormat::csv,
                                   zero_wall_time);
          },
          py::arg("rows"), py::arg("format") = "csv",
          py::arg("zero_wall_time") = false);

    m.def("run_episode",
          [](const Problem& truth, const py::object& reformulate,
             std::size_t max_steps) {
              AgentConfig config;
              if (reformulate.is_none()) {
                  config.formulate_problem = [truth](const State& s) {
                      return reseat(truth, s.encoding());
                  };
              } else {
                  config.formulate_problem = [reformulate](const State& s) {
                      return reformulate(s.encoding()).cast<Problem>();
                  };
              }
              Environment env;
              env.true_state = truth.initial;
              env.apply = [truth](const State& s, const Action& a) {
                  return truth.result(s, a);
              };
              env.goal_test = truth.goal_test;
              EpisodeTrace trace = run_episode(env, config, max_steps);

              py::list steps;
              for (const auto& step : trace.steps)
                  steps.append(py::make_tuple(step.before.encoding(),
                                              step.action.label(),
                                              step.after.encoding()));
              py::dict out;
              out["status"] = trace.status == EpisodeStatus::reached_goal
                                  ? "reached_goal"
                                  : "budget_exceeded";
              out["steps"] = steps;
              out["final_state"] = trace.final_state.encoding();
              out["total_cost"] = format_cost(trace.total_cost);
              return out;
          },
          py::arg("truth"), py::arg("reformulate") = py::none(),
          py::arg("max_steps") = 1000,
          "Percept/act loop against the given problem as ground truth. "
          "reformulate(state) may supply the agent's own model; by default "
          "the agent replans on the truth with its initial state moved.");
}
