#include "symsearch/agent.hpp"

#include <algorithm>

namespace symsearch {

std::optional<Action> agent_step(const Percept& percept, AgentMemory& memory,
                                 const AgentConfig& config) {
    // A live plan is kept only while the world matches its predictions.
    if (memory.expected && *memory.expected != percept.state) {
        memory.plan.clear();
        memory.predicted.clear();
        memory.expected.reset();
    }

    if (memory.plan.empty()) {
        Problem problem = config.formulate_problem(percept.state);
        if (problem.goal_test(percept.state)) {
            memory.expected = percept.state;
            return std::nullopt;
        }
        SearchResult res = config.search(problem);
        if (res.outcome != Outcome::found || !res.path)
            throw Error(ErrorCode::search_failed,
                        "no plan from " + percept.state.encoding());
        for (const auto& [a, s] : res.path->steps) {
            memory.plan.push_back(a);
            memory.predicted.push_back(s);
        }
        if (memory.plan.empty()) {
            // Already at the goal.
            memory.expected = percept.state;
            return std::nullopt;
        }
    }

    Action next = memory.plan.front();
    memory.plan.erase(memory.plan.begin());
    memory.expected = memory.predicted.front();
    memory.predicted.erase(memory.predicted.begin());
    return next;
}

EpisodeTrace run_episode(Environment& env, const AgentConfig& config,
                         std::size_t max_steps) {
    EpisodeTrace trace;
    AgentMemory memory;
    Problem cost_model = config.formulate_problem(env.true_state);
    while (true) {
        if (env.goal_test(env.true_state)) {
            trace.status = EpisodeStatus::reached_goal;
            break;
        }
        if (trace.steps.size() == max_steps) {
            trace.status = EpisodeStatus::budget_exceeded;
            break;
        }
        std::optional<Action> act =
            agent_step(Percept{env.true_state}, memory, config);
        if (!act) {
            // The agent's own model says goal; stop rather than spin.
            trace.status = EpisodeStatus::reached_goal;
            break;
        }
        State before = env.true_state;
        env.true_state = env.apply(before, *act);
        trace.total_cost += cost_model.step_cost(before, *act, env.true_state);
        trace.steps.push_back({before, *act, env.true_state});
    }
    trace.final_state = env.true_state;
    return trace;
}

}  // namespace symsearch
