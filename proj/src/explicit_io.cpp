#include "symsearch/explicit_io.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "json.hpp"

namespace symsearch {

namespace {

bool valid_identifier(std::string_view tok) {
    if (tok.empty()) return false;
    for (char ch : tok) {
        bool ok = (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') ||
                  (ch >= '0' && ch <= '9') || ch == '_' || ch == ',' ||
                  ch == '(' || ch == ')' || ch == '-';
        if (!ok) return false;
    }
    return true;
}

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ' ' || ch == '\t') {
            if (!cur.empty()) out.push_back(std::exchange(cur, {}));
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// Splits "a->b"; anything without exactly one arrow fails.
std::pair<std::string, std::string> parse_mapping(std::size_t line,
                                                  const std::string& tok) {
    auto pos = tok.find("->");
    if (pos == std::string::npos || tok.find("->", pos + 2) != std::string::npos)
        throw ParseError(line, tok, "expected <from>-><to>, got '" + tok + "'");
    std::string from = tok.substr(0, pos);
    std::string to = tok.substr(pos + 2);
    if (!valid_identifier(from) || !valid_identifier(to))
        throw ParseError(line, tok, "bad identifier in mapping '" + tok + "'");
    return {from, to};
}

}  // namespace

ExplicitProblem parse_problem_file(std::string_view text) {
    ExplicitProblem ep;
    std::set<std::string> declared;
    std::set<std::string> goal_set;
    std::set<std::pair<std::string, std::string>> edge_keys;
    std::map<std::string, std::size_t> sym_index;
    bool init_seen = false;

    auto require_state = [&](std::size_t line, const std::string& name) {
        if (!declared.count(name))
            throw SemanticError(line, "state '" + name + "' is not declared");
    };

    std::size_t line_no = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        auto end = text.find('\n', begin);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(begin, end - begin);
        begin = end + 1;
        ++line_no;

        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        std::vector<std::string> toks = tokenize(raw);
        if (toks.empty()) continue;
        const std::string& directive = toks[0];

        auto want = [&](std::size_t n) {
            if (toks.size() != n)
                throw ParseError(line_no, directive,
                                 directive + " takes " + std::to_string(n - 1) +
                                     " arguments, got " +
                                     std::to_string(toks.size() - 1));
        };
        auto name_of = [&](const std::string& tok) -> const std::string& {
            if (!valid_identifier(tok))
                throw ParseError(line_no, tok, "bad identifier '" + tok + "'");
            return tok;
        };

        if (directive == "state") {
            want(2);
            const std::string& name = name_of(toks[1]);
            if (!declared.insert(name).second)
                throw SemanticError(line_no,
                                    "state '" + name + "' declared twice");
            ep.states.push_back(name);
        } else if (directive == "init") {
            want(2);
            require_state(line_no, name_of(toks[1]));
            if (init_seen)
                throw SemanticError(line_no, "duplicate init");
            init_seen = true;
            ep.init = toks[1];
        } else if (directive == "goal") {
            want(2);
            require_state(line_no, name_of(toks[1]));
            if (!goal_set.insert(toks[1]).second)
                throw SemanticError(line_no,
                                    "goal '" + toks[1] + "' declared twice");
            ep.goals.push_back(toks[1]);
        } else if (directive == "edge") {
            want(5);
            require_state(line_no, name_of(toks[1]));
            name_of(toks[2]);
            require_state(line_no, name_of(toks[3]));
            auto cost = parse_cost(toks[4]);
            if (!cost)
                throw ParseError(line_no, toks[4],
                                 "cost must be a non-negative integer or p/q, "
                                 "got '" + toks[4] + "'");
            if (!edge_keys.emplace(toks[1], toks[2]).second)
                throw SemanticError(line_no, "duplicate edge (" + toks[1] +
                                                 ", " + toks[2] + ")");
            ep.edges.push_back({toks[1], toks[2], toks[3], *cost});
        } else if (directive == "sym" || directive == "symact") {
            if (toks.size() < 3)
                throw ParseError(line_no, directive,
                                 directive + " needs a name and at least one "
                                 "mapping");
            const std::string& name = name_of(toks[1]);
            std::size_t idx;
            if (auto it = sym_index.find(name); it != sym_index.end()) {
                idx = it->second;
            } else {
                if (directive == "symact")
                    throw SemanticError(line_no, "symact before sym for '" +
                                                     name + "'");
                idx = ep.syms.size();
                sym_index.emplace(name, idx);
                ep.syms.push_back({name, {}, {}});
            }
            auto& table = directive == "sym" ? ep.syms[idx].state_map
                                             : ep.syms[idx].action_map;
            for (std::size_t i = 2; i < toks.size(); ++i) {
                auto [from, to] = parse_mapping(line_no, toks[i]);
                if (directive == "sym") {
                    require_state(line_no, from);
                    require_state(line_no, to);
                }
                auto [it, fresh] = table.emplace(from, to);
                if (!fresh && it->second != to)
                    throw SemanticError(line_no, "sym '" + name + "' maps '" +
                                                     from + "' two ways");
            }
        } else {
            throw ParseError(line_no, directive,
                             "unknown directive '" + directive + "'");
        }
    }

    if (!init_seen) throw SemanticError(0, "no init declared");
    if (ep.goals.empty()) throw SemanticError(0, "no goal declared");

    // Unlisted identifiers map to themselves, so a sym is a bijection iff no
    // two identifiers land on the same image.
    for (const auto& sym : ep.syms) {
        std::set<std::string> images;
        auto check = [&](const std::map<std::string, std::string>& table,
                         const std::vector<std::string>& universe,
                         const char* what) {
            images.clear();
            for (const std::string& id : universe) {
                auto it = table.find(id);
                const std::string& img = it == table.end() ? id : it->second;
                if (!images.insert(img).second)
                    throw SemanticError(
                        0, "sym '" + sym.name + "' is not a bijection on " +
                               what + ": two map to '" + img + "'");
            }
        };
        check(sym.state_map, ep.states, "states");
        std::set<std::string> label_set;
        for (const auto& e : ep.edges) label_set.insert(e.label);
        for (const auto& [from, to] : sym.action_map) {
            label_set.insert(from);
            label_set.insert(to);
        }
        std::vector<std::string> labels(label_set.begin(), label_set.end());
        check(sym.action_map, labels, "actions");
    }
    return ep;
}

std::string render_problem_file(const ExplicitProblem& ep) {
    std::string out;
    for (const auto& s : ep.states) out += "state " + s + "\n";
    out += "init " + ep.init + "\n";
    for (const auto& g : ep.goals) out += "goal " + g + "\n";
    for (const auto& e : ep.edges)
        out += "edge " + e.from + " " + e.label + " " + e.to + " " +
               format_cost(e.cost) + "\n";
    for (const auto& sym : ep.syms) {
        if (!sym.state_map.empty()) {
            out += "sym " + sym.name;
            for (const auto& [from, to] : sym.state_map)
                out += " " + from + "->" + to;
            out += "\n";
        }
        for (const auto& [from, to] : sym.action_map)
            out += "symact " + sym.name + " " + from + "->" + to + "\n";
    }
    return out;
}

namespace {

struct EdgeIndex {
    std::map<std::string, std::vector<Action>> actions_of;
    std::map<std::pair<std::string, std::string>, std::pair<std::string, Cost>>
        transition;  // (from, label) -> (to, cost)
    std::set<std::string> goal_set;
    std::set<std::string> self_inverse_labels;
};

std::shared_ptr<const EdgeIndex> index_edges(const ExplicitProblem& ep) {
    auto idx = std::make_shared<EdgeIndex>();
    for (const auto& e : ep.edges) {
        idx->actions_of[e.from].emplace_back(e.label);
        idx->transition[{e.from, e.label}] = {e.to, e.cost};
    }
    idx->goal_set.insert(ep.goals.begin(), ep.goals.end());
    // A label is its own inverse iff every edge wearing it has an equal-cost
    // reverse edge wearing it too.
    std::set<std::string> labels;
    for (const auto& e : ep.edges) labels.insert(e.label);
    for (const auto& l : labels) {
        bool ok = true;
        for (const auto& e : ep.edges) {
            if (e.label != l) continue;
            auto it = idx->transition.find({e.to, l});
            if (it == idx->transition.end() || it->second.first != e.from ||
                it->second.second != e.cost) {
                ok = false;
                break;
            }
        }
        if (ok) idx->self_inverse_labels.insert(l);
    }
    return idx;
}

}  // namespace

Problem to_problem(const ExplicitProblem& ep) {
    auto idx = index_edges(ep);
    Problem p;
    p.initial = State(ep.init);
    p.actions = [idx](const State& s) -> std::vector<Action> {
        auto it = idx->actions_of.find(s.encoding());
        if (it == idx->actions_of.end()) return {};
        return it->second;
    };
    p.result = [idx](const State& s, const Action& a) {
        auto it = idx->transition.find({s.encoding(), a.label()});
        if (it == idx->transition.end())
            throw Error(ErrorCode::contract_violation,
                        "no edge (" + s.encoding() + ", " + a.label() + ")");
        return State(it->second.first);
    };
    p.goal_test = [idx](const State& s) {
        return idx->goal_set.count(s.encoding()) > 0;
    };
    p.step_cost = [idx](const State& s, const Action& a, const State&) {
        auto it = idx->transition.find({s.encoding(), a.label()});
        if (it == idx->transition.end())
            throw Error(ErrorCode::contract_violation,
                        "no edge (" + s.encoding() + ", " + a.label() + ")");
        return it->second.second;
    };
    p.inverse = [idx](const Action& a) -> std::optional<Action> {
        if (idx->self_inverse_labels.count(a.label())) return a;
        return std::nullopt;
    };
    std::vector<State> goals;
    for (const auto& g : ep.goals) goals.emplace_back(g);
    p.goal_states = std::move(goals);
    return p;
}

SymmetryGroup declared_symmetries(const ExplicitProblem& ep) {
    SymmetryGroup group;
    for (const auto& sym : ep.syms) {
        auto states = std::make_shared<std::map<std::string, std::string>>(
            sym.state_map);
        auto acts = std::make_shared<std::map<std::string, std::string>>(
            sym.action_map);
        Automorphism a;
        a.name = sym.name;
        a.map_state = [states](const State& s) {
            auto it = states->find(s.encoding());
            return it == states->end() ? s : State(it->second);
        };
        a.map_action = [acts](const Action& act) {
            auto it = acts->find(act.label());
            return it == acts->end() ? act : Action(it->second);
        };
        auto twice_is_identity =
            [](const std::map<std::string, std::string>& table) {
                for (const auto& [from, to] : table) {
                    auto back = table.find(to);
                    const std::string& again =
                        back == table.end() ? to : back->second;
                    if (again != from) return false;
                }
                return true;
            };
        a.involution = twice_is_identity(sym.state_map) &&
                       twice_is_identity(sym.action_map);
        group.generators.push_back(std::move(a));
    }
    return group;
}

std::string export_dot(const Problem& problem, const DotOptions& options) {
    std::vector<State> order = enumerate_reachable(problem, options.node_cap);

    // One fill color per orbit, assigned in state discovery order.
    static const char* kPalette[] = {"#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f",
                                     "#cab2d6", "#ffff99", "#1f78b4", "#33a02c",
                                     "#e31a1c", "#ff7f00"};
    std::map<State, std::string> fill;
    if (options.color_by_orbit) {
        std::map<State, std::size_t> orbit_color;
        for (const State& s : order) {
            State rep = canonical(s, *options.color_by_orbit);
            auto [it, fresh] =
                orbit_color.emplace(rep, orbit_color.size());
            fill[s] = kPalette[it->second % std::size(kPalette)];
        }
    }

    std::string out = "digraph G {\n";
    for (const State& s : order) {
        out += "  \"" + s.encoding() + "\"";
        std::vector<std::string> attrs;
        if (problem.goal_test(s)) attrs.push_back("peripheries=2");
        if (auto it = fill.find(s); it != fill.end()) {
            attrs.push_back("style=filled");
            attrs.push_back("fillcolor=\"" + it->second + "\"");
        }
        if (!attrs.empty()) {
            out += " [";
            for (std::size_t i = 0; i < attrs.size(); ++i) {
                if (i) out += ", ";
                out += attrs[i];
            }
            out += "]";
        }
        out += ";\n";
    }
    for (const State& s : order) {
        for (const Action& a : problem.actions(s)) {
            State t = problem.result(s, a);
            out += "  \"" + s.encoding() + "\" -> \"" + t.encoding() +
                   "\" [label=\"" + a.label() + "\"];\n";
        }
    }
    out += "}\n";
    return out;
}

MetricsRow MetricsRow::from_result(std::string label, const SearchResult& r) {
    MetricsRow row;
    row.label = std::move(label);
    row.outcome = to_string(r.outcome);
    if (r.path) {
        row.cost = r.path->total_cost;
        row.length = r.path->length();
    }
    row.metrics = r.metrics;
    return row;
}

namespace {

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (char ch : raw) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    return quoted + "\"";
}

std::int64_t wall_ms(const SearchMetrics& m, bool zeroed) {
    if (zeroed) return 0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(m.wall_time)
        .count();
}

}  // namespace

std::string write_metrics(const std::vector<MetricsRow>& rows,
                          MetricsFormat format, bool zero_wall_time) {
    if (format == MetricsFormat::csv) {
        std::string out =
            "label,outcome,cost,length,nodes_expanded,nodes_generated,"
            "max_frontier,wall_time_ms\n";
        for (const auto& row : rows) {
            out += csv_field(row.label) + ',' + csv_field(row.outcome) + ',';
            if (row.cost) out += format_cost(*row.cost);
            out += ',';
            if (row.length) out += std::to_string(*row.length);
            out += ',' + std::to_string(row.metrics.nodes_expanded) + ',' +
                   std::to_string(row.metrics.nodes_generated) + ',' +
                   std::to_string(row.metrics.max_frontier) + ',' +
                   std::to_string(wall_ms(row.metrics, zero_wall_time)) + '\n';
        }
        return out;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json obj;
        obj["label"] = row.label;
        obj["outcome"] = row.outcome;
        obj["cost"] = row.cost ? nlohmann::ordered_json(format_cost(*row.cost))
                               : nlohmann::ordered_json(nullptr);
        obj["length"] = row.length ? nlohmann::ordered_json(*row.length)
                                   : nlohmann::ordered_json(nullptr);
        obj["nodes_expanded"] = row.metrics.nodes_expanded;
        obj["nodes_generated"] = row.metrics.nodes_generated;
        obj["max_frontier"] = row.metrics.max_frontier;
        obj["wall_time_ms"] = wall_ms(row.metrics, zero_wall_time);
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

}  // namespace symsearch
