#include "symsearch/domains.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <sstream>

namespace symsearch {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

[[noreturn]] void bad_encoding(const std::string& what, const State& s) {
    throw Error(ErrorCode::invalid_parameter,
                "not a " + what + " state: " + s.encoding());
}

int parse_int(const std::string& tok, const std::string& what, const State& s) {
    if (tok.empty()) bad_encoding(what, s);
    int v = 0;
    for (char ch : tok) {
        if (ch < '0' || ch > '9') bad_encoding(what, s);
        v = v * 10 + (ch - '0');
        if (v > 1'000'000) bad_encoding(what, s);
    }
    return v;
}

}  // namespace

// --- vacuum world ---

State VacuumState::to_state() const {
    int n = static_cast<int>(dirt.size());
    std::string enc;
    if (n == 2)
        enc = position == 0 ? "L" : "R";
    else
        enc = std::to_string(position);
    for (bool d : dirt) {
        enc += ',';
        enc += d ? '1' : '0';
    }
    return State(std::move(enc));
}

VacuumState VacuumState::from_state(const State& s) {
    std::vector<std::string> toks = split(s.encoding(), ',');
    if (toks.size() < 2) bad_encoding("vacuum", s);
    VacuumState v;
    int n = static_cast<int>(toks.size()) - 1;
    if (n == 2 && (toks[0] == "L" || toks[0] == "R"))
        v.position = toks[0] == "L" ? 0 : 1;
    else
        v.position = parse_int(toks[0], "vacuum", s);
    if (v.position >= n) bad_encoding("vacuum", s);
    for (int i = 1; i <= n; ++i) {
        if (toks[i] != "0" && toks[i] != "1") bad_encoding("vacuum", s);
        v.dirt.push_back(toks[i] == "1");
    }
    return v;
}

VacuumState VacuumState::all_dirty(int n, int position) {
    VacuumState v;
    v.position = position;
    v.dirt.assign(static_cast<std::size_t>(n), true);
    return v;
}

Problem make_vacuum(int n, const VacuumState& initial, VacuumMovement movement) {
    if (n < 1)
        throw Error(ErrorCode::invalid_parameter,
                    "vacuum needs at least one square");
    if (static_cast<int>(initial.dirt.size()) != n || initial.position < 0 ||
        initial.position >= n)
        throw Error(ErrorCode::invalid_parameter,
                    "initial vacuum state does not fit a strip of " +
                        std::to_string(n));

    const Action left("Left"), right("Right"), suck("Suck");
    bool self_loop = movement == VacuumMovement::self_loop;

    Problem p;
    p.initial = initial.to_state();
    p.actions = [n, self_loop, left, right, suck](const State& s) {
        VacuumState v = VacuumState::from_state(s);
        std::vector<Action> out;
        if (self_loop || v.position > 0) out.push_back(left);
        if (self_loop || v.position < n - 1) out.push_back(right);
        out.push_back(suck);
        return out;
    };
    p.result = [n, self_loop, left, right, suck](const State& s,
                                                 const Action& a) {
        VacuumState v = VacuumState::from_state(s);
        if (a == left) {
            if (v.position > 0)
                --v.position;
            else if (!self_loop)
                throw Error(ErrorCode::contract_violation,
                            "Left is not applicable in " + s.encoding());
        } else if (a == right) {
            if (v.position < n - 1)
                ++v.position;
            else if (!self_loop)
                throw Error(ErrorCode::contract_violation,
                            "Right is not applicable in " + s.encoding());
        } else if (a == suck) {
            v.dirt[static_cast<std::size_t>(v.position)] = false;
        } else {
            throw Error(ErrorCode::contract_violation,
                        "unknown vacuum action " + a.label());
        }
        return v.to_state();
    };
    p.goal_test = [](const State& s) {
        VacuumState v = VacuumState::from_state(s);
        return std::none_of(v.dirt.begin(), v.dirt.end(),
                            [](bool d) { return d; });
    };
    if (!self_loop) {
        p.inverse = [left, right](const Action& a) -> std::optional<Action> {
            if (a == left) return right;
            if (a == right) return left;
            return std::nullopt;
        };
    }
    std::vector<State> goals;
    for (int pos = 0; pos < n; ++pos) {
        VacuumState g;
        g.position = pos;
        g.dirt.assign(static_cast<std::size_t>(n), false);
        goals.push_back(g.to_state());
    }
    p.goal_states = std::move(goals);
    return p;
}

Automorphism vacuum_mirror(int n) {
    Automorphism sigma;
    sigma.name = "vacuum-mirror";
    sigma.involution = true;
    sigma.map_state = [n](const State& s) {
        VacuumState v = VacuumState::from_state(s);
        v.position = n - 1 - v.position;
        std::reverse(v.dirt.begin(), v.dirt.end());
        return v.to_state();
    };
    sigma.map_action = [](const Action& a) {
        if (a.label() == "Left") return Action("Right");
        if (a.label() == "Right") return Action("Left");
        return a;
    };
    return sigma;
}

// --- missionaries and cannibals ---

State MCState::to_state() const {
    return State(std::to_string(missionaries_right) + ',' +
                 std::to_string(cannibals_right) + ',' +
                 std::to_string(boat_right));
}

MCState MCState::from_state(const State& s) {
    std::vector<std::string> toks = split(s.encoding(), ',');
    if (toks.size() != 3) bad_encoding("missionaries-and-cannibals", s);
    MCState m;
    m.missionaries_right = parse_int(toks[0], "missionaries-and-cannibals", s);
    m.cannibals_right = parse_int(toks[1], "missionaries-and-cannibals", s);
    m.boat_right = parse_int(toks[2], "missionaries-and-cannibals", s);
    if (m.boat_right > 1) bad_encoding("missionaries-and-cannibals", s);
    return m;
}

std::vector<std::pair<int, int>> default_mc_moves() {
    return {{1, 0}, {0, 1}, {2, 0}, {0, 2}, {1, 1}};
}

Problem make_mc(int missionaries_total, int cannibals_total,
                std::vector<std::pair<int, int>> moves) {
    if (missionaries_total < 0 || cannibals_total < 0 ||
        missionaries_total + cannibals_total == 0)
        throw Error(ErrorCode::invalid_parameter, "nobody to ferry");
    if (moves.empty())
        throw Error(ErrorCode::invalid_parameter, "no boat loads given");
    for (auto [dm, dc] : moves)
        if (dm < 0 || dc < 0 || dm + dc == 0)
            throw Error(ErrorCode::invalid_parameter,
                        "boat load must carry at least one passenger");

    const int M = missionaries_total, C = cannibals_total;
    auto legal = [M, C](int m, int c) {
        if (m < 0 || m > M || c < 0 || c > C) return false;
        if (m > 0 && m < c) return false;          // right bank
        int lm = M - m, lc = C - c;                // left bank
        if (lm > 0 && lm < lc) return false;
        return true;
    };
    auto apply = [](const MCState& s, int dm, int dc) {
        MCState t = s;
        int dir = s.boat_right ? -1 : 1;  // boat carries people to the other bank
        t.missionaries_right += dir * dm;
        t.cannibals_right += dir * dc;
        t.boat_right = 1 - s.boat_right;
        return t;
    };
    auto label = [](int dm, int dc) {
        return Action("m" + std::to_string(dm) + "c" + std::to_string(dc));
    };

    Problem p;
    p.initial = MCState{M, C, 1}.to_state();
    p.actions = [moves, legal, apply, label, M, C](const State& s) {
        MCState cur = MCState::from_state(s);
        std::vector<Action> out;
        for (auto [dm, dc] : moves) {
            // Enough passengers on the boat's bank?
            int am = cur.boat_right ? cur.missionaries_right
                                    : M - cur.missionaries_right;
            int ac = cur.boat_right ? cur.cannibals_right
                                    : C - cur.cannibals_right;
            if (dm > am || dc > ac) continue;
            MCState t = apply(cur, dm, dc);
            if (legal(t.missionaries_right, t.cannibals_right))
                out.push_back(label(dm, dc));
        }
        return out;
    };
    p.result = [apply](const State& s, const Action& a) {
        MCState cur = MCState::from_state(s);
        if (a.label().size() < 4 || a.label()[0] != 'm')
            throw Error(ErrorCode::contract_violation,
                        "unknown boat load " + a.label());
        std::vector<std::string> parts = split(a.label().substr(1), 'c');
        if (parts.size() != 2)
            throw Error(ErrorCode::contract_violation,
                        "unknown boat load " + a.label());
        return apply(cur, parse_int(parts[0], "boat load", State(a.label())),
                     parse_int(parts[1], "boat load", State(a.label())))
            .to_state();
    };
    p.goal_test = [](const State& s) {
        MCState cur = MCState::from_state(s);
        return cur.missionaries_right == 0 && cur.cannibals_right == 0 &&
               cur.boat_right == 0;
    };
    // Re-crossing with the same load undoes a move, so every action is its
    // own inverse.
    p.inverse = [](const Action& a) { return std::optional<Action>(a); };
    p.goal_states = std::vector<State>{MCState{0, 0, 0}.to_state()};
    return p;
}

Automorphism mc_mirror(int missionaries_total, int cannibals_total) {
    Automorphism sigma;
    sigma.name = "mc-mirror";
    sigma.involution = true;
    sigma.map_state = [missionaries_total, cannibals_total](const State& s) {
        MCState m = MCState::from_state(s);
        m.missionaries_right = missionaries_total - m.missionaries_right;
        m.cannibals_right = cannibals_total - m.cannibals_right;
        m.boat_right = 1 - m.boat_right;
        return m.to_state();
    };
    sigma.map_action = [](const Action& a) { return a; };
    return sigma;
}

// --- towers of hanoi ---

State HanoiState::to_state() const {
    std::string enc;
    for (char peg : pegs) {
        if (!enc.empty()) enc += ',';
        enc += peg;
    }
    return State(std::move(enc));
}

HanoiState HanoiState::from_state(const State& s) {
    HanoiState h;
    for (const std::string& tok : split(s.encoding(), ',')) {
        if (tok != "A" && tok != "B" && tok != "C") bad_encoding("hanoi", s);
        h.pegs += tok[0];
    }
    if (h.pegs.empty()) bad_encoding("hanoi", s);
    return h;
}

Problem make_hanoi(int disks) {
    if (disks < 1)
        throw Error(ErrorCode::invalid_parameter, "hanoi needs at least one disk");

    // Disk k sits at index k-1; larger k means smaller disk. The topmost
    // disk of a peg is the highest-numbered disk on it.
    auto top = [](const std::string& pegs, char peg) {
        for (int k = static_cast<int>(pegs.size()); k >= 1; --k)
            if (pegs[static_cast<std::size_t>(k - 1)] == peg) return k;
        return 0;
    };
    static constexpr std::pair<char, char> kPairs[] = {
        {'A', 'B'}, {'A', 'C'}, {'B', 'A'}, {'B', 'C'}, {'C', 'A'}, {'C', 'B'}};
    auto label = [](int k, char from, char to) {
        return Action("(" + std::to_string(k) + "," + from + "," + to + ")");
    };

    Problem p;
    p.initial = HanoiState{std::string(static_cast<std::size_t>(disks), 'A')}
                    .to_state();
    p.actions = [top, label](const State& s) {
        HanoiState h = HanoiState::from_state(s);
        std::vector<Action> out;
        for (auto [from, to] : kPairs) {
            int k = top(h.pegs, from);
            if (k == 0) continue;
            if (int blocker = top(h.pegs, to); blocker > k) continue;
            out.push_back(label(k, from, to));
        }
        return out;
    };
    p.result = [](const State& s, const Action& a) {
        HanoiState h = HanoiState::from_state(s);
        const std::string& l = a.label();
        std::vector<std::string> toks =
            l.size() > 2 && l.front() == '(' && l.back() == ')'
                ? split(l.substr(1, l.size() - 2), ',')
                : std::vector<std::string>{};
        if (toks.size() != 3)
            throw Error(ErrorCode::contract_violation,
                        "unknown hanoi action " + a.label());
        int k = parse_int(toks[0], "hanoi action", State(l));
        if (k < 1 || k > static_cast<int>(h.pegs.size()) || toks[2].size() != 1)
            throw Error(ErrorCode::contract_violation,
                        "unknown hanoi action " + a.label());
        h.pegs[static_cast<std::size_t>(k - 1)] = toks[2][0];
        return h.to_state();
    };
    p.goal_test = [disks](const State& s) {
        return HanoiState::from_state(s).pegs ==
               std::string(static_cast<std::size_t>(disks), 'C');
    };
    p.inverse = [](const Action& a) -> std::optional<Action> {
        const std::string& l = a.label();
        if (l.size() < 2 || l.front() != '(' || l.back() != ')')
            return std::nullopt;
        std::vector<std::string> toks = split(l.substr(1, l.size() - 2), ',');
        if (toks.size() != 3) return std::nullopt;
        return Action("(" + toks[0] + "," + toks[2] + "," + toks[1] + ")");
    };
    p.goal_states = std::vector<State>{
        HanoiState{std::string(static_cast<std::size_t>(disks), 'C')}.to_state()};
    return p;
}

Automorphism hanoi_mirror() {
    auto swap_ac = [](std::string text) {
        for (char& ch : text) {
            if (ch == 'A')
                ch = 'C';
            else if (ch == 'C')
                ch = 'A';
        }
        return text;
    };
    Automorphism sigma;
    sigma.name = "hanoi-mirror";
    sigma.involution = true;
    sigma.map_state = [swap_ac](const State& s) {
        return State(swap_ac(s.encoding()));
    };
    sigma.map_action = [swap_ac](const Action& a) {
        return Action(swap_ac(a.label()));
    };
    return sigma;
}

Automorphism shipped_mirror(std::string_view domain, int a, int b) {
    if (domain == "vacuum") {
        if (a < 1)
            throw Error(ErrorCode::invalid_parameter,
                        "vacuum mirror needs the strip length");
        return vacuum_mirror(a);
    }
    if (domain == "mc") return mc_mirror(a > 0 ? a : 3, b > 0 ? b : 3);
    if (domain == "hanoi") return hanoi_mirror();
    throw Error(ErrorCode::unknown_domain,
                "no shipped mirror for domain '" + std::string(domain) + "'");
}

// --- belief-state wrapper ---

State BeliefState::to_state() const {
    std::string enc = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) enc += '|';
        enc += members[i].encoding();
    }
    enc += '}';
    return State(std::move(enc));
}

BeliefState BeliefState::from_state(const State& s) {
    const std::string& e = s.encoding();
    if (e.size() < 2 || e.front() != '{' || e.back() != '}')
        bad_encoding("belief", s);
    BeliefState b;
    if (e.size() == 2) return b;
    for (const std::string& tok : split(e.substr(1, e.size() - 2), '|'))
        b.members.emplace_back(tok);
    return b;
}

namespace {

BeliefState normalized(BeliefState b) {
    std::sort(b.members.begin(), b.members.end());
    b.members.erase(std::unique(b.members.begin(), b.members.end()),
                    b.members.end());
    return b;
}

}  // namespace

Problem belief_wrap(const Problem& base, const BeliefState& initial_belief) {
    if (initial_belief.members.empty())
        throw Error(ErrorCode::empty_belief, "belief has no members");

    auto shared = std::make_shared<Problem>(base);
    Problem p;
    p.initial = normalized(initial_belief).to_state();
    p.actions = [shared](const State& s) {
        BeliefState b = BeliefState::from_state(s);
        std::vector<Action> out;
        for (const Action& a : shared->actions(b.members.front())) {
            bool everywhere = true;
            for (std::size_t i = 1; i < b.members.size() && everywhere; ++i) {
                std::vector<Action> acts = shared->actions(b.members[i]);
                everywhere =
                    std::find(acts.begin(), acts.end(), a) != acts.end();
            }
            if (everywhere) out.push_back(a);
        }
        return out;
    };
    p.result = [shared](const State& s, const Action& a) {
        BeliefState b = BeliefState::from_state(s);
        BeliefState image;
        for (const State& m : b.members)
            image.members.push_back(shared->result(m, a));
        return normalized(std::move(image)).to_state();
    };
    p.goal_test = [shared](const State& s) {
        BeliefState b = BeliefState::from_state(s);
        return std::all_of(b.members.begin(), b.members.end(),
                           [&](const State& m) { return shared->goal_test(m); });
    };
    return p;
}

}  // namespace symsearch
