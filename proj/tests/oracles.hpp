#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

// Plain reference implementations the tests compare the library against.
// They share no code with the library: states are tuples and plans are
// strings, recomputed from first principles.
namespace oracle {

// Shortest vacuum plan by breadth-first search over (position, dirt)
// tuples; nullopt when no plan exists within max_len actions.
std::optional<std::vector<std::string>> vacuum_shortest_plan(
    int n, int pos, std::vector<bool> dirt, bool self_loop, int max_len);

// Every applicable action sequence of exactly len actions that ends with
// all squares clean.
std::vector<std::vector<std::string>> vacuum_plans_of_length(
    int n, int pos, std::vector<bool> dirt, bool self_loop, int len);

std::size_t vacuum_reachable_count(int n, int pos, std::vector<bool> dirt,
                                   bool self_loop);

struct McSummary {
    std::optional<int> plan_length;  // fewest crossings start to goal
    std::size_t reachable = 0;       // states reachable from the start
    std::size_t valid_total = 0;     // all states passing the safety rule
    std::vector<std::string> reachable_encodings;  // "m,c,b", sorted
};

McSummary mc_summary(int m_total, int c_total);

constexpr long long hanoi_moves(int disks) { return (1LL << disks) - 1; }

// Shortest plan forcing the fully-uncertain two-square world clean without
// sensing (self-loop movement), by breadth-first search over belief sets;
// nullopt when none exists within max_len.
std::optional<int> sensorless_vacuum_shortest(int max_len);

}  // namespace oracle
