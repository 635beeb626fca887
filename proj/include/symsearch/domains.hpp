#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symsearch/problem.hpp"
#include "symsearch/symmetry.hpp"

namespace symsearch {

/// Vacuum world: an agent on a 1 x n strip of squares, each dirty or clean.
/// Encoding "pos,d0,...,d(n-1)" with pos rendered "L"/"R" when n == 2 and as
/// a decimal index otherwise; dirt bits are "1" (dirty) / "0" (clean).
struct VacuumState {
    int position = 0;
    std::vector<bool> dirt;

    State to_state() const;
    static VacuumState from_state(const State& s);
    static VacuumState all_dirty(int n, int position = 0);
};

/// Movement at the strip ends: pruned drops the action entirely; self_loop
/// keeps it applicable as a stay-in-place move. The belief-state wrapper
/// needs self_loop so an action can stay applicable across a whole belief.
enum class VacuumMovement { pruned, self_loop };

/// Actions Left, Right, Suck in that order. Suck is always applicable and
/// clears the current square (self-loop when already clean), so dirt is
/// monotone non-increasing along any path. Goal: everything clean. Unit
/// costs. Left/Right are declared inverses only under pruned movement;
/// self_loop breaks the round-trip at the walls.
Problem make_vacuum(int n, const VacuumState& initial,
                    VacuumMovement movement = VacuumMovement::pruned);

/// Missionaries and cannibals, counted on the right bank. Encoding "m,c,b"
/// with b = 1 when the boat is on the right. Start (M,C,1), goal (0,0,0).
struct MCState {
    int missionaries_right = 0;
    int cannibals_right = 0;
    int boat_right = 0;

    State to_state() const;
    static MCState from_state(const State& s);
};

/// The five classic boat loads (1,0), (0,1), (2,0), (0,2), (1,1) in that
/// order.
std::vector<std::pair<int, int>> default_mc_moves();

/// Labels "m1c0" etc. Passengers board on the boat's bank, and a state is
/// legal iff no bank has missionaries outnumbered by cannibals. Only legal
/// successors are generated. Every move is its own inverse.
Problem make_mc(int missionaries_total = 3, int cannibals_total = 3,
                std::vector<std::pair<int, int>> moves = default_mc_moves());

/// Towers of Hanoi with pegs A, B, C and disks numbered 1 (largest) to d
/// (smallest). Encoding lists each disk's peg: "A,A,A" is all on A. Action
/// "(k,X,Y)" moves disk k from X to Y; legal iff k is the highest-numbered
/// (topmost) disk on X and every disk on Y has a lower number than k.
/// Start: all on A; goal: all on C. "(k,Y,X)" inverts "(k,X,Y)".
struct HanoiState {
    std::string pegs;  // one of 'A','B','C' per disk, disk 1 first

    State to_state() const;
    static HanoiState from_state(const State& s);
};

Problem make_hanoi(int disks);

/// Shipped mirror automorphisms (all involutions):
///   vacuum: reflect position and dirt vector left-to-right, swap Left/Right
///   mc:     complement both bank counts and the boat side, actions fixed
///   hanoi:  swap pegs A and C in states and action labels
Automorphism vacuum_mirror(int n);
Automorphism mc_mirror(int missionaries_total = 3, int cannibals_total = 3);
Automorphism hanoi_mirror();

/// Dispatch by domain name ("vacuum", "mc", "hanoi"); a/b are the domain's
/// size parameters (vacuum: a = n; mc: a,b = totals; hanoi: none). Unknown
/// names raise unknown_domain.
Automorphism shipped_mirror(std::string_view domain, int a = 0, int b = 0);

/// A belief state: the set of base states the agent might be in. Encoding
/// "{e1|e2|...}" with members sorted by encoding.
struct BeliefState {
    std::vector<State> members;

    State to_state() const;
    static BeliefState from_state(const State& s);
};

/// Sensorless wrapper: an action applies to a belief iff it applies to every
/// member; its result is the set image. Goal: every member satisfies the
/// base goal. Unit costs, no inverses. Empty beliefs raise empty_belief.
Problem belief_wrap(const Problem& base, const BeliefState& initial_belief);

}  // namespace symsearch
