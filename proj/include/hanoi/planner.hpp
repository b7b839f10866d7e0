#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hanoi/counts.hpp"
#include "hanoi/state.hpp"

namespace hanoi {

class InfeasiblePuzzleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Plan {
    DiscCount discs;
    PegCount pegs;
    std::vector<Move> moves;
    MoveCount claimed_length;  // what the counting formulas promise
};

// Streaming emitter for the recursive plans: moves come out one at a time
// from an explicit work stack, so multi-million-move plans never need to be
// materialized.
class PlanStream {
public:
    static PlanStream solve(DiscCount n, PegCount k);
    static PlanStream distribute(DiscCount n, PegCount k, TargetPegCount m);

    const MoveCount& total() const { return total_; }
    std::optional<Move> next();

private:
    struct Task {
        // count == 0 encodes a literal emit of (src, dst).
        DiscCount count;
        PegId src;
        PegId dst;
        std::vector<PegId> pegs;  // usable pegs, ascending, includes src and dst
    };

    PlanStream() = default;
    void push_transfer(DiscCount count, PegId src, PegId dst, std::vector<PegId> pegs);
    DiscCount pick_split(DiscCount count, PegCount pegs);

    std::vector<Task> stack_;
    MoveCount total_;
    // split_[kk][s]: chosen t for a Frame-Stewart node of s discs over kk
    // pegs, filled lazily; t_tables_[kk] = T(0.., kk).
    std::vector<std::vector<DiscCount>> split_;
    std::vector<std::vector<MoveCount>> t_tables_;
    DiscCount max_count_ = 0;
};

// Moves an n-disc tower from peg 0 to peg k-1 in exactly count_moves(n, k)
// moves. Throws InfeasiblePuzzleError when k < 3 and n >= 2.
Plan plan_solve(DiscCount n, PegCount k);

// Distributes the tower onto pegs 1..m, one tower per peg, in exactly
// distribute_cost(n, k, m) moves. Tallest tower (the smallest discs) first.
Plan plan_distribute(DiscCount n, PegCount k, TargetPegCount m);

// Moves reversed in order with endpoints swapped; undoes `plan` from its
// final state back to its start state.
Plan plan_reverse(const Plan& plan);

}  // namespace hanoi
