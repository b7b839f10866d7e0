#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hanoi/counts.hpp"
#include "hanoi/state.hpp"

namespace hanoi {

inline constexpr std::uint64_t kDefaultStateBudget = 4'000'000;

class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Base-k packed disc-to-peg assignment, disc 1 in the least significant
// digit. Bijective with PuzzleState for fixed (n, k).
using StateCode = std::uint64_t;

StateCode encode_state(const PuzzleState& state);
PuzzleState decode_state(StateCode code, DiscCount n, PegCount k);

struct OracleResult {
    std::uint64_t distance;
    std::optional<std::vector<Move>> witness;  // present iff requested; length == distance
};

// Exact shortest solve distance by breadth-first search over all k^n states.
// Throws BudgetExceededError when k^n > budget.
OracleResult oracle_solve(DiscCount n, PegCount k, bool with_witness = false,
                          std::uint64_t budget = kDefaultStateBudget);

// Shortest distance to any state with every disc on pegs 1..m.
OracleResult oracle_distribute(DiscCount n, PegCount k, TargetPegCount m,
                               bool with_witness = false,
                               std::uint64_t budget = kDefaultStateBudget);

// Shortest distance between two arbitrary states.
std::uint64_t oracle_distance(DiscCount n, PegCount k, StateCode start, StateCode goal,
                              std::uint64_t budget = kDefaultStateBudget);

// Every distribute goal state sitting at exactly the optimal distance,
// in discovery order.
struct DistributeLevel {
    std::uint64_t distance;
    std::vector<StateCode> goal_codes;
};
DistributeLevel oracle_distribute_level(DiscCount n, PegCount k, TargetPegCount m,
                                        std::uint64_t budget = kDefaultStateBudget);

struct GridRow {
    DiscCount n;
    PegCount k;
    std::uint64_t oracle_moves;
    MoveCount formula_moves;
    bool match;
};

// One row per (n, k) with 3 <= k <= 6 and k^n <= max_states, comparing the
// BFS distance with the journey-sum formula. A mismatch is data, not an
// error.
std::vector<GridRow> oracle_grid(std::uint64_t max_states);

// CSV with header `n,k,oracle,formula,match`.
std::string grid_csv(std::span<const GridRow> rows);

}  // namespace hanoi
