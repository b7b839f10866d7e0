#include "hanoi/oracle.hpp"

#include <algorithm>
#include <limits>

namespace hanoi {

namespace {

constexpr std::uint16_t kUnvisited = 0xFFFF;

// k^n, or nullopt on overflow.
std::optional<std::uint64_t> state_space_size(DiscCount n, PegCount k) {
    std::uint64_t size = 1;
    for (DiscCount i = 0; i < n; ++i) {
        if (size > std::numeric_limits<std::uint64_t>::max() / k) {
            return std::nullopt;
        }
        size *= k;
    }
    return size;
}

struct Bfs {
    DiscCount n;
    PegCount k;
    std::vector<std::uint64_t> pow_k;           // k^0 .. k^n
    std::vector<std::uint16_t> dist;
    std::vector<std::uint64_t> parent_move;     // (from << 32) | to, when tracked
    std::vector<std::uint32_t> tops;            // scratch: top disc per peg, 0 = empty

    Bfs(DiscCount n_, PegCount k_, std::uint64_t budget, bool with_parents)
        : n(n_), k(k_), tops(k_, 0) {
        auto size = state_space_size(n, k);
        if (!size || *size > budget) {
            throw BudgetExceededError("state space with " + std::to_string(n) + " discs and " +
                                      std::to_string(k) + " pegs exceeds the budget of " +
                                      std::to_string(budget) + " states");
        }
        if (*size > std::numeric_limits<std::uint32_t>::max()) {
            throw std::invalid_argument("state budgets beyond 2^32 are not supported");
        }
        pow_k.resize(n + 1);
        pow_k[0] = 1;
        for (DiscCount i = 1; i <= n; ++i) {
            pow_k[i] = pow_k[i - 1] * k;
        }
        dist.assign(*size, kUnvisited);
        if (with_parents) {
            parent_move.assign(*size, 0);
        }
    }

    void find_tops(StateCode code) {
        std::fill(tops.begin(), tops.end(), 0);
        std::uint64_t rest = code;
        for (Disc d = 1; d <= n; ++d) {
            PegId peg = static_cast<PegId>(rest % k);
            rest /= k;
            if (tops[peg] == 0) {
                tops[peg] = d;
            }
        }
    }

    // Runs until the first level containing a goal is fully generated.
    // Returns that level's distance and goal codes (empty if none exists).
    template <typename GoalPred>
    std::pair<std::uint64_t, std::vector<StateCode>> run(StateCode start, GoalPred&& is_goal) {
        dist[start] = 0;
        if (is_goal(start)) {
            return {0, {start}};
        }
        std::vector<std::uint32_t> frontier{static_cast<std::uint32_t>(start)};
        std::vector<std::uint32_t> next;
        std::vector<StateCode> goals;
        std::uint64_t level = 0;
        while (!frontier.empty()) {
            ++level;
            if (level >= kUnvisited) {
                throw std::overflow_error("distance exceeds the 16-bit distance cells");
            }
            next.clear();
            for (std::uint32_t code : frontier) {
                find_tops(code);
                for (PegId from = 0; from < k; ++from) {
                    const Disc moved = tops[from];
                    if (moved == 0) {
                        continue;
                    }
                    for (PegId to = 0; to < k; ++to) {
                        if (to == from || (tops[to] != 0 && tops[to] < moved)) {
                            continue;
                        }
                        const StateCode neighbor =
                            code + (to - static_cast<std::int64_t>(from)) * pow_k[moved - 1];
                        if (dist[neighbor] != kUnvisited) {
                            continue;
                        }
                        dist[neighbor] = static_cast<std::uint16_t>(level);
                        if (!parent_move.empty()) {
                            parent_move[neighbor] = (std::uint64_t{from} << 32) | to;
                        }
                        if (is_goal(neighbor)) {
                            goals.push_back(neighbor);
                        }
                        next.push_back(static_cast<std::uint32_t>(neighbor));
                    }
                }
            }
            if (!goals.empty()) {
                return {level, goals};
            }
            frontier.swap(next);
        }
        return {0, {}};
    }

    // Walks parent moves back from `goal` to the start.
    std::vector<Move> reconstruct(StateCode goal) const {
        std::vector<Move> moves;
        StateCode code = goal;
        std::uint64_t level = dist[code];
        while (level > 0) {
            const std::uint64_t packed = parent_move[code];
            const PegId from = static_cast<PegId>(packed >> 32);
            const PegId to = static_cast<PegId>(packed & 0xFFFFFFFF);
            // The moved disc is the top of `to` in the current state.
            Disc moved = 0;
            std::uint64_t rest = code;
            for (Disc d = 1; d <= n; ++d) {
                if (rest % k == to) {
                    moved = d;
                    break;
                }
                rest /= k;
            }
            moves.push_back(Move{from, to});
            code -= (to - static_cast<std::int64_t>(from)) * pow_k[moved - 1];
            --level;
        }
        std::reverse(moves.begin(), moves.end());
        return moves;
    }
};

bool digits_within(StateCode code, DiscCount n, PegCount k, PegId lo, PegId hi) {
    std::uint64_t rest = code;
    for (DiscCount i = 0; i < n; ++i) {
        const PegId peg = static_cast<PegId>(rest % k);
        if (peg < lo || peg > hi) {
            return false;
        }
        rest /= k;
    }
    return true;
}

void require_target_range(PegCount k, TargetPegCount m) {
    if (k < 3) {
        throw std::invalid_argument("puzzle needs at least 3 pegs");
    }
    if (m < 1 || m > k - 1) {
        throw std::invalid_argument("target peg count must be in [1, k-1]");
    }
}

}  // namespace

StateCode encode_state(const PuzzleState& state) {
    StateCode code = 0;
    for (Disc d = state.discs(); d >= 1; --d) {
        code = code * state.pegs() + state.peg_of(d);
    }
    return code;
}

PuzzleState decode_state(StateCode code, DiscCount n, PegCount k) {
    std::vector<PegId> disc_peg(n);
    std::uint64_t rest = code;
    for (DiscCount i = 0; i < n; ++i) {
        disc_peg[i] = static_cast<PegId>(rest % k);
        rest /= k;
    }
    if (rest != 0) {
        throw std::invalid_argument("state code out of range for this puzzle");
    }
    return PuzzleState(k, std::move(disc_peg));
}

OracleResult oracle_solve(DiscCount n, PegCount k, bool with_witness, std::uint64_t budget) {
    if (k < 3) {
        throw std::invalid_argument("puzzle needs at least 3 pegs");
    }
    Bfs bfs(n, k, budget, with_witness);
    const StateCode solved = bfs.pow_k[n] - 1;  // every base-k digit equals k-1
    auto [distance, goals] = bfs.run(0, [&](StateCode code) { return code == solved; });
    OracleResult result{distance, std::nullopt};
    if (with_witness) {
        result.witness = bfs.reconstruct(solved);
    }
    return result;
}

OracleResult oracle_distribute(DiscCount n, PegCount k, TargetPegCount m, bool with_witness,
                               std::uint64_t budget) {
    require_target_range(k, m);
    Bfs bfs(n, k, budget, with_witness);
    auto [distance, goals] =
        bfs.run(0, [&](StateCode code) { return digits_within(code, n, k, 1, m); });
    if (goals.empty()) {
        throw std::logic_error("distribution goal unreachable");
    }
    OracleResult result{distance, std::nullopt};
    if (with_witness) {
        result.witness = bfs.reconstruct(goals.front());
    }
    return result;
}

std::uint64_t oracle_distance(DiscCount n, PegCount k, StateCode start, StateCode goal,
                              std::uint64_t budget) {
    if (k < 3) {
        throw std::invalid_argument("puzzle needs at least 3 pegs");
    }
    Bfs bfs(n, k, budget, false);
    auto [distance, goals] = bfs.run(start, [&](StateCode code) { return code == goal; });
    return distance;
}

DistributeLevel oracle_distribute_level(DiscCount n, PegCount k, TargetPegCount m,
                                        std::uint64_t budget) {
    require_target_range(k, m);
    Bfs bfs(n, k, budget, false);
    auto [distance, goals] =
        bfs.run(0, [&](StateCode code) { return digits_within(code, n, k, 1, m); });
    return DistributeLevel{distance, std::move(goals)};
}

std::vector<GridRow> oracle_grid(std::uint64_t max_states) {
    std::vector<GridRow> rows;
    for (PegCount k = 3; k <= 6; ++k) {
        for (DiscCount n = 1;; ++n) {
            auto size = state_space_size(n, k);
            if (!size || *size > max_states) {
                break;
            }
            const std::uint64_t distance = oracle_solve(n, k, false, max_states).distance;
            MoveCount formula = count_moves(n, k);
            const bool match = MoveCount{distance} == formula;
            rows.push_back(GridRow{n, k, distance, std::move(formula), match});
        }
    }
    return rows;
}

std::string grid_csv(std::span<const GridRow> rows) {
    std::string csv = "n,k,oracle,formula,match\n";
    for (const GridRow& row : rows) {
        csv += std::to_string(row.n) + ',' + std::to_string(row.k) + ',' +
               std::to_string(row.oracle_moves) + ',' + row.formula_moves.str() + ',' +
               (row.match ? "true" : "false") + '\n';
    }
    return csv;
}

}  // namespace hanoi
