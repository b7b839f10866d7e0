#include "hanoi/counts.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace hanoi {

namespace {

void require_pegs(PegCount k) {
    if (k < 3) {
        throw std::invalid_argument("peg count must be at least 3, got " + std::to_string(k));
    }
}

}  // namespace

MoveCount binomial(std::uint32_t a, std::uint32_t b) {
    if (b > a) {
        return MoveCount{};
    }
    b = std::min(b, a - b);
    // Pascal-row accumulation: addition only, exact at any size.
    std::vector<MoveCount> row(b + 1);
    row[0] = 1;
    for (std::uint32_t i = 1; i <= a; ++i) {
        for (std::uint32_t j = std::min(i, b); j >= 1; --j) {
            row[j] += row[j - 1];
        }
    }
    return row[b];
}

std::vector<JourneyRun> journey_runs(DiscCount n, PegCount k) {
    require_pegs(k);
    if (n == 0) {
        throw std::invalid_argument("journey numbers are undefined for an empty stack");
    }
    // row[j] = C(k-2+r, j); advancing r is one in-place Pascal update, so the
    // threshold column row[k-2] = C(k+r-2, k-2) comes out by addition alone.
    std::vector<MoveCount> row(k - 1);
    row[0] = 1;
    for (PegCount warmup = 1; warmup <= k - 2; ++warmup) {
        for (std::size_t j = warmup; j >= 1; --j) {
            row[j] += row[j - 1];
        }
    }
    std::vector<JourneyRun> runs;
    std::uint64_t r = 0;
    DiscCount covered = 0;
    const MoveCount discs{n};
    while (covered < n) {
        const MoveCount& threshold = row[k - 2];
        DiscCount hi = threshold < discs ? static_cast<DiscCount>(threshold.to_uint64()) : n;
        runs.push_back(JourneyRun{r, covered + 1, hi});
        covered = hi;
        for (std::size_t j = k - 2; j >= 1; --j) {
            row[j] += row[j - 1];
        }
        ++r;
    }
    return runs;
}

std::uint64_t journey_exponent(DiscCount n, PegCount k) {
    return journey_runs(n, k).back().exponent;
}

MoveCount journey_number(DiscCount n, PegCount k) {
    return MoveCount::pow2(journey_exponent(n, k));
}

JourneyTable journey_table(DiscCount n, PegCount k) {
    JourneyTable table{k, {}};
    table.entries.reserve(n);
    for (const JourneyRun& run : journey_runs(n, k)) {
        for (DiscCount i = run.lo; i <= run.hi; ++i) {
            table.entries.push_back(MoveCount::pow2(run.exponent));
        }
    }
    return table;
}

MoveCount count_moves(DiscCount n, PegCount k) {
    require_pegs(k);
    if (n == 0) {
        return MoveCount{};
    }
    MoveCount total;
    for (const JourneyRun& run : journey_runs(n, k)) {
        total += MoveCount::pow2(run.exponent) * (run.hi - run.lo + 1);
    }
    return total;
}

std::vector<MoveCount> count_moves_table(DiscCount n_max, PegCount k) {
    require_pegs(k);
    std::vector<MoveCount> table(static_cast<std::size_t>(n_max) + 1);
    if (n_max == 0) {
        return table;
    }
    std::size_t i = 1;
    for (const JourneyRun& run : journey_runs(n_max, k)) {
        const MoveCount journey = MoveCount::pow2(run.exponent);
        for (DiscCount d = run.lo; d <= run.hi; ++d, ++i) {
            table[i] = table[i - 1] + journey;
        }
    }
    return table;
}

const MoveCount& RecursionTable::moves(DiscCount n, PegCount k) {
    require_pegs(k);
    ensure(n, k);
    return rows_[k - 3][n];
}

void RecursionTable::ensure(DiscCount n, PegCount k) {
    if (rows_.size() < k - 2) {
        rows_.resize(k - 2);
    }
    for (PegCount kk = 3; kk <= k; ++kk) {
        auto& row = rows_[kk - 3];
        std::size_t old = row.size();
        if (old > n) {
            continue;
        }
        row.resize(static_cast<std::size_t>(n) + 1);
        for (std::size_t s = old; s <= n; ++s) {
            if (s == 0) {
                row[s] = MoveCount{};
            } else if (s == 1) {
                row[s] = 1;
            } else if (kk == 3) {
                row[s] = MoveCount::pow2(s) - 1;
            } else {
                const auto& below = rows_[kk - 4];
                std::optional<MoveCount> best;
                for (std::size_t t = 1; t < s; ++t) {
                    MoveCount cost = row[t] * 2 + below[s - t];
                    if (!best || cost < *best) {
                        best = std::move(cost);
                    }
                }
                row[s] = std::move(*best);
            }
        }
    }
}

MoveCount count_moves_recursive(DiscCount n, PegCount k) {
    RecursionTable table;
    return table.moves(n, k);
}

namespace {

// Cost of putting d discs onto one target using `pegs` pegs. Two pegs can
// only place a single disc; fewer pegs place nothing.
std::optional<MoveCount> stage_cost(DiscCount d, PegCount pegs,
                                    const std::vector<MoveCount>& t_table) {
    if (d == 0) {
        return MoveCount{};
    }
    if (pegs >= 3) {
        return t_table[d];
    }
    if (pegs == 2 && d == 1) {
        return MoveCount{1};
    }
    return std::nullopt;
}

// Suffix DP over target positions: costs[i][s] = minimal moves to put s discs
// onto targets i..m-1 (0-based), where target i has k-i pegs available.
// nullopt marks infeasible (only reachable when the last stage has 2 pegs).
std::vector<std::vector<std::optional<MoveCount>>> distribute_tables(DiscCount n, PegCount k,
                                                                     TargetPegCount m) {
    require_pegs(k);
    if (m < 1 || m > k - 1) {
        throw std::invalid_argument("target peg count must be in [1, k-1], got " +
                                    std::to_string(m));
    }
    std::vector<std::vector<MoveCount>> t_tables(m);
    for (TargetPegCount i = 0; i < m; ++i) {
        PegCount pegs = k - i;
        if (pegs >= 3) {
            t_tables[i] = count_moves_table(n, pegs);
        }
    }
    std::vector<std::vector<std::optional<MoveCount>>> costs(
        m + 1, std::vector<std::optional<MoveCount>>(static_cast<std::size_t>(n) + 1));
    costs[m][0] = MoveCount{};
    for (TargetPegCount i = m; i-- > 0;) {
        for (DiscCount s = 0; s <= n; ++s) {
            std::optional<MoveCount> best;
            for (DiscCount d = 0; d <= s; ++d) {
                const auto& rest = costs[i + 1][s - d];
                if (!rest) {
                    continue;
                }
                auto own = stage_cost(d, k - i, t_tables[i]);
                if (!own) {
                    continue;
                }
                MoveCount cost = *own + *rest;
                if (!best || cost < *best) {
                    best = std::move(cost);
                }
            }
            costs[i][s] = std::move(best);
        }
    }
    return costs;
}

}  // namespace

MoveCount distribute_cost(DiscCount n, PegCount k, TargetPegCount m) {
    auto costs = distribute_tables(n, k, m);
    if (!costs[0][n]) {
        throw std::invalid_argument("no legal distribution exists for these arguments");
    }
    return *costs[0][n];
}

std::vector<MoveCount> distribute_cost_table(DiscCount n_max, PegCount k, TargetPegCount m) {
    auto costs = distribute_tables(n_max, k, m);
    std::vector<MoveCount> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (DiscCount s = 0; s <= n_max; ++s) {
        if (!costs[0][s]) {
            throw std::invalid_argument("no legal distribution exists for these arguments");
        }
        out.push_back(*costs[0][s]);
    }
    return out;
}

std::vector<DiscCount> distribute_heights(DiscCount n, PegCount k, TargetPegCount m) {
    auto costs = distribute_tables(n, k, m);
    if (!costs[0][n]) {
        throw std::invalid_argument("no legal distribution exists for these arguments");
    }
    std::vector<std::vector<MoveCount>> t_tables(m);
    for (TargetPegCount i = 0; i < m; ++i) {
        if (k - i >= 3) {
            t_tables[i] = count_moves_table(n, k - i);
        }
    }
    // Greedy walk taking the largest feasible height first. The result is the
    // lexicographically greatest minimizer, which is non-increasing: if it
    // ever stepped up, swapping the two heights would stay minimal and be
    // lexicographically greater.
    std::vector<DiscCount> heights(m, 0);
    DiscCount remaining = n;
    for (TargetPegCount i = 0; i < m; ++i) {
        for (DiscCount d = remaining + 1; d-- > 0;) {
            auto own = stage_cost(d, k - i, t_tables[i]);
            const auto& rest = costs[i + 1][remaining - d];
            if (own && rest && *own + *rest == *costs[i][remaining]) {
                heights[i] = d;
                remaining -= d;
                break;
            }
        }
    }
    return heights;
}

MoveCount total_moves(DiscCount n, PegCount k) {
    require_pegs(k);
    if (n == 0) {
        throw std::invalid_argument("total_moves requires at least one disc");
    }
    return distribute_cost(n - 1, k, k - 2) * 2 + 1;
}

std::vector<SplitChoice> best_splits(DiscCount n, PegCount k) {
    if (k == 3) {
        throw std::invalid_argument("3 pegs leave no split to choose");
    }
    require_pegs(k);
    if (n < 2) {
        throw std::invalid_argument("splits need at least two discs");
    }
    auto same = count_moves_table(n - 1, k);
    auto fewer = count_moves_table(n - 1, k - 1);
    std::vector<SplitChoice> winners;
    std::optional<MoveCount> best;
    for (DiscCount t = 1; t < n; ++t) {
        MoveCount cost = same[t] * 2 + fewer[n - t];
        if (!best || cost < *best) {
            best = cost;
            winners.clear();
        }
        if (cost == *best) {
            winners.push_back(SplitChoice{t, std::move(cost)});
        }
    }
    return winners;
}

}  // namespace hanoi
