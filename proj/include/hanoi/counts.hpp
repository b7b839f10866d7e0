#pragma once

#include <cstdint>
#include <vector>

#include "hanoi/move_count.hpp"

namespace hanoi {

using DiscCount = std::uint32_t;       // n, number of discs; disc 1 is the smallest
using PegCount = std::uint32_t;        // k, total pegs; k >= 3 for the classic rules
using TargetPegCount = std::uint32_t;  // m, target pegs of a distribution; 1 <= m <= k-1

// C(a, b), exact; zero when b > a.
MoveCount binomial(std::uint32_t a, std::uint32_t b);

// Maximal interval of stack heights sharing one journey value 2^exponent.
// Heights lo..hi are inclusive and 1-based.
struct JourneyRun {
    std::uint64_t exponent;
    DiscCount lo;
    DiscCount hi;

    MoveCount value() const { return MoveCount::pow2(exponent); }
};

// The run decomposition of J_k(1..n): consecutive runs double the journey
// value, and run boundaries sit on the binomial thresholds C(k+r-2, k-2).
std::vector<JourneyRun> journey_runs(DiscCount n, PegCount k);

// J_k(n): moves made by the largest disc of an n-disc stack in an optimal
// build. Always a power of two. Also available as a bare exponent.
MoveCount journey_number(DiscCount n, PegCount k);
std::uint64_t journey_exponent(DiscCount n, PegCount k);

struct JourneyTable {
    PegCount pegs;
    std::vector<MoveCount> entries;  // entries[i-1] = J_k(i)

    const MoveCount& at(DiscCount disc) const { return entries.at(disc - 1); }
};

JourneyTable journey_table(DiscCount n, PegCount k);

// T(n,k): minimal moves to transfer an n-disc tower with k pegs, computed as
// the journey-number prefix sum.
MoveCount count_moves(DiscCount n, PegCount k);

// T(0..n_max, k) in one pass.
std::vector<MoveCount> count_moves_table(DiscCount n_max, PegCount k);

// Same quantity through the classic splitting recurrence
//   T(n,k) = min_{1<=t<n} 2 T(t,k) + T(n-t,k-1),   T(n,3) = 2^n - 1,
// kept as an independent route for cross-checking the closed form.
// The free function memoizes per call and is therefore thread-safe;
// RecursionTable keeps its memo across queries (one instance per thread).
MoveCount count_moves_recursive(DiscCount n, PegCount k);

class RecursionTable {
public:
    const MoveCount& moves(DiscCount n, PegCount k);

private:
    void ensure(DiscCount n, PegCount k);

    // rows_[k-3][n] = T(n,k)
    std::vector<std::vector<MoveCount>> rows_;
};

// S(n,k,m): minimal moves to distribute an n-disc tower onto m initially
// empty pegs with k pegs available. Minimizes sum T(d_i, k-i+1) over
// non-increasing heights d_1 >= ... >= d_m >= 0 with sum d_i = n; empty
// target pegs are allowed.
MoveCount distribute_cost(DiscCount n, PegCount k, TargetPegCount m);

// S(0..n_max, k, m) sharing one set of DP tables.
std::vector<MoveCount> distribute_cost_table(DiscCount n_max, PegCount k, TargetPegCount m);

// A minimizing height sequence for S(n,k,m): the lexicographically greatest
// one, which is automatically non-increasing. Length m, zeros allowed.
std::vector<DiscCount> distribute_heights(DiscCount n, PegCount k, TargetPegCount m);

// 2 S(n-1, k, k-2) + 1: solve = distribute, move the largest disc, reassemble.
MoveCount total_moves(DiscCount n, PegCount k);

struct SplitChoice {
    DiscCount t;      // discs set aside before the k-1 peg subproblem
    MoveCount cost;   // 2 T(t,k) + T(n-t,k-1)

    bool operator==(const SplitChoice& rhs) const { return t == rhs.t && cost == rhs.cost; }
};

// Every t in [1, n-1] attaining the recurrence minimum, ascending by t.
// k = 3 is rejected: there is no split to choose.
std::vector<SplitChoice> best_splits(DiscCount n, PegCount k);

}  // namespace hanoi
