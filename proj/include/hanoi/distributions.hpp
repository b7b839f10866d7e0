#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hanoi/counts.hpp"

namespace hanoi {

// Identity of a main distribution: the multiset of stack heights of the n-1
// smaller discs across the k-2 intermediate pegs.
struct HeightPartition {
    std::vector<DiscCount> heights;  // positive entries, non-increasing

    bool operator==(const HeightPartition& rhs) const = default;
};

// Sum of T(heights[i], k-i+1) over the stacks, tallest first.
// Rejects partitions with more than k-2 parts.
MoveCount partition_cost(const HeightPartition& partition, PegCount k);

struct MainDistributionReport {
    DiscCount discs;
    PegCount pegs;
    MoveCount optimal_cost;
    std::vector<HeightPartition> partitions;  // lexicographically descending
    std::size_t count;                        // == partitions.size()
};

// All height partitions of the n-1 smaller discs attaining the minimal
// distribution cost S(n-1, k, k-2). k = 3 yields the single trivial
// partition [n-1].
MainDistributionReport enumerate_main_distributions(DiscCount n, PegCount k);

// Per-stack height caps implied by the journey numbers: stack i (with
// k-i+1 pegs available) cannot exceed the tallest stack whose journey
// number stays within half the journey number of disc n. Used to prune the
// enumeration and exposed for explanation output. Requires n >= 2, k >= 4.
std::vector<DiscCount> max_height_bounds(DiscCount n, PegCount k);

// {"n":..,"k":..,"optimal_cost":"..","count":..,"partitions":[[..]]}
std::string report_json(const MainDistributionReport& report);

}  // namespace hanoi
