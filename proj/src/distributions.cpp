#include "hanoi/distributions.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "json.hpp"

namespace hanoi {

MoveCount partition_cost(const HeightPartition& partition, PegCount k) {
    if (k < 3) {
        throw std::invalid_argument("peg count must be at least 3");
    }
    if (partition.heights.size() > k - 2) {
        throw std::invalid_argument("partition has more parts than intermediate pegs");
    }
    MoveCount cost;
    for (std::size_t i = 0; i < partition.heights.size(); ++i) {
        cost += count_moves(partition.heights[i], k - static_cast<PegCount>(i));
    }
    return cost;
}

namespace {

// Enumerates non-increasing partitions of `total` into at most `caps.size()`
// parts with part i <= caps[i], accumulating stage costs from the per-stack
// tables. Calls `emit` with each partition and its cost.
struct PartitionEnumerator {
    const std::vector<DiscCount>& caps;
    const std::vector<std::vector<MoveCount>>& t_tables;
    std::vector<DiscCount> current;

    template <typename Emit>
    void walk(std::size_t position, DiscCount remaining, DiscCount prev_height, MoveCount cost,
              Emit&& emit) {
        if (remaining == 0) {
            emit(current, cost);
            return;
        }
        if (position >= caps.size()) {
            return;
        }
        DiscCount hi = std::min({remaining, prev_height, caps[position]});
        for (DiscCount h = hi; h >= 1; --h) {
            current.push_back(h);
            walk(position + 1, remaining - h, h, cost + t_tables[position][h], emit);
            current.pop_back();
        }
    }
};

std::vector<HeightPartition> enumerate_minimizers(DiscCount total, PegCount k,
                                                  const std::vector<DiscCount>& caps,
                                                  MoveCount& best_out) {
    std::vector<std::vector<MoveCount>> t_tables(caps.size());
    for (std::size_t i = 0; i < caps.size(); ++i) {
        t_tables[i] = count_moves_table(std::min(total, caps[i]), k - static_cast<PegCount>(i));
    }
    std::optional<MoveCount> best;
    std::vector<HeightPartition> winners;
    PartitionEnumerator enumerator{caps, t_tables, {}};
    enumerator.walk(0, total, total, MoveCount{}, [&](const std::vector<DiscCount>& heights,
                                                      const MoveCount& cost) {
        if (!best || cost < *best) {
            best = cost;
            winners.clear();
        }
        if (cost == *best) {
            winners.push_back(HeightPartition{heights});
        }
    });
    best_out = best.value();
    return winners;
}

}  // namespace

MainDistributionReport enumerate_main_distributions(DiscCount n, PegCount k) {
    if (k < 3) {
        throw std::invalid_argument("peg count must be at least 3");
    }
    if (n < 1) {
        throw std::invalid_argument("need at least one disc");
    }
    const DiscCount total = n - 1;
    const TargetPegCount m = k - 2;

    std::vector<DiscCount> caps(m, total);
    if (k >= 4 && n >= 2) {
        caps = max_height_bounds(n, k);
    }
    MoveCount best;
    std::vector<HeightPartition> winners = enumerate_minimizers(total, k, caps, best);

    const MoveCount expected = distribute_cost(total, k, m);
    if (best != expected) {
        // The caps are a pruning aid only; fall back to the full enumeration
        // if they ever cut away an optimum.
        caps.assign(m, total);
        winners = enumerate_minimizers(total, k, caps, best);
        if (best != expected) {
            throw std::logic_error("main-distribution enumeration disagrees with the cost tables");
        }
    }
    // The recursive walk already yields descending lexicographic order.
    const std::size_t count = winners.size();
    return MainDistributionReport{n, k, std::move(best), std::move(winners), count};
}

std::vector<DiscCount> max_height_bounds(DiscCount n, PegCount k) {
    if (n < 2 || k < 4) {
        throw std::invalid_argument("height bounds need n >= 2 and k >= 4");
    }
    const std::uint64_t exponent = journey_exponent(n, k);
    // No stack of an optimal main distribution carries a journey number above
    // half the journey number of the largest disc. With cap exponent c, the
    // tallest admissible stack over j pegs is C(j+c-2, j-2).
    const std::uint64_t cap_exponent = exponent - 1;
    std::vector<DiscCount> caps;
    caps.reserve(k - 2);
    for (PegCount i = 1; i <= k - 2; ++i) {
        const PegCount stack_pegs = k - i + 1;
        MoveCount bound = binomial(static_cast<std::uint32_t>(stack_pegs + cap_exponent - 2),
                                   stack_pegs - 2);
        caps.push_back(bound < MoveCount{n} ? static_cast<DiscCount>(bound.to_uint64()) : n);
    }
    return caps;
}

std::string report_json(const MainDistributionReport& report) {
    nlohmann::ordered_json doc;
    doc["n"] = report.discs;
    doc["k"] = report.pegs;
    doc["optimal_cost"] = report.optimal_cost.str();
    doc["count"] = report.count;
    auto partitions = nlohmann::ordered_json::array();
    for (const HeightPartition& partition : report.partitions) {
        partitions.push_back(partition.heights);
    }
    doc["partitions"] = std::move(partitions);
    return doc.dump();
}

}  // namespace hanoi
