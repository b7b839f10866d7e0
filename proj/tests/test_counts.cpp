#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <thread>
#include <vector>

#include "hanoi/counts.hpp"

using namespace hanoi;

namespace {

// Independent reference for distribution costs: exhaustive minimum over every
// composition (any order, zeros allowed) with per-stack costs taken from the
// recursion route, not the journey-sum route.
std::optional<MoveCount> stage_cost_ref(RecursionTable& table, DiscCount d, PegCount pegs) {
    if (d == 0) {
        return MoveCount{};
    }
    if (pegs >= 3) {
        return table.moves(d, pegs);
    }
    if (pegs == 2 && d == 1) {
        return MoveCount{1};
    }
    return std::nullopt;
}

void min_over_compositions(RecursionTable& table, DiscCount remaining, PegCount k,
                           TargetPegCount stage, TargetPegCount m, const MoveCount& acc,
                           std::optional<MoveCount>& best) {
    if (stage == m) {
        if (remaining == 0 && (!best || acc < *best)) {
            best = acc;
        }
        return;
    }
    for (DiscCount d = 0; d <= remaining; ++d) {
        auto cost = stage_cost_ref(table, d, k - stage);
        if (cost) {
            min_over_compositions(table, remaining - d, k, stage + 1, m, acc + *cost, best);
        }
    }
}

MoveCount distribute_cost_ref(DiscCount n, PegCount k, TargetPegCount m) {
    RecursionTable table;
    std::optional<MoveCount> best;
    min_over_compositions(table, n, k, 0, m, MoveCount{}, best);
    return best.value();
}

}  // namespace

TEST_CASE("binomial basics") {
    CHECK(binomial(4, 2) == MoveCount{6});
    CHECK(binomial(0, 0) == MoveCount{1});
    CHECK(binomial(2, 5).is_zero());
    CHECK(binomial(10, 0) == MoveCount{1});
    CHECK(binomial(10, 10) == MoveCount{1});
    CHECK(binomial(30, 2) == MoveCount{435});
    CHECK(binomial(52, 26).str() == "495918532948104");
    CHECK(binomial(100, 50).str() == "100891344545564193334812497256");
}

TEST_CASE("binomial satisfies the Pascal identity") {
    for (std::uint32_t a = 1; a <= 40; ++a) {
        for (std::uint32_t b = 1; b <= a; ++b) {
            CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
        }
    }
}

TEST_CASE("journey numbers at known points") {
    CHECK(journey_number(1, 4) == MoveCount{1});
    CHECK(journey_number(7, 4) == MoveCount{8});
    CHECK(journey_number(10, 4) == MoveCount{8});
    CHECK(journey_number(435, 30) == MoveCount{4});
    CHECK(journey_number(436, 30) == MoveCount{8});
    CHECK(journey_number(30, 30) == MoveCount{4});
    CHECK(journey_number(29, 30) == MoveCount{2});
}

TEST_CASE("three pegs double every disc") {
    for (DiscCount n = 1; n <= 40; ++n) {
        CHECK(journey_number(n, 3) == MoveCount::pow2(n - 1));
    }
}

TEST_CASE("journey table matches the per-disc values") {
    JourneyTable table = journey_table(10, 4);
    std::vector<std::uint64_t> expect{1, 2, 2, 4, 4, 4, 8, 8, 8, 8};
    REQUIRE(table.entries.size() == 10);
    for (DiscCount i = 1; i <= 10; ++i) {
        CHECK(table.at(i) == MoveCount{expect[i - 1]});
    }

    JourneyTable tall = journey_table(5, 30);
    REQUIRE(tall.entries.size() == 5);
    CHECK(tall.at(1) == MoveCount{1});
    for (DiscCount i = 2; i <= 5; ++i) {
        CHECK(tall.at(i) == MoveCount{2});
    }

    for (PegCount k : {3u, 7u, 19u}) {
        JourneyTable one = journey_table(1, k);
        REQUIRE(one.entries.size() == 1);
        CHECK(one.at(1) == MoveCount{1});
    }
}

TEST_CASE("journey runs cover 1..n seamlessly") {
    for (PegCount k : {3u, 4u, 5u, 12u, 30u}) {
        for (DiscCount n : {1u, 2u, 17u, 500u}) {
            auto runs = journey_runs(n, k);
            DiscCount expect_lo = 1;
            for (std::size_t i = 0; i < runs.size(); ++i) {
                CHECK(runs[i].lo == expect_lo);
                CHECK(runs[i].lo <= runs[i].hi);
                CHECK(runs[i].exponent == i);
                expect_lo = runs[i].hi + 1;
            }
            CHECK(runs.back().hi == n);
        }
    }
}

TEST_CASE("move totals at known points") {
    CHECK(count_moves(10, 4) == MoveCount{49});
    CHECK(count_moves(1000, 30) == MoveCount{6201});
    CHECK(count_moves(0, 5).is_zero());
    CHECK(count_moves(8, 5) == MoveCount{23});
    CHECK(count_moves(7, 5) == MoveCount{19});
    for (DiscCount n = 1; n <= 70; ++n) {
        CHECK(count_moves(n, 3) == MoveCount::pow2(n) - 1);
    }
}

TEST_CASE("count table equals point queries") {
    auto table = count_moves_table(40, 5);
    REQUIRE(table.size() == 41);
    for (DiscCount n = 0; n <= 40; ++n) {
        CHECK(table[n] == count_moves(n, 5));
    }
}

TEST_CASE("recursion route at known points") {
    CHECK(count_moves_recursive(10, 4) == MoveCount{49});
    CHECK(count_moves_recursive(1, 7) == MoveCount{1});
    CHECK(count_moves_recursive(4, 4) == MoveCount{9});
    CHECK(count_moves_recursive(0, 9).is_zero());
}

TEST_CASE("recursion equals closed form on a medium grid") {
    RecursionTable table;
    for (PegCount k = 3; k <= 8; ++k) {
        for (DiscCount n = 0; n <= 60; ++n) {
            CHECK(table.moves(n, k) == count_moves(n, k));
        }
    }
}

TEST_CASE("recursion equals closed form at the large worked example") {
    RecursionTable table;
    CHECK(table.moves(1000, 30) == count_moves(1000, 30));
}

TEST_CASE("distribution costs at known points") {
    CHECK(distribute_cost(7, 5, 3) == MoveCount{11});
    CHECK(distribute_cost(0, 4, 2).is_zero());
    CHECK(distribute_cost(9, 4, 2) == MoveCount{24});
    for (PegCount k = 3; k <= 6; ++k) {
        for (DiscCount n = 0; n <= 14; ++n) {
            CHECK(distribute_cost(n, k, 1) == count_moves(n, k));
        }
    }
}

TEST_CASE("distribution cost table equals point queries") {
    auto table = distribute_cost_table(12, 5, 3);
    REQUIRE(table.size() == 13);
    for (DiscCount n = 0; n <= 12; ++n) {
        CHECK(table[n] == distribute_cost(n, 5, 3));
    }
}

TEST_CASE("descending assignment is optimal over every ordering") {
    // Exhaustive reference over all compositions, including the m = k-1 case
    // where the last stack sees only two pegs.
    for (PegCount k = 3; k <= 6; ++k) {
        for (TargetPegCount m = 1; m <= k - 1; ++m) {
            for (DiscCount n = 0; n <= 12; ++n) {
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(m);
                CHECK(distribute_cost(n, k, m) == distribute_cost_ref(n, k, m));
            }
        }
    }
}

TEST_CASE("distribute heights minimize and are non-increasing") {
    for (PegCount k = 3; k <= 6; ++k) {
        for (TargetPegCount m = 1; m <= k - 1; ++m) {
            for (DiscCount n = 0; n <= 12; ++n) {
                auto heights = distribute_heights(n, k, m);
                REQUIRE(heights.size() == m);
                DiscCount sum = 0;
                for (std::size_t i = 0; i < heights.size(); ++i) {
                    sum += heights[i];
                    if (i > 0) {
                        CHECK(heights[i] <= heights[i - 1]);
                    }
                }
                CHECK(sum == n);
            }
        }
    }
    CHECK(distribute_heights(7, 5, 3) == std::vector<DiscCount>{4, 2, 1});
}

TEST_CASE("distribution rejects out-of-range targets") {
    CHECK_THROWS_AS(distribute_cost(5, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(distribute_cost(5, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(distribute_cost(5, 2, 1), std::invalid_argument);
}

TEST_CASE("bifurcation identity at known points") {
    CHECK(total_moves(8, 5) == MoveCount{23});
    CHECK(total_moves(1, 3) == MoveCount{1});
    CHECK(total_moves(10, 4) == MoveCount{49});
    for (PegCount k = 4; k <= 7; ++k) {
        for (DiscCount n = 1; n <= 25; ++n) {
            CHECK(total_moves(n, k) == count_moves(n, k));
        }
    }
    for (DiscCount n = 1; n <= 12; ++n) {
        CHECK(total_moves(n, 3) == count_moves(n, 3));
    }
    CHECK_THROWS_AS(total_moves(0, 4), std::invalid_argument);
}

TEST_CASE("best splits report every minimizer") {
    auto splits = best_splits(4, 4);
    REQUIRE(splits.size() == 2);
    CHECK(splits[0].t == 1);
    CHECK(splits[1].t == 2);
    CHECK(splits[0].cost == MoveCount{9});
    CHECK(splits[1].cost == MoveCount{9});

    auto only = best_splits(2, 4);
    REQUIRE(only.size() == 1);
    CHECK(only[0].t == 1);
    CHECK(only[0].cost == MoveCount{3});

    auto ten = best_splits(10, 4);
    REQUIRE(!ten.empty());
    for (const auto& split : ten) {
        CHECK(split.cost == MoveCount{49});
    }

    CHECK_THROWS_AS(best_splits(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(best_splits(1, 4), std::invalid_argument);
}

TEST_CASE("best splits match a direct scan") {
    for (PegCount k = 4; k <= 6; ++k) {
        for (DiscCount n = 2; n <= 20; ++n) {
            auto splits = best_splits(n, k);
            std::optional<MoveCount> best;
            for (DiscCount t = 1; t < n; ++t) {
                MoveCount cost = count_moves(t, k) * 2 + count_moves(n - t, k - 1);
                if (!best || cost < *best) {
                    best = cost;
                }
            }
            std::size_t expected = 0;
            for (DiscCount t = 1; t < n; ++t) {
                MoveCount cost = count_moves(t, k) * 2 + count_moves(n - t, k - 1);
                if (cost == *best) {
                    ++expected;
                }
            }
            CHECK(splits.size() == expected);
            for (const auto& split : splits) {
                CHECK(split.cost == *best);
            }
            CHECK(splits.front().cost == count_moves(n, k));
        }
    }
}

TEST_CASE("journey properties on a medium grid") {
    for (PegCount k = 3; k <= 12; ++k) {
        JourneyTable table = journey_table(200, k);
        for (DiscCount i = 1; i < 200; ++i) {
            const MoveCount& cur = table.at(i);
            const MoveCount& next = table.at(i + 1);
            CHECK(cur <= next);                            // monotone
            CHECK((next == cur || next == cur * 2));       // doubling
            CHECK(cur.is_power_of_two());
        }
    }
}

TEST_CASE("threshold exactness on a medium grid") {
    for (PegCount k = 3; k <= 10; ++k) {
        for (std::uint32_t r = 1;; ++r) {
            MoveCount upper = binomial(k + r - 2, k - 2);
            if (MoveCount{300} < upper) {
                break;
            }
            const DiscCount hi = static_cast<DiscCount>(upper.to_uint64());
            const DiscCount lo = static_cast<DiscCount>(binomial(k + r - 3, k - 2).to_uint64()) + 1;
            CHECK(journey_number(lo, k) == MoveCount::pow2(r));
            CHECK(journey_number(hi, k) == MoveCount::pow2(r));
            CHECK(journey_number(hi + 1, k) == MoveCount::pow2(r + 1));
        }
    }
}

TEST_CASE("more pegs never cost more") {
    for (PegCount k = 3; k <= 10; ++k) {
        for (DiscCount n = 0; n <= 50; ++n) {
            CHECK(count_moves(n, k + 1) <= count_moves(n, k));
        }
    }
}

TEST_CASE("more pegs than discs costs 2n-1") {
    for (DiscCount n = 1; n <= 30; ++n) {
        for (PegCount k = n + 1; k <= n + 4; ++k) {
            if (k < 3) {
                continue;
            }
            CHECK(count_moves(n, k) == MoveCount{2 * std::uint64_t{n} - 1});
        }
    }
}

TEST_CASE("concurrent callers see identical results") {
    std::vector<std::vector<std::string>> results(4);
    std::vector<std::thread> workers;
    for (auto& slot : results) {
        workers.emplace_back([&slot] {
            for (DiscCount n = 0; n <= 40; ++n) {
                slot.push_back(count_moves(n, 6).str());
                slot.push_back(count_moves_recursive(n, 5).str());
                slot.push_back(distribute_cost(n, 6, 4).str());
            }
        });
    }
    for (auto& worker : workers) {
        worker.join();
    }
    for (std::size_t i = 1; i < results.size(); ++i) {
        CHECK(results[i] == results[0]);
    }
}

TEST_CASE("preconditions are enforced") {
    CHECK_THROWS_AS(journey_number(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(journey_number(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(count_moves(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(journey_table(0, 4), std::invalid_argument);
}
