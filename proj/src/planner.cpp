#include "hanoi/planner.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hanoi {

namespace {

std::vector<PegId> all_pegs(PegCount k) {
    std::vector<PegId> pegs(k);
    std::iota(pegs.begin(), pegs.end(), 0);
    return pegs;
}

}  // namespace

PlanStream PlanStream::solve(DiscCount n, PegCount k) {
    if (k < 1) {
        throw std::invalid_argument("puzzle needs at least one peg");
    }
    if (k < 3 && n >= 2) {
        throw InfeasiblePuzzleError("cannot move a tower of " + std::to_string(n) +
                                    " discs with " + std::to_string(k) + " pegs");
    }
    PlanStream stream;
    stream.max_count_ = n;
    if (k >= 3) {
        stream.total_ = count_moves(n, k);
        stream.split_.resize(k + 1);
        stream.t_tables_.resize(k + 1);
    } else {
        stream.total_ = (n == 1 && k == 2) ? 1 : 0;
    }
    if (n >= 1 && k >= 2) {
        stream.push_transfer(n, 0, k - 1, all_pegs(k));
    }
    return stream;
}

PlanStream PlanStream::distribute(DiscCount n, PegCount k, TargetPegCount m) {
    std::vector<DiscCount> heights = distribute_heights(n, k, m);
    PlanStream stream;
    stream.max_count_ = n;
    stream.total_ = distribute_cost(n, k, m);
    stream.split_.resize(k + 1);
    stream.t_tables_.resize(k + 1);
    // Tower i lands on peg i+1 and may use pegs {0, i+1, i+2, ..., k-1}:
    // earlier targets hold smaller discs and are off limits. Pushed in
    // reverse so the tallest tower is built first.
    for (TargetPegCount i = m; i-- > 0;) {
        if (heights[i] == 0) {
            continue;
        }
        std::vector<PegId> pegs;
        pegs.push_back(0);
        for (PegId p = i + 1; p < k; ++p) {
            pegs.push_back(p);
        }
        stream.push_transfer(heights[i], 0, i + 1, std::move(pegs));
    }
    return stream;
}

void PlanStream::push_transfer(DiscCount count, PegId src, PegId dst, std::vector<PegId> pegs) {
    stack_.push_back(Task{count, src, dst, std::move(pegs)});
}

DiscCount PlanStream::pick_split(DiscCount count, PegCount pegs) {
    auto& memo = split_[pegs];
    if (memo.empty()) {
        memo.assign(static_cast<std::size_t>(max_count_) + 1, 0);
    }
    if (memo[count] != 0) {
        return memo[count];
    }
    for (PegCount kk : {pegs - 1, pegs}) {
        if (t_tables_[kk].empty()) {
            t_tables_[kk] = count_moves_table(max_count_, kk);
        }
    }
    const auto& same = t_tables_[pegs];
    const auto& fewer = t_tables_[pegs - 1];
    DiscCount best_t = 1;
    MoveCount best = same[1] * 2 + fewer[count - 1];
    for (DiscCount t = 2; t < count; ++t) {
        MoveCount cost = same[t] * 2 + fewer[count - t];
        if (cost < best) {
            best = std::move(cost);
            best_t = t;
        }
    }
    memo[count] = best_t;
    return best_t;
}

std::optional<Move> PlanStream::next() {
    while (!stack_.empty()) {
        Task task = std::move(stack_.back());
        stack_.pop_back();
        if (task.count == 0) {
            return Move{task.src, task.dst};
        }
        if (task.count == 1) {
            return Move{task.src, task.dst};
        }
        const PegCount usable = static_cast<PegCount>(task.pegs.size());
        if (usable < 3) {
            throw InfeasiblePuzzleError("ran out of pegs mid-plan");
        }
        if (usable == 3) {
            PegId spare = 0;
            for (PegId peg : task.pegs) {
                if (peg != task.src && peg != task.dst) {
                    spare = peg;
                    break;
                }
            }
            push_transfer(task.count - 1, spare, task.dst, task.pegs);
            push_transfer(0, task.src, task.dst, {});
            push_transfer(task.count - 1, task.src, spare, std::move(task.pegs));
            continue;
        }
        // Frame-Stewart node: set aside the top t discs on the spare peg,
        // move the rest without that peg, then fetch the t discs back.
        const DiscCount t = pick_split(task.count, usable);
        PegId spare = 0;
        bool found = false;
        for (PegId peg : task.pegs) {
            if (peg != task.src && peg != task.dst) {
                spare = peg;
                found = true;
                break;
            }
        }
        if (!found) {
            throw InfeasiblePuzzleError("no spare peg available");
        }
        std::vector<PegId> without_spare;
        without_spare.reserve(task.pegs.size() - 1);
        for (PegId peg : task.pegs) {
            if (peg != spare) {
                without_spare.push_back(peg);
            }
        }
        push_transfer(t, spare, task.dst, task.pegs);
        push_transfer(task.count - t, task.src, task.dst, std::move(without_spare));
        push_transfer(t, task.src, spare, std::move(task.pegs));
        continue;
    }
    return std::nullopt;
}

namespace {

Plan materialize(PlanStream stream, DiscCount n, PegCount k) {
    Plan plan{n, k, {}, stream.total()};
    if (plan.claimed_length.fits_uint64() && plan.claimed_length.to_uint64() < (1u << 26)) {
        plan.moves.reserve(plan.claimed_length.to_uint64());
    }
    while (auto move = stream.next()) {
        plan.moves.push_back(*move);
    }
    return plan;
}

}  // namespace

Plan plan_solve(DiscCount n, PegCount k) {
    return materialize(PlanStream::solve(n, k), n, k);
}

Plan plan_distribute(DiscCount n, PegCount k, TargetPegCount m) {
    return materialize(PlanStream::distribute(n, k, m), n, k);
}

Plan plan_reverse(const Plan& plan) {
    Plan reversed{plan.discs, plan.pegs, {}, plan.claimed_length};
    reversed.moves.reserve(plan.moves.size());
    for (auto it = plan.moves.rbegin(); it != plan.moves.rend(); ++it) {
        reversed.moves.push_back(Move{it->to, it->from});
    }
    return reversed;
}

}  // namespace hanoi
