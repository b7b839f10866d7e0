#include "hanoi/state.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>

namespace hanoi {

PuzzleState::PuzzleState(DiscCount n, PegCount k) : pegs_(k), disc_peg_(n, 0) {
    if (k < 3) {
        throw std::invalid_argument("puzzle needs at least 3 pegs");
    }
}

PuzzleState::PuzzleState(PegCount k, std::vector<PegId> disc_peg)
    : pegs_(k), disc_peg_(std::move(disc_peg)) {
    if (k < 3) {
        throw std::invalid_argument("puzzle needs at least 3 pegs");
    }
    for (PegId peg : disc_peg_) {
        if (peg >= k) {
            throw std::invalid_argument("disc assigned to a peg outside [0, k)");
        }
    }
}

std::optional<Disc> PuzzleState::top_of(PegId peg) const {
    for (Disc d = 1; d <= discs(); ++d) {
        if (disc_peg_[d - 1] == peg) {
            return d;
        }
    }
    return std::nullopt;
}

PuzzleState initial_state(DiscCount n, PegCount k) {
    return PuzzleState(n, k);
}

std::vector<Move> legal_moves(const PuzzleState& state) {
    const PegCount k = state.pegs();
    constexpr Disc kEmpty = 0;
    std::vector<Disc> top(k, kEmpty);
    for (Disc d = state.discs(); d >= 1; --d) {
        top[state.peg_of(d)] = d;  // smallest disc seen last wins
    }
    std::vector<Move> moves;
    for (PegId from = 0; from < k; ++from) {
        if (top[from] == kEmpty) {
            continue;
        }
        for (PegId to = 0; to < k; ++to) {
            if (to != from && (top[to] == kEmpty || top[to] > top[from])) {
                moves.push_back(Move{from, to});
            }
        }
    }
    return moves;
}

PuzzleState apply_move(const PuzzleState& state, Move move) {
    if (move.from >= state.pegs() || move.to >= state.pegs() || move.from == move.to) {
        throw IllegalMoveError("move names an invalid peg pair", 0);
    }
    std::optional<Disc> moved = state.top_of(move.from);
    if (!moved) {
        throw IllegalMoveError("source peg is empty", 0);
    }
    std::optional<Disc> resting = state.top_of(move.to);
    if (resting && *resting < *moved) {
        throw IllegalMoveError("cannot place a disc on a smaller one", 0);
    }
    PuzzleState next = state;
    next.disc_peg_[*moved - 1] = move.to;
    return next;
}

bool is_solved(const PuzzleState& state) {
    const PegId destination = state.pegs() - 1;
    for (Disc d = 1; d <= state.discs(); ++d) {
        if (state.peg_of(d) != destination) {
            return false;
        }
    }
    return true;
}

StackProfile profile(const PuzzleState& state) {
    return Simulator(state).profile();
}

StackProfile validate_sequence(DiscCount n, PegCount k, std::span<const Move> moves) {
    Simulator sim(n, k);
    for (Move move : moves) {
        sim.apply(move);
    }
    return sim.profile();
}

Simulator::Simulator(DiscCount n, PegCount k) : Simulator(PuzzleState(n, k)) {}

Simulator::Simulator(const PuzzleState& state) : state_(state), stacks_(state.pegs()) {
    for (Disc d = state.discs(); d >= 1; --d) {
        stacks_[state.peg_of(d)].push_back(d);
    }
}

void Simulator::apply(Move move) {
    if (move.from >= state_.pegs() || move.to >= state_.pegs() || move.from == move.to) {
        throw IllegalMoveError("move names an invalid peg pair", applied_);
    }
    auto& src = stacks_[move.from];
    if (src.empty()) {
        throw IllegalMoveError("source peg is empty", applied_);
    }
    auto& dst = stacks_[move.to];
    if (!dst.empty() && dst.back() < src.back()) {
        throw IllegalMoveError("cannot place a disc on a smaller one", applied_);
    }
    dst.push_back(src.back());
    src.pop_back();
    state_.disc_peg_[dst.back() - 1] = move.to;
    ++applied_;
}

bool Simulator::solved() const {
    return is_solved(state_);
}

StackProfile Simulator::profile() const {
    StackProfile result;
    result.heights.reserve(stacks_.size());
    result.towers.reserve(stacks_.size());
    for (const auto& stack : stacks_) {
        result.heights.push_back(static_cast<DiscCount>(stack.size()));
        // Discs on a peg are consecutive exactly when bottom - top spans the
        // whole height; empty stacks are towers vacuously.
        bool tower = stack.empty() || stack.front() - stack.back() + 1 == stack.size();
        result.towers.push_back(tower);
    }
    return result;
}

namespace {

std::string_view trim(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t' || text.front() == '\r')) {
        text.remove_prefix(1);
    }
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    return text;
}

std::optional<PegId> parse_peg(std::string_view token) {
    PegId value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

std::optional<Move> parse_move_line(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
        return std::nullopt;
    }
    auto space = line.find_first_of(" \t");
    if (space == std::string_view::npos) {
        throw std::invalid_argument("expected two peg indices");
    }
    auto from = parse_peg(trim(line.substr(0, space)));
    auto to = parse_peg(trim(line.substr(space + 1)));
    if (!from || !to) {
        throw std::invalid_argument("expected two peg indices");
    }
    if (*from == *to) {
        throw std::invalid_argument("move must change pegs");
    }
    return Move{*from, *to};
}

std::vector<Move> read_move_list(std::istream& in) {
    std::vector<Move> moves;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        try {
            if (auto move = parse_move_line(line)) {
                moves.push_back(*move);
            }
        } catch (const std::invalid_argument& err) {
            throw MoveParseError(err.what(), line_number);
        }
    }
    return moves;
}

void write_move_list(std::ostream& out, std::span<const Move> moves) {
    for (Move move : moves) {
        out << move.from << ' ' << move.to << '\n';
    }
}

std::string format_move(Move move) {
    return std::to_string(move.from) + ' ' + std::to_string(move.to);
}

}  // namespace hanoi
