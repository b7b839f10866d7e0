#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hanoi/counts.hpp"

namespace hanoi {

using PegId = std::uint32_t;  // 0-based; peg 0 is the source, peg k-1 the destination
using Disc = std::uint32_t;   // 1-based size; disc 1 is the smallest

// A move names pegs only: the moved disc is always the top of `from`.
struct Move {
    PegId from;
    PegId to;

    bool operator==(const Move& rhs) const = default;
};

class IllegalMoveError : public std::runtime_error {
public:
    IllegalMoveError(const std::string& what, std::size_t move_index)
        : std::runtime_error(what), index_(move_index) {}

    // 0-based position of the offending move within the sequence.
    std::size_t move_index() const { return index_; }

private:
    std::size_t index_;
};

// Disc-to-peg assignment. Ordering within a peg is forced by disc size, so
// this representation is canonical.
class PuzzleState {
public:
    PuzzleState(DiscCount n, PegCount k);
    // Explicit assignment, disc d on peg disc_peg[d-1]; validates peg range.
    PuzzleState(PegCount k, std::vector<PegId> disc_peg);

    PegCount pegs() const { return pegs_; }
    DiscCount discs() const { return static_cast<DiscCount>(disc_peg_.size()); }
    PegId peg_of(Disc disc) const { return disc_peg_.at(disc - 1); }
    std::optional<Disc> top_of(PegId peg) const;

    bool operator==(const PuzzleState& rhs) const = default;

private:
    PegCount pegs_;
    std::vector<PegId> disc_peg_;  // index d-1 holds the peg of disc d

    friend PuzzleState apply_move(const PuzzleState& state, Move move);
    friend class Simulator;
};

PuzzleState initial_state(DiscCount n, PegCount k);

// All (from, to) with a movable top disc, sorted by (from, to).
std::vector<Move> legal_moves(const PuzzleState& state);

// Throws IllegalMoveError (index 0) on an empty source or a larger-onto-
// smaller placement; such a throw during plan validation means a planner bug.
PuzzleState apply_move(const PuzzleState& state, Move move);

bool is_solved(const PuzzleState& state);

struct StackProfile {
    std::vector<DiscCount> heights;   // per peg
    std::vector<bool> towers;         // per peg: consecutive sizes up to the stack's largest
};

StackProfile profile(const PuzzleState& state);

// Applies the moves in order from initial_state(n, k); throws
// IllegalMoveError carrying the index of the first bad move.
StackProfile validate_sequence(DiscCount n, PegCount k, std::span<const Move> moves);

// Mutable companion to the pure functions above: O(1) per move, used for
// long sequences.
class Simulator {
public:
    Simulator(DiscCount n, PegCount k);
    explicit Simulator(const PuzzleState& state);

    void apply(Move move);  // throws IllegalMoveError with the running move index
    std::size_t moves_applied() const { return applied_; }
    bool solved() const;
    const PuzzleState& state() const { return state_; }
    StackProfile profile() const;

private:
    PuzzleState state_;
    std::vector<std::vector<Disc>> stacks_;  // bottom to top per peg
    std::size_t applied_ = 0;
};

// Move-list text format: one `FROM TO` pair of 0-based peg indices per line,
// LF line endings, `#` starts a comment.
class MoveParseError : public std::runtime_error {
public:
    MoveParseError(const std::string& what, std::size_t line_number)
        : std::runtime_error(what), line_(line_number) {}

    std::size_t line_number() const { return line_; }  // 1-based

private:
    std::size_t line_;
};

// Returns nullopt for blank/comment lines; throws std::invalid_argument on a
// malformed line (bad syntax, from == to).
std::optional<Move> parse_move_line(std::string_view line);

std::vector<Move> read_move_list(std::istream& in);  // throws MoveParseError
void write_move_list(std::ostream& out, std::span<const Move> moves);
std::string format_move(Move move);

}  // namespace hanoi
