#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace goising {

enum class Color : std::uint8_t { Black = 0, White = 1 };

constexpr Color opposite(Color c) {
    return c == Color::Black ? Color::White : Color::Black;
}

/// Spin convention: white = +1, black = -1.
constexpr int spin_of(Color c) {
    return c == Color::White ? +1 : -1;
}

constexpr char color_char(Color c) {
    return c == Color::Black ? 'B' : 'W';
}

struct Point {
    std::int16_t col = 0;
    std::int16_t row = 0;
    auto operator<=>(const Point&) const = default;
};

struct Move {
    Color color = Color::Black;
    std::optional<Point> point;  // nullopt = pass

    static Move play(Color c, Point p) { return Move{c, p}; }
    static Move pass(Color c) { return Move{c, std::nullopt}; }
    bool is_pass() const { return !point.has_value(); }
    bool operator==(const Move&) const = default;
};

using ChainId = std::uint32_t;
inline constexpr ChainId kNoChain = 0;

/// Maximal orthogonally-connected same-color stone group.
/// points and liberty_points are kept sorted; liberty_points are the
/// distinct empty orthogonal neighbors of points.
struct Chain {
    ChainId id = kNoChain;
    Color color = Color::Black;
    std::vector<Point> points;
    std::vector<Point> liberty_points;

    int size() const { return static_cast<int>(points.size()); }
    int liberty_count() const { return static_cast<int>(liberty_points.size()); }
    bool operator==(const Chain&) const = default;
};

enum class RuleViolation {
    OutOfBounds,
    OccupiedPoint,
    SuicideMove,
    KoViolation,
};

class RuleError : public std::runtime_error {
public:
    RuleError(RuleViolation kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    RuleViolation kind() const { return kind_; }

private:
    RuleViolation kind_;
};

class StaleChainError : public std::runtime_error {
public:
    explicit StaleChainError(const std::string& what) : std::runtime_error(what) {}
};

class UnknownChainError : public std::runtime_error {
public:
    explicit UnknownChainError(const std::string& what) : std::runtime_error(what) {}
};

/// Immutable snapshot of a Go position. Moves are applied functionally:
/// apply_move returns a fresh state and never mutates its input, so
/// snapshots can be shared freely between threads.
class BoardState {
public:
    static constexpr int kMinSize = 5;
    static constexpr int kMaxSize = 19;

    explicit BoardState(int size = 19);

    int size() const { return size_; }
    bool in_bounds(Point p) const {
        return p.col >= 0 && p.row >= 0 && p.col < size_ && p.row < size_;
    }

    /// Color at p, nullopt if empty. Throws RuleError(OutOfBounds).
    std::optional<Color> at(Point p) const;

    /// Chains sorted by ascending id.
    const std::vector<Chain>& chains() const { return chains_; }
    const Chain* find_chain(ChainId id) const;

    /// Chain id at p, kNoChain if empty. Throws RuleError(OutOfBounds).
    ChainId chain_id_at(Point p) const;

    std::optional<Point> ko_point() const { return ko_point_; }
    int move_number() const { return move_number_; }

    /// Number of adversary stones captured by `by` so far.
    int captures(Color by) const { return captures_[static_cast<int>(by)]; }

    int stones_on_board() const;

    bool operator==(const BoardState&) const = default;

    /// ASCII diagram, one row per line ('.', 'X' black, 'O' white).
    std::string to_string() const;

private:
    int size_;
    std::vector<std::int8_t> grid_;          // 0 empty, 1 black, 2 white
    std::vector<ChainId> point_chain_;       // kNoChain when empty
    std::vector<Chain> chains_;              // sorted by id
    std::array<int, 2> captures_{0, 0};
    std::optional<Point> ko_point_;
    Color ko_color_ = Color::Black;          // color forbidden at ko_point_
    int move_number_ = 0;
    ChainId next_chain_id_ = 1;

    int index(Point p) const { return p.row * size_ + p.col; }
    Chain* mutable_chain(ChainId id);
    void rebuild_liberties(Chain& c);
    void erase_chain(ChainId id);

    friend BoardState apply_move(const BoardState&, const Move&);
    friend BoardState replay_setup(int, const std::vector<std::pair<Color, Point>>&);
    friend BoardState swap_colors(const BoardState&);
    friend BoardState transform(const BoardState&, int);
};

/// Applies one move. Captures adversary chains with zero liberties, then
/// checks the mover's own chain for suicide. Simple ko: the recapture
/// point is forbidden for the opponent until a later move clears it
/// (a pass changes only the move number).
/// Turn alternation is deliberately not enforced.
BoardState apply_move(const BoardState& state, const Move& move);

/// Chain containing p, or nullptr if empty. Throws RuleError(OutOfBounds).
const Chain* chain_at(const BoardState& state, Point p);

/// Liberty count of a chain that must belong to `state` (same id, same
/// stones); otherwise throws StaleChainError.
int liberties(const BoardState& state, const Chain& chain);

/// Free placement for SGF AB/AW setup stones: occupancy and bounds are
/// checked, nothing else.
BoardState replay_setup(int size, const std::vector<std::pair<Color, Point>>& stones);

/// Same geometry with every stone (and capture counters, ko side)
/// recolored to the other player. Chain ids are preserved.
BoardState swap_colors(const BoardState& state);

/// The 8 dihedral board symmetries; symmetry 0 is identity, 1..3 mirror
/// and rotate, 4..7 transpose variants. Chain ids are preserved.
BoardState transform(const BoardState& state, int symmetry);
Point transform_point(Point p, int symmetry, int size);
Move transform_move(const Move& m, int symmetry, int size);

}  // namespace goising
