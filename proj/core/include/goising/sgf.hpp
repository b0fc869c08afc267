#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goising/board.hpp"

namespace goising {

/// Main-line content of one SGF game record (FF[3]/FF[4] subset:
/// B W AB AW SZ KM RE PB PW; unknown properties are skipped).
struct SgfGame {
    int board_size = 19;
    std::optional<double> komi;
    std::optional<std::string> result;  // RE text, e.g. "B+R", "W+2.5"
    std::string player_black;
    std::string player_white;
    std::vector<std::pair<Color, Point>> setup;  // black stones first, each sorted
    std::vector<Move> moves;

    bool operator==(const SgfGame&) const = default;
};

enum class SgfErrorKind {
    UnbalancedParens,
    BadProperty,
    BadCoordinate,
    UnsupportedGame,
};

class SgfError : public std::runtime_error {
public:
    SgfError(SgfErrorKind kind, std::size_t offset, const std::string& what)
        : std::runtime_error(what + " at byte " + std::to_string(offset)),
          kind_(kind),
          offset_(offset) {}
    SgfErrorKind kind() const { return kind_; }
    std::size_t offset() const { return offset_; }

private:
    SgfErrorKind kind_;
    std::size_t offset_;
};

/// Parses the first game tree, following the first child at every branch.
/// "tt" (on 19x19) and "[]" both decode as a pass.
SgfGame parse_sgf(std::string_view input);

/// Emits the supported subset; parse_sgf(serialize_sgf(g)) == g on it.
std::string serialize_sgf(const SgfGame& game);

/// Black for "B+...", White for "W+...", nullopt otherwise.
std::optional<Color> result_winner(const SgfGame& game);

/// Two-letter SGF coordinate ("pd"), or "pass".
std::string sgf_coord(const std::optional<Point>& p);

}  // namespace goising
