#pragma once

#include "goising/board.hpp"

namespace goising::testing {

/// Corner position with a white 11-stone chain (6 liberties), a white
/// 5-stone chain below sharing exactly one liberty with it, and a black
/// 18-stone chain to its right sharing exactly one liberty with it.
inline BoardState fig2_position() {
    auto p = [](int c, int r) {
        return Point{static_cast<std::int16_t>(c), static_cast<std::int16_t>(r)};
    };
    std::vector<std::pair<Color, Point>> stones;
    // White 11-chain, upper-left corner.
    for (Point q : {p(0, 0), p(1, 0), p(2, 0), p(0, 1), p(1, 1), p(2, 1), p(0, 2), p(1, 2),
                    p(0, 3), p(1, 3), p(0, 4)})
        stones.emplace_back(Color::White, q);
    // White 5-chain below; (0,5) is the one shared liberty.
    for (Point q : {p(0, 6), p(1, 6), p(0, 7), p(1, 7), p(2, 7)})
        stones.emplace_back(Color::White, q);
    // Black 18-chain to the right; (3,0) is the one shared liberty.
    for (Point q : {p(4, 0), p(5, 0), p(6, 0), p(7, 0), p(8, 0), p(5, 1), p(6, 1), p(7, 1),
                    p(8, 1), p(5, 2), p(6, 2), p(7, 2), p(8, 2), p(5, 3), p(6, 3), p(7, 3),
                    p(8, 3), p(5, 4)})
        stones.emplace_back(Color::Black, q);
    return replay_setup(19, stones);
}

}  // namespace goising::testing
