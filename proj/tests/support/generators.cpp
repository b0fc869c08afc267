#include "generators.hpp"

#include <algorithm>

namespace goising::testing {

std::optional<Move> random_legal_move(Rng& rng, const BoardState& state, Color color) {
    std::vector<Point> empties;
    for (std::int16_t r = 0; r < state.size(); ++r)
        for (std::int16_t c = 0; c < state.size(); ++c)
            if (!state.at({c, r})) empties.push_back({c, r});
    std::shuffle(empties.begin(), empties.end(), rng);
    for (Point p : empties) {
        Move m = Move::play(color, p);
        try {
            apply_move(state, m);
            return m;
        } catch (const RuleError&) {
        }
    }
    return std::nullopt;
}

BoardState random_position(Rng& rng, int size, int moves) {
    BoardState state(size);
    Color color = Color::Black;
    for (int i = 0; i < moves; ++i) {
        auto m = random_legal_move(rng, state, color);
        if (!m) break;
        state = apply_move(state, *m);
        color = opposite(color);
    }
    return state;
}

BoardState random_sparse_position(Rng& rng, int size, int max_stones) {
    BoardState state(size);
    Color color = Color::Black;
    int stalled = 0;
    while (state.stones_on_board() < max_stones && stalled < 4) {
        auto m = random_legal_move(rng, state, color);
        color = opposite(color);
        if (!m) {
            ++stalled;
            continue;
        }
        BoardState next = apply_move(state, *m);
        if (next.stones_on_board() > max_stones) {
            ++stalled;
            continue;
        }
        state = std::move(next);
    }
    return state;
}

SgfGame random_sgf_game(Rng& rng) {
    SgfGame game;
    game.board_size = rand_int(rng, 5, 19);
    if (rand_int(rng, 0, 1)) game.komi = rand_int(rng, -15, 15) / 2.0;
    switch (rand_int(rng, 0, 4)) {
        case 0: game.result = "B+R"; break;
        case 1: game.result = "W+R"; break;
        case 2: game.result = "W+" + std::to_string(rand_int(rng, 0, 20) / 2.0); break;
        case 3: game.result = "Void"; break;
        default: break;  // absent
    }
    const char* names[] = {"", "Lee", "a]b", "back\\slash", "Cho Chikun"};
    game.player_black = names[rand_int(rng, 0, 4)];
    game.player_white = names[rand_int(rng, 0, 4)];

    auto random_point = [&] {
        return Point{static_cast<std::int16_t>(rand_int(rng, 0, game.board_size - 1)),
                     static_cast<std::int16_t>(rand_int(rng, 0, game.board_size - 1))};
    };

    std::vector<Point> setup_black, setup_white;
    int setup_n = rand_int(rng, 0, 5);
    for (int i = 0; i < setup_n; ++i) {
        Point p = random_point();
        if (std::find(setup_black.begin(), setup_black.end(), p) != setup_black.end()) continue;
        if (std::find(setup_white.begin(), setup_white.end(), p) != setup_white.end()) continue;
        (rand_int(rng, 0, 1) ? setup_black : setup_white).push_back(p);
    }
    std::sort(setup_black.begin(), setup_black.end());
    std::sort(setup_white.begin(), setup_white.end());
    for (Point p : setup_black) game.setup.emplace_back(Color::Black, p);
    for (Point p : setup_white) game.setup.emplace_back(Color::White, p);

    int moves = rand_int(rng, 0, 60);
    for (int i = 0; i < moves; ++i) {
        Color c = rand_int(rng, 0, 9) == 0 ? static_cast<Color>(rand_int(rng, 0, 1))
                                           : (i % 2 == 0 ? Color::Black : Color::White);
        if (rand_int(rng, 0, 14) == 0)
            game.moves.push_back(Move::pass(c));
        else
            game.moves.push_back(Move::play(c, random_point()));
    }
    return game;
}

std::string mutate_bytes(Rng& rng, std::string text, int edits) {
    for (int i = 0; i < edits; ++i) {
        if (text.empty()) {
            text.push_back(static_cast<char>(rand_int(rng, 1, 255)));
            continue;
        }
        int pos = rand_int(rng, 0, static_cast<int>(text.size()) - 1);
        switch (rand_int(rng, 0, 2)) {
            case 0: text[pos] = static_cast<char>(rand_int(rng, 1, 255)); break;
            case 1: text.erase(text.begin() + pos); break;
            default:
                text.insert(text.begin() + pos, static_cast<char>(rand_int(rng, 1, 255)));
                break;
        }
    }
    return text;
}

}  // namespace goising::testing
