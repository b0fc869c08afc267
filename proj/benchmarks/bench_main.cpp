#include <benchmark/benchmark.h>

#include <random>

#include "goising/energy.hpp"
#include "goising/replay.hpp"
#include "goising/sgf.hpp"
#include "goising/tactics.hpp"

using namespace goising;

namespace {

// Deterministic pseudo-game: random legal moves, passes when stuck.
SgfGame synthetic_game(int size, int moves, unsigned seed) {
    std::mt19937_64 rng(seed);
    SgfGame game;
    game.board_size = size;
    BoardState state(size);
    Color color = Color::Black;
    for (int i = 0; i < moves; ++i) {
        std::vector<Point> empties;
        for (std::int16_t r = 0; r < size; ++r)
            for (std::int16_t c = 0; c < size; ++c)
                if (!state.at({c, r})) empties.push_back({c, r});
        std::shuffle(empties.begin(), empties.end(), rng);
        bool played = false;
        for (Point p : empties) {
            try {
                Move m = Move::play(color, p);
                state = apply_move(state, m);
                game.moves.push_back(m);
                played = true;
                break;
            } catch (const RuleError&) {
            }
        }
        if (!played) game.moves.push_back(Move::pass(color));
        color = opposite(color);
    }
    return game;
}

BoardState midgame_state() {
    SgfGame game = synthetic_game(19, 120, 7);
    BoardState state(19);
    for (const Move& m : game.moves) state = apply_move(state, m);
    return state;
}

void BM_apply_move(benchmark::State& bench) {
    SgfGame game = synthetic_game(19, 200, 11);
    for (auto _ : bench) {
        BoardState state(19);
        for (const Move& m : game.moves) state = apply_move(state, m);
        benchmark::DoNotOptimize(state);
    }
}
BENCHMARK(BM_apply_move);

void BM_annotate(benchmark::State& bench) {
    BoardState state = midgame_state();
    for (auto _ : bench) {
        PatternAnnotation a = annotate(state);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_annotate);

void BM_hamiltonian(benchmark::State& bench) {
    BoardState state = midgame_state();
    ParameterSet params;
    PatternAnnotation annotation = annotate(state);
    for (auto _ : bench) {
        EnergyReport r = hamiltonian(state, params, annotation);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_hamiltonian);

void BM_replay_120(benchmark::State& bench) {
    SgfGame game = synthetic_game(19, 120, 7);
    ParameterSet params;
    for (auto _ : bench) {
        StrengthSeries s = replay(game, params);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_replay_120);

void BM_parse_sgf(benchmark::State& bench) {
    std::string text = serialize_sgf(synthetic_game(19, 250, 3));
    for (auto _ : bench) {
        SgfGame g = parse_sgf(text);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_parse_sgf);

}  // namespace

BENCHMARK_MAIN();
