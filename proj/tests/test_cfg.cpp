#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fig2_position.hpp"
#include "generators.hpp"
#include "goising/cfg.hpp"

using namespace goising;
using namespace goising::testing;

namespace {
Point pt(int c, int r) { return Point{static_cast<std::int16_t>(c), static_cast<std::int16_t>(r)}; }
}

TEST_CASE("empty board yields an empty graph") {
    CommonFateGraph g = build_cfg(BoardState(19));
    CHECK(g.principal_nodes.empty());
    CHECK(g.secondary_nodes.empty());
    CHECK(g.edges.empty());
    CHECK(g.adjacency.empty());
}

TEST_CASE("single interior stone: one principal, four secondary, four edges") {
    BoardState state = apply_move(BoardState(19), Move::play(Color::Black, pt(3, 3)));
    CommonFateGraph g = build_cfg(state);
    REQUIRE(g.principal_nodes.size() == 1);
    CHECK(g.principal_nodes[0].size == 1);
    CHECK(g.secondary_nodes.size() == 4);
    CHECK(g.edges.size() == 4);
}

TEST_CASE("corner position with 11, 5 and 18 stone chains") {
    BoardState state = fig2_position();
    CommonFateGraph g = build_cfg(state);

    std::vector<int> sizes;
    for (const auto& n : g.principal_nodes) sizes.push_back(n.size);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{5, 11, 18});

    ChainId big_white = 0, small_white = 0, black = 0;
    for (const auto& n : g.principal_nodes) {
        if (n.size == 11) big_white = n.id;
        if (n.size == 5) small_white = n.id;
        if (n.size == 18) black = n.id;
    }
    CHECK(state.find_chain(big_white)->color == Color::White);
    CHECK(state.find_chain(small_white)->color == Color::White);
    CHECK(state.find_chain(black)->color == Color::Black);

    CHECK(state.find_chain(big_white)->liberty_count() == 6);
    CHECK(shared_liberties(g, big_white, small_white) == 1);
    CHECK(shared_liberties(g, big_white, black) == 1);
    CHECK(shared_liberties(g, small_white, black) == 0);

    auto has_pair = [&](ChainId a, ChainId b) {
        auto p = std::minmax(a, b);
        return std::find(g.adjacency.begin(), g.adjacency.end(),
                         std::pair{p.first, p.second}) != g.adjacency.end();
    };
    CHECK(has_pair(big_white, small_white));
    CHECK(has_pair(big_white, black));
    CHECK_FALSE(has_pair(small_white, black));
}

TEST_CASE("shared liberties basics") {
    BoardState state = replay_setup(19, {{Color::Black, pt(3, 3)}, {Color::Black, pt(3, 5)},
                                         {Color::White, pt(15, 15)}});
    CommonFateGraph g = build_cfg(state);
    ChainId a = state.chain_id_at(pt(3, 3));
    ChainId b = state.chain_id_at(pt(3, 5));
    ChainId far = state.chain_id_at(pt(15, 15));
    CHECK(shared_liberties(g, a, b) == 1);  // exactly (3,4)
    CHECK(shared_liberties(g, a, far) == 0);
    CHECK_THROWS_AS(shared_liberties(g, a, 9999), UnknownChainError);
}

TEST_CASE("debug dump lists one principal node per line") {
    BoardState state = replay_setup(9, {{Color::Black, pt(1, 1)}, {Color::White, pt(3, 3)}});
    std::string dump = cfg_dump(build_cfg(state));
    CHECK(std::count(dump.begin(), dump.end(), '\n') == 2);
    CHECK(dump.find("size=1") != std::string::npos);
}

TEST_CASE("property: structure invariants on random boards") {
    Rng rng(552211);
    for (int trial = 0; trial < 150; ++trial) {
        int size = rand_int(rng, 5, 19);
        BoardState state = random_position(rng, size, rand_int(rng, 0, size * size / 2));
        CommonFateGraph g = build_cfg(state);

        int label_sum = 0;
        for (const auto& n : g.principal_nodes) label_sum += n.size;
        CHECK(label_sum == state.stones_on_board());

        // Each secondary node touches at least one principal; a liberty
        // shared by k chains has exactly k incident edges.
        for (Point p : g.secondary_nodes) {
            int incident = 0;
            int touching = 0;
            for (const auto& [id, q] : g.edges)
                if (q == p) ++incident;
            for (const Chain& c : state.chains())
                if (std::binary_search(c.liberty_points.begin(), c.liberty_points.end(), p))
                    ++touching;
            CHECK(incident == touching);
            CHECK(incident >= 1);
        }

        // Color swap maps the graph node-for-node.
        CommonFateGraph swapped = build_cfg(swap_colors(state));
        CommonFateGraph expected = g;
        for (auto& n : expected.principal_nodes) n.color = opposite(n.color);
        CHECK(swapped == expected);
    }
}

TEST_CASE("property: every shared liberty has witness stones exactly two apart") {
    Rng rng(8080);
    for (int trial = 0; trial < 80; ++trial) {
        BoardState state = random_position(rng, 9, rand_int(rng, 0, 40));
        CommonFateGraph g = build_cfg(state);
        for (const auto& [a, b] : g.adjacency) {
            const Chain* ca = state.find_chain(a);
            const Chain* cb = state.find_chain(b);
            bool witnessed = false;
            for (Point q : ca->liberty_points) {
                if (!std::binary_search(cb->liberty_points.begin(), cb->liberty_points.end(), q))
                    continue;
                CHECK(state.at(q) == std::nullopt);
                // Stones of both chains touch q, so some pair sits at grid
                // distance exactly 2 (straight through q or around its corner).
                for (Point pa : ca->points)
                    for (Point pb : cb->points) {
                        if (std::abs(pa.col - q.col) + std::abs(pa.row - q.row) != 1) continue;
                        if (std::abs(pb.col - q.col) + std::abs(pb.row - q.row) != 1) continue;
                        if (std::abs(pa.col - pb.col) + std::abs(pa.row - pb.row) == 2)
                            witnessed = true;
                    }
            }
            CHECK(witnessed);
        }
    }
}
