#include "goising/tactics.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <limits>

namespace goising {

int tactic_power(TacticKind k) {
    switch (k) {
        case TacticKind::Eye: return 5;
        case TacticKind::Net: return 4;
        case TacticKind::Ladder: return 3;
        case TacticKind::Invasion: return 2;
        case TacticKind::Reduction: return 1;
        case TacticKind::None: return 0;
        case TacticKind::Connection: return 0;  // intent class, not a chain pattern
    }
    return 0;
}

const char* tactic_name(TacticKind k) {
    switch (k) {
        case TacticKind::Eye: return "eye";
        case TacticKind::Net: return "net";
        case TacticKind::Ladder: return "ladder";
        case TacticKind::Invasion: return "invasion";
        case TacticKind::Reduction: return "reduction";
        case TacticKind::Connection: return "connection";
        case TacticKind::None: return "none";
    }
    return "none";
}

namespace {

// Scratch board for tactical reading: grid only, chains recovered by
// flood fill on demand. Ko is ignored while reading.
struct Sim {
    int n;
    std::vector<std::int8_t> cells;  // 0 empty, 1 black, 2 white

    explicit Sim(const BoardState& st) : n(st.size()), cells(n * n, 0) {
        for (const Chain& c : st.chains()) {
            std::int8_t v = c.color == Color::Black ? 1 : 2;
            for (Point p : c.points) cells[p.row * n + p.col] = v;
        }
    }

    bool in(int col, int row) const { return col >= 0 && row >= 0 && col < n && row < n; }
    int idx(Point p) const { return p.row * n + p.col; }
    std::int8_t at(Point p) const { return cells[idx(p)]; }
    bool empty_at(Point p) const { return cells[idx(p)] == 0; }

    template <typename F>
    void neighbors(Point p, F f) const {
        if (p.col > 0) f(Point{static_cast<std::int16_t>(p.col - 1), p.row});
        if (p.col + 1 < n) f(Point{static_cast<std::int16_t>(p.col + 1), p.row});
        if (p.row > 0) f(Point{p.col, static_cast<std::int16_t>(p.row - 1)});
        if (p.row + 1 < n) f(Point{p.col, static_cast<std::int16_t>(p.row + 1)});
    }

    // Stones of the group at p and its distinct liberties.
    void group(Point p, std::vector<Point>& stones, std::vector<Point>& libs) const {
        stones.clear();
        libs.clear();
        assert(!empty_at(p));
        std::int8_t v = at(p);
        std::vector<char> seen(cells.size(), 0);
        std::vector<Point> stack{p};
        seen[idx(p)] = 1;
        while (!stack.empty()) {
            Point q = stack.back();
            stack.pop_back();
            stones.push_back(q);
            neighbors(q, [&](Point r) {
                if (seen[idx(r)]) return;
                seen[idx(r)] = 1;
                if (cells[idx(r)] == v)
                    stack.push_back(r);
                else if (cells[idx(r)] == 0)
                    libs.push_back(r);
            });
        }
        std::sort(libs.begin(), libs.end());
    }

    int liberty_count(Point p) const {
        std::vector<Point> stones, libs;
        group(p, stones, libs);
        return static_cast<int>(libs.size());
    }

    std::vector<Point> group_liberties(Point p) const {
        std::vector<Point> stones, libs;
        group(p, stones, libs);
        return libs;
    }

    // Plays a stone, removing captured adversary groups. Returns false
    // (board unchanged) when occupied or suicidal.
    bool play(Color color, Point p) {
        if (!empty_at(p)) return false;
        std::int8_t own = color == Color::Black ? 1 : 2;
        std::int8_t adv = color == Color::Black ? 2 : 1;
        cells[idx(p)] = own;

        bool captured = false;
        std::vector<Point> stones, libs;
        neighbors(p, [&](Point q) {
            if (cells[idx(q)] != adv) return;
            group(q, stones, libs);
            if (!libs.empty()) return;
            for (Point s : stones) cells[idx(s)] = 0;
            captured = true;
        });

        if (!captured && liberty_count(p) == 0) {
            cells[idx(p)] = 0;
            return false;
        }
        return true;
    }
};

LadderStatus read_forced(Sim sim, Point anchor, Color defender, int budget) {
    Color attacker = opposite(defender);
    while (true) {
        std::vector<Point> libs = sim.group_liberties(anchor);
        assert(libs.size() == 1);
        if (budget <= 0) return LadderStatus::Unresolved;

        // Defender extends on the sole liberty.
        if (!sim.play(defender, libs[0])) return LadderStatus::CapturedByLadder;
        --budget;

        libs = sim.group_liberties(anchor);
        if (libs.size() >= 3) return LadderStatus::Escapes;
        if (budget <= 0) return LadderStatus::Unresolved;

        if (libs.size() == 1) {
            Sim fill = sim;
            return fill.play(attacker, libs[0]) ? LadderStatus::CapturedByLadder
                                                : LadderStatus::Escapes;
        }

        // Two liberties: attacker picks the liberty-minimizing reply,
        // ties to the lexicographically smallest point.
        int best = std::numeric_limits<int>::max();
        Sim best_sim = sim;
        for (Point lib : libs) {
            Sim next = sim;
            if (!next.play(attacker, lib)) continue;
            int l = next.liberty_count(anchor);
            if (l < best) {
                best = l;
                best_sim = std::move(next);
            }
        }
        if (best > 1) return LadderStatus::Escapes;
        sim = std::move(best_sim);
        --budget;
    }
}

// Candidate escape moves: own liberties plus captures of adjacent
// adversary groups in atari.
std::vector<Point> defender_candidates(const Sim& sim, Point anchor, Color defender) {
    std::vector<Point> stones, libs, cands;
    sim.group(anchor, stones, libs);
    cands = libs;
    std::int8_t adv = defender == Color::Black ? 2 : 1;
    std::vector<Point> astones, alibs;
    for (Point s : stones) {
        sim.neighbors(s, [&](Point q) {
            if (sim.cells[sim.idx(q)] != adv) return;
            sim.group(q, astones, alibs);
            if (alibs.size() == 1) cands.push_back(alibs[0]);
        });
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    return cands;
}

// Candidate containment moves: the target's liberties and the empty
// points next to them (cover points).
std::vector<Point> attacker_candidates(const Sim& sim, Point anchor) {
    std::vector<Point> libs = sim.group_liberties(anchor);
    std::vector<Point> cands = libs;
    for (Point lib : libs)
        sim.neighbors(lib, [&](Point q) {
            if (sim.empty_at(q)) cands.push_back(q);
        });
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    return cands;
}

bool attacker_contains(const Sim& sim, Point anchor, Color defender, int base_libs, int depth);

// Defender to move. True when every try still ends in capture without the
// group ever holding more than base_libs liberties at its own turn.
bool defender_trapped(const Sim& sim, Point anchor, Color defender, int base_libs, int depth) {
    if (sim.empty_at(anchor)) return true;  // already captured
    int l = sim.liberty_count(anchor);
    if (l > base_libs) return false;
    if (depth <= 0) return false;  // unproven within budget
    for (Point cand : defender_candidates(sim, anchor, defender)) {
        Sim next = sim;
        if (!next.play(defender, cand)) continue;
        if (!attacker_contains(next, anchor, defender, base_libs, depth - 1)) return false;
    }
    return true;
}

bool attacker_contains(const Sim& sim, Point anchor, Color defender, int base_libs, int depth) {
    if (depth <= 0) return false;
    Color attacker = opposite(defender);

    // Order candidates by resulting target liberties.
    struct Try {
        int libs;
        Point p;
        Sim sim;
    };
    std::vector<Try> tries;
    for (Point cand : attacker_candidates(sim, anchor)) {
        Sim next = sim;
        if (!next.play(attacker, cand)) continue;
        if (next.empty_at(anchor)) return true;  // captured outright
        int target_libs = next.liberty_count(anchor);
        // Pointless self-atari covers are skipped.
        if (next.liberty_count(cand) == 1 && target_libs > 1) continue;
        tries.push_back({target_libs, cand, std::move(next)});
    }
    std::stable_sort(tries.begin(), tries.end(),
                     [](const Try& a, const Try& b) { return a.libs < b.libs; });
    for (const Try& t : tries)
        if (defender_trapped(t.sim, anchor, defender, base_libs, depth - 1)) return true;
    return false;
}

const Chain& require_chain(const BoardState& state, ChainId id) {
    const Chain* c = state.find_chain(id);
    if (!c) throw UnknownChainError("chain " + std::to_string(id) + " not in state");
    return *c;
}

}  // namespace

LadderStatus ladder_status(const BoardState& state, ChainId target, int max_depth) {
    const Chain& chain = require_chain(state, target);
    const Point anchor = chain.points.front();
    const Color defender = chain.color;
    const Color attacker = opposite(defender);
    const int l = chain.liberty_count();

    Sim sim(state);
    if (l == 1) return read_forced(sim, anchor, defender, max_depth);
    if (l == 2) {
        bool unresolved = false;
        for (Point lib : chain.liberty_points) {
            Sim next = sim;
            if (!next.play(attacker, lib)) continue;
            if (next.liberty_count(anchor) != 1) continue;  // no atari from here
            LadderStatus r = read_forced(next, anchor, defender, max_depth - 1);
            if (r == LadderStatus::CapturedByLadder) return r;
            if (r == LadderStatus::Unresolved) unresolved = true;
        }
        return unresolved ? LadderStatus::Unresolved : LadderStatus::Escapes;
    }
    return LadderStatus::Escapes;
}

std::map<ChainId, int> detect_eyes(const BoardState& state) {
    std::map<ChainId, int> eyes;
    for (const Chain& c : state.chains()) eyes[c.id] = 0;

    const int n = state.size();
    for (std::int16_t row = 0; row < n; ++row) {
        for (std::int16_t col = 0; col < n; ++col) {
            Point p{col, row};
            if (state.at(p)) continue;

            // All on-board orthogonal neighbors must be stones of one color.
            std::vector<Point> orth;
            if (col > 0) orth.push_back({static_cast<std::int16_t>(col - 1), row});
            if (col + 1 < n) orth.push_back({static_cast<std::int16_t>(col + 1), row});
            if (row > 0) orth.push_back({col, static_cast<std::int16_t>(row - 1)});
            if (row + 1 < n) orth.push_back({col, static_cast<std::int16_t>(row + 1)});

            std::optional<Color> owner;
            bool solid = true;
            for (Point q : orth) {
                auto c = state.at(q);
                if (!c || (owner && *owner != *c)) {
                    solid = false;
                    break;
                }
                owner = c;
            }
            if (!solid || !owner) continue;

            // False-eye guard on the diagonals.
            const bool interior = col > 0 && row > 0 && col + 1 < n && row + 1 < n;
            std::vector<Point> diags;
            for (int dc : {-1, 1})
                for (int dr : {-1, 1}) {
                    Point q{static_cast<std::int16_t>(col + dc), static_cast<std::int16_t>(row + dr)};
                    if (state.in_bounds(q)) diags.push_back(q);
                }
            bool ok;
            if (interior) {
                int adversary = 0;
                for (Point q : diags) {
                    auto c = state.at(q);
                    if (c && *c != *owner) ++adversary;
                }
                ok = adversary <= 1;
            } else {
                ok = std::all_of(diags.begin(), diags.end(), [&](Point q) {
                    auto c = state.at(q);
                    return c && *c == *owner;
                });
            }
            if (!ok) continue;

            // Border chains must be connected through the ring of owner
            // stones around the eye.
            std::vector<Point> ring;
            for (Point q : orth) ring.push_back(q);
            for (Point q : diags)
                if (state.at(q) == owner) ring.push_back(q);
            std::sort(ring.begin(), ring.end());

            std::vector<int> comp(ring.size());
            for (std::size_t i = 0; i < ring.size(); ++i) comp[i] = static_cast<int>(i);
            auto root = [&](int i) {
                while (comp[i] != i) i = comp[i] = comp[comp[i]];
                return i;
            };
            for (std::size_t i = 0; i < ring.size(); ++i)
                for (std::size_t j = i + 1; j < ring.size(); ++j) {
                    int dc = ring[i].col - ring[j].col, dr = ring[i].row - ring[j].row;
                    if (std::abs(dc) + std::abs(dr) == 1) comp[root(i)] = root(j);
                }
            bool one_component = true;
            std::vector<ChainId> border;
            for (Point q : orth) {
                auto it = std::lower_bound(ring.begin(), ring.end(), q);
                if (root(static_cast<int>(it - ring.begin())) != root(0)) one_component = false;
                ChainId id = chain_at(state, q)->id;
                if (std::find(border.begin(), border.end(), id) == border.end())
                    border.push_back(id);
            }
            if (!one_component) continue;

            for (ChainId id : border) {
                const Chain* c = state.find_chain(id);
                // An "eye" that is the chain's last liberty is no eye: the
                // adversary may fill it by capture.
                if (c->liberty_count() >= 2) eyes[id] += 1;
            }
        }
    }
    return eyes;
}

std::vector<std::pair<Color, ChainId>> detect_nets(const BoardState& state,
                                                   const TacticsConfig& cfg) {
    std::vector<std::pair<Color, ChainId>> out;
    for (const Chain& c : state.chains()) {
        int l = c.liberty_count();
        if (l < 1 || l > 3) continue;
        if (l <= 2 &&
            ladder_status(state, c.id, cfg.ladder_budget) == LadderStatus::CapturedByLadder)
            continue;  // ladder takes precedence
        Sim sim(state);
        int depth = std::min(2 * l, cfg.net_depth_cap);
        if (defender_trapped(sim, c.points.front(), c.color, l, depth))
            out.emplace_back(opposite(c.color), c.id);
    }
    return out;
}

TacticKind classify_move(const BoardState& before, const Move& move, const TacticsConfig& cfg) {
    if (move.is_pass()) return TacticKind::None;
    apply_move(before, move);  // legality gate; throws RuleError

    const Point p = *move.point;
    const Color mover = move.color;

    std::vector<ChainId> own_neighbors;
    const Point nbrs[4] = {{static_cast<std::int16_t>(p.col - 1), p.row},
                           {static_cast<std::int16_t>(p.col + 1), p.row},
                           {p.col, static_cast<std::int16_t>(p.row - 1)},
                           {p.col, static_cast<std::int16_t>(p.row + 1)}};
    for (Point q : nbrs) {
        if (!before.in_bounds(q)) continue;
        ChainId id = before.chain_id_at(q);
        if (id == kNoChain) continue;
        if (before.find_chain(id)->color != mover) continue;
        if (std::find(own_neighbors.begin(), own_neighbors.end(), id) == own_neighbors.end())
            own_neighbors.push_back(id);
    }
    if (own_neighbors.size() >= 2) return TacticKind::Connection;

    int ally = std::numeric_limits<int>::max();
    int adversary = std::numeric_limits<int>::max();
    for (const Chain& c : before.chains()) {
        int& best = (c.color == mover) ? ally : adversary;
        for (Point q : c.points)
            best = std::min(best, std::max(std::abs(q.col - p.col), std::abs(q.row - p.row)));
    }
    if (ally > cfg.invasion_clear_radius && adversary <= cfg.invasion_enemy_radius)
        return TacticKind::Invasion;
    if (adversary <= cfg.reduction_radius) return TacticKind::Reduction;
    return TacticKind::None;
}

PatternAnnotation annotate(const BoardState& state, const TacticsConfig& cfg) {
    PatternAnnotation a;
    a.eyes = detect_eyes(state);

    for (const Chain& c : state.chains()) {
        if (a.eye_count(c.id) > 0) {
            a.kinds[c.id] = TacticKind::Eye;
        } else if (c.liberty_count() <= 2 &&
                   ladder_status(state, c.id, cfg.ladder_budget) ==
                       LadderStatus::CapturedByLadder) {
            a.kinds[c.id] = TacticKind::Ladder;
        }
    }
    for (const Chain& c : state.chains()) {
        if (a.kinds.count(c.id)) continue;
        int l = c.liberty_count();
        if (l < 1 || l > 3) continue;
        Sim sim(state);
        int depth = std::min(2 * l, cfg.net_depth_cap);
        if (defender_trapped(sim, c.points.front(), c.color, l, depth))
            a.kinds[c.id] = TacticKind::Net;
    }
    return a;
}

}  // namespace goising
