#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace goising::testing {

namespace {

const Chain& get_chain(const BoardState& state, ChainId id) {
    const Chain* c = state.find_chain(id);
    if (!c) throw std::invalid_argument("oracle: unknown chain");
    return *c;
}

void walk_paths(Point at, Point to, std::set<Point>& out) {
    out.insert(at);
    if (at == to) return;
    if (at.col != to.col) {
        Point next{static_cast<std::int16_t>(at.col + (to.col > at.col ? 1 : -1)), at.row};
        walk_paths(next, to, out);
    }
    if (at.row != to.row) {
        Point next{at.col, static_cast<std::int16_t>(at.row + (to.row > at.row ? 1 : -1))};
        walk_paths(next, to, out);
    }
}

int manhattan(Point a, Point b) { return std::abs(a.col - b.col) + std::abs(a.row - b.row); }

// Independent scratch board with its own flood-fill rules.
struct OracleSim {
    int n;
    std::vector<int> cells;  // 0 empty, 1 black, 2 white

    explicit OracleSim(const BoardState& st) : n(st.size()), cells(n * n, 0) {
        for (const Chain& c : st.chains())
            for (Point p : c.points) cells[p.row * n + p.col] = c.color == Color::Black ? 1 : 2;
    }

    bool in(Point p) const { return p.col >= 0 && p.row >= 0 && p.col < n && p.row < n; }
    int& cell(Point p) { return cells[p.row * n + p.col]; }
    int cell(Point p) const { return cells[p.row * n + p.col]; }

    std::vector<Point> neighbors(Point p) const {
        std::vector<Point> out;
        Point cand[4] = {{static_cast<std::int16_t>(p.col - 1), p.row},
                         {static_cast<std::int16_t>(p.col + 1), p.row},
                         {p.col, static_cast<std::int16_t>(p.row - 1)},
                         {p.col, static_cast<std::int16_t>(p.row + 1)}};
        for (Point q : cand)
            if (in(q)) out.push_back(q);
        return out;
    }

    void group(Point p, std::vector<Point>& stones, std::set<Point>& libs) const {
        stones.clear();
        libs.clear();
        int v = cell(p);
        std::set<Point> seen{p};
        std::vector<Point> stack{p};
        while (!stack.empty()) {
            Point q = stack.back();
            stack.pop_back();
            stones.push_back(q);
            for (Point r : neighbors(q)) {
                if (cell(r) == 0) libs.insert(r);
                if (cell(r) == v && !seen.count(r)) {
                    seen.insert(r);
                    stack.push_back(r);
                }
            }
        }
    }

    int libs_of(Point p) const {
        std::vector<Point> stones;
        std::set<Point> libs;
        group(p, stones, libs);
        return static_cast<int>(libs.size());
    }

    std::vector<Point> liberties(Point p) const {
        std::vector<Point> stones;
        std::set<Point> libs;
        group(p, stones, libs);
        return {libs.begin(), libs.end()};
    }

    bool play(Color color, Point p) {
        if (cell(p) != 0) return false;
        int own = color == Color::Black ? 1 : 2;
        int adv = 3 - own;
        cell(p) = own;
        bool captured = false;
        for (Point q : neighbors(p)) {
            if (cell(q) != adv) continue;
            std::vector<Point> stones;
            std::set<Point> libs;
            group(q, stones, libs);
            if (libs.empty()) {
                for (Point s : stones) cell(s) = 0;
                captured = true;
            }
        }
        if (!captured && libs_of(p) == 0) {
            cell(p) = 0;
            return false;
        }
        return true;
    }
};

LadderStatus read_any(OracleSim sim, Point anchor, Color defender, int budget) {
    if (budget <= 0) return LadderStatus::Unresolved;
    std::vector<Point> libs = sim.liberties(anchor);
    if (!sim.play(defender, libs[0])) return LadderStatus::CapturedByLadder;
    --budget;

    libs = sim.liberties(anchor);
    if (libs.size() >= 3) return LadderStatus::Escapes;
    if (budget <= 0) return LadderStatus::Unresolved;
    Color attacker = opposite(defender);
    if (libs.size() == 1) {
        OracleSim fill = sim;
        return fill.play(attacker, libs[0]) ? LadderStatus::CapturedByLadder
                                            : LadderStatus::Escapes;
    }

    bool unresolved = false;
    for (Point lib : libs) {
        OracleSim next = sim;
        if (!next.play(attacker, lib)) continue;
        if (next.libs_of(anchor) != 1) continue;
        LadderStatus r = read_any(std::move(next), anchor, defender, budget - 1);
        if (r == LadderStatus::CapturedByLadder) return r;
        if (r == LadderStatus::Unresolved) unresolved = true;
    }
    return unresolved ? LadderStatus::Unresolved : LadderStatus::Escapes;
}

std::vector<Point> oracle_defender_moves(const OracleSim& sim, Point anchor, Color defender) {
    std::vector<Point> stones;
    std::set<Point> libs;
    sim.group(anchor, stones, libs);
    std::set<Point> cands = libs;
    int adv = defender == Color::Black ? 2 : 1;
    for (Point s : stones)
        for (Point q : sim.neighbors(s)) {
            if (sim.cell(q) != adv) continue;
            std::vector<Point> astones;
            std::set<Point> alibs;
            sim.group(q, astones, alibs);
            if (alibs.size() == 1) cands.insert(*alibs.begin());
        }
    return {cands.begin(), cands.end()};
}

std::vector<Point> oracle_attacker_moves(const OracleSim& sim, Point anchor) {
    std::set<Point> cands;
    for (Point lib : sim.liberties(anchor)) {
        cands.insert(lib);
        for (Point q : sim.neighbors(lib))
            if (sim.cell(q) == 0) cands.insert(q);
    }
    return {cands.begin(), cands.end()};
}

bool oracle_contains(const OracleSim& sim, Point anchor, Color defender, int base, int depth);

bool oracle_trapped(const OracleSim& sim, Point anchor, Color defender, int base, int depth) {
    if (sim.cell(anchor) == 0) return true;
    if (sim.libs_of(anchor) > base) return false;
    if (depth <= 0) return false;
    for (Point cand : oracle_defender_moves(sim, anchor, defender)) {
        OracleSim next = sim;
        if (!next.play(defender, cand)) continue;
        if (!oracle_contains(next, anchor, defender, base, depth - 1)) return false;
    }
    return true;
}

bool oracle_contains(const OracleSim& sim, Point anchor, Color defender, int base, int depth) {
    if (depth <= 0) return false;
    for (Point cand : oracle_attacker_moves(sim, anchor)) {
        OracleSim next = sim;
        if (!next.play(opposite(defender), cand)) continue;
        if (next.cell(anchor) == 0) return true;
        if (oracle_trapped(next, anchor, defender, base, depth - 1)) return true;
    }
    return false;
}

}  // namespace

int liberty_oracle(const BoardState& state, const Chain& chain) {
    std::set<Point> libs;
    for (Point p : chain.points) {
        Point cand[4] = {{static_cast<std::int16_t>(p.col - 1), p.row},
                         {static_cast<std::int16_t>(p.col + 1), p.row},
                         {p.col, static_cast<std::int16_t>(p.row - 1)},
                         {p.col, static_cast<std::int16_t>(p.row + 1)}};
        for (Point q : cand)
            if (state.in_bounds(q) && !state.at(q)) libs.insert(q);
    }
    return static_cast<int>(libs.size());
}

std::vector<Point> corridor_oracle(const BoardState& state, ChainId a, ChainId b, int d_max) {
    const Chain& ca = get_chain(state, a);
    const Chain& cb = get_chain(state, b);

    int d = std::numeric_limits<int>::max();
    for (Point pa : ca.points)
        for (Point pb : cb.points) d = std::min(d, manhattan(pa, pb));
    if (d > d_max) return {};

    std::set<Point> pts;
    for (Point pa : ca.points)
        for (Point pb : cb.points)
            if (manhattan(pa, pb) == d) walk_paths(pa, pb, pts);

    std::vector<Point> out;
    for (Point p : pts) {
        ChainId at = state.chain_id_at(p);
        if (at == a || at == b) continue;
        out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

double w_oracle(const BoardState& state, ChainId a, ChainId b,
                const PatternAnnotation& annotation, const ParameterSet& params) {
    const Chain& ca = get_chain(state, a);
    const Chain& cb = get_chain(state, b);
    std::vector<Point> corr = corridor_oracle(state, a, b, params.d_max);

    double totals[2] = {0.0, 0.0};
    const Chain* perspective[2] = {&ca, &cb};
    for (int q = 0; q < 2; ++q) {
        std::set<ChainId> seen;
        for (Point p : corr) {
            ChainId id = state.chain_id_at(p);
            if (id == kNoChain) {
                totals[q] += params.r_sl;
                continue;
            }
            if (seen.count(id)) continue;
            seen.insert(id);
            const Chain& s = get_chain(state, id);
            double term = params.tactic_coefficient(annotation.kind(id)) *
                          std::abs(stone_value(s, annotation.eye_count(id), params).x);
            totals[q] += (s.color == perspective[q]->color) ? term : -term;
        }
    }
    return (totals[0] + totals[1]) / 2.0;
}

LadderStatus ladder_oracle(const BoardState& state, ChainId target, int max_depth) {
    const Chain& chain = get_chain(state, target);
    OracleSim sim(state);
    Point anchor = chain.points.front();
    int l = chain.liberty_count();
    if (l == 1) return read_any(sim, anchor, chain.color, max_depth);
    if (l == 2) {
        bool unresolved = false;
        for (Point lib : chain.liberty_points) {
            OracleSim next = sim;
            if (!next.play(opposite(chain.color), lib)) continue;
            if (next.libs_of(anchor) != 1) continue;
            LadderStatus r = read_any(std::move(next), anchor, chain.color, max_depth - 1);
            if (r == LadderStatus::CapturedByLadder) return r;
            if (r == LadderStatus::Unresolved) unresolved = true;
        }
        return unresolved ? LadderStatus::Unresolved : LadderStatus::Escapes;
    }
    return LadderStatus::Escapes;
}

bool net_oracle(const BoardState& state, ChainId target, int depth_cap) {
    const Chain& chain = get_chain(state, target);
    OracleSim sim(state);
    int l = chain.liberty_count();
    return oracle_trapped(sim, chain.points.front(), chain.color, l,
                          std::min(2 * l, depth_cap));
}

}  // namespace goising::testing
