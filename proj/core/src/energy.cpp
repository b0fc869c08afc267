#include "goising/energy.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>

namespace goising {

ParameterSet::ParameterSet(double eye, double net, double lad, double inv, double red,
                           double sl, double none, double mu_, int dmax)
    : r_eye(eye), r_net(net), r_lad(lad), r_inv(inv), r_red(red), r_sl(sl), r_none(none),
      mu(mu_), d_max(dmax) {
    validate();
}

void ParameterSet::validate() const {
    auto bad = [](const std::string& msg) { throw std::invalid_argument("parameters: " + msg); };
    if (!(r_eye > r_net && r_net > r_lad && r_lad > r_inv && r_inv > r_red && r_red > r_sl))
        bad("tactic order r_eye > r_net > r_lad > r_inv > r_red > r_sl violated");
    if (!(r_sl >= r_none)) bad("r_sl must be >= r_none");
    if (!(r_none > 0)) bad("r_none must be positive");
    if (!(r_eye > 1)) bad("r_eye must exceed 1");
    if (!(mu > 0)) bad("mu must be positive");
    if (d_max < 1) bad("d_max must be >= 1");
}

ParameterSet ParameterSet::from_string(std::string_view text) {
    ParameterSet p;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto trim = [](std::string_view s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
            return s;
        };
        line = trim(line);
        if (line.empty()) continue;

        auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("parameters: line " + std::to_string(line_no) +
                                        " is not key=value");
        std::string key{trim(line.substr(0, eq))};
        std::string_view val = trim(line.substr(eq + 1));

        auto parse_double = [&](double& out) {
            auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), out);
            if (ec != std::errc() || ptr != val.data() + val.size())
                throw std::invalid_argument("parameters: bad value for " + key);
        };
        if (key == "r_eye") parse_double(p.r_eye);
        else if (key == "r_net") parse_double(p.r_net);
        else if (key == "r_lad") parse_double(p.r_lad);
        else if (key == "r_inv") parse_double(p.r_inv);
        else if (key == "r_red") parse_double(p.r_red);
        else if (key == "r_sl") parse_double(p.r_sl);
        else if (key == "r_none") parse_double(p.r_none);
        else if (key == "mu") parse_double(p.mu);
        else if (key == "d_max") {
            auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), p.d_max);
            if (ec != std::errc() || ptr != val.data() + val.size())
                throw std::invalid_argument("parameters: bad value for d_max");
        } else {
            throw std::invalid_argument("parameters: unknown key '" + key + "'");
        }
    }
    p.validate();
    return p;
}

ParameterSet ParameterSet::from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("parameters: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_string(buf.str());
}

double ParameterSet::tactic_coefficient(TacticKind k) const {
    switch (k) {
        case TacticKind::Eye: return r_eye;
        case TacticKind::Net: return r_net;
        case TacticKind::Ladder: return r_lad;
        case TacticKind::Invasion: return r_inv;
        case TacticKind::Reduction: return r_red;
        case TacticKind::None: return r_none;
        case TacticKind::Connection: return r_none;  // connection carries no own coefficient
    }
    return r_none;
}

double ipow(double base, int exp) {
    assert(exp >= 0);
    double out = 1.0;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

StoneValue stone_value(const Chain& chain, int eye_count, const ParameterSet& params) {
    double magnitude = chain.size();
    if (eye_count >= 1) magnitude += ipow(params.r_eye, eye_count);
    return StoneValue{chain.id, spin_of(chain.color) * magnitude};
}

namespace {

// Grid (Manhattan) distance from a set of stones, by multi-source BFS.
std::vector<int> grid_distances(int size, const std::vector<Point>& sources) {
    std::vector<int> dist(static_cast<std::size_t>(size) * size, -1);
    std::deque<Point> queue;
    for (Point p : sources) {
        dist[p.row * size + p.col] = 0;
        queue.push_back(p);
    }
    while (!queue.empty()) {
        Point p = queue.front();
        queue.pop_front();
        int d = dist[p.row * size + p.col];
        const Point nbrs[4] = {{static_cast<std::int16_t>(p.col - 1), p.row},
                               {static_cast<std::int16_t>(p.col + 1), p.row},
                               {p.col, static_cast<std::int16_t>(p.row - 1)},
                               {p.col, static_cast<std::int16_t>(p.row + 1)}};
        for (Point q : nbrs) {
            if (q.col < 0 || q.row < 0 || q.col >= size || q.row >= size) continue;
            int& dq = dist[q.row * size + q.col];
            if (dq < 0) {
                dq = d + 1;
                queue.push_back(q);
            }
        }
    }
    return dist;
}

int pair_distance(const BoardState& state, const Chain& cb, const std::vector<int>& da) {
    const int n = state.size();
    int d = std::numeric_limits<int>::max();
    for (Point p : cb.points) d = std::min(d, da[p.row * n + p.col]);
    return d;
}

std::vector<Point> corridor_from_distances(const BoardState& state, const Chain& ca,
                                           const Chain& cb, const std::vector<int>& da,
                                           const std::vector<int>& db, int d_max) {
    const int d = pair_distance(state, cb, da);
    if (d > d_max) return {};

    const int n = state.size();
    std::vector<Point> out;
    for (std::int16_t row = 0; row < n; ++row)
        for (std::int16_t col = 0; col < n; ++col) {
            int i = row * n + col;
            if (da[i] + db[i] != d) continue;
            Point p{col, row};
            ChainId at = state.chain_id_at(p);
            if (at == ca.id || at == cb.id) continue;
            out.push_back(p);
        }
    std::sort(out.begin(), out.end());
    return out;
}

double w_from_corridor(const BoardState& state, const Chain& ca, const Chain& cb,
                       const std::vector<Point>& corr, const PatternAnnotation& annotation,
                       const ParameterSet& params) {
    int empties = 0;
    std::vector<ChainId> seen;
    double ally = 0.0, adversary = 0.0;
    for (Point p : corr) {
        ChainId id = state.chain_id_at(p);
        if (id == kNoChain) {
            ++empties;
            continue;
        }
        if (std::find(seen.begin(), seen.end(), id) != seen.end()) continue;
        seen.push_back(id);
        const Chain* s = state.find_chain(id);
        double term = params.tactic_coefficient(annotation.kind(id)) *
                      std::abs(stone_value(*s, annotation.eye_count(id), params).x);
        if (s->color == ca.color)
            ally += term;
        else
            adversary += term;
    }
    if (ca.color == cb.color) return params.r_sl * empties + ally - adversary;
    return params.r_sl * empties;  // cross-color: stone terms cancel by symmetry
}

const Chain& require_chain(const BoardState& state, ChainId id) {
    const Chain* c = state.find_chain(id);
    if (!c) throw UnknownChainError("chain " + std::to_string(id) + " not in state");
    return *c;
}

}  // namespace

std::vector<Point> corridor(const BoardState& state, ChainId a, ChainId b,
                            const ParameterSet& params) {
    if (a == b) throw std::invalid_argument("corridor requires two distinct chains");
    const Chain& ca = require_chain(state, a);
    const Chain& cb = require_chain(state, b);
    auto da = grid_distances(state.size(), ca.points);
    auto db = grid_distances(state.size(), cb.points);
    return corridor_from_distances(state, ca, cb, da, db, params.d_max);
}

double interaction_coefficient(const BoardState& state, ChainId a, ChainId b,
                               const PatternAnnotation& annotation,
                               const ParameterSet& params) {
    const Chain& ca = require_chain(state, a);
    const Chain& cb = require_chain(state, b);
    auto corr = corridor(state, a, b, params);
    return w_from_corridor(state, ca, cb, corr, annotation, params);
}

EnergyReport hamiltonian(const BoardState& state, const ParameterSet& params,
                         const PatternAnnotation& annotation) {
    EnergyReport report;
    report.params = params;

    const auto& chains = state.chains();
    report.values.reserve(chains.size());
    report.field.reserve(chains.size());
    for (const Chain& c : chains) {
        report.values.push_back(stone_value(c, annotation.eye_count(c.id), params));
        report.field.emplace_back(c.id, c.liberty_count());
    }

    std::vector<std::vector<int>> dists(chains.size());
    for (std::size_t i = 0; i < chains.size(); ++i)
        dists[i] = grid_distances(state.size(), chains[i].points);

    for (std::size_t i = 0; i < chains.size(); ++i) {
        for (std::size_t j = i + 1; j < chains.size(); ++j) {
            if (pair_distance(state, chains[j], dists[i]) > params.d_max) continue;
            auto corr = corridor_from_distances(state, chains[i], chains[j], dists[i],
                                                dists[j], params.d_max);
            double w = w_from_corridor(state, chains[i], chains[j], corr, annotation, params);
            report.interactions.push_back({chains[i].id, chains[j].id, w});
        }
    }

    double pair_sum = 0.0, field_sum = 0.0;
    auto value_of = [&](ChainId id) {
        auto it = std::lower_bound(report.values.begin(), report.values.end(), id,
                                   [](const StoneValue& v, ChainId k) { return v.id < k; });
        assert(it != report.values.end() && it->id == id);
        return it->x;
    };
    for (const Interaction& in : report.interactions)
        pair_sum += in.w * value_of(in.a) * value_of(in.b);
    for (std::size_t i = 0; i < chains.size(); ++i)
        field_sum += report.field[i].second * report.values[i].x;

    report.pair_energy = -pair_sum;
    report.field_energy = -params.mu * field_sum;
    report.hamiltonian = report.pair_energy + report.field_energy;

    auto [sb, sw] = color_strength(report);
    report.s_black = sb;
    report.s_white = sw;
    return report;
}

std::pair<double, double> color_strength(const EnergyReport& report) {
    double s_black = 0.0, s_white = 0.0;
    auto value_of = [&](ChainId id) {
        auto it = std::lower_bound(report.values.begin(), report.values.end(), id,
                                   [](const StoneValue& v, ChainId k) { return v.id < k; });
        assert(it != report.values.end() && it->id == id);
        return it->x;
    };

    for (std::size_t i = 0; i < report.values.size(); ++i) {
        const StoneValue& v = report.values[i];
        assert(report.field[i].first == v.id);
        double term = report.params.mu * report.field[i].second * std::abs(v.x);
        (v.x < 0 ? s_black : s_white) += term;
    }
    for (const Interaction& in : report.interactions) {
        double xa = value_of(in.a), xb = value_of(in.b);
        double term = in.w * xa * xb;
        if ((xa < 0) == (xb < 0)) {
            (xa < 0 ? s_black : s_white) += term;
        } else {
            s_black += term / 2;
            s_white += term / 2;
        }
    }
    return {s_black, s_white};
}

}  // namespace goising
