#include "goising/cfg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace goising {

CommonFateGraph build_cfg(const BoardState& state) {
    CommonFateGraph g;
    std::set<Point> secondary;
    std::map<Point, std::vector<ChainId>> by_liberty;

    for (const Chain& c : state.chains()) {
        g.principal_nodes.push_back({c.id, c.color, c.size()});
        for (Point p : c.liberty_points) {
            secondary.insert(p);
            by_liberty[p].push_back(c.id);
            g.edges.emplace_back(c.id, p);
        }
    }
    g.secondary_nodes.assign(secondary.begin(), secondary.end());
    std::sort(g.edges.begin(), g.edges.end());

    std::set<std::pair<ChainId, ChainId>> adj;
    for (const auto& [p, ids] : by_liberty) {
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                adj.insert({std::min(ids[i], ids[j]), std::max(ids[i], ids[j])});
    }
    g.adjacency.assign(adj.begin(), adj.end());
    return g;
}

namespace {

const CommonFateGraph::PrincipalNode* find_node(const CommonFateGraph& g, ChainId id) {
    for (const auto& n : g.principal_nodes)
        if (n.id == id) return &n;
    return nullptr;
}

}  // namespace

int shared_liberties(const CommonFateGraph& g, ChainId a, ChainId b) {
    if (!find_node(g, a)) throw UnknownChainError("chain " + std::to_string(a) + " not in graph");
    if (!find_node(g, b)) throw UnknownChainError("chain " + std::to_string(b) + " not in graph");
    std::set<Point> libs_a;
    for (const auto& [id, p] : g.edges)
        if (id == a) libs_a.insert(p);
    int shared = 0;
    for (const auto& [id, p] : g.edges)
        if (id == b && libs_a.count(p)) ++shared;
    return shared;
}

std::string cfg_dump(const CommonFateGraph& g) {
    std::ostringstream os;
    for (const auto& n : g.principal_nodes) {
        os << "chain " << n.id << " " << color_char(n.color) << " size=" << n.size;
        int libs = 0;
        for (const auto& [id, p] : g.edges)
            if (id == n.id) ++libs;
        os << " liberties=" << libs;
        std::string sep = " shares:";
        for (const auto& [a, b] : g.adjacency) {
            if (a != n.id && b != n.id) continue;
            ChainId other = (a == n.id) ? b : a;
            os << sep << " " << other << "(" << shared_liberties(g, n.id, other) << ")";
            sep = "";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace goising
