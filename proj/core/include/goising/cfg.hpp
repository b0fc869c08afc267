#pragma once

#include <string>
#include <vector>

#include "goising/board.hpp"

namespace goising {

/// Common fate graph of a position: one principal node per chain, labeled
/// with its stone count; one secondary node per distinct liberty point;
/// incidence edges between them. Chains sharing a liberty are adjacent.
struct CommonFateGraph {
    struct PrincipalNode {
        ChainId id;
        Color color;
        int size;
        bool operator==(const PrincipalNode&) const = default;
    };

    std::vector<PrincipalNode> principal_nodes;        // sorted by id
    std::vector<Point> secondary_nodes;                // sorted, deduplicated
    std::vector<std::pair<ChainId, Point>> edges;      // sorted incidence
    std::vector<std::pair<ChainId, ChainId>> adjacency;  // shared-liberty pairs, a < b

    bool operator==(const CommonFateGraph&) const = default;
};

CommonFateGraph build_cfg(const BoardState& state);

/// Number of liberty points incident to both chains. Throws UnknownChainError.
int shared_liberties(const CommonFateGraph& g, ChainId a, ChainId b);

/// Plain-text adjacency listing, one principal node per line.
std::string cfg_dump(const CommonFateGraph& g);

}  // namespace goising
