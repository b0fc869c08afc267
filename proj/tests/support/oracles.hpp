#pragma once

#include <vector>

#include "goising/board.hpp"
#include "goising/energy.hpp"
#include "goising/tactics.hpp"

namespace goising::testing {

/// Liberty count by direct neighbor scan over the grid, independent of the
/// engine's chain bookkeeping.
int liberty_oracle(const BoardState& state, const Chain& chain);

/// Corridor by explicit enumeration of every monotone shortest path
/// between every closest stone pair; intended for small boards.
std::vector<Point> corridor_oracle(const BoardState& state, ChainId a, ChainId b, int d_max);

/// Interaction coefficient by the literal symmetrized two-perspective sum
/// over corridor points, with per-perspective once-per-chain bookkeeping.
double w_oracle(const BoardState& state, ChainId a, ChainId b,
                const PatternAnnotation& annotation, const ParameterSet& params);

/// Exhaustive forced-ladder reading: the defender extends on its sole
/// liberty, the attacker tries every filling reply (minimax over replies).
LadderStatus ladder_oracle(const BoardState& state, ChainId target, int max_depth);

/// Unordered, unpruned bounded capture search with the same move
/// vocabulary as the net detector (defender: liberties and counter
/// captures; attacker: liberties and cover points, self-atari included).
bool net_oracle(const BoardState& state, ChainId target, int depth_cap);

}  // namespace goising::testing
