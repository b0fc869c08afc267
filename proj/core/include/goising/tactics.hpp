#pragma once

#include <map>
#include <vector>

#include "goising/board.hpp"

namespace goising {

/// Connection is a move-intent class only; chains never carry it.
enum class TacticKind : std::uint8_t {
    None,
    Reduction,
    Invasion,
    Ladder,
    Net,
    Eye,
    Connection,
};

/// Eye > Net > Ladder > Invasion > Reduction > None.
int tactic_power(TacticKind k);
const char* tactic_name(TacticKind k);

enum class LadderStatus { CapturedByLadder, Escapes, Unresolved };

struct TacticsConfig {
    int ladder_budget = 64;         // reading plies
    int net_depth_cap = 6;          // capture-search plies
    int invasion_clear_radius = 2;  // Chebyshev: no ally within
    int invasion_enemy_radius = 4;  // Chebyshev: some adversary within
    int reduction_radius = 2;       // Chebyshev: adversary within
};

struct PatternAnnotation {
    std::map<ChainId, int> eyes;          // k_i; every chain present
    std::map<ChainId, TacticKind> kinds;  // strongest membership; absent = None
    TacticKind move_intent = TacticKind::None;

    int eye_count(ChainId id) const {
        auto it = eyes.find(id);
        return it == eyes.end() ? 0 : it->second;
    }
    TacticKind kind(ChainId id) const {
        auto it = kinds.find(id);
        return it == kinds.end() ? TacticKind::None : it->second;
    }
    bool operator==(const PatternAnnotation&) const = default;
};

/// k_i per chain. An eye is an empty point whose on-board orthogonal
/// neighbors are all stones of one color, passing the false-eye guard
/// (interior: at most one adversary diagonal; edge/corner: every on-board
/// diagonal is a friendly stone). The eye counts for each bordering chain
/// when the border ring connects them all, and never when it is the
/// chain's last liberty.
std::map<ChainId, int> detect_eyes(const BoardState& state);

/// Forced ladder reading: the defender extends on its sole liberty, the
/// attacker answers with the liberty-minimizing reply (ties to the
/// lexicographically smallest point). Chains with two liberties are first
/// reduced to atari in one move, trying each atari point.
LadderStatus ladder_status(const BoardState& state, ChainId target, int max_depth = 64);

/// Chains with at most three liberties that a bounded capture search
/// proves unable to raise their liberty count above its current value
/// before capture. Ladder-capturable chains are excluded (ladder takes
/// precedence). Returns (attacker color, trapped chain) pairs.
std::vector<std::pair<Color, ChainId>> detect_nets(const BoardState& state,
                                                   const TacticsConfig& cfg = {});

/// Connection if the placement merges two or more own chains; else
/// Invasion / Reduction by the Chebyshev radii in cfg; pass is None.
TacticKind classify_move(const BoardState& before, const Move& move,
                         const TacticsConfig& cfg = {});

/// Eyes + ladder/net membership with precedence applied.
PatternAnnotation annotate(const BoardState& state, const TacticsConfig& cfg = {});

}  // namespace goising
