#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "goising/board.hpp"
#include "goising/tactics.hpp"

namespace goising {

/// Tactic-power coefficients and field magnitude. Construction enforces
/// r_eye > r_net > r_lad > r_inv > r_red > r_sl >= r_none > 0 and
/// r_eye > 1; d_max caps the interaction corridor length.
struct ParameterSet {
    double r_eye = 8.0;
    double r_net = 5.0;
    double r_lad = 4.0;
    double r_inv = 3.0;
    double r_red = 2.0;
    double r_sl = 1.0;
    double r_none = 1.0;
    double mu = 1.0;
    int d_max = 6;

    ParameterSet() = default;
    ParameterSet(double eye, double net, double lad, double inv, double red, double sl,
                 double none, double mu_, int dmax);

    void validate() const;  // throws std::invalid_argument

    /// Flat key=value text; keys exactly r_eye, r_net, r_lad, r_inv,
    /// r_red, r_sl, r_none, mu, d_max. Missing keys keep defaults,
    /// unknown keys are rejected. '#' starts a comment.
    static ParameterSet from_string(std::string_view text);
    static ParameterSet from_file(const std::string& path);

    double tactic_coefficient(TacticKind k) const;

    bool operator==(const ParameterSet&) const = default;
};

/// Integer-exponent power, exact for integral bases.
double ipow(double base, int exp);

struct StoneValue {
    ChainId id;
    double x;
    bool operator==(const StoneValue&) const = default;
};

struct Interaction {
    ChainId a, b;  // a < b
    double w;
    bool operator==(const Interaction&) const = default;
};

struct EnergyReport {
    double hamiltonian = 0.0;
    double pair_energy = 0.0;   // -sum w_ij x_i x_j
    double field_energy = 0.0;  // -mu sum h_i x_i
    double s_black = 0.0;
    double s_white = 0.0;
    std::vector<StoneValue> values;               // by id
    std::vector<std::pair<ChainId, int>> field;   // h_i = liberty count, by id
    std::vector<Interaction> interactions;        // all pairs within d_max
    ParameterSet params;
};

/// x = c * (n + r_eye^k) when k >= 1, else c * n.
StoneValue stone_value(const Chain& chain, int eye_count, const ParameterSet& params);

/// Points on shortest rectilinear paths between the chains (their own
/// stones excluded); empty when the chains are farther apart than d_max.
std::vector<Point> corridor(const BoardState& state, ChainId a, ChainId b,
                            const ParameterSet& params);

/// Symmetrized per-perspective corridor sum: empty points contribute
/// +r_sl each; an intervening chain contributes its r_t * |x| once per
/// perspective, positive for that perspective's own color. For
/// cross-color pairs the stone terms cancel and only open space remains.
double interaction_coefficient(const BoardState& state, ChainId a, ChainId b,
                               const PatternAnnotation& annotation,
                               const ParameterSet& params);

/// H = -sum_pairs w_ij x_i x_j - mu * sum_i h_i x_i with h_i = liberties.
EnergyReport hamiltonian(const BoardState& state, const ParameterSet& params,
                         const PatternAnnotation& annotation);

/// Per-color strength: own field terms mu*h*|x|, plus own same-color pair
/// terms w*x*x, plus half of every cross-color pair term.
std::pair<double, double> color_strength(const EnergyReport& report);

}  // namespace goising
