#pragma once

#include <optional>
#include <string>
#include <vector>

#include "goising/energy.hpp"
#include "goising/sgf.hpp"

namespace goising {

struct GameInfo {
    int board_size = 19;
    std::string player_black;
    std::string player_white;
    std::optional<std::string> result;
    std::optional<double> komi;
    bool operator==(const GameInfo&) const = default;
};

struct StrengthRecord {
    int move_number = 0;  // 1-based, passes included
    Color color = Color::Black;
    std::optional<Point> point;  // nullopt = pass
    double s_black = 0.0;
    double s_white = 0.0;
    double hamiltonian = 0.0;
    bool operator==(const StrengthRecord&) const = default;
};

struct StrengthSeries {
    GameInfo game;
    ParameterSet params;
    std::vector<StrengthRecord> records;
    std::vector<std::string> warnings;  // e.g. turn-alternation violations
    bool operator==(const StrengthSeries&) const = default;
};

struct TransitionEvent {
    int move_number = 0;
    double delta = 0.0;  // change of (s_black - s_white) at this move
    double score = 0.0;  // |delta| / rolling scale, >= kappa when emitted
    bool operator==(const TransitionEvent&) const = default;
};

enum class Agreement { Exact, Disagree, Unknown };

struct GameVerdict {
    Color predicted = Color::White;  // ties go to White (komi)
    double final_s_black = 0.0;
    double final_s_white = 0.0;
    std::optional<Color> official;
    Agreement agreement = Agreement::Unknown;
    bool operator==(const GameVerdict&) const = default;
};

class ReplayError : public std::runtime_error {
public:
    ReplayError(int move_number, const std::string& reason)
        : std::runtime_error("move " + std::to_string(move_number) + ": " + reason),
          move_number_(move_number) {}
    int move_number() const { return move_number_; }

private:
    int move_number_;
};

class EmptySeriesError : public std::runtime_error {
public:
    EmptySeriesError() : std::runtime_error("series has no records") {}
};

/// Applies setup stones, then every recorded move, evaluating the energy
/// after each one. Illegal recorded moves raise ReplayError with the move
/// number. Invasion/Reduction move intents stick to the played stone and
/// strengthen its chain's annotation while the stone stays on board.
StrengthSeries replay(const SgfGame& game, const ParameterSet& params,
                      const TacticsConfig& tactics = {});

/// Robust step detector on g = s_black - s_white: an event fires at move m
/// when |g_m - g_{m-1}| exceeds kappa times the median absolute successive
/// deviation over the previous `window` moves (floored at epsilon). The
/// first `window` moves never fire.
std::vector<TransitionEvent> detect_transitions(const StrengthSeries& series, int window = 20,
                                                double kappa = 6.0, double epsilon = 1.0);

/// Compares the final record's strengths; ties go to White.
GameVerdict predict_winner(const StrengthSeries& series);

struct BatchSummary {
    struct Entry {
        GameVerdict verdict;
        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> games;  // input order
    int exact = 0;
    int disagree = 0;
    int unknown = 0;

    std::optional<double> agreement_rate() const {
        int known = exact + disagree;
        if (known == 0) return std::nullopt;
        return static_cast<double>(exact) / known;
    }
};

BatchSummary batch_evaluate(const std::vector<SgfGame>& games, const ParameterSet& params,
                            const TacticsConfig& tactics = {});

}  // namespace goising
