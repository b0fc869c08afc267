#include "goising/replay.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace goising {

StrengthSeries replay(const SgfGame& game, const ParameterSet& params,
                      const TacticsConfig& tactics) {
    params.validate();
    StrengthSeries series;
    series.game = GameInfo{game.board_size, game.player_black, game.player_white, game.result,
                           game.komi};
    series.params = params;

    BoardState state(game.board_size);
    try {
        state = replay_setup(game.board_size, game.setup);
    } catch (const std::exception& e) {
        throw ReplayError(0, std::string("setup: ") + e.what());
    }

    // Move intents stick to the played stone while it stays on board.
    std::map<Point, std::pair<Color, TacticKind>> intents;
    std::optional<Color> previous_color;

    int move_number = 0;
    for (const Move& move : game.moves) {
        ++move_number;
        if (previous_color && *previous_color == move.color)
            series.warnings.push_back("move " + std::to_string(move_number) +
                                      ": consecutive " +
                                      std::string(1, color_char(move.color)) + " moves");
        previous_color = move.color;

        TacticKind intent = TacticKind::None;
        BoardState next(state.size());
        try {
            intent = classify_move(state, move, tactics);
            next = apply_move(state, move);
        } catch (const std::exception& e) {
            throw ReplayError(move_number, e.what());
        }

        if (!move.is_pass()) {
            for (auto it = intents.begin(); it != intents.end();) {
                auto color = next.at(it->first);
                if (!color || *color != it->second.first)
                    it = intents.erase(it);
                else
                    ++it;
            }
            if (intent == TacticKind::Invasion || intent == TacticKind::Reduction)
                intents[*move.point] = {move.color, intent};
        }

        PatternAnnotation annotation = annotate(next, tactics);
        annotation.move_intent = intent;
        for (const auto& [p, tagged] : intents) {
            ChainId id = next.chain_id_at(p);
            if (id == kNoChain) continue;
            if (tactic_power(tagged.second) > tactic_power(annotation.kind(id)))
                annotation.kinds[id] = tagged.second;
        }

        EnergyReport report = hamiltonian(next, params, annotation);
        series.records.push_back(StrengthRecord{move_number, move.color, move.point,
                                                report.s_black, report.s_white,
                                                report.hamiltonian});
        state = std::move(next);
    }
    return series;
}

std::vector<TransitionEvent> detect_transitions(const StrengthSeries& series, int window,
                                                double kappa, double epsilon) {
    if (window < 2) throw std::invalid_argument("detector window must be >= 2");
    if (epsilon <= 0) throw std::invalid_argument("detector epsilon must be positive");

    const auto& rec = series.records;
    const int n = static_cast<int>(rec.size());
    std::vector<double> gap(n);
    for (int i = 0; i < n; ++i) gap[i] = rec[i].s_black - rec[i].s_white;

    std::vector<TransitionEvent> events;
    std::vector<double> devs;
    for (int i = window; i < n; ++i) {
        devs.clear();
        for (int j = std::max(1, i - window); j < i; ++j)
            devs.push_back(std::abs(gap[j] - gap[j - 1]));
        std::sort(devs.begin(), devs.end());
        double median;
        std::size_t m = devs.size();
        median = (m % 2 == 1) ? devs[m / 2] : (devs[m / 2 - 1] + devs[m / 2]) / 2.0;
        double scale = std::max(epsilon, median);
        double delta = gap[i] - gap[i - 1];
        if (std::abs(delta) > kappa * scale)
            events.push_back({rec[i].move_number, delta, std::abs(delta) / scale});
    }
    return events;
}

GameVerdict predict_winner(const StrengthSeries& series) {
    if (series.records.empty()) throw EmptySeriesError();
    const StrengthRecord& last = series.records.back();

    GameVerdict v;
    v.final_s_black = last.s_black;
    v.final_s_white = last.s_white;
    v.predicted = last.s_black > last.s_white ? Color::Black : Color::White;

    SgfGame stub;
    stub.result = series.game.result;
    v.official = result_winner(stub);
    if (!v.official)
        v.agreement = Agreement::Unknown;
    else
        v.agreement = (*v.official == v.predicted) ? Agreement::Exact : Agreement::Disagree;
    return v;
}

BatchSummary batch_evaluate(const std::vector<SgfGame>& games, const ParameterSet& params,
                            const TacticsConfig& tactics) {
    BatchSummary summary;
    for (const SgfGame& game : games) {
        StrengthSeries series = replay(game, params, tactics);
        GameVerdict v = predict_winner(series);
        switch (v.agreement) {
            case Agreement::Exact: ++summary.exact; break;
            case Agreement::Disagree: ++summary.disagree; break;
            case Agreement::Unknown: ++summary.unknown; break;
        }
        summary.games.push_back({v});
    }
    return summary;
}

}  // namespace goising
