#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "goising/replay.hpp"

namespace goising {

enum class OutputFormat { Csv, Json, Svg };

/// Parses "csv,json,svg" (any non-empty subset, any order).
std::vector<OutputFormat> parse_formats(const std::string& spec);

struct RunConfig {
    std::vector<std::string> inputs;  // files, or directories for batch
    std::string params_path;          // empty = built-in defaults
    std::string out_dir = ".";
    std::vector<OutputFormat> formats = {OutputFormat::Csv, OutputFormat::Json};
    int window = 20;
    double kappa = 6.0;
    std::optional<int> board_size_override;
};

struct AnalysisResult {
    StrengthSeries series;
    std::vector<TransitionEvent> transitions;
    GameVerdict verdict;
};

AnalysisResult analyze_game(const SgfGame& game, const ParameterSet& params, int window,
                            double kappa, const TacticsConfig& tactics = {});

/// Columns exactly: move_number,color,coord,S_black,S_white,H,transition.
std::string render_series_csv(const AnalysisResult& r);
std::string render_series_json(const AnalysisResult& r);
/// Static line chart, S_black blue and S_white red, x ticks every 50 moves.
std::string render_series_svg(const AnalysisResult& r);

struct BatchGameOutcome {
    std::string path;
    bool ok = false;
    std::optional<GameVerdict> verdict;
    std::string error;  // set when !ok
};

std::string render_verdict_json(const BatchGameOutcome& g);
std::string render_batch_json(const std::vector<BatchGameOutcome>& games);

/// Writes via a temp file + rename in the target directory.
void atomic_write(const std::string& path, const std::string& content);

/// Exit codes: 0 success, 1 input error, 2 replay error.
int run_analyze(const RunConfig& config, std::ostream& err);
int run_batch(const RunConfig& config, std::ostream& err);

}  // namespace goising
