#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "goising/report.hpp"

using namespace goising;

int main(int argc, char** argv) {
    CLI::App app{"Replay Go game records and track per-color stone strength"};
    app.require_subcommand(1);

    RunConfig config;
    std::string formats = "csv,json";
    int board_size = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--params", config.params_path, "parameter file (key=value lines)");
        cmd->add_option("--out", config.out_dir, "output directory")->capture_default_str();
        cmd->add_option("--formats", formats, "comma list of csv,json,svg")
            ->capture_default_str();
        cmd->add_option("--window", config.window, "transition detector window")
            ->capture_default_str();
        cmd->add_option("--kappa", config.kappa, "transition detector threshold")
            ->capture_default_str();
        cmd->add_option("--size", board_size, "override the SGF board size");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "analyze one game record");
    analyze->add_option("file", config.inputs, "SGF file")->required()->expected(1);
    add_common(analyze);

    CLI::App* batch = app.add_subcommand("batch", "analyze a set of game records");
    batch->add_option("inputs", config.inputs, "SGF files or directories")
        ->required()
        ->expected(-1);
    add_common(batch);

    CLI11_PARSE(app, argc, argv);

    try {
        config.formats = parse_formats(formats);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    if (board_size != 0) config.board_size_override = board_size;

    if (app.got_subcommand(analyze)) return run_analyze(config, std::cerr);
    return run_batch(config, std::cerr);
}
