#include "goising/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace goising {

namespace {

double unsign_zero(double v) { return v == 0.0 ? 0.0 : v; }

std::string fmt(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), unsign_zero(v));
    (void)ec;
    return std::string(buf, p);
}

std::string color_name(Color c) { return c == Color::Black ? "Black" : "White"; }

std::string agreement_name(Agreement a) {
    switch (a) {
        case Agreement::Exact: return "Exact";
        case Agreement::Disagree: return "Disagree";
        case Agreement::Unknown: return "Unknown";
    }
    return "Unknown";
}

ordered_json verdict_json(const GameVerdict& v) {
    ordered_json j;
    j["predicted"] = color_name(v.predicted);
    if (v.official)
        j["official"] = color_name(*v.official);
    else
        j["official"] = nullptr;
    j["agreement"] = agreement_name(v.agreement);
    j["final_s_black"] = unsign_zero(v.final_s_black);
    j["final_s_white"] = unsign_zero(v.final_s_white);
    return j;
}

ordered_json params_json(const ParameterSet& p) {
    ordered_json j;
    j["r_eye"] = p.r_eye;
    j["r_net"] = p.r_net;
    j["r_lad"] = p.r_lad;
    j["r_inv"] = p.r_inv;
    j["r_red"] = p.r_red;
    j["r_sl"] = p.r_sl;
    j["r_none"] = p.r_none;
    j["mu"] = p.mu;
    j["d_max"] = p.d_max;
    return j;
}

}  // namespace

std::vector<OutputFormat> parse_formats(const std::string& spec) {
    std::vector<OutputFormat> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "csv")
            out.push_back(OutputFormat::Csv);
        else if (item == "json")
            out.push_back(OutputFormat::Json);
        else if (item == "svg")
            out.push_back(OutputFormat::Svg);
        else
            throw std::invalid_argument("unknown output format '" + item + "'");
    }
    if (out.empty()) throw std::invalid_argument("format list is empty");
    return out;
}

AnalysisResult analyze_game(const SgfGame& game, const ParameterSet& params, int window,
                            double kappa, const TacticsConfig& tactics) {
    AnalysisResult r;
    r.series = replay(game, params, tactics);
    r.transitions = detect_transitions(r.series, window, kappa);
    r.verdict = predict_winner(r.series);
    return r;
}

std::string render_series_csv(const AnalysisResult& r) {
    std::set<int> transition_moves;
    for (const auto& t : r.transitions) transition_moves.insert(t.move_number);

    std::ostringstream os;
    os << "move_number,color,coord,S_black,S_white,H,transition\n";
    for (const StrengthRecord& rec : r.series.records) {
        os << rec.move_number << ',' << color_char(rec.color) << ',' << sgf_coord(rec.point)
           << ',' << fmt(rec.s_black) << ',' << fmt(rec.s_white) << ',' << fmt(rec.hamiltonian)
           << ',' << (transition_moves.count(rec.move_number) ? 1 : 0) << '\n';
    }
    return os.str();
}

std::string render_series_json(const AnalysisResult& r) {
    std::set<int> transition_moves;
    for (const auto& t : r.transitions) transition_moves.insert(t.move_number);

    ordered_json j;
    j["game"] = {{"board_size", r.series.game.board_size},
                 {"black", r.series.game.player_black},
                 {"white", r.series.game.player_white}};
    if (r.series.game.result)
        j["game"]["result"] = *r.series.game.result;
    else
        j["game"]["result"] = nullptr;
    if (r.series.game.komi)
        j["game"]["komi"] = *r.series.game.komi;
    else
        j["game"]["komi"] = nullptr;
    j["params"] = params_json(r.series.params);
    j["verdict"] = verdict_json(r.verdict);
    j["transitions"] = ordered_json::array();
    for (const auto& t : r.transitions)
        j["transitions"].push_back(
            {{"move", t.move_number}, {"delta", unsign_zero(t.delta)}, {"score", t.score}});
    j["warnings"] = r.series.warnings;
    j["series"] = ordered_json::array();
    for (const StrengthRecord& rec : r.series.records) {
        j["series"].push_back({{"move", rec.move_number},
                               {"color", std::string(1, color_char(rec.color))},
                               {"coord", sgf_coord(rec.point)},
                               {"s_black", unsign_zero(rec.s_black)},
                               {"s_white", unsign_zero(rec.s_white)},
                               {"H", unsign_zero(rec.hamiltonian)},
                               {"transition", transition_moves.count(rec.move_number) ? 1 : 0}});
    }
    return j.dump(2) + "\n";
}

std::string render_series_svg(const AnalysisResult& r) {
    const int width = 960, height = 480;
    const int ml = 70, mr = 20, mt = 30, mb = 50;
    const double plot_w = width - ml - mr, plot_h = height - mt - mb;

    const auto& rec = r.series.records;
    double lo = 0.0, hi = 1.0;
    if (!rec.empty()) {
        lo = hi = rec[0].s_black;
        for (const auto& x : rec) {
            lo = std::min({lo, x.s_black, x.s_white});
            hi = std::max({hi, x.s_black, x.s_white});
        }
        if (hi == lo) hi = lo + 1.0;
    }
    const int n_moves = rec.empty() ? 1 : rec.back().move_number;

    auto px = [&](double move) { return ml + plot_w * (move - 1) / std::max(1, n_moves - 1); };
    auto py = [&](double v) { return mt + plot_h * (1.0 - (v - lo) / (hi - lo)); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"18\" text-anchor=\"middle\" font-size=\"14\">"
       << "stone strength by move (black=blue, white=red)</text>\n";

    // Axes.
    os << "<line x1=\"" << ml << "\" y1=\"" << mt + plot_h << "\" x2=\"" << ml + plot_w
       << "\" y2=\"" << mt + plot_h << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
       << mt + plot_h << "\" stroke=\"black\"/>\n";

    // X ticks every 50 moves.
    for (int m = 0; m <= n_moves; m += 50) {
        double x = px(std::max(1, m));
        os << "<line x1=\"" << fmt(x) << "\" y1=\"" << mt + plot_h << "\" x2=\"" << fmt(x)
           << "\" y2=\"" << mt + plot_h + 5 << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << fmt(x) << "\" y=\"" << mt + plot_h + 20
           << "\" text-anchor=\"middle\" font-size=\"11\">" << m << "</text>\n";
    }
    // Y ticks: 5 evenly spaced values.
    for (int i = 0; i <= 4; ++i) {
        double v = lo + (hi - lo) * i / 4.0;
        os << "<line x1=\"" << ml - 5 << "\" y1=\"" << fmt(py(v)) << "\" x2=\"" << ml
           << "\" y2=\"" << fmt(py(v)) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << ml - 8 << "\" y=\"" << fmt(py(v) + 4)
           << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(std::round(v * 10) / 10)
           << "</text>\n";
    }

    auto polyline = [&](auto value_of, const char* color) {
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& x : rec) os << fmt(px(x.move_number)) << "," << fmt(py(value_of(x))) << " ";
        os << "\"/>\n";
    };
    if (!rec.empty()) {
        polyline([](const StrengthRecord& x) { return x.s_black; }, "blue");
        polyline([](const StrengthRecord& x) { return x.s_white; }, "red");
    }
    for (const auto& t : r.transitions) {
        os << "<line x1=\"" << fmt(px(t.move_number)) << "\" y1=\"" << mt << "\" x2=\""
           << fmt(px(t.move_number)) << "\" y2=\"" << mt + plot_h
           << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_verdict_json(const BatchGameOutcome& g) {
    ordered_json j;
    j["path"] = g.path;
    j["status"] = g.ok ? "ok" : "error";
    if (g.ok)
        j["verdict"] = verdict_json(*g.verdict);
    else
        j["error"] = g.error;
    return j.dump(2) + "\n";
}

std::string render_batch_json(const std::vector<BatchGameOutcome>& games) {
    int exact = 0, disagree = 0, unknown = 0, failed = 0;
    ordered_json arr = ordered_json::array();
    for (const auto& g : games) {
        ordered_json j;
        j["path"] = g.path;
        j["status"] = g.ok ? "ok" : "error";
        if (g.ok) {
            j["verdict"] = verdict_json(*g.verdict);
            switch (g.verdict->agreement) {
                case Agreement::Exact: ++exact; break;
                case Agreement::Disagree: ++disagree; break;
                case Agreement::Unknown: ++unknown; break;
            }
        } else {
            j["error"] = g.error;
            ++failed;
        }
        arr.push_back(j);
    }
    ordered_json j;
    j["games"] = arr;
    j["counts"] = {{"exact", exact}, {"disagree", disagree}, {"unknown", unknown},
                   {"failed", failed}};
    if (exact + disagree > 0)
        j["agreement_rate"] = static_cast<double>(exact) / (exact + disagree);
    else
        j["agreement_rate"] = nullptr;
    return j.dump(2) + "\n";
}

void atomic_write(const std::string& path, const std::string& content) {
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    fs::rename(tmp, target);
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ParameterSet load_params(const RunConfig& config) {
    if (config.params_path.empty()) return ParameterSet{};
    return ParameterSet::from_file(config.params_path);
}

SgfGame load_game(const RunConfig& config, const std::string& path) {
    SgfGame game = parse_sgf(read_file(path));
    if (config.board_size_override) game.board_size = *config.board_size_override;
    return game;
}

std::string stem_of(const std::string& path) { return fs::path(path).stem().string(); }

bool has_format(const RunConfig& config, OutputFormat f) {
    return std::find(config.formats.begin(), config.formats.end(), f) != config.formats.end();
}

void write_artifacts(const RunConfig& config, const std::string& input,
                     const AnalysisResult& result) {
    fs::create_directories(config.out_dir);
    fs::path base = fs::path(config.out_dir) / stem_of(input);
    if (has_format(config, OutputFormat::Csv))
        atomic_write(base.string() + ".csv", render_series_csv(result));
    if (has_format(config, OutputFormat::Json))
        atomic_write(base.string() + ".json", render_series_json(result));
    if (has_format(config, OutputFormat::Svg))
        atomic_write(base.string() + ".svg", render_series_svg(result));
}

std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
    std::vector<std::string> files;
    for (const std::string& in : inputs) {
        if (fs::is_directory(in)) {
            for (const auto& entry : fs::directory_iterator(in))
                if (entry.is_regular_file() && entry.path().extension() == ".sgf")
                    files.push_back(entry.path().string());
        } else {
            files.push_back(in);
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

}  // namespace

int run_analyze(const RunConfig& config, std::ostream& err) {
    if (config.inputs.size() != 1) {
        err << "analyze expects exactly one input file\n";
        return 1;
    }
    const std::string& input = config.inputs[0];

    ParameterSet params;
    SgfGame game;
    try {
        params = load_params(config);
        game = load_game(config, input);
    } catch (const std::exception& e) {
        err << input << ": " << e.what() << "\n";
        return 1;
    }
    try {
        AnalysisResult result = analyze_game(game, params, config.window, config.kappa);
        write_artifacts(config, input, result);
    } catch (const ReplayError& e) {
        err << input << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << input << ": " << e.what() << "\n";
        return 2;
    }
    return 0;
}

int run_batch(const RunConfig& config, std::ostream& err) {
    ParameterSet params;
    std::vector<std::string> files;
    try {
        params = load_params(config);
        files = expand_inputs(config.inputs);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    if (files.empty()) {
        err << "no .sgf inputs found\n";
        return 1;
    }

    std::vector<BatchGameOutcome> outcomes;
    bool any_ok = false;
    bool any_replay_error = false;
    fs::create_directories(config.out_dir);
    for (const std::string& path : files) {
        BatchGameOutcome outcome;
        outcome.path = path;
        try {
            SgfGame game = load_game(config, path);
            AnalysisResult result = analyze_game(game, params, config.window, config.kappa);
            outcome.ok = true;
            outcome.verdict = result.verdict;
            any_ok = true;
        } catch (const ReplayError& e) {
            outcome.error = e.what();
            any_replay_error = true;
            err << path << ": " << e.what() << "\n";
        } catch (const std::exception& e) {
            outcome.error = e.what();
            err << path << ": " << e.what() << "\n";
        }
        fs::path verdict_path = fs::path(config.out_dir) / (stem_of(path) + ".verdict.json");
        atomic_write(verdict_path.string(), render_verdict_json(outcome));
        outcomes.push_back(std::move(outcome));
    }
    atomic_write((fs::path(config.out_dir) / "batch_summary.json").string(),
                 render_batch_json(outcomes));
    if (any_ok) return 0;
    return any_replay_error ? 2 : 1;
}

}  // namespace goising
