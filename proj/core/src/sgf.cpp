#include "goising/sgf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace goising {

namespace {

struct Parser {
    std::string_view in;
    std::size_t pos = 0;

    SgfGame game{};
    bool saw_size = false;
    bool saw_move = false;
    std::vector<std::pair<Color, Point>> setup_black{}, setup_white{};

    [[noreturn]] void fail(SgfErrorKind kind, std::size_t at, const std::string& msg) {
        throw SgfError(kind, std::min(at, in.size()), msg);
    }

    bool eof() const { return pos >= in.size(); }
    char peek() const { return in[pos]; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
    }

    // One bracketed value, unescaping "\x" to x. pos sits on '['.
    std::string read_value() {
        ++pos;  // '['
        std::string out;
        while (true) {
            if (eof()) fail(SgfErrorKind::UnbalancedParens, in.size(), "unterminated property value");
            char c = in[pos++];
            if (c == '\\') {
                if (eof()) fail(SgfErrorKind::UnbalancedParens, in.size(), "dangling escape");
                out.push_back(in[pos++]);
            } else if (c == ']') {
                return out;
            } else {
                out.push_back(c);
            }
        }
    }

    // Skips a subtree starting at '(' (value-escape aware).
    void skip_subtree() {
        std::size_t open_at = pos;
        int depth = 0;
        while (!eof()) {
            char c = in[pos];
            if (c == '[') {
                read_value();
                continue;
            }
            ++pos;
            if (c == '(') ++depth;
            if (c == ')') {
                if (--depth == 0) return;
            }
        }
        fail(SgfErrorKind::UnbalancedParens, open_at, "unclosed variation");
    }

    // FF[3] long identifiers carry lowercase filler ("AddBlack" == "AB").
    std::string read_ident() {
        std::string id;
        while (!eof() && std::isalpha(static_cast<unsigned char>(peek()))) {
            char c = in[pos++];
            if (std::isupper(static_cast<unsigned char>(c))) id.push_back(c);
        }
        return id;
    }

    Point decode_coord(const std::string& v, std::size_t at) {
        if (v.size() != 2) fail(SgfErrorKind::BadCoordinate, at, "coordinate must be two letters");
        int col = v[0] - 'a';
        int row = v[1] - 'a';
        if (col < 0 || row < 0 || col >= game.board_size || row >= game.board_size)
            fail(SgfErrorKind::BadCoordinate, at, "coordinate '" + v + "' outside board");
        return Point{static_cast<std::int16_t>(col), static_cast<std::int16_t>(row)};
    }

    void handle_move(Color color, const std::string& v, std::size_t at) {
        saw_move = true;
        if (v.empty() || (v == "tt" && game.board_size == 19)) {
            game.moves.push_back(Move::pass(color));
            return;
        }
        game.moves.push_back(Move::play(color, decode_coord(v, at)));
    }

    void handle_setup(Color color, const std::vector<std::string>& values, std::size_t at) {
        if (saw_move)
            fail(SgfErrorKind::BadProperty, at, "setup stones after the first move are unsupported");
        auto& bucket = color == Color::Black ? setup_black : setup_white;
        for (const auto& v : values) bucket.emplace_back(color, decode_coord(v, at));
    }

    void handle_property(const std::string& id, const std::vector<std::string>& values,
                         std::size_t at) {
        const std::string& v0 = values.front();
        if (id == "B") {
            handle_move(Color::Black, v0, at);
        } else if (id == "W") {
            handle_move(Color::White, v0, at);
        } else if (id == "AB") {
            handle_setup(Color::Black, values, at);
        } else if (id == "AW") {
            handle_setup(Color::White, values, at);
        } else if (id == "SZ") {
            int sz = 0;
            auto [p, ec] = std::from_chars(v0.data(), v0.data() + v0.size(), sz);
            if (ec != std::errc() || p != v0.data() + v0.size())
                fail(SgfErrorKind::BadProperty, at, "SZ value '" + v0 + "' is not an integer");
            if (sz < BoardState::kMinSize || sz > BoardState::kMaxSize)
                fail(SgfErrorKind::BadProperty, at, "SZ " + v0 + " outside supported range 5..19");
            if (saw_move || !setup_black.empty() || !setup_white.empty())
                fail(SgfErrorKind::BadProperty, at, "SZ after stones");
            game.board_size = sz;
            saw_size = true;
        } else if (id == "KM") {
            double km = 0.0;
            auto [p, ec] = std::from_chars(v0.data(), v0.data() + v0.size(), km);
            if (ec != std::errc() || p != v0.data() + v0.size())
                fail(SgfErrorKind::BadProperty, at, "KM value '" + v0 + "' is not a number");
            game.komi = km;
        } else if (id == "RE") {
            game.result = v0;
        } else if (id == "PB") {
            game.player_black = v0;
        } else if (id == "PW") {
            game.player_white = v0;
        } else if (id == "GM") {
            if (v0 != "1")
                fail(SgfErrorKind::UnsupportedGame, at, "GM[" + v0 + "] is not Go");
        } else if (id == "FF") {
            if (v0 != "3" && v0 != "4")
                fail(SgfErrorKind::UnsupportedGame, at, "FF[" + v0 + "] unsupported");
        }
        // Everything else is skipped losslessly.
    }

    void run() {
        skip_ws();
        if (eof() || peek() != '(')
            fail(SgfErrorKind::UnbalancedParens, pos, "expected '(' at start of game tree");
        std::size_t open_at = pos;
        ++pos;

        bool in_first_branch_chain = true;
        while (true) {
            skip_ws();
            if (eof()) fail(SgfErrorKind::UnbalancedParens, open_at, "unclosed game tree");
            char c = peek();
            if (c == ';') {
                ++pos;
                parse_node();
            } else if (c == '(') {
                if (in_first_branch_chain) {
                    // Descend into the first variation; siblings are skipped
                    // when we come back up, so just recurse in place.
                    ++pos;
                    open_at = pos - 1;
                } else {
                    skip_subtree();
                }
            } else if (c == ')') {
                ++pos;
                // Remaining siblings of the branch we just finished.
                skip_ws();
                while (!eof() && peek() == '(') {
                    skip_subtree();
                    skip_ws();
                }
                if (!eof() && peek() == ')') {
                    in_first_branch_chain = false;
                    continue;
                }
                break;
            } else {
                fail(SgfErrorKind::BadProperty, pos,
                     std::string("unexpected character '") + c + "'");
            }
        }

        game.setup.clear();
        std::sort(setup_black.begin(), setup_black.end(),
                  [](auto& a, auto& b) { return a.second < b.second; });
        std::sort(setup_white.begin(), setup_white.end(),
                  [](auto& a, auto& b) { return a.second < b.second; });
        game.setup.insert(game.setup.end(), setup_black.begin(), setup_black.end());
        game.setup.insert(game.setup.end(), setup_white.begin(), setup_white.end());
    }

    void parse_node() {
        while (true) {
            skip_ws();
            if (eof()) return;
            if (!std::isalpha(static_cast<unsigned char>(peek()))) return;
            std::size_t at = pos;
            std::string id = read_ident();
            if (id.empty()) fail(SgfErrorKind::BadProperty, at, "empty property identifier");
            skip_ws();
            if (eof() || peek() != '[')
                fail(SgfErrorKind::BadProperty, pos, "property " + id + " has no value");
            std::vector<std::string> values;
            while (!eof() && peek() == '[') {
                values.push_back(read_value());
                skip_ws();
            }
            handle_property(id, values, at);
        }
    }
};

std::string escape_text(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == ']' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string format_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

}  // namespace

SgfGame parse_sgf(std::string_view input) {
    Parser parser{input};
    parser.run();
    return std::move(parser.game);
}

std::string sgf_coord(const std::optional<Point>& p) {
    if (!p) return "pass";
    std::string s;
    s.push_back(static_cast<char>('a' + p->col));
    s.push_back(static_cast<char>('a' + p->row));
    return s;
}

std::string serialize_sgf(const SgfGame& game) {
    std::ostringstream os;
    os << "(;FF[4]GM[1]SZ[" << game.board_size << "]";
    if (game.komi) os << "KM[" << format_double(*game.komi) << "]";
    if (game.result) os << "RE[" << escape_text(*game.result) << "]";
    if (!game.player_black.empty()) os << "PB[" << escape_text(game.player_black) << "]";
    if (!game.player_white.empty()) os << "PW[" << escape_text(game.player_white) << "]";
    for (Color color : {Color::Black, Color::White}) {
        bool any = false;
        for (const auto& [c, p] : game.setup) {
            if (c != color) continue;
            if (!any) os << (color == Color::Black ? "AB" : "AW");
            any = true;
            os << "[" << sgf_coord(p) << "]";
        }
    }
    for (const Move& m : game.moves) {
        os << ";" << color_char(m.color) << "[";
        if (!m.is_pass()) os << sgf_coord(m.point);
        os << "]";
    }
    os << ")";
    return os.str();
}

std::optional<Color> result_winner(const SgfGame& game) {
    if (!game.result) return std::nullopt;
    const std::string& r = *game.result;
    if (r.rfind("B+", 0) == 0) return Color::Black;
    if (r.rfind("W+", 0) == 0) return Color::White;
    return std::nullopt;
}

}  // namespace goising
