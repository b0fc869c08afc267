#include "goising/board.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace goising {

namespace {

constexpr std::int8_t kEmpty = 0;

std::int8_t cell_of(Color c) { return c == Color::Black ? 1 : 2; }

Color color_of_cell(std::int8_t v) {
    assert(v == 1 || v == 2);
    return v == 1 ? Color::Black : Color::White;
}

std::string point_str(Point p) {
    std::ostringstream os;
    os << "(" << p.col << "," << p.row << ")";
    return os.str();
}

void insert_sorted(std::vector<Point>& v, Point p) {
    auto it = std::lower_bound(v.begin(), v.end(), p);
    if (it == v.end() || *it != p) v.insert(it, p);
}

}  // namespace

BoardState::BoardState(int size) : size_(size) {
    if (size < kMinSize || size > kMaxSize)
        throw std::invalid_argument("board size must be in [5,19], got " + std::to_string(size));
    grid_.assign(static_cast<std::size_t>(size) * size, kEmpty);
    point_chain_.assign(static_cast<std::size_t>(size) * size, kNoChain);
}

std::optional<Color> BoardState::at(Point p) const {
    if (!in_bounds(p))
        throw RuleError(RuleViolation::OutOfBounds, "point " + point_str(p) + " off board");
    std::int8_t v = grid_[index(p)];
    if (v == kEmpty) return std::nullopt;
    return color_of_cell(v);
}

const Chain* BoardState::find_chain(ChainId id) const {
    auto it = std::lower_bound(chains_.begin(), chains_.end(), id,
                               [](const Chain& c, ChainId v) { return c.id < v; });
    if (it == chains_.end() || it->id != id) return nullptr;
    return &*it;
}

Chain* BoardState::mutable_chain(ChainId id) {
    return const_cast<Chain*>(find_chain(id));
}

ChainId BoardState::chain_id_at(Point p) const {
    if (!in_bounds(p))
        throw RuleError(RuleViolation::OutOfBounds, "point " + point_str(p) + " off board");
    return point_chain_[index(p)];
}

int BoardState::stones_on_board() const {
    int n = 0;
    for (std::int8_t v : grid_)
        if (v != kEmpty) ++n;
    return n;
}

void BoardState::rebuild_liberties(Chain& c) {
    c.liberty_points.clear();
    for (Point p : c.points) {
        const Point nbrs[4] = {{static_cast<std::int16_t>(p.col - 1), p.row},
                               {static_cast<std::int16_t>(p.col + 1), p.row},
                               {p.col, static_cast<std::int16_t>(p.row - 1)},
                               {p.col, static_cast<std::int16_t>(p.row + 1)}};
        for (Point q : nbrs)
            if (in_bounds(q) && grid_[index(q)] == kEmpty) insert_sorted(c.liberty_points, q);
    }
}

void BoardState::erase_chain(ChainId id) {
    auto it = std::lower_bound(chains_.begin(), chains_.end(), id,
                               [](const Chain& c, ChainId v) { return c.id < v; });
    assert(it != chains_.end() && it->id == id);
    chains_.erase(it);
}

std::string BoardState::to_string() const {
    std::ostringstream os;
    for (int r = 0; r < size_; ++r) {
        for (int c = 0; c < size_; ++c) {
            std::int8_t v = grid_[r * size_ + c];
            os << (v == kEmpty ? '.' : (v == 1 ? 'X' : 'O'));
            if (c + 1 < size_) os << ' ';
        }
        os << '\n';
    }
    return os.str();
}

BoardState apply_move(const BoardState& prev, const Move& move) {
    BoardState st = prev;
    st.move_number_ += 1;
    if (move.is_pass()) return st;  // ko point intentionally kept

    const Point p = *move.point;
    if (!st.in_bounds(p))
        throw RuleError(RuleViolation::OutOfBounds, "play at " + point_str(p) + " off board");
    if (st.grid_[st.index(p)] != kEmpty)
        throw RuleError(RuleViolation::OccupiedPoint, "point " + point_str(p) + " occupied");
    if (st.ko_point_ && *st.ko_point_ == p && st.ko_color_ == move.color)
        throw RuleError(RuleViolation::KoViolation, "ko recapture at " + point_str(p));

    const Color mover = move.color;
    st.grid_[st.index(p)] = cell_of(mover);

    // Adjacent chains, split by side.
    std::vector<ChainId> own_ids, adv_ids;
    const Point nbrs[4] = {{static_cast<std::int16_t>(p.col - 1), p.row},
                           {static_cast<std::int16_t>(p.col + 1), p.row},
                           {p.col, static_cast<std::int16_t>(p.row - 1)},
                           {p.col, static_cast<std::int16_t>(p.row + 1)}};
    for (Point q : nbrs) {
        if (!st.in_bounds(q)) continue;
        ChainId cid = st.point_chain_[st.index(q)];
        if (cid == kNoChain) continue;
        const Chain* c = st.find_chain(cid);
        auto& bucket = (c->color == mover) ? own_ids : adv_ids;
        if (std::find(bucket.begin(), bucket.end(), cid) == bucket.end()) bucket.push_back(cid);
    }
    std::sort(own_ids.begin(), own_ids.end());
    std::sort(adv_ids.begin(), adv_ids.end());

    // Capture adversary chains whose sole liberty was p.
    int captured_stones = 0;
    Point last_captured{};
    for (ChainId cid : adv_ids) {
        Chain* c = st.mutable_chain(cid);
        if (!(c->liberty_points.size() == 1 && c->liberty_points[0] == p)) continue;
        captured_stones += c->size();
        for (Point q : c->points) {
            st.grid_[st.index(q)] = kEmpty;
            st.point_chain_[st.index(q)] = kNoChain;
            last_captured = q;
        }
        st.erase_chain(cid);
    }
    st.captures_[static_cast<int>(mover)] += captured_stones;

    // Merge own adjacent chains with the new stone. The merged chain keeps
    // the id of the largest part (ties to the smallest id); a lone stone
    // gets a fresh id.
    ChainId merged_id;
    Chain merged;
    merged.color = mover;
    merged.points.push_back(p);
    if (own_ids.empty()) {
        merged_id = st.next_chain_id_++;
    } else {
        merged_id = own_ids[0];
        int best_size = st.find_chain(own_ids[0])->size();
        for (ChainId cid : own_ids) {
            const Chain* c = st.find_chain(cid);
            if (c->size() > best_size) {
                best_size = c->size();
                merged_id = cid;
            }
        }
        for (ChainId cid : own_ids) {
            const Chain* c = st.find_chain(cid);
            merged.points.insert(merged.points.end(), c->points.begin(), c->points.end());
        }
        for (ChainId cid : own_ids) st.erase_chain(cid);
    }
    merged.id = merged_id;
    std::sort(merged.points.begin(), merged.points.end());
    for (Point q : merged.points) st.point_chain_[st.index(q)] = merged_id;

    st.rebuild_liberties(merged);
    if (merged.liberty_points.empty())
        throw RuleError(RuleViolation::SuicideMove, "suicide at " + point_str(p));

    auto pos = std::lower_bound(st.chains_.begin(), st.chains_.end(), merged_id,
                                [](const Chain& c, ChainId v) { return c.id < v; });
    st.chains_.insert(pos, std::move(merged));

    // Refresh liberties of every chain touching the changed points.
    std::vector<ChainId> touched;
    auto note = [&](Point q) {
        if (!st.in_bounds(q)) return;
        ChainId cid = st.point_chain_[st.index(q)];
        if (cid != kNoChain && cid != merged_id &&
            std::find(touched.begin(), touched.end(), cid) == touched.end())
            touched.push_back(cid);
    };
    for (Point q : nbrs) note(q);
    if (captured_stones > 0) {
        for (Chain& c : st.chains_) st.rebuild_liberties(c);
    } else {
        std::sort(touched.begin(), touched.end());
        for (ChainId cid : touched) st.rebuild_liberties(*st.mutable_chain(cid));
    }

    // Simple ko: single-stone capture answered by a single new stone whose
    // only liberty is the vacated point.
    const Chain* own = st.find_chain(merged_id);
    if (captured_stones == 1 && own->size() == 1 && own->liberty_count() == 1 &&
        own->liberty_points[0] == last_captured) {
        st.ko_point_ = last_captured;
        st.ko_color_ = opposite(mover);
    } else {
        st.ko_point_.reset();
    }
    return st;
}

const Chain* chain_at(const BoardState& state, Point p) {
    ChainId id = state.chain_id_at(p);
    if (id == kNoChain) return nullptr;
    const Chain* c = state.find_chain(id);
    assert(c && "occupied point without chain");
    return c;
}

int liberties(const BoardState& state, const Chain& chain) {
    const Chain* own = state.find_chain(chain.id);
    if (!own || *own != chain)
        throw StaleChainError("chain " + std::to_string(chain.id) + " is not part of this state");
    return own->liberty_count();
}

BoardState replay_setup(int size, const std::vector<std::pair<Color, Point>>& stones) {
    BoardState st(size);
    for (const auto& [color, p] : stones) {
        if (!st.in_bounds(p))
            throw RuleError(RuleViolation::OutOfBounds, "setup stone " + point_str(p) + " off board");
        if (st.grid_[st.index(p)] != kEmpty)
            throw RuleError(RuleViolation::OccupiedPoint, "setup stone " + point_str(p) + " occupied");
        st.grid_[st.index(p)] = cell_of(color);
    }
    // Flood-fill chains in row-major discovery order.
    for (int r = 0; r < size; ++r) {
        for (int c = 0; c < size; ++c) {
            Point p{static_cast<std::int16_t>(c), static_cast<std::int16_t>(r)};
            if (st.grid_[st.index(p)] == kEmpty || st.point_chain_[st.index(p)] != kNoChain)
                continue;
            Chain chain;
            chain.id = st.next_chain_id_++;
            chain.color = color_of_cell(st.grid_[st.index(p)]);
            std::vector<Point> stack{p};
            st.point_chain_[st.index(p)] = chain.id;
            while (!stack.empty()) {
                Point q = stack.back();
                stack.pop_back();
                chain.points.push_back(q);
                const Point nbrs[4] = {{static_cast<std::int16_t>(q.col - 1), q.row},
                                       {static_cast<std::int16_t>(q.col + 1), q.row},
                                       {q.col, static_cast<std::int16_t>(q.row - 1)},
                                       {q.col, static_cast<std::int16_t>(q.row + 1)}};
                for (Point n : nbrs) {
                    if (!st.in_bounds(n)) continue;
                    if (st.grid_[st.index(n)] == st.grid_[st.index(q)] &&
                        st.point_chain_[st.index(n)] == kNoChain) {
                        st.point_chain_[st.index(n)] = chain.id;
                        stack.push_back(n);
                    }
                }
            }
            std::sort(chain.points.begin(), chain.points.end());
            st.rebuild_liberties(chain);
            st.chains_.push_back(std::move(chain));
        }
    }
    return st;
}

BoardState swap_colors(const BoardState& state) {
    BoardState st = state;
    for (auto& v : st.grid_)
        if (v != kEmpty) v = (v == 1) ? 2 : 1;
    for (auto& c : st.chains_) c.color = opposite(c.color);
    std::swap(st.captures_[0], st.captures_[1]);
    st.ko_color_ = opposite(st.ko_color_);
    return st;
}

Point transform_point(Point p, int symmetry, int size) {
    assert(symmetry >= 0 && symmetry < 8);
    const std::int16_t n = static_cast<std::int16_t>(size - 1);
    std::int16_t c = p.col, r = p.row;
    if (symmetry & 4) std::swap(c, r);
    if (symmetry & 1) c = static_cast<std::int16_t>(n - c);
    if (symmetry & 2) r = static_cast<std::int16_t>(n - r);
    return Point{c, r};
}

Move transform_move(const Move& m, int symmetry, int size) {
    if (m.is_pass()) return m;
    return Move::play(m.color, transform_point(*m.point, symmetry, size));
}

BoardState transform(const BoardState& state, int symmetry) {
    BoardState st = state;
    std::fill(st.grid_.begin(), st.grid_.end(), kEmpty);
    std::fill(st.point_chain_.begin(), st.point_chain_.end(), kNoChain);
    for (auto& c : st.chains_) {
        for (auto& p : c.points) p = transform_point(p, symmetry, state.size());
        std::sort(c.points.begin(), c.points.end());
        for (auto& p : c.liberty_points) p = transform_point(p, symmetry, state.size());
        std::sort(c.liberty_points.begin(), c.liberty_points.end());
        for (Point p : c.points) {
            st.grid_[st.index(p)] = cell_of(c.color);
            st.point_chain_[st.index(p)] = c.id;
        }
    }
    if (st.ko_point_) st.ko_point_ = transform_point(*st.ko_point_, symmetry, state.size());
    return st;
}

}  // namespace goising
