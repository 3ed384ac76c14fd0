#include "catam/atam2ca.hpp"

#include <algorithm>
#include <deque>

namespace catam {

namespace {

std::string pending_name(const TileSystem& ts, const PendingAction& a) {
    switch (a.kind) {
        case PendingAction::Kind::Move: return "move";
        case PendingAction::Kind::CollapseBridge: return "collapse";
        case PendingAction::Kind::PlaceTile: return "place:" + ts.type(a.tile).name;
        case PendingAction::Kind::PlaceBridge: return "place_bridge:" + ts.type(a.tile).name;
    }
    return "?";
}

const char* dir_token_name(Direction d) {
    switch (d) {
        case Direction::North: return "up";
        case Direction::West: return "left";
        case Direction::South: return "down";
        case Direction::East: return "right";
    }
    return "?";
}

// Enumeration order of the four token directions in state listings.
const std::array<Direction, 4> kTokenDirs = {Direction::North, Direction::West, Direction::South,
                                             Direction::East};

std::vector<PendingAction> pending_universe(const TileSystem& ts) {
    std::vector<PendingAction> out;
    out.push_back({PendingAction::Kind::Move, -1});
    out.push_back({PendingAction::Kind::CollapseBridge, -1});
    for (TileId t = 0; t < static_cast<TileId>(ts.type_count()); ++t)
        out.push_back({PendingAction::Kind::PlaceTile, t});
    for (TileId t = 0; t < static_cast<TileId>(ts.type_count()); ++t)
        out.push_back({PendingAction::Kind::PlaceBridge, t});
    return out;
}

}  // namespace

std::string TasStateCodec::state_name(const TileSystem& ts, const CompiledState& s) {
    switch (s.kind) {
        case CompiledState::Kind::Quiescent: return "q";
        case CompiledState::Kind::Tile: return "tile:" + ts.type(s.tile).name;
        case CompiledState::Kind::BridgeTile: return "bridge:" + ts.type(s.tile).name;
        case CompiledState::Kind::Token:
            return std::string("token:") + dir_token_name(s.dir) + ":" + pending_name(ts, s.pending);
        case CompiledState::Kind::BridgeToken:
            return "bridge_token:" + ts.type(s.tile).name + ":" + dir_token_name(s.dir) + ":" +
                   pending_name(ts, s.pending);
    }
    return "?";
}

namespace {

// Zero the fields a kind does not use so structural lookup is canonical.
CompiledState normalized(CompiledState s) {
    switch (s.kind) {
        case CompiledState::Kind::Quiescent:
            s.tile = -1;
            s.dir = Direction::West;
            s.pending = {};
            break;
        case CompiledState::Kind::Tile:
        case CompiledState::Kind::BridgeTile:
            s.dir = Direction::West;
            s.pending = {};
            break;
        case CompiledState::Kind::Token: s.tile = -1; break;
        case CompiledState::Kind::BridgeToken: break;
    }
    if (s.pending.kind == PendingAction::Kind::Move ||
        s.pending.kind == PendingAction::Kind::CollapseBridge)
        s.pending.tile = -1;
    return s;
}

}  // namespace

TasStateCodec::TasStateCodec(const TileSystem& ts) {
    auto add = [&](const CompiledState& s) {
        StateId id = static_cast<StateId>(states_.size());
        states_.push_back(s);
        names_.push_back(state_name(ts, s));
        index_[key(s)] = id;
    };
    add(CompiledState{});  // quiescent
    const auto n = static_cast<TileId>(ts.type_count());
    for (TileId t = 0; t < n; ++t) add({CompiledState::Kind::Tile, t, Direction::West, {}});
    for (TileId t = 0; t < n; ++t) add({CompiledState::Kind::BridgeTile, t, Direction::West, {}});
    auto pendings = pending_universe(ts);
    for (Direction d : kTokenDirs)
        for (const auto& a : pendings) add({CompiledState::Kind::Token, -1, d, a});
    for (TileId t = 0; t < n; ++t)
        for (Direction d : kTokenDirs)
            for (const auto& a : pendings) add({CompiledState::Kind::BridgeToken, t, d, a});
}

StateId TasStateCodec::encode(const CompiledState& s) const {
    auto it = index_.find(key(normalized(s)));
    if (it == index_.end()) throw input_error("state not in compiled alphabet");
    return it->second;
}

namespace {

// Pending resolution: what a token cell leaves behind.
CompiledState resolve_pending(const CompiledState& s) {
    if (s.kind == CompiledState::Kind::Token) {
        switch (s.pending.kind) {
            case PendingAction::Kind::PlaceTile:
                return {CompiledState::Kind::Tile, s.pending.tile, Direction::West, {}};
            case PendingAction::Kind::PlaceBridge:
                return {CompiledState::Kind::BridgeTile, s.pending.tile, Direction::West, {}};
            default: return CompiledState{};  // quiescent
        }
    }
    if (s.kind == CompiledState::Kind::BridgeToken) {
        if (s.pending.kind == PendingAction::Kind::CollapseBridge)
            return {CompiledState::Kind::Tile, s.tile, Direction::West, {}};
        return {CompiledState::Kind::BridgeTile, s.tile, Direction::West, {}};
    }
    return s;
}

// Value a cell will hold next step, as far as neighbors can tell.
CompiledState effective(const CompiledState& s) { return s.is_token() ? resolve_pending(s) : s; }

bool traversable(const CompiledState& s) {
    return s.kind == CompiledState::Kind::Quiescent || s.kind == CompiledState::Kind::BridgeTile;
}

std::optional<TileId> tile_of(const CompiledState& s) {
    switch (s.kind) {
        case CompiledState::Kind::Tile:
        case CompiledState::Kind::BridgeTile:
        case CompiledState::Kind::BridgeToken: return s.tile;
        default: return std::nullopt;
    }
}

std::size_t window_index(Point off) {
    // moore9_spec order: lexicographic (dx major), center at index 4.
    return static_cast<std::size_t>((off.x + 1) * 3 + (off.y + 1));
}

CompiledState effective_at(const std::array<CompiledState, 9>& w, Point off) {
    return effective(w[window_index(off)]);
}

// Left-hand wall following: keep the assembly on the left; prefer turning
// left, then straight, then right, then back. Returns nullopt when every
// side is blocked (the token is being sealed in).
std::optional<Direction> wall_follow(const std::array<CompiledState, 9>& w, Direction heading) {
    const std::array<Direction, 4> candidates = {turn_left(heading), heading, turn_right(heading),
                                                 opposite(heading)};
    for (Direction d : candidates)
        if (traversable(effective_at(w, unit_vector(d)))) return d;
    return std::nullopt;
}

std::array<bool, 8> quiescentish_ring(const std::array<CompiledState, 9>& w) {
    std::array<bool, 8> ring{};
    for (std::size_t i = 0; i < 8; ++i) {
        CompiledState e = effective_at(w, moore_offsets()[i]);
        // Bridge cells count as quiescent for the split test.
        ring[i] = traversable(e);
    }
    return ring;
}

}  // namespace

std::set<TileId> bindable_types(const std::array<CompiledState, 9>& window, const TileSystem& ts) {
    std::set<TileId> out;
    for (TileId cand = 0; cand < static_cast<TileId>(ts.type_count()); ++cand) {
        int total = 0;
        for (Direction d : kDirections) {
            CompiledState e = effective_at(window, unit_vector(d));
            auto t = tile_of(e);
            if (!t) continue;
            const Glue& mine = ts.type(cand).glue(d);
            if (mine.binds(ts.type(*t).glue(opposite(d)))) total += mine.strength;
        }
        if (total >= ts.temperature()) out.insert(cand);
    }
    return out;
}

std::vector<CompiledState> token_rule(const std::array<CompiledState, 9>& window,
                                      const TileSystem& ts, RuleMutation mutation) {
    int tokens_visible = 0;
    for (const auto& s : window)
        if (s.is_token()) ++tokens_visible;
    if (tokens_visible > 1) throw malformed_window_error("more than one token in a window");

    const CompiledState& center = window[4];
    if (center.is_token()) return {resolve_pending(center)};
    if (center.kind == CompiledState::Kind::Tile) return {center};

    // A token pointing at the center makes this cell the next token.
    std::optional<const CompiledState*> pointer;
    Direction heading = Direction::West;
    for (Direction d : kDirections) {
        const CompiledState& s = window[window_index(unit_vector(d))];
        if (s.is_token() && unit_vector(s.dir) == -unit_vector(d)) {
            pointer = &s;
            heading = s.dir;
        }
    }

    if (center.kind == CompiledState::Kind::BridgeTile) {
        if (!pointer) return {center};
        auto next = wall_follow(window, heading);
        Direction dir = next.value_or(heading);
        bool collapse = (*pointer)->pending.kind == PendingAction::Kind::CollapseBridge ||
                        (next && *next == opposite(heading));
        PendingAction act{collapse ? PendingAction::Kind::CollapseBridge
                                   : PendingAction::Kind::Move,
                          -1};
        return {CompiledState{CompiledState::Kind::BridgeToken, center.tile, dir, act}};
    }

    // Quiescent center.
    if (!pointer) return {center};
    auto next = wall_follow(window, heading);
    Direction dir = next.value_or(heading);

    std::set<TileId> bindable;
    if (mutation == RuleMutation::IgnoreBinding) {
        for (TileId t = 0; t < static_cast<TileId>(ts.type_count()); ++t) bindable.insert(t);
    } else {
        bindable = bindable_types(window, ts);
    }
    bool splits = would_split_quiescent(quiescentish_ring(window));

    std::vector<CompiledState> out;
    out.push_back({CompiledState::Kind::Token, -1, dir, {PendingAction::Kind::Move, -1}});
    for (TileId t : bindable) {
        PendingAction::Kind kind;
        if (!splits) {
            kind = PendingAction::Kind::PlaceTile;
        } else {
            if (mutation == RuleMutation::NoBridges) continue;
            kind = mutation == RuleMutation::SplitAsTile ? PendingAction::Kind::PlaceTile
                                                         : PendingAction::Kind::PlaceBridge;
        }
        out.push_back({CompiledState::Kind::Token, -1, dir, {kind, t}});
    }
    return out;
}

namespace {

class CompiledTasRule : public LocalRule {
  public:
    CompiledTasRule(TileSystem ts, std::shared_ptr<const TasStateCodec> codec,
                    RuleMutation mutation)
        : ts_(std::move(ts)), codec_(std::move(codec)), mutation_(mutation) {}

    std::vector<StateId> successors(const std::vector<StateId>& window) const override {
        if (window.size() != 9) throw input_error("compiled rule expects a 9-cell window");
        std::array<CompiledState, 9> w;
        for (std::size_t i = 0; i < 9; ++i) w[i] = codec_->decode(window[i]);
        auto states = token_rule(w, ts_, mutation_);
        std::vector<StateId> out;
        out.reserve(states.size());
        for (const auto& s : states) out.push_back(codec_->encode(s));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    std::string kind() const override { return "compiled_from_tas"; }
    const TileSystem& source() const { return ts_; }
    RuleMutation mutation() const { return mutation_; }

  private:
    TileSystem ts_;
    std::shared_ptr<const TasStateCodec> codec_;
    RuleMutation mutation_;
};

}  // namespace

CompiledCA compile_tas(const TileSystem& ts, RuleMutation mutation) {
    auto codec = std::make_shared<TasStateCodec>(ts);
    auto rule = std::make_shared<CompiledTasRule>(ts, codec, mutation);
    CADefinition ca(codec->names(), "q", moore9_spec(), rule);
    return CompiledCA{std::move(ca), ts, codec, mutation};
}

const TileSystem* compiled_rule_source(const LocalRule& rule) {
    auto* r = dynamic_cast<const CompiledTasRule*>(&rule);
    return r ? &r->source() : nullptr;
}

RuleMutation compiled_rule_mutation(const LocalRule& rule) {
    auto* r = dynamic_cast<const CompiledTasRule*>(&rule);
    return r ? r->mutation() : RuleMutation::None;
}

CompiledCA compiled_bundle(const CADefinition& ca) {
    const TileSystem* ts = compiled_rule_source(ca.rule());
    if (!ts) throw input_error("rule is not compiled_from_tas");
    return compile_tas(*ts, compiled_rule_mutation(ca.rule()));
}

Configuration build_initial_config(const CompiledCA& cca) {
    const TileSystem& ts = cca.source;
    const Assembly& seed = ts.seed();
    if (seed.empty()) throw input_error("seed assembly is empty");

    std::set<Point> tiles;
    for (const auto& [p, _] : seed.placements()) tiles.insert(p);
    auto bb = *seed.bounding_box();

    // Empty cells of the box one past the bounding box; components not on
    // the box border are enclosed by seed tiles.
    std::set<Point> empties;
    for (std::int64_t x = bb[0] - 1; x <= bb[2] + 1; ++x)
        for (std::int64_t y = bb[1] - 1; y <= bb[3] + 1; ++y)
            if (!tiles.count({x, y})) empties.insert({x, y});
    auto on_border = [&](Point p) {
        return p.x == bb[0] - 1 || p.x == bb[2] + 1 || p.y == bb[1] - 1 || p.y == bb[3] + 1;
    };
    std::vector<std::vector<Point>> comps = connected_components(empties, 4);

    std::set<Point> reachable;  // outer region plus everything bridged so far
    std::vector<std::vector<Point>> enclosed;
    for (auto& comp : comps) {
        bool outer = std::any_of(comp.begin(), comp.end(), on_border);
        if (outer)
            reachable.insert(comp.begin(), comp.end());
        else
            enclosed.push_back(comp);
    }

    std::set<Point> bridge_cells;
    for (const auto& comp : enclosed) {
        // Shortest path of seed-tile cells from this region to the
        // reachable region; deterministic by sorted BFS expansion.
        std::map<Point, Point> parent;
        std::deque<Point> queue;
        std::set<Point> compset(comp.begin(), comp.end());
        for (Point p : comp)
            for (Direction d : kDirections) {
                Point q = p + unit_vector(d);
                if (tiles.count(q) && !parent.count(q)) {
                    parent[q] = q;  // path root
                    queue.push_back(q);
                }
            }
        std::optional<Point> goal;
        while (!queue.empty() && !goal) {
            // sorted layer expansion keeps the choice deterministic
            std::vector<Point> layer(queue.begin(), queue.end());
            std::sort(layer.begin(), layer.end());
            queue.clear();
            for (Point p : layer) {
                bool exits = false;
                for (Direction d : kDirections) {
                    Point q = p + unit_vector(d);
                    if (reachable.count(q) || bridge_cells.count(q)) exits = true;
                }
                if (exits) {
                    goal = p;
                    break;
                }
            }
            if (goal) break;
            for (Point p : layer)
                for (Direction d : kDirections) {
                    Point q = p + unit_vector(d);
                    if (tiles.count(q) && !parent.count(q)) {
                        parent[q] = p;
                        queue.push_back(q);
                    }
                }
        }
        if (!goal) throw input_error("enclosed region cannot be bridged through seed tiles");
        Point cur = *goal;
        while (true) {
            bridge_cells.insert(cur);
            if (parent[cur] == cur) break;
            cur = parent[cur];
        }
        reachable.insert(comp.begin(), comp.end());
        reachable.insert(bridge_cells.begin(), bridge_cells.end());
    }

    Configuration c;
    StateId q = cca.ca.quiescent();
    for (const auto& [p, t] : seed.placements()) {
        CompiledState s{bridge_cells.count(p) ? CompiledState::Kind::BridgeTile
                                              : CompiledState::Kind::Tile,
                        t, Direction::West, {}};
        c.set(p, cca.codec->encode(s), q);
    }

    // Token: least empty point directly above a seed tile, heading left.
    std::optional<Point> token_pos;
    for (const auto& [p, t] : seed.sorted()) {
        (void)t;
        Point above = p + Point{0, 1};
        if (!tiles.count(above)) {
            if (!token_pos || above < *token_pos) token_pos = above;
        }
    }
    CompiledState token{CompiledState::Kind::Token, -1, Direction::West,
                        {PendingAction::Kind::Move, -1}};
    c.set(*token_pos, cca.codec->encode(token), q);
    return c;
}

Assembly represent(const CompiledCA& cca, const Configuration& c) {
    Assembly a;
    for (const auto& [p, sid] : c.cells()) {
        auto t = tile_of(cca.codec->decode(sid));
        if (t) a.place(p, *t);
    }
    return a;
}

std::size_t count_token_cells(const CompiledCA& cca, const Configuration& c) {
    std::size_t n = 0;
    for (const auto& [p, sid] : c.cells())
        if (cca.codec->decode(sid).is_token()) ++n;
    return n;
}

bool non_quiescent_connected8(const CompiledCA& cca, const Configuration& c) {
    (void)cca;
    std::set<Point> support;
    for (const auto& [p, _] : c.cells()) support.insert(p);
    if (support.empty()) return true;
    return connected_components(support, 8).size() == 1;
}

bool contains_bridge_state(const CompiledCA& cca, const Configuration& c) {
    for (const auto& [p, sid] : c.cells()) {
        auto s = cca.codec->decode(sid);
        if (s.kind == CompiledState::Kind::BridgeTile ||
            s.kind == CompiledState::Kind::BridgeToken)
            return true;
    }
    return false;
}

}  // namespace catam
