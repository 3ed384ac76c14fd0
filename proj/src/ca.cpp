#include "catam/ca.hpp"

#include <algorithm>
#include <set>

namespace catam {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

std::vector<std::pair<Point, StateId>> Configuration::sorted() const {
    std::vector<std::pair<Point, StateId>> out(cells_.begin(), cells_.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t Configuration::canonical_hash() const {
    std::uint64_t h = 0x84222325cbf29ce4ull;
    for (const auto& [p, s] : sorted()) {
        h = splitmix64(h ^ static_cast<std::uint64_t>(p.x));
        h = splitmix64(h ^ static_cast<std::uint64_t>(p.y));
        h = splitmix64(h ^ static_cast<std::uint64_t>(s));
    }
    return h;
}

bool operator==(const Configuration& a, const Configuration& b) {
    if (a.support_size() != b.support_size()) return false;
    for (const auto& [p, s] : a.cells()) {
        auto it = b.cells().find(p);
        if (it == b.cells().end() || it->second != s) return false;
    }
    return true;
}

CADefinition::CADefinition(std::vector<std::string> states, const std::string& quiescent,
                           NeighborhoodSpec neighborhood, std::shared_ptr<const LocalRule> rule)
    : states_(std::move(states)), neighborhood_(std::move(neighborhood)), rule_(std::move(rule)) {
    if (states_.empty()) throw input_error("state set is empty");
    for (std::size_t i = 0; i < states_.size(); ++i) {
        auto [it, ins] = by_name_.emplace(states_[i], static_cast<StateId>(i));
        if (!ins) throw input_error("duplicate state name: " + states_[i]);
    }
    auto q = state_id(quiescent);
    if (!q) throw input_error("quiescent state not in state set");
    quiescent_ = *q;
    std::set<Point> distinct(neighborhood_.offsets.begin(), neighborhood_.offsets.end());
    if (distinct.size() != neighborhood_.offsets.size())
        throw input_error("neighborhood offsets must be distinct");
    if (!rule_) throw input_error("missing local rule");
    check_quiescence_closure();
}

std::optional<StateId> CADefinition::state_id(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

void CADefinition::check_quiescence_closure() const {
    std::vector<StateId> window(neighborhood_.offsets.size(), quiescent_);
    auto out = rule_->successors(window);
    if (out.size() != 1 || out[0] != quiescent_)
        throw input_error("all-quiescent neighborhood must map to exactly the quiescent state");
}

std::vector<StateId> TableRule::successors(const std::vector<StateId>& window) const {
    auto it = entries_.find(window);
    if (it != entries_.end()) return it->second;
    if (fallback_) return *fallback_;
    throw missing_table_entry_error("no table entry for neighborhood tuple");
}

std::vector<StateId> GameOfLifeRule::successors(const std::vector<StateId>& window) const {
    if (window.size() != 9) throw input_error("game of life window must have 9 cells");
    int alive = 0;
    for (std::size_t i = 0; i < 9; ++i)
        if (i != 4 && window[i] == alive_) ++alive;
    bool center_alive = window[4] == alive_;
    bool next = center_alive ? (alive == 2 || alive == 3) : (alive == 3);
    return {next ? alive_ : dead_};
}

CADefinition make_game_of_life() {
    std::vector<std::string> states = {"dead", "alive"};
    auto rule = std::make_shared<GameOfLifeRule>(0, 1);
    return CADefinition(states, "dead", moore9_spec(), rule);
}

std::vector<StateId> local_successors(const CADefinition& ca, const Configuration& c, Point p) {
    std::vector<StateId> window;
    window.reserve(ca.neighborhood().offsets.size());
    for (Point v : ca.neighborhood().offsets) window.push_back(c.get(p + v, ca.quiescent()));
    auto out = ca.rule().successors(window);
    if (out.empty()) throw input_error("local rule returned an empty successor set");
    return out;
}

namespace {

// Cells whose window touches the support: the only cells that can change.
std::vector<Point> affected_cells(const CADefinition& ca, const Configuration& c) {
    std::set<Point> affected;
    for (const auto& [p, _] : c.cells()) {
        affected.insert(p);
        for (Point v : ca.neighborhood().offsets) affected.insert(p - v);
    }
    return {affected.begin(), affected.end()};
}

}  // namespace

Configuration step_sample(const CADefinition& ca, const Configuration& c, std::uint64_t rng_seed) {
    Configuration next;
    std::uint64_t ctr = rng_seed;
    for (Point p : affected_cells(ca, c)) {
        auto choices = local_successors(ca, c, p);
        StateId s;
        if (choices.size() == 1) {
            s = choices[0];
        } else {
            ctr = splitmix64(ctr);
            s = choices[ctr % choices.size()];
        }
        next.set(p, s, ca.quiescent());
    }
    return next;
}

std::vector<Configuration> successors_enumerate(const CADefinition& ca, const Configuration& c,
                                                std::size_t cap) {
    auto cells = affected_cells(ca, c);
    std::vector<std::vector<StateId>> choices;
    choices.reserve(cells.size());
    std::size_t product = 1;
    for (Point p : cells) {
        auto s = local_successors(ca, c, p);
        product *= s.size();
        if (product > cap) throw resource_limit_error("successor enumeration exceeds cap");
        choices.push_back(std::move(s));
    }
    std::vector<Configuration> out;
    out.reserve(product);
    std::vector<std::size_t> idx(cells.size(), 0);
    while (true) {
        Configuration cfg;
        for (std::size_t i = 0; i < cells.size(); ++i)
            cfg.set(cells[i], choices[i][idx[i]], ca.quiescent());
        out.push_back(std::move(cfg));
        std::size_t i = 0;
        for (; i < idx.size(); ++i) {
            if (++idx[i] < choices[i].size()) break;
            idx[i] = 0;
        }
        if (i == idx.size()) break;
    }
    return out;
}

Configuration iterate(const CADefinition& ca, const Configuration& c, std::size_t n,
                      std::uint64_t rng_seed) {
    Configuration cur = c;
    for (std::size_t i = 0; i < n; ++i)
        cur = step_sample(ca, cur, splitmix64(rng_seed ^ (0x5851F42D4C957F2Dull * (i + 1))));
    return cur;
}

Configuration shift(const Configuration& c, Point k) {
    Configuration out;
    for (const auto& [p, s] : c.cells()) out.set(p + k, s, -1);
    return out;
}

BlockSpace::BlockSpace(const CADefinition& inner, int m1, int m2, std::size_t cap)
    : inner_(&inner), m1_(m1), m2_(m2) {
    if (m1 < 1 || m2 < 1) throw input_error("block dimensions must be >= 1");
    for (int px = 0; px < m1; ++px)
        for (int py = 0; py < m2; ++py) offsets_.push_back({px, py});
    std::size_t count = 1;
    for (std::size_t i = 0; i < offsets_.size(); ++i) {
        count *= inner.states().size();
        if (count > cap) throw resource_limit_error("block state space exceeds cap");
    }
    std::vector<StateId> tuple(offsets_.size(), 0);
    while (true) {
        index_[tuple] = static_cast<StateId>(tuples_.size());
        tuples_.push_back(tuple);
        names_.push_back(block_name(inner, tuple));
        std::size_t i = 0;
        for (; i < tuple.size(); ++i) {
            if (++tuple[i] < static_cast<StateId>(inner.states().size())) break;
            tuple[i] = 0;
        }
        if (i == tuple.size()) break;
    }
    quiescent_ = index_.at(std::vector<StateId>(offsets_.size(), inner.quiescent()));
}

std::string BlockSpace::block_name(const CADefinition& inner, const std::vector<StateId>& tuple) {
    std::string out = "b(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ",";
        out += inner.state_name(tuple[i]);
    }
    out += ")";
    return out;
}

StateId BlockSpace::encode(const std::vector<StateId>& tuple) const { return index_.at(tuple); }

std::vector<StateId> BlockSpace::decode(StateId block) const {
    return tuples_[static_cast<std::size_t>(block)];
}

Configuration pack(const CADefinition& inner, const BlockSpace& bs, const Configuration& c) {
    auto floordiv = [](std::int64_t a, std::int64_t b) {
        std::int64_t q = a / b, r = a % b;
        return r != 0 && ((r < 0) != (b < 0)) ? q - 1 : q;
    };
    std::set<Point> blocks;
    for (const auto& [p, _] : c.cells())
        blocks.insert({floordiv(p.x, bs.m1()), floordiv(p.y, bs.m2())});
    Configuration out;
    for (Point z : blocks) {
        std::vector<StateId> tuple;
        tuple.reserve(bs.cell_offsets().size());
        for (Point off : bs.cell_offsets())
            tuple.push_back(
                c.get({z.x * bs.m1() + off.x, z.y * bs.m2() + off.y}, inner.quiescent()));
        out.set(z, bs.encode(tuple), bs.quiescent_block());
    }
    return out;
}

Configuration unpack(const CADefinition& inner, const BlockSpace& bs, const Configuration& packed) {
    Configuration out;
    for (const auto& [z, block] : packed.cells()) {
        auto tuple = bs.decode(block);
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            Point off = bs.cell_offsets()[i];
            out.set({z.x * bs.m1() + off.x, z.y * bs.m2() + off.y}, tuple[i], inner.quiescent());
        }
    }
    return out;
}

namespace {

class RescaledRule : public LocalRule {
  public:
    RescaledRule(CADefinition inner, BlockSpace bs, std::size_t n, Point k,
                 std::vector<Point> block_offsets, std::size_t enum_cap)
        : inner_(std::move(inner)),
          bs_(std::move(bs)),
          n_(n),
          k_(k),
          block_offsets_(std::move(block_offsets)),
          enum_cap_(enum_cap) {}

    std::vector<StateId> successors(const std::vector<StateId>& window) const override {
        // Reassemble the inner patch around block (0,0).
        Configuration patch;
        for (std::size_t i = 0; i < block_offsets_.size(); ++i) {
            Point z = block_offsets_[i];
            auto tuple = bs_.decode(window[i]);
            for (std::size_t j = 0; j < tuple.size(); ++j) {
                Point off = bs_.cell_offsets()[j];
                patch.set({z.x * bs_.m1() + off.x, z.y * bs_.m2() + off.y}, tuple[j],
                          inner_.quiescent());
            }
        }
        // Enumerate n inner steps and read back block (0,0) after the shift.
        std::vector<Configuration> frontier = {patch};
        for (std::size_t step = 0; step < n_; ++step) {
            std::vector<Configuration> next;
            std::set<std::uint64_t> seen;
            for (const auto& cfg : frontier) {
                for (auto& succ : successors_enumerate(inner_, cfg, enum_cap_)) {
                    if (next.size() > enum_cap_)
                        throw resource_limit_error("rescaled rule enumeration exceeds cap");
                    if (seen.insert(succ.canonical_hash()).second) next.push_back(std::move(succ));
                }
            }
            frontier = std::move(next);
        }
        std::set<StateId> blocks;
        for (const auto& cfg : frontier) {
            std::vector<StateId> tuple;
            for (Point off : bs_.cell_offsets())
                // psi^k moves cell i to i+k, so the new block reads i = mz+p-k.
                tuple.push_back(cfg.get({off.x - k_.x, off.y - k_.y}, inner_.quiescent()));
            blocks.insert(bs_.encode(tuple));
        }
        return {blocks.begin(), blocks.end()};
    }
    std::string kind() const override { return "rescaled"; }

    const BlockSpace& block_space() const { return bs_; }

  private:
    CADefinition inner_;
    BlockSpace bs_;
    std::size_t n_;
    Point k_;
    std::vector<Point> block_offsets_;
    std::size_t enum_cap_;
};

}  // namespace

CADefinition rescale(const CADefinition& ca, int m1, int m2, std::size_t n, Point k,
                     std::size_t state_cap, std::size_t enum_cap) {
    if (n < 1) throw input_error("rescaling requires n >= 1");
    BlockSpace bs(ca, m1, m2, state_cap);
    // Dependence radius of n inner steps plus the shift, in cells.
    std::int64_t r = ca.neighborhood().radius();
    std::int64_t reach = static_cast<std::int64_t>(n) * r + std::max(std::abs(k.x), std::abs(k.y));
    auto cover = [&](std::int64_t m, std::int64_t lo, std::int64_t hi) {
        // block indices dz with [dz*m, dz*m+m) intersecting [lo, hi]
        std::int64_t a = lo >= 0 ? lo / m : -((-lo + m - 1) / m);
        std::int64_t b = hi >= 0 ? hi / m : -((-hi + m - 1) / m);
        return std::make_pair(a, b);
    };
    auto [ax, bx] = cover(m1, -reach, m1 - 1 + reach);
    auto [ay, by] = cover(m2, -reach, m2 - 1 + reach);
    NeighborhoodSpec spec;
    for (std::int64_t dx = ax; dx <= bx; ++dx)
        for (std::int64_t dy = ay; dy <= by; ++dy) spec.offsets.push_back({dx, dy});
    if (spec.offsets.size() > 4096) throw resource_limit_error("rescaled neighborhood too large");
    auto rule = std::make_shared<RescaledRule>(ca, bs, n, k, spec.offsets, enum_cap);
    return CADefinition(rule->block_space().state_names(),
                        rule->block_space().state_names()[static_cast<std::size_t>(
                            rule->block_space().quiescent_block())],
                        spec, rule);
}

const BlockSpace& rescaled_block_space(const CADefinition& rescaled) {
    auto* rule = dynamic_cast<const RescaledRule*>(&rescaled.rule());
    if (!rule) throw input_error("not a rescaled automaton");
    return rule->block_space();
}

}  // namespace catam
