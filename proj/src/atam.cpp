#include "catam/atam.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <random>
#include <unordered_set>
#include <climits>

namespace catam {

std::vector<std::pair<Point, TileId>> Assembly::sorted() const {
    std::vector<std::pair<Point, TileId>> out(placements_.begin(), placements_.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool Assembly::subassembly_of(const Assembly& other) const {
    if (size() > other.size()) return false;
    for (const auto& [p, t] : placements_) {
        auto o = other.at(p);
        if (!o || *o != t) return false;
    }
    return true;
}

bool operator==(const Assembly& a, const Assembly& b) {
    return a.size() == b.size() && a.subassembly_of(b);
}

std::uint64_t Assembly::canonical_hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const auto& [p, t] : sorted()) {
        auto mix = [&](std::uint64_t v) {
            h ^= v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        };
        mix(static_cast<std::uint64_t>(p.x));
        mix(static_cast<std::uint64_t>(p.y));
        mix(static_cast<std::uint64_t>(t));
    }
    return h;
}

std::optional<std::array<std::int64_t, 4>> Assembly::bounding_box() const {
    if (placements_.empty()) return std::nullopt;
    std::array<std::int64_t, 4> bb = {INT64_MAX, INT64_MAX, INT64_MIN, INT64_MIN};
    for (const auto& [p, _] : placements_) {
        bb[0] = std::min(bb[0], p.x);
        bb[1] = std::min(bb[1], p.y);
        bb[2] = std::max(bb[2], p.x);
        bb[3] = std::max(bb[3], p.y);
    }
    return bb;
}

TileSystem::TileSystem(std::vector<TileType> types, Assembly seed, int temperature)
    : types_(std::move(types)), seed_(std::move(seed)), temperature_(temperature) {
    if (temperature_ < 1) throw input_error("temperature must be positive");
    for (std::size_t i = 0; i < types_.size(); ++i) {
        auto [it, inserted] = by_name_.emplace(types_[i].name, static_cast<TileId>(i));
        if (!inserted) throw input_error("duplicate tile type name: " + types_[i].name);
    }
    for (std::size_t i = 0; i < types_.size(); ++i) {
        for (Direction d : kDirections) {
            const Glue& g = types_[i].glue(d);
            if (g.strength < 0) throw input_error("negative glue strength");
            if (g.label.empty()) continue;
            match_index_[{static_cast<int>(d), g.label, g.strength}].push_back(
                static_cast<TileId>(i));
        }
    }
    for (const auto& [p, t] : seed_.placements()) {
        if (t < 0 || static_cast<std::size_t>(t) >= types_.size())
            throw input_error("seed references unknown tile type");
        (void)p;
    }
}

std::optional<TileId> TileSystem::id_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

const std::vector<TileId>& TileSystem::matching(Direction d, const Glue& g) const {
    if (g.label.empty()) return no_match_;
    auto it = match_index_.find({static_cast<int>(d), g.label, g.strength});
    if (it == match_index_.end()) return no_match_;
    return it->second;
}

int binding_strength(const TileSystem& ts, const Assembly& a, Point p, const TileType& t) {
    if (a.occupied(p)) throw occupied_position_error("binding_strength at occupied point");
    int total = 0;
    for (Direction d : kDirections) {
        auto n = a.at(p + unit_vector(d));
        if (!n) continue;
        const Glue& mine = t.glue(d);
        const Glue& theirs = ts.type(*n).glue(opposite(d));
        if (mine.binds(theirs)) total += mine.strength;
    }
    return total;
}

namespace {

// Candidate tiles at an empty site adjacent to the assembly.
std::vector<TileId> site_candidates(const TileSystem& ts, const Assembly& a, Point p) {
    std::vector<TileId> merged;
    for (Direction d : kDirections) {
        auto n = a.at(p + unit_vector(d));
        if (!n) continue;
        const Glue& g = ts.type(*n).glue(opposite(d));
        const auto& m = ts.matching(d, g);
        merged.insert(merged.end(), m.begin(), m.end());
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    std::vector<TileId> out;
    for (TileId t : merged)
        if (binding_strength(ts, a, p, ts.type(t)) >= ts.temperature()) out.push_back(t);
    return out;
}

}  // namespace

std::vector<std::pair<Point, TileId>> frontier(const TileSystem& ts, const Assembly& a) {
    std::set<Point> sites;
    for (const auto& [p, _] : a.placements())
        for (Direction d : kDirections) {
            Point q = p + unit_vector(d);
            if (!a.occupied(q)) sites.insert(q);
        }
    std::vector<std::pair<Point, TileId>> out;
    for (Point p : sites)
        for (TileId t : site_candidates(ts, a, p)) out.emplace_back(p, t);
    return out;
}

Assembly attach(const Assembly& a, Point p, TileId t, const TileSystem& ts) {
    if (a.occupied(p)) throw occupied_position_error("attach at occupied point");
    if (binding_strength(ts, a, p, ts.type(t)) < ts.temperature())
        throw insufficient_strength_error("attachment below temperature");
    Assembly next = a;
    next.place(p, t);
    return next;
}

bool is_terminal(const TileSystem& ts, const Assembly& a) { return frontier(ts, a).empty(); }

namespace {

// Dinic max-flow on a small undirected graph.
struct MaxFlow {
    struct Edge {
        int to;
        long long cap;
        std::size_t rev;
    };
    std::vector<std::vector<Edge>> g;
    explicit MaxFlow(int n) : g(n) {}
    void add_undirected(int a, int b, long long c) {
        g[a].push_back({b, c, g[b].size()});
        g[b].push_back({a, c, g[a].size() - 1});
    }
    std::vector<int> level;
    std::vector<std::size_t> iter;
    bool bfs(int s, int t) {
        level.assign(g.size(), -1);
        std::deque<int> q;
        level[s] = 0;
        q.push_back(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (const auto& e : g[v])
                if (e.cap > 0 && level[e.to] < 0) {
                    level[e.to] = level[v] + 1;
                    q.push_back(e.to);
                }
        }
        return level[t] >= 0;
    }
    long long dfs(int v, int t, long long f) {
        if (v == t) return f;
        for (std::size_t& i = iter[v]; i < g[v].size(); ++i) {
            Edge& e = g[v][i];
            if (e.cap > 0 && level[v] < level[e.to]) {
                long long d = dfs(e.to, t, std::min(f, e.cap));
                if (d > 0) {
                    e.cap -= d;
                    g[e.to][e.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }
    long long run(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            iter.assign(g.size(), 0);
            long long f;
            while ((f = dfs(s, t, LLONG_MAX)) > 0) flow += f;
        }
        return flow;
    }
};

}  // namespace

bool is_tau_stable(const TileSystem& ts, const Assembly& a, int tau) {
    if (a.size() <= 1) return true;
    auto pts = a.sorted();
    std::unordered_map<Point, int, PointHash> index;
    for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i].first] = static_cast<int>(i);

    struct Bond {
        int a, b, w;
    };
    std::vector<Bond> bonds;
    for (const auto& [p, t] : pts) {
        for (Direction d : {Direction::East, Direction::North}) {
            auto n = a.at(p + unit_vector(d));
            if (!n) continue;
            const Glue& mine = ts.type(t).glue(d);
            const Glue& theirs = ts.type(*n).glue(opposite(d));
            if (mine.binds(theirs) && mine.strength > 0)
                bonds.push_back({index[p], index[p + unit_vector(d)], mine.strength});
        }
    }
    // Bond-connectivity is a prerequisite: a disconnected binding graph has
    // a zero cut.
    {
        std::vector<std::vector<int>> adj(pts.size());
        for (const auto& b : bonds) {
            adj[b.a].push_back(b.b);
            adj[b.b].push_back(b.a);
        }
        std::vector<char> seen(pts.size(), 0);
        std::deque<int> q{0};
        seen[0] = 1;
        std::size_t cnt = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    q.push_back(w);
                }
        }
        if (cnt != pts.size()) return false;
    }
    for (std::size_t t = 1; t < pts.size(); ++t) {
        MaxFlow mf(static_cast<int>(pts.size()));
        for (const auto& b : bonds) mf.add_undirected(b.a, b.b, b.w);
        if (mf.run(0, static_cast<int>(t)) < tau) return false;
    }
    return true;
}

GrowthSim::GrowthSim(const TileSystem& ts, Assembly start) : ts_(&ts), assembly_(std::move(start)) {
    std::set<Point> sites;
    for (const auto& [p, _] : assembly_.placements())
        for (Direction d : kDirections) {
            Point q = p + unit_vector(d);
            if (!assembly_.occupied(q)) sites.insert(q);
        }
    for (Point p : sites) refresh_site(p);
}

GrowthSim::GrowthSim(const TileSystem& ts) : GrowthSim(ts, ts.seed()) {}

void GrowthSim::refresh_site(Point p) {
    if (assembly_.occupied(p)) {
        frontier_.erase(p);
        return;
    }
    auto cands = site_candidates(*ts_, assembly_, p);
    if (cands.empty())
        frontier_.erase(p);
    else
        frontier_[p] = std::move(cands);
}

void GrowthSim::attach(Point p, TileId t) {
    if (binding_strength(*ts_, assembly_, p, ts_->type(t)) < ts_->temperature())
        throw insufficient_strength_error("attachment below temperature");
    assembly_.place(p, t);
    frontier_.erase(p);
    for (Direction d : kDirections) refresh_site(p + unit_vector(d));
}

std::vector<Assembly> run_sequence(const TileSystem& ts, std::uint64_t rng_seed,
                                   std::size_t max_steps) {
    std::mt19937_64 rng(rng_seed);
    GrowthSim sim(ts);
    std::vector<Assembly> out;
    out.push_back(sim.assembly());
    for (std::size_t i = 0; i < max_steps; ++i) {
        auto pick = sim.pick_uniform(rng);
        if (!pick) break;
        sim.attach(pick->first, pick->second);
        out.push_back(sim.assembly());
    }
    return out;
}

std::vector<Assembly> producible_set(const TileSystem& ts, std::size_t max_size, std::size_t cap) {
    if (max_size < ts.seed().size()) throw input_error("max_size smaller than the seed");
    std::vector<Assembly> out;
    std::unordered_set<std::uint64_t> seen;
    std::deque<Assembly> queue;
    queue.push_back(ts.seed());
    seen.insert(ts.seed().canonical_hash());
    while (!queue.empty()) {
        Assembly a = std::move(queue.front());
        queue.pop_front();
        out.push_back(a);
        if (out.size() > cap) throw resource_limit_error("producible_set exceeded cap");
        if (a.size() >= max_size) continue;
        for (const auto& [p, t] : frontier(ts, a)) {
            Assembly next = a;
            next.place(p, t);
            auto h = next.canonical_hash();
            if (seen.insert(h).second) queue.push_back(std::move(next));
        }
    }
    return out;
}

bool reaches(const TileSystem& ts, const Assembly& alpha, const Assembly& beta, std::size_t bound) {
    if (!alpha.subassembly_of(beta)) return false;
    if (alpha.size() == beta.size()) return alpha == beta;
    if (beta.size() - alpha.size() > bound) return false;
    std::unordered_set<std::uint64_t> seen;
    std::deque<Assembly> queue;
    queue.push_back(alpha);
    seen.insert(alpha.canonical_hash());
    while (!queue.empty()) {
        Assembly a = std::move(queue.front());
        queue.pop_front();
        if (a == beta) return true;
        if (beta.size() - a.size() == 0) continue;
        for (const auto& [p, t] : frontier(ts, a)) {
            auto want = beta.at(p);
            if (!want || *want != t) continue;  // stay inside dom(beta)
            Assembly next = a;
            next.place(p, t);
            if (seen.insert(next.canonical_hash()).second) queue.push_back(std::move(next));
        }
    }
    return false;
}

}  // namespace catam
