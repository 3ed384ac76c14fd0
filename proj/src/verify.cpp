#include "catam/verify.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "catam/json_io.hpp"

namespace catam {

using nlohmann::json;

json RepresentationReport::to_json() const {
    json j;
    switch (verdict) {
        case Verdict::Pass: j["verdict"] = "pass"; break;
        case Verdict::Fail: j["verdict"] = "fail"; break;
        case Verdict::Inconclusive: j["verdict"] = "inconclusive"; break;
    }
    j["reason"] = reason;
    j["counterexample"] = counterexample;
    j["bounds_used"] = bounds_used;
    return j;
}

int RepresentationReport::exit_code() const {
    switch (verdict) {
        case Verdict::Pass: return 0;
        case Verdict::Fail: return 1;
        case Verdict::Inconclusive: return 2;
    }
    return 2;
}

namespace {

json config_trace(const CompiledCA& cca, const Configuration& c) {
    return config_to_json(cca.ca, c);
}

}  // namespace

RepresentationReport check_follows(const CompiledCA& compiled, const TileSystem& ts,
                                   std::size_t depth, std::size_t width) {
    RepresentationReport report;
    report.bounds_used = {{"depth", depth}, {"width", width}};

    Configuration c0 = build_initial_config(compiled);
    std::deque<std::pair<Configuration, std::size_t>> queue = {{c0, 0}};
    std::unordered_set<std::uint64_t> seen = {c0.canonical_hash()};
    bool truncated = false;
    std::size_t visited = 0;

    while (!queue.empty()) {
        auto [c, d] = queue.front();
        queue.pop_front();
        if (++visited > width) {
            truncated = true;
            break;
        }
        if (d >= depth) {
            truncated = truncated || depth > 0;
            continue;
        }
        Assembly alpha = represent(compiled, c);
        for (const auto& succ : successors_enumerate(compiled.ca, c, 4096)) {
            Assembly beta = represent(compiled, succ);
            std::size_t gap = beta.size() >= alpha.size() ? beta.size() - alpha.size() : SIZE_MAX;
            if (gap == SIZE_MAX || !reaches(ts, alpha, beta, gap)) {
                report.verdict = RepresentationReport::Verdict::Fail;
                report.reason = "configuration step leaves the producible order";
                report.counterexample = {{"config", config_trace(compiled, c)},
                                         {"successor", config_trace(compiled, succ)},
                                         {"assembly", assembly_to_json(ts, alpha)},
                                         {"assembly_successor", assembly_to_json(ts, beta)}};
                return report;
            }
            if (seen.insert(succ.canonical_hash()).second) queue.emplace_back(succ, d + 1);
        }
    }
    report.verdict =
        truncated ? RepresentationReport::Verdict::Inconclusive : RepresentationReport::Verdict::Pass;
    if (truncated) report.reason = "bounds exhausted before closure";
    return report;
}

namespace {

// Full reachable configuration graph of a compiled automaton, up to `width`
// configurations. The graph is finite for terminating tile systems because
// assemblies only grow and the token walks a bounded surface.
struct ConfigGraph {
    std::vector<Configuration> configs;
    std::vector<std::vector<std::size_t>> edges;
    std::unordered_map<std::uint64_t, std::size_t> index;
    bool truncated = false;
};

ConfigGraph explore_configs(const CompiledCA& compiled, std::size_t width) {
    ConfigGraph g;
    Configuration c0 = build_initial_config(compiled);
    g.configs.push_back(c0);
    g.index[c0.canonical_hash()] = 0;
    std::deque<std::size_t> queue = {0};
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        if (g.edges.size() <= i) g.edges.resize(i + 1);
        for (const auto& succ : successors_enumerate(compiled.ca, g.configs[i], 4096)) {
            auto h = succ.canonical_hash();
            auto it = g.index.find(h);
            std::size_t j;
            if (it == g.index.end()) {
                if (g.configs.size() >= width) {
                    g.truncated = true;
                    continue;
                }
                j = g.configs.size();
                g.index[h] = j;
                g.configs.push_back(succ);
                queue.push_back(j);
            } else {
                j = it->second;
            }
            g.edges[i].push_back(j);
        }
    }
    g.edges.resize(g.configs.size());
    return g;
}

std::vector<char> reachable_from(const ConfigGraph& g, std::size_t start) {
    std::vector<char> seen(g.configs.size(), 0);
    std::deque<std::size_t> q = {start};
    seen[start] = 1;
    while (!q.empty()) {
        auto i = q.front();
        q.pop_front();
        for (auto j : g.edges[i])
            if (!seen[j]) {
                seen[j] = 1;
                q.push_back(j);
            }
    }
    return seen;
}

}  // namespace

RepresentationReport check_models(const CompiledCA& compiled, const TileSystem& ts,
                                  std::size_t size_bound, std::size_t width) {
    RepresentationReport report;
    report.bounds_used = {{"size_bound", size_bound}, {"width", width}};

    ConfigGraph g = explore_configs(compiled, width);
    if (g.truncated) {
        report.verdict = RepresentationReport::Verdict::Inconclusive;
        report.reason = "configuration space exceeded width bound";
        return report;
    }

    // Group configurations by represented assembly.
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_assembly;
    std::vector<Assembly> reprs(g.configs.size());
    for (std::size_t i = 0; i < g.configs.size(); ++i) {
        reprs[i] = represent(compiled, g.configs[i]);
        by_assembly[reprs[i].canonical_hash()].push_back(i);
    }

    auto assemblies = producible_set(ts, size_bound);
    for (const Assembly& alpha : assemblies) {
        auto wit = by_assembly.find(alpha.canonical_hash());
        if (wit == by_assembly.end()) {
            report.verdict = RepresentationReport::Verdict::Fail;
            report.reason = "producible assembly has no representing configuration";
            report.counterexample = {{"assembly", assembly_to_json(ts, alpha)}};
            return report;
        }
        auto steps = frontier(ts, alpha);
        bool terminal = steps.empty();
        bool alpha_ok = false;
        json fail_detail;
        for (std::size_t witness : wit->second) {
            auto reach = reachable_from(g, witness);
            bool ok = true;
            if (terminal) {
                for (std::size_t j = 0; j < reach.size() && ok; ++j)
                    if (reach[j] && !(reprs[j] == alpha)) {
                        ok = false;
                        fail_detail = {{"assembly", assembly_to_json(ts, alpha)},
                                       {"config", config_trace(compiled, g.configs[witness])},
                                       {"drifted_config", config_trace(compiled, g.configs[j])}};
                    }
            } else {
                for (const auto& [p, t] : steps) {
                    Assembly beta = alpha;
                    beta.place(p, t);
                    bool found = false;
                    auto cand = by_assembly.find(beta.canonical_hash());
                    if (cand != by_assembly.end())
                        for (std::size_t j : cand->second)
                            if (reach[j]) {
                                found = true;
                                break;
                            }
                    if (!found) {
                        ok = false;
                        fail_detail = {{"assembly", assembly_to_json(ts, alpha)},
                                       {"unreached_successor", assembly_to_json(ts, beta)}};
                        break;
                    }
                }
            }
            if (ok) {
                alpha_ok = true;
                break;
            }
        }
        if (!alpha_ok) {
            report.verdict = RepresentationReport::Verdict::Fail;
            report.reason = "assembly step not realizable by configuration steps";
            report.counterexample = fail_detail;
            return report;
        }
    }
    report.verdict = RepresentationReport::Verdict::Pass;
    return report;
}

namespace {

// Depth-first exploration over attachment choices of a generated system.
// Attachment order is fixed (first frontier site); branching happens only
// on the tile choice, which is what varies in these systems.
struct StageExplorer {
    const GeneratedTileSet* gen;
    const CADefinition* ca;
    std::int64_t t_max;
    std::size_t cap;
    std::size_t leaves = 0;
    // readbacks[t] collects distinct stage-t readbacks over all paths
    std::vector<std::vector<Configuration>> readbacks;
    json failure;

    bool step_coherent(const Configuration& from, const Configuration& to) {
        // to must lie in G(from): per-cell membership.
        std::set<Point> cells;
        for (const auto& [p, _] : from.cells()) {
            cells.insert(p);
            for (Point v : ca->neighborhood().offsets) cells.insert(p - v);
        }
        for (const auto& [p, _] : to.cells()) cells.insert(p);
        for (Point p : cells) {
            auto opts = local_successors(*ca, from, p);
            StateId got = to.get(p, ca->quiescent());
            if (std::find(opts.begin(), opts.end(), got) == opts.end()) return false;
        }
        return true;
    }

    bool run(GrowthSim& sim, std::int64_t next_stage, std::vector<Configuration> trail) {
        const auto& geo = gen->geometry();
        while (true) {
            if (next_stage > t_max) {
                ++leaves;
                if (leaves > cap) throw resource_limit_error("stage exploration exceeded cap");
                return true;
            }
            std::int64_t side = geo.side(next_stage);
            std::size_t target = static_cast<std::size_t>(side) * static_cast<std::size_t>(side);
            if (sim.assembly().size() >= target) {
                auto r = representation(*gen, sim.assembly(), next_stage);
                if (!r) {
                    failure = {{"reason", "stage square complete but readback undefined"},
                               {"stage", next_stage}};
                    return false;
                }
                if (!trail.empty() && !step_coherent(trail.back(), *r)) {
                    failure = {{"reason", "consecutive stage readbacks not one global step apart"},
                               {"stage", next_stage}};
                    return false;
                }
                auto& bucket = readbacks[static_cast<std::size_t>(next_stage)];
                if (std::find(bucket.begin(), bucket.end(), *r) == bucket.end())
                    bucket.push_back(*r);
                trail.push_back(*r);
                ++next_stage;
                continue;
            }
            if (sim.terminal()) {
                failure = {{"reason", "growth halted before stage completion"},
                           {"stage", next_stage},
                           {"tiles", sim.assembly().size()}};
                return false;
            }
            auto it = sim.frontier().begin();
            Point p = it->first;
            const auto tiles = it->second;
            if (tiles.size() == 1) {
                sim.attach(p, tiles[0]);
                continue;
            }
            for (std::size_t k = 0; k + 1 < tiles.size(); ++k) {
                GrowthSim branch = sim;
                branch.attach(p, tiles[k]);
                if (!run(branch, next_stage, trail)) return false;
            }
            sim.attach(p, tiles.back());
        }
    }
};

}  // namespace

RepresentationReport check_tas_simulates_ca(const GeneratedTileSet& gen, const CADefinition& ca,
                                            const Configuration& c0, std::int64_t t_max,
                                            std::size_t cap) {
    RepresentationReport report;
    report.bounds_used = {{"t_max", t_max}, {"cap", cap}};

    StageExplorer ex;
    ex.gen = &gen;
    ex.ca = &ca;
    ex.t_max = t_max;
    ex.cap = cap;
    ex.readbacks.resize(static_cast<std::size_t>(t_max) + 1);

    GrowthSim sim(gen.system());
    try {
        if (!ex.run(sim, 0, {})) {
            report.verdict = RepresentationReport::Verdict::Fail;
            report.reason = "stage coherence violated";
            report.counterexample = ex.failure;
            return report;
        }
    } catch (const resource_limit_error&) {
        report.verdict = RepresentationReport::Verdict::Inconclusive;
        report.reason = "exploration cap exceeded";
        return report;
    }

    // Statement 1: readback image equals the global-rule image, per step.
    std::vector<Configuration> level = {c0};
    for (std::int64_t t = 0; t <= t_max; ++t) {
        if (t > 0) {
            std::vector<Configuration> next;
            for (const auto& c : level)
                for (auto& s : successors_enumerate(ca, c, cap)) {
                    if (std::find(next.begin(), next.end(), s) == next.end())
                        next.push_back(std::move(s));
                    if (next.size() > cap)
                        throw resource_limit_error("global image enumeration exceeded cap");
                }
            level = std::move(next);
        }
        auto& got = ex.readbacks[static_cast<std::size_t>(t)];
        bool equal = got.size() == level.size();
        if (equal)
            for (const auto& c : got)
                if (std::find(level.begin(), level.end(), c) == level.end()) equal = false;
        if (!equal) {
            report.verdict = RepresentationReport::Verdict::Fail;
            report.reason = "readback image differs from global-rule image";
            json readj = json::array(), wantj = json::array();
            for (const auto& c : got) readj.push_back(config_to_json(ca, c));
            for (const auto& c : level) wantj.push_back(config_to_json(ca, c));
            report.counterexample = {{"stage", t}, {"readbacks", readj}, {"expected", wantj}};
            return report;
        }
    }
    report.verdict = RepresentationReport::Verdict::Pass;
    return report;
}

Configuration gol_oracle(const Configuration& c, std::size_t n) {
    // States follow make_game_of_life: 0 dead, 1 alive.
    std::set<Point> alive;
    for (const auto& [p, s] : c.cells())
        if (s == 1) alive.insert(p);
    for (std::size_t step = 0; step < n; ++step) {
        std::map<Point, int> counts;
        for (Point p : alive)
            for (Point q : moore_ring(p)) counts[q] += 1;
        std::set<Point> next;
        for (const auto& [p, k] : counts) {
            bool live = alive.count(p) ? (k == 2 || k == 3) : (k == 3);
            if (live) next.insert(p);
        }
        alive = std::move(next);
    }
    Configuration out;
    for (Point p : alive) out.set(p, 1, 0);
    return out;
}

}  // namespace catam
