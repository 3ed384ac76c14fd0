#include "catam/json_io.hpp"

#include <fstream>

#include "catam/atam2ca.hpp"

namespace catam {

json tas_to_json(const TileSystem& ts) {
    json types = json::array();
    for (const auto& t : ts.tile_types()) {
        json glues = json::object();
        for (Direction d : kDirections) {
            const Glue& g = t.glue(d);
            if (g.label.empty()) continue;
            glues[direction_name(d)] = {{"label", g.label}, {"strength", g.strength}};
        }
        types.push_back({{"name", t.name}, {"glues", glues}});
    }
    json seed = json::array();
    for (const auto& [p, t] : ts.seed().sorted())
        seed.push_back({{"x", p.x}, {"y", p.y}, {"tile", ts.type(t).name}});
    return {{"temperature", ts.temperature()}, {"tile_types", types}, {"seed", seed}};
}

TileSystem tas_from_json(const json& j) {
    try {
        std::vector<TileType> types;
        for (const auto& tj : j.at("tile_types")) {
            TileType t;
            t.name = tj.at("name").get<std::string>();
            if (tj.contains("glues"))
                for (auto& [side, gj] : tj.at("glues").items()) {
                    auto d = direction_from_name(side);
                    if (!d) throw input_error("bad glue side: " + side);
                    t.glue(*d) = {gj.at("label").get<std::string>(), gj.at("strength").get<int>()};
                }
            types.push_back(std::move(t));
        }
        std::unordered_map<std::string, TileId> ids;
        for (std::size_t i = 0; i < types.size(); ++i)
            ids[types[i].name] = static_cast<TileId>(i);
        Assembly seed;
        for (const auto& pj : j.at("seed")) {
            auto name = pj.at("tile").get<std::string>();
            auto it = ids.find(name);
            if (it == ids.end()) throw input_error("seed references unknown tile: " + name);
            seed.place({pj.at("x").get<std::int64_t>(), pj.at("y").get<std::int64_t>()},
                       it->second);
        }
        return TileSystem(std::move(types), std::move(seed), j.at("temperature").get<int>());
    } catch (const json::exception& e) {
        throw input_error(std::string("malformed tile system json: ") + e.what());
    }
}

json ca_to_json(const CADefinition& ca) {
    json out;
    out["states"] = ca.states();
    out["quiescent"] = ca.state_name(ca.quiescent());
    json nbhd = json::array();
    for (Point p : ca.neighborhood().offsets) nbhd.push_back({p.x, p.y});
    out["neighborhood"] = nbhd;

    const LocalRule& rule = ca.rule();
    if (auto* table = dynamic_cast<const TableRule*>(&rule)) {
        json entries = json::array();
        for (const auto& [w, outs] : table->entries()) {
            json wj = json::array(), oj = json::array();
            for (StateId s : w) wj.push_back(ca.state_name(s));
            for (StateId s : outs) oj.push_back(ca.state_name(s));
            entries.push_back({{"nbhd", wj}, {"out", oj}});
        }
        json rj = {{"kind", "table"}, {"entries", entries}};
        if (table->fallback()) {
            json dj = json::array();
            for (StateId s : *table->fallback()) dj.push_back(ca.state_name(s));
            rj["default"] = dj;
        }
        out["rule"] = rj;
    } else if (rule.kind() == "builtin:game_of_life") {
        out["rule"] = {{"kind", "builtin"}, {"name", "game_of_life"}};
    } else if (const TileSystem* ts = compiled_rule_source(rule)) {
        out["rule"] = {{"kind", "compiled_from_tas"}, {"tile_system", tas_to_json(*ts)}};
    } else {
        throw input_error("rule kind '" + rule.kind() + "' has no file form");
    }
    return out;
}

CADefinition ca_from_json(const json& j) {
    try {
        const json& rj = j.at("rule");
        auto kind = rj.at("kind").get<std::string>();
        if (kind == "builtin") {
            if (rj.at("name").get<std::string>() != "game_of_life")
                throw input_error("unknown builtin rule");
            return make_game_of_life();
        }
        if (kind == "compiled_from_tas")
            return compile_tas(tas_from_json(rj.at("tile_system"))).ca;
        if (kind != "table") throw input_error("unknown rule kind: " + kind);

        auto states = j.at("states").get<std::vector<std::string>>();
        std::unordered_map<std::string, StateId> ids;
        for (std::size_t i = 0; i < states.size(); ++i) ids[states[i]] = static_cast<StateId>(i);
        auto lookup = [&](const std::string& name) {
            auto it = ids.find(name);
            if (it == ids.end()) throw input_error("unknown state: " + name);
            return it->second;
        };
        NeighborhoodSpec spec;
        for (const auto& pj : j.at("neighborhood"))
            spec.offsets.push_back({pj.at(0).get<std::int64_t>(), pj.at(1).get<std::int64_t>()});

        std::map<std::vector<StateId>, std::vector<StateId>> entries;
        for (const auto& ej : rj.at("entries")) {
            std::vector<StateId> w, o;
            for (const auto& s : ej.at("nbhd")) w.push_back(lookup(s.get<std::string>()));
            for (const auto& s : ej.at("out")) o.push_back(lookup(s.get<std::string>()));
            if (w.size() != spec.offsets.size())
                throw input_error("table entry arity does not match neighborhood");
            if (o.empty()) throw input_error("empty successor set in table entry");
            entries[std::move(w)] = std::move(o);
        }
        std::optional<std::vector<StateId>> fallback;
        if (rj.contains("default")) {
            std::vector<StateId> d;
            for (const auto& s : rj.at("default")) d.push_back(lookup(s.get<std::string>()));
            fallback = std::move(d);
        }
        auto rule = std::make_shared<TableRule>(std::move(entries), std::move(fallback));
        return CADefinition(states, j.at("quiescent").get<std::string>(), spec, rule);
    } catch (const json::exception& e) {
        throw input_error(std::string("malformed ca json: ") + e.what());
    }
}

json config_to_json(const CADefinition& ca, const Configuration& c) {
    json cells = json::array();
    for (const auto& [p, s] : c.sorted())
        cells.push_back({{"x", p.x}, {"y", p.y}, {"state", ca.state_name(s)}});
    return {{"cells", cells}};
}

Configuration config_from_json(const CADefinition& ca, const json& j) {
    try {
        Configuration c;
        for (const auto& cj : j.at("cells")) {
            auto s = ca.state_id(cj.at("state").get<std::string>());
            if (!s) throw input_error("unknown state: " + cj.at("state").get<std::string>());
            c.set({cj.at("x").get<std::int64_t>(), cj.at("y").get<std::int64_t>()}, *s,
                  ca.quiescent());
        }
        return c;
    } catch (const json::exception& e) {
        throw input_error(std::string("malformed configuration json: ") + e.what());
    }
}

json assembly_to_json(const TileSystem& ts, const Assembly& a) {
    json cells = json::array();
    for (const auto& [p, t] : a.sorted())
        cells.push_back({{"x", p.x}, {"y", p.y}, {"tile", ts.type(t).name}});
    return {{"placements", cells}};
}

Assembly assembly_from_json(const TileSystem& ts, const json& j) {
    try {
        Assembly a;
        for (const auto& cj : j.at("placements")) {
            auto id = ts.id_of(cj.at("tile").get<std::string>());
            if (!id) throw input_error("unknown tile: " + cj.at("tile").get<std::string>());
            a.place({cj.at("x").get<std::int64_t>(), cj.at("y").get<std::int64_t>()}, *id);
        }
        return a;
    } catch (const json::exception& e) {
        throw input_error(std::string("malformed assembly json: ") + e.what());
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw input_error(std::string("cannot parse ") + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace catam
