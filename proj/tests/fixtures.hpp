#pragma once

#include <string>
#include <vector>

#include "catam/atam.hpp"
#include "catam/ca.hpp"

namespace catam::fixtures {

inline TileType tile(std::string name, Glue n = {}, Glue e = {}, Glue s = {}, Glue w = {}) {
    TileType t;
    t.name = std::move(name);
    t.glue(Direction::North) = std::move(n);
    t.glue(Direction::East) = std::move(e);
    t.glue(Direction::South) = std::move(s);
    t.glue(Direction::West) = std::move(w);
    return t;
}

// Directed 4x4 square at temperature 2: column and row rails with
// strength-2 glues, cooperative interior.
inline TileSystem square_builder() {
    std::vector<TileType> types;
    auto h2 = [](int x, int y) { return Glue{"H" + std::to_string(x) + "_" + std::to_string(y), 2}; };
    auto v2 = [](int x, int y) { return Glue{"V" + std::to_string(x) + "_" + std::to_string(y), 2}; };
    auto h1 = [](int x, int y) { return Glue{"h" + std::to_string(x) + "_" + std::to_string(y), 1}; };
    auto v1 = [](int x, int y) { return Glue{"v" + std::to_string(x) + "_" + std::to_string(y), 1}; };
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            std::string name = "c" + std::to_string(x) + std::to_string(y);
            Glue n, e, s, w;
            if (x == 0 && y == 0) {
                n = v2(0, 1);
                e = h2(1, 0);
            } else if (x == 0) {
                // west rail climbs with strength-2 vertical glues
                s = v2(0, y);
                if (y < 3) n = v2(0, y + 1);
                e = h1(1, y);
            } else if (y == 0) {
                w = h2(x, 0);
                if (x < 3) e = h2(x + 1, 0);
                n = v1(x, 1);
            } else {
                w = x == 1 ? h1(1, y) : h1(x, y);
                s = y == 1 ? v1(x, 1) : v1(x, y);
                if (x < 3) e = h1(x + 1, y);
                if (y < 3) n = v1(x, y + 1);
            }
            types.push_back(tile(name, n, e, s, w));
        }
    Assembly seed;
    seed.place({0, 0}, 0);
    return TileSystem(types, seed, 2);
}

// Three-bit zig-zag counter, temperature 2. The seed row encodes 001;
// increment rows grow east-to-west rippling the carry, copy rows return
// west-to-east and halt the growth once they observe 111. Turnaround glues
// carry the bit across the direction change.
inline TileSystem zigzag_counter() {
    std::vector<TileType> types;
    auto te = [](int b) { return Glue{b ? "TE1" : "TE0", 2}; };
    auto tw = [](int b) { return Glue{b ? "TW1" : "TW0", 2}; };
    auto vM = [](int b) { return Glue{b ? "vM1" : "vM0", 1}; };  // increment outputs
    auto vL = [](int b) { return Glue{b ? "vL1" : "vL0", 1}; };
    auto wH = [](int b) { return Glue{b ? "wH1" : "wH0", 1}; };  // copy outputs
    auto wM = [](int b) { return Glue{b ? "wM1" : "wM0", 1}; };
    auto carry = [](int c) { return Glue{c ? "c1" : "c0", 1}; };
    auto ones = [](int a) { return Glue{a ? "a1" : "a0", 1}; };  // all-ones prefix flag

    // seed row: acts like a copy row holding 001 (MSB west)
    types.push_back(tile("seed0", wH(0), Glue{"s1", 2}, {}, {}));
    types.push_back(tile("seed1", wM(0), Glue{"s2", 2}, {}, Glue{"s1", 2}));
    types.push_back(tile("seed2", te(1), {}, {}, Glue{"s2", 2}));

    // increment rows, east to west. LSB (x=2) starts from the turnaround
    // and flips its bit; middle and MSB tiles add the carry.
    for (int b : {0, 1})
        types.push_back(tile("incL" + std::to_string(b), vL(1 - b), {}, te(b), carry(b)));
    for (int b : {0, 1})
        for (int c : {0, 1})
            types.push_back(tile("incM" + std::to_string(b) + std::to_string(c), vM(b ^ c),
                                 carry(c), wM(b), carry(b & c)));
    // MSB (x=0): (1,1) would overflow; unreachable because growth halts at 111.
    for (int b : {0, 1})
        for (int c : {0, 1}) {
            if (b == 1 && c == 1) continue;
            types.push_back(tile("incH" + std::to_string(b) + std::to_string(c), tw(b ^ c),
                                 carry(c), wH(b), {}));
        }

    // copy rows, west to east, accumulating the all-ones prefix flag.
    for (int b : {0, 1})
        types.push_back(tile("cpW" + std::to_string(b), wH(b), ones(b), tw(b), {}));
    for (int b : {0, 1})
        for (int a : {0, 1})
            types.push_back(tile("cpM" + std::to_string(b) + std::to_string(a), wM(b),
                                 ones(a & b), vM(b), ones(a)));
    for (int b : {0, 1})
        for (int a : {0, 1}) {
            bool halt = a && b;
            types.push_back(tile("cpE" + std::to_string(b) + std::to_string(a),
                                 halt ? Glue{} : te(b), {}, vL(b), ones(a)));
        }

    std::unordered_map<std::string, TileId> id;
    for (std::size_t i = 0; i < types.size(); ++i) id[types[i].name] = static_cast<TileId>(i);
    Assembly seed;
    seed.place({0, 0}, id["seed0"]);
    seed.place({1, 0}, id["seed1"]);
    seed.place({2, 0}, id["seed2"]);
    return TileSystem(types, seed, 2);
}

// 4x4 frame around a 2x2 interior, temperature 2. The ring grows as a
// strength-2 chain from the seed corner; the interior fills cooperatively.
inline TileSystem frame_builder() {
    std::vector<TileType> types;
    const std::vector<Point> ring = {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {3, 1}, {3, 2},
                                     {3, 3}, {2, 3}, {1, 3}, {0, 3}, {0, 2}, {0, 1}};
    auto chain = [](std::size_t k) { return Glue{"r" + std::to_string(k), 2}; };
    auto inner = [](Point p, Direction d) {
        return Glue{"i" + std::to_string(p.x) + "_" + std::to_string(p.y) + direction_name(d), 1};
    };
    for (std::size_t k = 0; k < ring.size(); ++k) {
        Point p = ring[k];
        TileType t;
        t.name = "R" + std::to_string(p.x) + std::to_string(p.y);
        if (k + 1 < ring.size()) {
            Point q = ring[k + 1];
            for (Direction d : kDirections)
                if (p + unit_vector(d) == q) t.glue(d) = chain(k);
        }
        if (k > 0) {
            Point q = ring[k - 1];
            for (Direction d : kDirections)
                if (p + unit_vector(d) == q) t.glue(d) = chain(k - 1);
        }
        // strength-1 glues facing the interior
        for (Direction d : kDirections) {
            Point q = p + unit_vector(d);
            bool interior = q.x >= 1 && q.x <= 2 && q.y >= 1 && q.y <= 2;
            if (interior && t.glue(d).label.empty()) t.glue(d) = inner(p, d);
        }
        types.push_back(t);
    }
    // interior tiles bind west+south
    auto iglue = [](Point p, Direction d) {
        return Glue{"j" + std::to_string(p.x) + "_" + std::to_string(p.y) + direction_name(d), 1};
    };
    for (Point p : {Point{1, 1}, Point{2, 1}, Point{1, 2}, Point{2, 2}}) {
        TileType t;
        t.name = "I" + std::to_string(p.x) + std::to_string(p.y);
        // west side
        Point w = p + unit_vector(Direction::West);
        t.glue(Direction::West) =
            (w.x == 0) ? Glue{"i" + std::to_string(w.x) + "_" + std::to_string(w.y) + "E", 1}
                       : iglue(w, Direction::East);
        Point s = p + unit_vector(Direction::South);
        t.glue(Direction::South) =
            (s.y == 0) ? Glue{"i" + std::to_string(s.x) + "_" + std::to_string(s.y) + "N", 1}
                       : iglue(s, Direction::North);
        if (p.x == 1) t.glue(Direction::East) = iglue(p, Direction::East);
        if (p.y == 1) t.glue(Direction::North) = iglue(p, Direction::North);
        types.push_back(t);
    }
    std::unordered_map<std::string, TileId> id;
    for (std::size_t i = 0; i < types.size(); ++i) id[types[i].name] = static_cast<TileId>(i);
    Assembly seed;
    seed.place({0, 0}, id["R00"]);
    return TileSystem(types, seed, 2);
}

// Seed with one strength-2 east glue and two tiles competing for the site.
inline TileSystem two_choice() {
    std::vector<TileType> types;
    types.push_back(tile("S", {}, Glue{"x", 2}, {}, {}));
    types.push_back(tile("A", {}, {}, {}, Glue{"x", 2}));
    types.push_back(tile("B", {}, {}, {}, Glue{"x", 2}));
    Assembly seed;
    seed.place({0, 0}, 0);
    return TileSystem(types, seed, 2);
}

// Three tiles in a row joined by strength-2 glues.
inline TileSystem linear3() {
    std::vector<TileType> types;
    types.push_back(tile("L0", {}, Glue{"p", 2}, {}, {}));
    types.push_back(tile("L1", {}, Glue{"q", 2}, {}, Glue{"p", 2}));
    types.push_back(tile("L2", {}, {}, {}, Glue{"q", 2}));
    Assembly seed;
    seed.place({0, 0}, 0);
    return TileSystem(types, seed, 2);
}

inline Configuration gol_config(std::initializer_list<Point> alive) {
    Configuration c;
    for (Point p : alive) c.set(p, 1, 0);
    return c;
}

// Two-state CA with exactly one two-way nondeterministic window: a
// quiescent cell whose only active Moore neighbor is directly above it may
// stay quiescent or activate. Active cells persist.
inline CADefinition toy_nondet_ca() {
    // build as a table over the 9-cell Moore window via programmatic entries
    std::map<std::vector<StateId>, std::vector<StateId>> entries;
    const StateId q = 0, a = 1;
    // center active -> stays active (all 2^8 surroundings)
    for (int mask = 0; mask < 256; ++mask) {
        std::vector<StateId> w(9, q);
        w[4] = a;
        int bit = 0;
        for (int i = 0; i < 9; ++i) {
            if (i == 4) continue;
            w[static_cast<std::size_t>(i)] = ((mask >> bit) & 1) ? a : q;
            ++bit;
        }
        entries[w] = {a};
    }
    // the two-way window: quiescent center, active due north, rest quiescent
    {
        std::vector<StateId> w(9, q);
        // canonical moore9 order: index of (0,1) is 5
        w[5] = a;
        entries[w] = {q, a};
    }
    auto rule = std::make_shared<TableRule>(std::move(entries),
                                            std::optional<std::vector<StateId>>({{q}}));
    return CADefinition({"q", "a"}, "q", moore9_spec(), rule);
}

}  // namespace catam::fixtures
