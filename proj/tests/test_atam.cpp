#include <doctest.h>

#include <random>

#include "catam/atam.hpp"
#include "fixtures.hpp"

using namespace catam;

namespace {

// Brute-force frontier: scan all empty neighbors of the assembly against
// every tile type using binding_strength only.
std::vector<std::pair<Point, TileId>> frontier_oracle(const TileSystem& ts, const Assembly& a) {
    std::set<Point> sites;
    for (const auto& [p, _] : a.placements())
        for (Direction d : kDirections) {
            Point q = p + unit_vector(d);
            if (!a.occupied(q)) sites.insert(q);
        }
    std::vector<std::pair<Point, TileId>> out;
    for (Point p : sites)
        for (TileId t = 0; t < static_cast<TileId>(ts.type_count()); ++t)
            if (binding_strength(ts, a, p, ts.type(t)) >= ts.temperature()) out.emplace_back(p, t);
    return out;
}

TileSystem fig2_pair() {
    using fixtures::tile;
    std::vector<TileType> types;
    types.push_back(tile("left", {}, Glue{"b", 2}, {}, {}));
    types.push_back(tile("right", {}, {}, {}, Glue{"b", 2}));
    Assembly seed;
    seed.place({0, 0}, 0);
    return TileSystem(types, seed, 2);
}

}  // namespace

TEST_CASE("binding_strength basics") {
    auto ts = fig2_pair();
    // isolated point, no occupied neighbors
    CHECK(binding_strength(ts, ts.seed(), {5, 5}, ts.type(1)) == 0);
    // strength-2 glue "b" facing the site
    CHECK(binding_strength(ts, ts.seed(), {1, 0}, ts.type(1)) == 2);
    CHECK_THROWS_AS(binding_strength(ts, ts.seed(), {0, 0}, ts.type(1)),
                    occupied_position_error);
}

TEST_CASE("binding strength adds over sides") {
    using fixtures::tile;
    std::vector<TileType> types;
    types.push_back(tile("base", {}, {}, {}, {}));  // placed twice via seed
    types.push_back(tile("west", Glue{}, Glue{"a", 1}, {}, {}));
    types.push_back(tile("south", Glue{"a", 1}, {}, {}, {}));
    types.push_back(tile("corner", {}, {}, Glue{"a", 1}, Glue{"a", 1}));
    Assembly seed;
    seed.place({0, 1}, 1);  // exposes ("a",1) east
    seed.place({1, 0}, 2);  // exposes ("a",1) north
    TileSystem ts(types, seed, 2);
    CHECK(binding_strength(ts, ts.seed(), {1, 1}, ts.type(3)) == 2);
    // mismatched strength does not bind
    std::vector<TileType> types2 = types;
    types2[3].glue(Direction::West) = Glue{"a", 2};
    TileSystem ts2(types2, seed, 2);
    CHECK(binding_strength(ts2, ts2.seed(), {1, 1}, ts2.type(3)) == 1);
}

TEST_CASE("frontier matches brute force along runs") {
    for (const TileSystem& ts : {fixtures::square_builder(), fixtures::zigzag_counter(),
                                 fixtures::frame_builder(), fixtures::two_choice()}) {
        auto seq = run_sequence(ts, 7, 12);
        for (const auto& a : seq) {
            auto got = frontier(ts, a);
            auto want = frontier_oracle(ts, a);
            CHECK(got == want);
        }
    }
}

TEST_CASE("frontier on terminal assembly is empty") {
    auto ts = fixtures::linear3();
    auto seq = run_sequence(ts, 1, 100);
    CHECK(seq.back().size() == 3);
    CHECK(is_terminal(ts, seq.back()));
    CHECK(!is_terminal(ts, seq.front()));
}

TEST_CASE("cooperative site needs both matches") {
    auto ts = fixtures::square_builder();
    // grow the two rails fully, then interior corner (1,1) becomes viable
    GrowthSim sim(ts);
    auto west_rail = [&](int y) { return *ts.id_of("c0" + std::to_string(y)); };
    auto south_rail = [&](int x) { return *ts.id_of("c" + std::to_string(x) + "0"); };
    sim.attach({0, 1}, west_rail(1));
    CHECK(sim.frontier().count({1, 1}) == 0);  // only one strength-1 side so far
    sim.attach({1, 0}, south_rail(1));
    REQUIRE(sim.frontier().count({1, 1}) == 1);
    CHECK(sim.frontier().at({1, 1}) == std::vector<TileId>{*ts.id_of("c11")});
}

TEST_CASE("attach validates position and strength") {
    auto ts = fixtures::square_builder();
    Assembly a = ts.seed();
    CHECK_THROWS_AS(attach(a, {0, 0}, 0, ts), occupied_position_error);
    CHECK_THROWS_AS(attach(a, {1, 1}, *ts.id_of("c11"), ts), insufficient_strength_error);
    Assembly b = attach(a, {0, 1}, *ts.id_of("c01"), ts);
    CHECK(b.size() == a.size() + 1);
    CHECK(a.subassembly_of(b));
    CHECK(a.size() == 1);  // value semantics
}

TEST_CASE("is_tau_stable") {
    using fixtures::tile;
    // single tile
    {
        std::vector<TileType> types = {tile("t")};
        Assembly a;
        a.place({0, 0}, 0);
        TileSystem ts(types, a, 2);
        CHECK(is_tau_stable(ts, a, 2));
    }
    // two tiles, one strength-1 bond, tau=2
    {
        std::vector<TileType> types = {tile("l", {}, Glue{"g", 1}, {}, {}),
                                       tile("r", {}, {}, {}, Glue{"g", 1})};
        Assembly a;
        a.place({0, 0}, 0);
        a.place({1, 0}, 1);
        TileSystem ts(types, a, 1);
        CHECK(is_tau_stable(ts, a, 1));
        CHECK(!is_tau_stable(ts, a, 2));
    }
    // 2x2 ring of strength-1 bonds: every cut crosses two bonds
    {
        std::vector<TileType> types = {
            tile("sw", Glue{"w", 1}, {}, {}, {}),          // north bond w
            tile("nw", {}, Glue{"n", 1}, Glue{"w", 1}, {}),
            tile("ne", {}, {}, Glue{"e", 1}, Glue{"n", 1}),
            tile("se", Glue{"e", 1}, {}, {}, Glue{"s", 1}),
        };
        types[0].glue(Direction::East) = Glue{"s", 1};
        Assembly a;
        a.place({0, 0}, 0);
        a.place({0, 1}, 1);
        a.place({1, 1}, 2);
        a.place({1, 0}, 3);
        TileSystem ts(types, a, 1);
        CHECK(is_tau_stable(ts, a, 2));
        CHECK(!is_tau_stable(ts, a, 3));
    }
}

TEST_CASE("run_sequence basics") {
    auto ts = fixtures::square_builder();
    auto none = run_sequence(ts, 3, 0);
    REQUIRE(none.size() == 1);
    CHECK(none[0] == ts.seed());

    auto a = run_sequence(ts, 11, 100).back();
    auto b = run_sequence(ts, 99, 100).back();
    CHECK(a == b);  // directed: same terminal from any seed
    CHECK(a.size() == 16);

    auto seq = run_sequence(ts, 5, 100);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        CHECK(seq[i].subassembly_of(seq[i + 1]));
        CHECK(seq[i + 1].size() == seq[i].size() + 1);
    }
}

TEST_CASE("producible_set") {
    auto ts = fixtures::square_builder();
    auto only_seed = producible_set(ts, 1);
    REQUIRE(only_seed.size() == 1);
    CHECK(only_seed[0] == ts.seed());

    auto two = producible_set(fig2_pair(), 2);
    CHECK(two.size() == 2);

    auto s4 = producible_set(ts, 4);
    auto s6 = producible_set(ts, 6);
    CHECK(s4.size() <= s6.size());

    CHECK_THROWS_AS(producible_set(ts, 16, 10), resource_limit_error);
}

TEST_CASE("every producible assembly is tau-stable and reachable") {
    auto ts = fixtures::zigzag_counter();
    auto all = producible_set(ts, 12);
    for (const auto& a : all) {
        CHECK(is_tau_stable(ts, a, ts.temperature()));
        CHECK(reaches(ts, ts.seed(), a, a.size() - ts.seed().size()));
    }
}

TEST_CASE("zigzag counter reaches a unique 39-tile terminal") {
    auto ts = fixtures::zigzag_counter();
    auto all = producible_set(ts, 40);
    std::size_t terminals = 0;
    Assembly term;
    for (const auto& a : all)
        if (is_terminal(ts, a)) {
            ++terminals;
            term = a;
        }
    REQUIRE(terminals == 1);
    CHECK(term.size() == 39);
    // top row reads 111: its copy tiles are cpE1*/cpM1*/cpW1
    auto top = term.at({0, 12});
    REQUIRE(top.has_value());
    CHECK(ts.type(*top).name.substr(0, 3) == "cpW");
    CHECK(ts.type(*top).name[3] == '1');
}

TEST_CASE("reaches") {
    auto ts = fixtures::linear3();
    CHECK(reaches(ts, ts.seed(), ts.seed(), 0));
    Assembly other;
    other.place({4, 4}, 0);
    CHECK(!reaches(ts, ts.seed(), other, 5));
    auto term = run_sequence(ts, 0, 10).back();
    CHECK(reaches(ts, ts.seed(), term, 3));
    CHECK(!reaches(ts, ts.seed(), term, 1));
}

TEST_CASE("two choice system has two terminals") {
    auto ts = fixtures::two_choice();
    auto all = producible_set(ts, 2);
    std::size_t terminals = 0;
    for (const auto& a : all)
        if (is_terminal(ts, a)) ++terminals;
    CHECK(all.size() == 3);
    CHECK(terminals == 2);
}

TEST_CASE("growth sim frontier stays consistent") {
    auto ts = fixtures::frame_builder();
    GrowthSim sim(ts);
    std::mt19937_64 rng(42);
    while (true) {
        auto want = frontier_oracle(ts, sim.assembly());
        std::vector<std::pair<Point, TileId>> got;
        for (const auto& [p, tiles] : sim.frontier())
            for (TileId t : tiles) got.emplace_back(p, t);
        CHECK(got == want);
        auto pick = sim.pick_uniform(rng);
        if (!pick) break;
        sim.attach(pick->first, pick->second);
    }
    CHECK(sim.assembly().size() == 16);
}
