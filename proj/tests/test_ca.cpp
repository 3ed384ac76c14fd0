#include <doctest.h>

#include <random>

#include "catam/ca.hpp"
#include "fixtures.hpp"

using namespace catam;

namespace {

// Direct Game of Life window count over a 5x5 region, independent of the
// rule plumbing. Used to freeze expected blinker phases.
Configuration gol_brute(const Configuration& c, int steps) {
    Configuration cur = c;
    for (int s = 0; s < steps; ++s) {
        Configuration next;
        for (std::int64_t x = -20; x <= 20; ++x)
            for (std::int64_t y = -20; y <= 20; ++y) {
                int alive = 0;
                for (Point q : moore_ring({x, y}))
                    if (cur.get(q, 0) == 1) ++alive;
                bool center = cur.get({x, y}, 0) == 1;
                bool live = center ? (alive == 2 || alive == 3) : (alive == 3);
                next.set({x, y}, live ? 1 : 0, 0);
            }
        cur = next;
    }
    return cur;
}

Configuration random_soup(std::mt19937_64& rng, int side) {
    Configuration c;
    for (int x = 0; x < side; ++x)
        for (int y = 0; y < side; ++y) c.set({x, y}, rng() % 2 ? 1 : 0, 0);
    return c;
}

}  // namespace

TEST_CASE("local_successors on game of life") {
    auto gol = make_game_of_life();
    Configuration blinker = fixtures::gol_config({{-1, 0}, {0, 0}, {1, 0}});

    // all-quiescent window
    CHECK(local_successors(gol, blinker, {10, 10}) == std::vector<StateId>{0});
    // alive cell with exactly two alive neighbors stays alive
    CHECK(local_successors(gol, blinker, {0, 0}) == std::vector<StateId>{1});
    // dead cell with three alive neighbors becomes alive
    CHECK(local_successors(gol, blinker, {0, 1}) == std::vector<StateId>{1});
    // end of the bar dies
    CHECK(local_successors(gol, blinker, {1, 0}) == std::vector<StateId>{0});
}

TEST_CASE("step_sample blinker and determinism") {
    auto gol = make_game_of_life();
    Configuration blinker = fixtures::gol_config({{-1, 0}, {0, 0}, {1, 0}});
    Configuration vertical = fixtures::gol_config({{0, -1}, {0, 0}, {0, 1}});

    CHECK(step_sample(gol, blinker, 1) == vertical);
    CHECK(step_sample(gol, blinker, 1) == gol_brute(blinker, 1));
    CHECK(step_sample(gol, blinker, 99) == vertical);  // deterministic rule ignores the seed

    Configuration empty;
    CHECK(step_sample(gol, empty, 5) == empty);
}

TEST_CASE("iterate") {
    auto gol = make_game_of_life();
    Configuration blinker = fixtures::gol_config({{-1, 0}, {0, 0}, {1, 0}});
    CHECK(iterate(gol, blinker, 0, 7) == blinker);
    CHECK(iterate(gol, blinker, 2, 7) == blinker);
    CHECK(iterate(gol, blinker, 7, 7) == fixtures::gol_config({{0, -1}, {0, 0}, {0, 1}}));
    CHECK(iterate(gol, blinker, 7, 7) == gol_brute(blinker, 7));
}

TEST_CASE("table rule errors and enumeration") {
    auto toy = fixtures::toy_nondet_ca();
    Configuration single;
    single.set({0, 0}, 1, 0);

    // deterministic everywhere except the south cell
    auto succ = successors_enumerate(toy, single, 100);
    CHECK(succ.size() == 2);
    Configuration with_south = single;
    with_south.set({0, -1}, 1, 0);
    CHECK((succ[0] == single || succ[1] == single));
    CHECK((succ[0] == with_south || succ[1] == with_south));

    // per-cell product count: support grows, still one 2-way cell per 'a'
    // column bottom
    auto twice = successors_enumerate(toy, with_south, 100);
    CHECK(twice.size() == 2);

    // cap
    CHECK_THROWS_AS(successors_enumerate(toy, single, 1), resource_limit_error);

    // missing table entry without default
    std::map<std::vector<StateId>, std::vector<StateId>> entries;
    entries[std::vector<StateId>(9, 0)] = {0};
    auto rule = std::make_shared<TableRule>(entries, std::nullopt);
    CADefinition partial({"q", "a"}, "q", moore9_spec(), rule);
    Configuration c;
    c.set({0, 0}, 1, 0);
    CHECK_THROWS_AS(step_sample(partial, c, 0), missing_table_entry_error);
}

TEST_CASE("deterministic rule: enumerate equals sampled step") {
    auto gol = make_game_of_life();
    std::mt19937_64 rng(5);
    auto c = random_soup(rng, 6);
    auto all = successors_enumerate(gol, c, 10);
    REQUIRE(all.size() == 1);
    for (std::uint64_t s : {0ull, 1ull, 42ull}) CHECK(step_sample(gol, c, s) == all[0]);
}

TEST_CASE("quiescence closure is enforced") {
    std::map<std::vector<StateId>, std::vector<StateId>> entries;
    entries[std::vector<StateId>(9, 0)] = {1};  // all-quiescent maps to non-quiescent
    auto rule = std::make_shared<TableRule>(entries, std::optional<std::vector<StateId>>({{0}}));
    CHECK_THROWS_AS(CADefinition({"q", "a"}, "q", moore9_spec(), rule), input_error);
}

TEST_CASE("shift") {
    Configuration c = fixtures::gol_config({{2, 3}});
    auto s = shift(c, {1, -1});
    CHECK(s.get({3, 2}, 0) == 1);
    CHECK(s.support_size() == 1);
    CHECK(shift(c, {0, 0}) == c);
    auto twice = shift(shift(c, {5, 7}), {-2, -3});
    CHECK(twice == shift(c, {3, 4}));
    CHECK(shift(shift(c, {4, -2}), {-4, 2}) == c);
}

TEST_CASE("pack/unpack inverses") {
    auto gol = make_game_of_life();
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        int m1 = 1 + static_cast<int>(rng() % 3), m2 = 1 + static_cast<int>(rng() % 3);
        BlockSpace bs(gol, m1, m2);
        auto c = random_soup(rng, 5);
        auto packed = pack(gol, bs, c);
        CHECK(unpack(gol, bs, packed) == c);
        CHECK(packed.support_size() <= c.support_size());
    }
    // identity packing is isomorphic
    BlockSpace unit(gol, 1, 1);
    auto c = random_soup(rng, 4);
    auto p = pack(gol, unit, c);
    CHECK(p.support_size() == c.support_size());
    CHECK(unpack(gol, unit, p) == c);
}

TEST_CASE("rescale identity agrees with plain step") {
    auto gol = make_game_of_life();
    auto scaled = rescale(gol, 1, 1, 1, {0, 0});
    const auto& bs = rescaled_block_space(scaled);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        auto c = random_soup(rng, 5);
        auto direct = step_sample(gol, c, 0);
        auto via = unpack(gol, bs, step_sample(scaled, pack(gol, bs, c), 0));
        CHECK(via == direct);
    }
}

TEST_CASE("rescale (2,2) n=2 equals composed maps") {
    auto gol = make_game_of_life();
    auto scaled = rescale(gol, 2, 2, 2, {0, 0});
    const auto& bs = rescaled_block_space(scaled);
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 8; ++trial) {
        auto c = random_soup(rng, 6);
        auto packed = pack(gol, bs, c);
        auto one_block_step = step_sample(scaled, packed, 0);
        // o^m . psi^0 . G^2 . o^-m
        auto expect = pack(gol, bs, iterate(gol, c, 2, 0));
        CHECK(one_block_step == expect);
    }
    // quiescent block maps to quiescent block
    Configuration empty;
    CHECK(step_sample(scaled, empty, 0) == empty);
}

TEST_CASE("finite support preserved under step") {
    auto gol = make_game_of_life();
    std::mt19937_64 rng(31);
    auto c = random_soup(rng, 8);
    auto next = step_sample(gol, c, 0);
    std::int64_t r = gol.neighborhood().radius();
    for (const auto& [p, _] : next.cells()) {
        bool near = false;
        for (const auto& [q, _s] : c.cells())
            if (std::max(std::abs(p.x - q.x), std::abs(p.y - q.y)) <= r) near = true;
        CHECK(near);
    }
}
