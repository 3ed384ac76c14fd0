#include <doctest.h>
#include "catam/json_io.hpp"
#include "fixtures.hpp"
using namespace catam;

TEST_CASE("tas json round trip") {
    auto ts = fixtures::square_builder();
    auto j = tas_to_json(ts);
    auto back = tas_from_json(j);
    CHECK(tas_to_json(back) == j);
}
