#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

TEST_CASE("cubes placeholder") { CHECK(true); }
