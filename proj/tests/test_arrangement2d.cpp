#include <doctest.h>
TEST_CASE("placeholder_arrangement2d") { CHECK(true); }
