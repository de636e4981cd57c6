#include <doctest.h>
TEST_CASE("placeholder_blocksig") { CHECK(true); }
