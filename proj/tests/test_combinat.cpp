#include <doctest.h>
TEST_CASE("placeholder_combinat") { CHECK(true); }
