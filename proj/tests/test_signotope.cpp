#include <doctest.h>
TEST_CASE("placeholder_signotope") { CHECK(true); }
