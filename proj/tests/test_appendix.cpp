#include <doctest.h>
TEST_CASE("placeholder_appendix") { CHECK(true); }
