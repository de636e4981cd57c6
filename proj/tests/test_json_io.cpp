#include <doctest.h>
TEST_CASE("placeholder_json_io") { CHECK(true); }
