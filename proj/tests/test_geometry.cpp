#include <doctest.h>
TEST_CASE("placeholder test_geometry") { CHECK(true); }
