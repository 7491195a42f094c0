#include <doctest.h>
TEST_CASE("placeholder test_poly") { CHECK(true); }
