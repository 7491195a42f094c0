#include <doctest.h>
TEST_CASE("placeholder test_checkfile") { CHECK(true); }
