#include <doctest.h>
TEST_CASE("placeholder test_derivation") { CHECK(true); }
