#include <doctest.h>
TEST_CASE("placeholder test_pipeline") { CHECK(true); }
