#include "certify/linalg.hpp"
#include "certify/parse.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace certify;

TEST_CASE("gaussian rational basics") {
    const GR a(Rat(1), Rat(1));   // 1+i
    const GR b(Rat(1), Rat(-1));  // 1-i
    CHECK(a * b == GR(2));

    const GR c(Rat(2), Rat(1));  // 2+i
    CHECK(c.inverse() == GR(Rat(2, 5), Rat(-1, 5)));
    CHECK(c * c.inverse() == GR::one());

    CHECK(GR::i() * GR::i() == GR(-1));
    CHECK_THROWS_AS(GR::zero().inverse(), Error);
}

TEST_CASE("gaussian rational printing") {
    CHECK(GR::zero().to_string() == "0");
    CHECK(GR(Rat(-1, 2)).to_string() == "-1/2");
    CHECK(GR::i().to_string() == "i");
    CHECK((-GR::i()).to_string() == "-i");
    CHECK(GR(Rat(0), Rat(2)).to_string() == "2*i");
    CHECK(GR(Rat(1), Rat(1)).to_string() == "1+i");
    CHECK(GR(Rat(1), Rat(-2, 3)).to_string() == "1-2/3*i");
    CHECK(parse_scalar("-1/2*i") == GR(Rat(0), Rat(-1, 2)));
}

TEST_CASE("field axioms on randomized triples") {
    testutil::Rng rng(12345);
    for (int iter = 0; iter < 250; ++iter) {
        const GR a = rng.scalar();
        const GR b = rng.scalar();
        const GR c = rng.scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + GR::zero() == a);
        CHECK(a * GR::one() == a);
        CHECK(a + (-a) == GR::zero());
        if (!b.is_zero()) {
            CHECK(b * b.inverse() == GR::one());
            CHECK((a / b) * b == a);
        }
    }
}

namespace {

LinearSystem sys_from(std::vector<std::vector<long>> a, std::vector<long> rhs) {
    std::vector<std::vector<GR>> rows;
    for (auto& r : a) {
        std::vector<GR> row;
        for (long v : r)
            row.push_back(GR(v));
        rows.push_back(std::move(row));
    }
    std::vector<GR> b;
    for (long v : rhs)
        b.push_back(GR(v));
    return LinearSystem(std::move(rows), std::move(b));
}

}  // namespace

TEST_CASE("linear solving: pinned cases") {
    SUBCASE("identity") {
        const auto sol = solve_linear(sys_from({{1, 0}, {0, 1}}, {3, 4}));
        REQUIRE(sol.consistent);
        CHECK(sol.solution == std::vector<GR>{GR(3), GR(4)});
        CHECK(sol.nullspace.empty());
    }
    SUBCASE("rank one") {
        const auto sol = solve_linear(sys_from({{1, 1}, {2, 2}}, {1, 2}));
        REQUIRE(sol.consistent);
        CHECK(sol.solution == std::vector<GR>{GR(1), GR(0)});
        REQUIRE(sol.nullspace.size() == 1);
        // span{(1,-1)}
        CHECK(sol.nullspace[0][0] * GR(-1) == sol.nullspace[0][1]);
        CHECK(!sol.nullspace[0][0].is_zero());
    }
    SUBCASE("unique zero solution") {
        const auto sol = solve_linear(sys_from({{1, 1}, {1, -1}}, {0, 0}));
        REQUIRE(sol.consistent);
        CHECK(sol.solution == std::vector<GR>{GR(0), GR(0)});
        CHECK(sol.nullspace.empty());
    }
    SUBCASE("inconsistent") {
        const auto sol = solve_linear(sys_from({{1, 1}, {1, 1}}, {0, 1}));
        CHECK(!sol.consistent);
    }
}

TEST_CASE("linear solving: randomized verification") {
    testutil::Rng rng(777);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t m = static_cast<std::size_t>(rng.range(1, 5));
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 5));
        LinearSystem sys(m, n);
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < n; ++c)
                sys.at(r, c) = rng.range(0, 2) ? rng.scalar() : GR::zero();
            sys.rhs(r) = rng.scalar();
        }
        // solve_linear re-verifies internally by back-substitution; reaching
        // here without a throw is the property being tested
        const auto sol = solve_linear(sys);
        if (sol.consistent)
            CHECK(sol.solution.size() == n);
    }
}
