#include "stforms/generators.hpp"
#include "stforms/linalg.hpp"
#include "stforms/matrix.hpp"
#include "stforms/rng.hpp"

#include <doctest.h>

#include "test_support.hpp"

#include <stdexcept>

using namespace stforms;

TEST_CASE("matmul/add/transpose basics") {
    const RatMatrix m = RatMatrix::from_ints({{1, 2}, {3, 4}, {5, 6}});
    CHECK(RatMatrix::identity(3) * m == m);
    CHECK_THROWS_AS(m * m, std::invalid_argument);
    CHECK_THROWS_AS(m + RatMatrix::identity(2), std::invalid_argument);

    const RatMatrix a = RatMatrix::from_ints({{1, 0}, {2, -1}});
    const RatMatrix b = RatMatrix::from_ints({{0, 3}, {1, 1}});
    CHECK((a + b).transpose() == a.transpose() + b.transpose());
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
}

TEST_CASE("cross_matrix squares match hand multiplication") {
    // l_3 . l_3 = diag(-1,-1,0), worked out entrywise from the epsilon tensor.
    const RatMatrix l3 = cross_matrix(3);
    CHECK(l3 * l3 == RatMatrix::from_ints({{-1, 0, 0}, {0, -1, 0}, {0, 0, 0}}));
}

TEST_CASE("rref reproduces forced examples") {
    SUBCASE("rank-1") {
        const auto r = rref(RatMatrix::from_ints({{2, 4}, {1, 2}}));
        CHECK(r.reduced == RatMatrix::from_ints({{1, 2}, {0, 0}}));
        CHECK(r.pivots == std::vector<std::size_t>{0});
    }
    SUBCASE("identity") {
        const auto r = rref(RatMatrix::identity(3));
        CHECK(r.reduced == RatMatrix::identity(3));
        CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
    }
    SUBCASE("permutation") {
        const auto r = rref(RatMatrix::from_ints({{0, 1}, {1, 0}}));
        CHECK(r.reduced == RatMatrix::identity(2));
        CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    }
}

TEST_CASE("nullspace_basis reproduces forced examples") {
    SUBCASE("single relation") {
        const auto basis = nullspace_basis(RatMatrix::from_ints({{1, 1}}));
        REQUIRE(basis.size() == 1);
        CHECK(basis[0] == RatMatrix::from_ints({{-1}, {1}}));
    }
    SUBCASE("full rank") {
        CHECK(nullspace_basis(RatMatrix::identity(2)).empty());
    }
    SUBCASE("rank-1 square") {
        const auto basis = nullspace_basis(RatMatrix::from_ints({{1, 2}, {2, 4}}));
        REQUIRE(basis.size() == 1);
        CHECK(basis[0] == RatMatrix::from_ints({{-2}, {1}}));
    }
}

TEST_CASE("rref idempotence, nullspace exactness, rank-nullity on random matrices") {
    Rng rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(rng.int_in(1, 6));
        const std::size_t cols = static_cast<std::size_t>(rng.int_in(1, 6));
        RatMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.rational(5, 3);

        const auto r = rref(m);
        CHECK(rref(r.reduced).reduced == r.reduced);
        for (std::size_t k = 0; k < r.pivots.size(); ++k)
            CHECK(r.reduced.at(k, r.pivots[k]) == Rational(1));

        const auto kernel = nullspace_basis(m);
        for (const RatMatrix& v : kernel) CHECK((m * v).is_zero());
        CHECK(kernel.size() + r.pivots.size() == cols);
        CHECK(r.pivots.size() == stforms::testing::elimination_rank(m));
    }
}

TEST_CASE("inverse and span helpers") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        RatMatrix m(4, 4);
        do {
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = rng.rational(4, 2);
        } while (m.det().is_zero());
        CHECK(m * inverse(m) == RatMatrix::identity(4));
    }
    const RatMatrix rows = RatMatrix::from_ints({{1, 0, 1}, {0, 1, 1}});
    CHECK(in_row_span(rows, RatMatrix::from_ints({{2, 3, 5}})));
    CHECK_FALSE(in_row_span(rows, RatMatrix::from_ints({{0, 0, 1}})));
}
