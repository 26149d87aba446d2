#include "stforms/generators.hpp"
#include "stforms/spacetime.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace stforms;

namespace {

int eps(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

}  // namespace

TEST_CASE("cross_matrix entries are the epsilon tensor") {
    CHECK(cross_matrix(3) == RatMatrix::from_ints({{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}));
    CHECK(cross_matrix(1) == RatMatrix::from_ints({{0, 0, 0}, {0, 0, -1}, {0, 1, 0}}));
    CHECK(cross_matrix(2) == RatMatrix::from_ints({{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}));
    for (int j = 1; j <= 3; ++j)
        CHECK((cross_matrix(j) + cross_matrix(j).transpose()).is_zero());
    CHECK_THROWS_AS(cross_matrix(0), std::invalid_argument);
    CHECK_THROWS_AS(cross_matrix(4), std::invalid_argument);
}

TEST_CASE("rotation generators per degree") {
    CHECK(rotation_generator(0, 1) == RatMatrix(1, 1));
    CHECK(rotation_generator(4, 2) == RatMatrix(1, 1));

    RatMatrix s12(4, 4);
    const RatMatrix l2 = cross_matrix(2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s12.at(i + 1, j + 1) = l2.at(i, j);
    CHECK(rotation_generator(1, 2) == s12);
    CHECK(rotation_generator(3, 2) == s12);

    RatMatrix s23(6, 6);
    const RatMatrix l3 = cross_matrix(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            s23.at(i, j) = l3.at(i, j);
            s23.at(i + 3, j + 3) = l3.at(i, j);
        }
    CHECK(rotation_generator(2, 3) == s23);
    CHECK_THROWS_AS(rotation_generator(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(rotation_generator(1, 0), std::invalid_argument);
}

TEST_CASE("boost generators carry the spacetime's lambda pair") {
    const Spacetime& gal = spacetime(SpacetimeKind::Galilei);
    const Spacetime& car = spacetime(SpacetimeKind::Carroll);
    const Spacetime& mink = spacetime(SpacetimeKind::Minkowski);

    CHECK(boost_generator(gal, 1, 1) ==
          RatMatrix::from_ints({{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
    CHECK(boost_generator(car, 3, 1) ==
          RatMatrix::from_ints({{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));

    RatMatrix m23(6, 6);
    const RatMatrix l3 = cross_matrix(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            m23.at(i, j + 3) = -l3.at(i, j);
            m23.at(i + 3, j) = l3.at(i, j);
        }
    CHECK(boost_generator(mink, 2, 3) == m23);
    CHECK(boost_generator(mink, 0, 1) == RatMatrix(1, 1));
    CHECK(boost_generator(mink, 4, 3) == RatMatrix(1, 1));
}

TEST_CASE("degree 1/3 swap under lambda exchange") {
    for (SpacetimeKind kind : kAllSpacetimes)
        for (int axis = 1; axis <= 3; ++axis) CHECK(swap_rule_check(spacetime(kind), axis));
}

TEST_CASE("commutation relations hold with one global sign for every degree and spacetime") {
    for (SpacetimeKind kind : kAllSpacetimes) {
        const Spacetime& st = spacetime(kind);
        for (int p = 0; p <= 4; ++p) {
            std::vector<RatMatrix> s, n;
            for (int j = 1; j <= 3; ++j) {
                s.push_back(rotation_generator(p, j));
                n.push_back(boost_generator(st, p, j));
            }
            const Rational ll = st.lambda1 * st.lambda2;
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) {
                    RatMatrix sum_s(s[0].rows(), s[0].cols());
                    RatMatrix sum_n(sum_s.rows(), sum_s.cols());
                    for (int k = 1; k <= 3; ++k) {
                        if (eps(i, j, k) == 0) continue;
                        sum_s = sum_s + s[k - 1].scale(Rational(eps(i, j, k)));
                        sum_n = sum_n + n[k - 1].scale(Rational(eps(i, j, k)));
                    }
                    // Global sign convention: sigma = +1 throughout.
                    CHECK(s[i - 1] * s[j - 1] - s[j - 1] * s[i - 1] == sum_s);
                    CHECK(s[i - 1] * n[j - 1] - n[j - 1] * s[i - 1] == sum_n);
                    CHECK(n[i - 1] * n[j - 1] - n[j - 1] * n[i - 1] == sum_s.scale(-ll));
                }
        }
    }
}

TEST_CASE("degree dimensions") {
    CHECK(degree_dim(0) == 1);
    CHECK(degree_dim(1) == 4);
    CHECK(degree_dim(2) == 6);
    CHECK(degree_dim(3) == 4);
    CHECK(degree_dim(4) == 1);
    CHECK_THROWS_AS(degree_dim(-1), std::invalid_argument);
}
