#include "stforms/generators.hpp"
#include "stforms/group.hpp"
#include "stforms/linalg.hpp"
#include "stforms/rng.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace stforms;

namespace {

const RatMatrix kRot345 = RatMatrix::from_rows({
    {Rational(BigInt(3), BigInt(5)), Rational(BigInt(-4), BigInt(5)), Rational(0)},
    {Rational(BigInt(4), BigInt(5)), Rational(BigInt(3), BigInt(5)), Rational(0)},
    {Rational(0), Rational(0), Rational(1)},
});

}  // namespace

TEST_CASE("make_boost produces the finite boost matrices") {
    const GroupElement gal =
        make_boost(SpacetimeKind::Galilei, {Rational(1), Rational(0), Rational(0)});
    CHECK(gal.matrix == RatMatrix::from_ints(
                            {{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK(is_member(SpacetimeKind::Galilei, gal.matrix));

    const GroupElement car =
        make_boost(SpacetimeKind::Carroll, {Rational(0), Rational(2), Rational(0)});
    CHECK(car.matrix == RatMatrix::from_ints(
                            {{1, 0, 2, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK(is_member(SpacetimeKind::Carroll, car.matrix));

    const Rational c(BigInt(5), BigInt(3)), s(BigInt(4), BigInt(3));
    const GroupElement mink = make_lorentz_boost(1, c, s);
    CHECK(mink.matrix.at(0, 0) == c);
    CHECK(mink.matrix.at(0, 1) == s);
    CHECK(mink.matrix.at(1, 0) == s);
    CHECK(mink.matrix.at(1, 1) == c);
    CHECK(mink.matrix.at(2, 2) == Rational(1));
    CHECK(is_member(SpacetimeKind::Minkowski, mink.matrix));

    CHECK_THROWS_AS(make_lorentz_boost(1, Rational(2), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(
        make_boost(SpacetimeKind::Minkowski, {Rational(1), Rational(0), Rational(0)}),
        std::invalid_argument);
}

TEST_CASE("make_rotation validates orthogonality and orientation") {
    const GroupElement g = make_rotation(SpacetimeKind::Galilei, kRot345);
    CHECK(is_member(SpacetimeKind::Galilei, g.matrix));
    CHECK(is_member(SpacetimeKind::Carroll, g.matrix));
    CHECK(is_member(SpacetimeKind::Minkowski, g.matrix));

    CHECK(make_rotation(SpacetimeKind::Carroll, RatMatrix::identity(3)).matrix ==
          RatMatrix::identity(4));

    RatMatrix reflect = RatMatrix::identity(3);
    reflect.at(0, 0) = Rational(-1);
    CHECK_THROWS_AS(make_rotation(SpacetimeKind::Galilei, reflect), std::invalid_argument);
    CHECK_THROWS_AS(make_rotation(SpacetimeKind::Galilei,
                                  RatMatrix::from_ints({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}})),
                    std::invalid_argument);
}

TEST_CASE("membership predicates reject the wrong block structure") {
    const RatMatrix gal_boost = make_boost(SpacetimeKind::Galilei,
                                           {Rational(1), Rational(2), Rational(3)})
                                    .matrix;
    CHECK(is_member(SpacetimeKind::Galilei, gal_boost));
    CHECK_FALSE(is_member(SpacetimeKind::Carroll, gal_boost));
    CHECK_FALSE(is_member(SpacetimeKind::Minkowski, gal_boost));
}

TEST_CASE("finite_rep of the identity is the identity, degree 0 and 4 are trivial") {
    Rng rng(31);
    const GroupElement id = make_rotation(SpacetimeKind::Galilei, RatMatrix::identity(3));
    for (int p = 0; p <= 4; ++p) CHECK(finite_rep(id, p) == RatMatrix::identity(degree_dim(p)));
    for (SpacetimeKind kind : kAllSpacetimes)
        for (int i = 0; i < 10; ++i) {
            const GroupElement g = rng.group_element(kind);
            CHECK(finite_rep(g, 0) == RatMatrix::identity(1));
            CHECK(finite_rep(g, 4) == RatMatrix::identity(1));
        }
}

TEST_CASE("sign convention lock: finite boosts vs generators on nilpotent degrees") {
    // Locked repo-wide: finite_rep(make_boost(st, v), p) == 1 - sum_j v_j N_j
    // exactly for the Galilei and Carroll families (N's there square to zero).
    for (SpacetimeKind kind : {SpacetimeKind::Galilei, SpacetimeKind::Carroll}) {
        const Spacetime& st = spacetime(kind);
        const std::array<Rational, 3> v{Rational(2), Rational(BigInt(-1), BigInt(3)),
                                        Rational(5)};
        const GroupElement g = make_boost(kind, v);
        for (int p = 0; p <= 4; ++p) {
            RatMatrix n(degree_dim(p), degree_dim(p));
            for (int j = 1; j <= 3; ++j) n = n + boost_generator(st, p, j).scale(v[j - 1]);
            CHECK(finite_rep(g, p) == RatMatrix::identity(degree_dim(p)) - n);
        }
    }
}

TEST_CASE("finite_rep of a rotation acts block-diagonally by the same rotation on degree 2") {
    const GroupElement g = make_rotation(SpacetimeKind::Minkowski, kRot345);
    const RatMatrix rep = finite_rep(g, 2);
    RatMatrix expected(6, 6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            expected.at(i, j) = kRot345.at(i, j);
            expected.at(i + 3, j + 3) = kRot345.at(i, j);
        }
    CHECK(rep == expected);
}

TEST_CASE("finite_rep is a homomorphism on 100 random pairs per spacetime") {
    Rng rng(1234);
    for (SpacetimeKind kind : kAllSpacetimes)
        for (int i = 0; i < 100; ++i) {
            const GroupElement a = rng.group_element(kind);
            const GroupElement b = rng.group_element(kind);
            const GroupElement ab = a * b;
            for (int p = 1; p <= 3; ++p)
                CHECK(finite_rep(ab, p) == finite_rep(a, p) * finite_rep(b, p));
        }
}

TEST_CASE("group inverse round-trips") {
    Rng rng(8);
    for (SpacetimeKind kind : kAllSpacetimes)
        for (int i = 0; i < 10; ++i) {
            const GroupElement g = rng.group_element(kind);
            CHECK((g * inverse(g)).matrix == RatMatrix::identity(4));
            CHECK(is_member(kind, inverse(g).matrix));
        }
}
