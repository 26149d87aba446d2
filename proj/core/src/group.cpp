#include "stforms/group.hpp"

#include "stforms/generators.hpp"
#include "stforms/linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

namespace stforms {

namespace {

bool is_special_orthogonal3(const RatMatrix& R) {
    return R.rows() == 3 && R.cols() == 3 && R.transpose() * R == RatMatrix::identity(3) &&
           R.det() == Rational(1);
}

RatMatrix minkowski_eta() {
    RatMatrix eta(4, 4);
    eta.at(0, 0) = Rational(1);
    for (std::size_t i = 1; i < 4; ++i) eta.at(i, i) = Rational(-1);
    return eta;
}

// Sorted p-subsets of {0,1,2,3} in lexicographic tuple order (ascending
// bitmask order is not lexicographic for 2-subsets).
std::vector<std::vector<std::size_t>> sorted_subsets(int p) {
    std::vector<std::vector<std::size_t>> out;
    for (unsigned mask = 0; mask < 16; ++mask) {
        if (std::popcount(mask) != p) continue;
        std::vector<std::size_t> s;
        for (std::size_t b = 0; b < 4; ++b)
            if (mask & (1u << b)) s.push_back(b);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool is_member(SpacetimeKind kind, const RatMatrix& A) {
    if (A.rows() != 4 || A.cols() != 4) return false;
    switch (kind) {
        case SpacetimeKind::Galilei: {
            if (A.at(0, 0) != Rational(1)) return false;
            for (std::size_t j = 1; j < 4; ++j)
                if (!A.at(0, j).is_zero()) return false;
            return is_special_orthogonal3(A.submatrix({1, 2, 3}, {1, 2, 3}));
        }
        case SpacetimeKind::Carroll: {
            if (A.at(0, 0) != Rational(1)) return false;
            for (std::size_t i = 1; i < 4; ++i)
                if (!A.at(i, 0).is_zero()) return false;
            return is_special_orthogonal3(A.submatrix({1, 2, 3}, {1, 2, 3}));
        }
        case SpacetimeKind::Minkowski: {
            const RatMatrix eta = minkowski_eta();
            return A.transpose() * eta * A == eta && A.det() == Rational(1) &&
                   A.at(0, 0) > Rational(0);
        }
    }
    return false;
}

GroupElement make_rotation(SpacetimeKind kind, const RatMatrix& R) {
    if (!is_special_orthogonal3(R))
        throw std::invalid_argument("make_rotation: R must satisfy R^T R = 1 and det R = 1");
    RatMatrix A(4, 4);
    A.at(0, 0) = Rational(1);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) A.at(i + 1, j + 1) = R.at(i, j);
    return GroupElement{kind, A};
}

GroupElement make_boost(SpacetimeKind kind, const std::array<Rational, 3>& v) {
    RatMatrix A = RatMatrix::identity(4);
    switch (kind) {
        case SpacetimeKind::Galilei:
            for (std::size_t i = 0; i < 3; ++i) A.at(i + 1, 0) = v[i];
            break;
        case SpacetimeKind::Carroll:
            for (std::size_t i = 0; i < 3; ++i) A.at(0, i + 1) = v[i];
            break;
        case SpacetimeKind::Minkowski:
            throw std::invalid_argument(
                "make_boost: Minkowski boosts need a rational (cosh, sinh) pair; "
                "use make_lorentz_boost(axis, c, s)");
    }
    return GroupElement{kind, A};
}

GroupElement make_lorentz_boost(int axis, const Rational& c, const Rational& s) {
    if (axis < 1 || axis > 3) throw std::invalid_argument("make_lorentz_boost: axis must be 1..3");
    if (c * c - s * s != Rational(1) || !(c > Rational(0)))
        throw std::invalid_argument("make_lorentz_boost: pair must satisfy c^2 - s^2 = 1, c > 0");
    RatMatrix A = RatMatrix::identity(4);
    A.at(0, 0) = c;
    A.at(0, axis) = s;
    A.at(axis, 0) = s;
    A.at(axis, axis) = c;
    return GroupElement{SpacetimeKind::Minkowski, A};
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    if (g.spacetime != h.spacetime)
        throw std::invalid_argument("GroupElement: mixed-spacetime product");
    return GroupElement{g.spacetime, g.matrix * h.matrix};
}

GroupElement inverse(const GroupElement& g) {
    return GroupElement{g.spacetime, inverse(g.matrix)};
}

RatMatrix lex_to_components(int p) {
    switch (p) {
        case 0:
        case 4: {
            RatMatrix t(1, 1);
            t.at(0, 0) = Rational(1);
            return t;
        }
        case 1:
            // lex order (dt, dx, dy, dz) is already the (f; a) column
            return RatMatrix::identity(4);
        case 2: {
            // lex: dt^dx, dt^dy, dt^dz, dx^dy, dx^dz, dy^dz
            // column: (a1,a2,a3, b1,b2,b3) with dS2 = dz^dx = -dx^dz
            RatMatrix t(6, 6);
            t.at(0, 0) = Rational(1);
            t.at(1, 1) = Rational(1);
            t.at(2, 2) = Rational(1);
            t.at(3, 5) = Rational(1);
            t.at(4, 4) = Rational(-1);
            t.at(5, 3) = Rational(1);
            return t;
        }
        case 3: {
            // lex: dt^dx^dy, dt^dx^dz, dt^dy^dz, dx^dy^dz
            // column: (f, a1, a2, a3) with dt^dS2 = -dt^dx^dz
            RatMatrix t(4, 4);
            t.at(0, 3) = Rational(1);
            t.at(1, 2) = Rational(1);
            t.at(2, 1) = Rational(-1);
            t.at(3, 0) = Rational(1);
            return t;
        }
        default:
            throw std::invalid_argument("lex_to_components: degree must be in 0..4");
    }
}

RatMatrix finite_rep(const GroupElement& g, int p) {
    const std::size_t d = degree_dim(p);
    // Dual action on covectors: dx^a -> sum_b (A^{-1})_{ab} dx^b.
    const RatMatrix B = inverse(g.matrix);
    const auto subsets = sorted_subsets(p);
    RatMatrix lex(d, d);
    for (std::size_t col = 0; col < subsets.size(); ++col)
        for (std::size_t row = 0; row < subsets.size(); ++row)
            lex.at(row, col) = B.submatrix(subsets[col], subsets[row]).det();
    const RatMatrix t = lex_to_components(p);
    return t * lex * t.transpose();
}

}  // namespace stforms
