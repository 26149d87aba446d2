#pragma once

#include "stforms/matrix.hpp"
#include "stforms/spacetime.hpp"

#include <array>

namespace stforms {

/// A finite element of the homogeneous Lorentz, Galilei or Carroll group,
/// stored as its 4x4 matrix acting on adapted coordinates (t, x, y, z).
struct GroupElement {
    SpacetimeKind spacetime;
    RatMatrix matrix;  // 4x4
};

/// Membership predicate for the stated group:
///  - Galilei:  [[1,0],[v,R]] with R^T R = 1, det R = 1
///  - Carroll:  [[1,v^T],[0,R]] with R^T R = 1, det R = 1
///  - Minkowski: A^T eta A = eta with eta = diag(1,-1,-1,-1), det A = 1, A00 > 0
bool is_member(SpacetimeKind kind, const RatMatrix& A);

/// blockdiag(1, R) with R exactly orthogonal of determinant 1; valid in all
/// three spacetimes. Throws std::invalid_argument on non-orthogonal input.
GroupElement make_rotation(SpacetimeKind kind, const RatMatrix& R);

/// Finite Galilei/Carroll boost with rational velocity v. Throws for
/// Minkowski; use make_lorentz_boost for the rational hyperbolic pair form.
GroupElement make_boost(SpacetimeKind kind, const std::array<Rational, 3>& v);

/// Finite Minkowski boost along the given axis with rational hyperbolic pair
/// (c, s); requires c^2 - s^2 = 1 and c > 0.
GroupElement make_lorentz_boost(int axis, const Rational& c, const Rational& s);

GroupElement operator*(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

/// Matrix M(g) on p-form component columns such that for a constant
/// coefficient p-form with column c, the pullback of the form under the
/// inverse map x -> A^{-1} x has column M(g) c. Computed by inducing the
/// p-th exterior power of the dual action of A on the coordinate basis and
/// converting to the 1+3 parametrization. Group homomorphism:
/// finite_rep(g*h, p) == finite_rep(g, p) * finite_rep(h, p).
RatMatrix finite_rep(const GroupElement& g, int p);

/// Signed change of basis from the lexicographic exterior-power basis
/// (sorted coordinate subsets) to the 1+3 component column of Eq.-style
/// ordering; exposed for the form engine.
RatMatrix lex_to_components(int p);

}  // namespace stforms
