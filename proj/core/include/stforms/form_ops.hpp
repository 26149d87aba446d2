#pragma once

#include "stforms/form.hpp"
#include "stforms/group.hpp"
#include "stforms/matrix.hpp"
#include "stforms/spacetime.hpp"

#include <array>

namespace stforms {

/// Affine point map x -> A x + shift; pullbacks compose coefficients with the
/// map and transform basis covectors by A^T.
struct AffineMap {
    RatMatrix A;                    // 4x4
    std::array<Rational, 4> shift;  // translation part

    static AffineMap linear(const RatMatrix& A);
    static AffineMap from_group(const GroupElement& g) { return linear(g.matrix); }
};

/// Exterior derivative; throws std::domain_error for degree-4 input (no
/// 5-forms exist in the model).
Form exterior_derivative(const Form& w);

/// Graded-commutative exterior product; throws std::domain_error when the
/// degrees sum past 4.
Form wedge(const Form& a, const Form& b);

/// Interior product with a constant 4-vector; linear antiderivation of
/// degree -1. Throws std::domain_error for degree-0 input.
Form interior_product(const std::array<Rational, 4>& X, const Form& w);

Form pullback(const AffineMap& map, const Form& w);
Form pullback(const GroupElement& g, const Form& w);

/// Component matrix of the spacetime's Hodge star on degree-p forms
/// (d_{4-p} x d_p), exactly per the per-degree action tables.
RatMatrix hodge_component_matrix(SpacetimeKind kind, int p);

/// Hodge star of the given spacetime: degree p -> 4-p.
Form hodge_star(SpacetimeKind kind, const Form& w);
inline Form hodge_star(const Spacetime& st, const Form& w) { return hodge_star(st.kind, w); }

/// The clock one-form dt and the degree +1 operator dt ^ (.).
Form dt_form();
Form dt_wedge(const Form& w);

/// The degree -1 operator i_{d/dt}(.).
Form time_interior(const Form& w);

/// Applies a (d_q x d_p) matrix slot-wise to the 1+3 component column of a
/// degree-p form, producing a degree-q form. Throws std::invalid_argument on
/// degree/shape mismatch.
Form apply_componentwise(const RatMatrix& op, int target_degree, const Form& w);

}  // namespace stforms
