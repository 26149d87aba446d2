#pragma once

#include "stforms/matrix.hpp"
#include "stforms/spacetime.hpp"

#include <cstddef>
#include <vector>

namespace stforms {

/// Component-space dimension of p-forms in the 1+3 parametrization: 1,4,6,4,1.
std::size_t degree_dim(int p);

/// 3x3 matrix with entries eps_{ijk} for the given axis j; acts as v -> e_j x v.
RatMatrix cross_matrix(int axis);

/// Rotation generator S_j on p-form components (d_p x d_p).
RatMatrix rotation_generator(int p, int axis);

/// Boost generator N_j on p-form components for explicit boost parameters.
RatMatrix boost_generator(const Rational& lambda1, const Rational& lambda2, int p, int axis);

/// Boost generator N_j for the given spacetime's (lambda1, lambda2).
RatMatrix boost_generator(const Spacetime& st, int p, int axis);

/// Degree-1/degree-3 exchange under (lambda1,lambda2) -> (lambda2,lambda1):
/// true iff boost generators with swapped parameters on degree 1 match the
/// unswapped ones on degree 3 (and vice versa) for the given axis.
bool swap_rule_check(const Spacetime& st, int axis);

/// All six generators (S_1..S_3 then N_1..N_3) on p-form components.
std::vector<RatMatrix> all_generators(const Spacetime& st, int p, bool include_boosts);

}  // namespace stforms
