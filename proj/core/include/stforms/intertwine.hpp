#pragma once

#include "stforms/catalog.hpp"
#include "stforms/form.hpp"
#include "stforms/group.hpp"
#include "stforms/matrix.hpp"
#include "stforms/spacetime.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace stforms {

enum class ConstraintMode { RotationsOnly, Full };

std::string to_string(ConstraintMode mode);
std::optional<ConstraintMode> parse_mode(std::string_view name);

/// Canonical basis of the solution space of the intertwiner equation
/// rho_q . a = a . rho_p for one (spacetime, p, q) pair.
struct IntertwinerSpace {
    SpacetimeKind spacetime;
    int p;
    int q;
    ConstraintMode mode;
    std::vector<RatMatrix> basis;  // each d_q x d_p; vectorize-stack-RREF canonical

    std::size_t dim() const { return basis.size(); }
};

/// The stacked linear system whose kernel is the intertwiner space: rows are
/// G_q (x) 1 - 1 (x) G_p^T for each included generator G.
RatMatrix intertwiner_constraint_matrix(const Spacetime& st, int p, int q, ConstraintMode mode);

IntertwinerSpace solve_intertwiners(const Spacetime& st, int p, int q, ConstraintMode mode);

/// Dimension table indexed [q][p].
using DimGrid = std::array<std::array<std::size_t, 5>, 5>;
DimGrid dimension_grid(const Spacetime& st, ConstraintMode mode);

struct OperatorLabel {
    OperatorTag tag;
    std::string detail;
};

/// Matches the space against the stored catalog up to nonzero scalar; spans
/// not exhausted by the catalog yield an extra Unknown label.
std::vector<OperatorLabel> classify(const IntertwinerSpace& space);

/// Exact form-level equivariance check: pullback(g, a(w)) == a(pullback(g, w))
/// where a maps w's degree to target_degree (the matrix shape alone cannot
/// distinguish degrees 0/4 and 1/3). Throws std::invalid_argument when g does
/// not belong to st's group.
bool check_equivariance(const RatMatrix& a, int target_degree, const Spacetime& st,
                        const GroupElement& g, const Form& w);

/// True iff every rotation and boost generator of st maps the span of the
/// given component columns (d_p x k) into itself.
bool invariant_subspace_check(const Spacetime& st, int p, const RatMatrix& basis_columns);

struct KernelImageReport {
    RatMatrix kernel_columns;  // canonical nullspace basis of a
    RatMatrix image_columns;   // canonical column-space basis of a
    bool kernel_invariant;     // under st's generators on degree p
    bool image_invariant;      // under st's generators on degree q
};
KernelImageReport kernel_image_report(const RatMatrix& a, const Spacetime& st, int p, int q);

}  // namespace stforms
