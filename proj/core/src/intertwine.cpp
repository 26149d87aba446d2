#include "stforms/intertwine.hpp"

#include "stforms/form_ops.hpp"
#include "stforms/generators.hpp"
#include "stforms/linalg.hpp"

#include <stdexcept>

namespace stforms {

std::string to_string(ConstraintMode mode) {
    return mode == ConstraintMode::Full ? "full" : "rotations_only";
}

std::optional<ConstraintMode> parse_mode(std::string_view name) {
    if (name == "full") return ConstraintMode::Full;
    if (name == "rotations_only" || name == "rotations-only") return ConstraintMode::RotationsOnly;
    return std::nullopt;
}

RatMatrix intertwiner_constraint_matrix(const Spacetime& st, int p, int q, ConstraintMode mode) {
    const std::size_t dp = degree_dim(p);
    const std::size_t dq = degree_dim(q);
    const RatMatrix ip = RatMatrix::identity(dp);
    const RatMatrix iq = RatMatrix::identity(dq);
    const auto gens_p = all_generators(st, p, mode == ConstraintMode::Full);
    const auto gens_q = all_generators(st, q, mode == ConstraintMode::Full);
    RatMatrix system(0, dq * dp);
    for (std::size_t k = 0; k < gens_p.size(); ++k) {
        const RatMatrix block = RatMatrix::kronecker(gens_q[k], ip) -
                                RatMatrix::kronecker(iq, gens_p[k].transpose());
        system = system.rows() == 0 ? block : RatMatrix::vstack(system, block);
    }
    return system;
}

IntertwinerSpace solve_intertwiners(const Spacetime& st, int p, int q, ConstraintMode mode) {
    const std::size_t dp = degree_dim(p);
    const std::size_t dq = degree_dim(q);
    const RatMatrix system = intertwiner_constraint_matrix(st, p, q, mode);
    const std::vector<RatMatrix> kernel = nullspace_basis(system);

    IntertwinerSpace space{st.kind, p, q, mode, {}};
    if (kernel.empty()) return space;

    // Canonicalize: vectorized row-major, stacked as rows, RREF'd.
    RatMatrix stacked(kernel.size(), dq * dp);
    for (std::size_t i = 0; i < kernel.size(); ++i)
        for (std::size_t k = 0; k < dq * dp; ++k) stacked.at(i, k) = kernel[i].at(k, 0);
    const RatMatrix canon = row_space_basis(stacked);
    for (std::size_t i = 0; i < canon.rows(); ++i) {
        std::vector<std::size_t> one_row{i}, all_cols(dq * dp);
        for (std::size_t k = 0; k < dq * dp; ++k) all_cols[k] = k;
        space.basis.push_back(
            RatMatrix::from_vec_row(canon.submatrix(one_row, all_cols), dq, dp));
    }
    return space;
}

DimGrid dimension_grid(const Spacetime& st, ConstraintMode mode) {
    DimGrid grid{};
    for (int q = 0; q <= 4; ++q)
        for (int p = 0; p <= 4; ++p) grid[q][p] = solve_intertwiners(st, p, q, mode).dim();
    return grid;
}

namespace {

RatMatrix stack_vecs(const std::vector<RatMatrix>& mats) {
    RatMatrix stacked(mats.size(), mats.empty() ? 0 : mats[0].rows() * mats[0].cols());
    for (std::size_t i = 0; i < mats.size(); ++i) {
        const RatMatrix v = mats[i].vec_row();
        for (std::size_t k = 0; k < v.cols(); ++k) stacked.at(i, k) = v.at(0, k);
    }
    return stacked;
}

}  // namespace

std::vector<OperatorLabel> classify(const IntertwinerSpace& space) {
    if (space.basis.empty()) return {{OperatorTag::Zero, "zero space"}};

    const RatMatrix basis_rows = stack_vecs(space.basis);
    std::vector<OperatorLabel> labels;
    std::vector<RatMatrix> matched;
    for (const CatalogOp* op : catalog_at(space.spacetime, space.q, space.p)) {
        if (in_row_span(basis_rows, op->matrix.vec_row())) {
            labels.push_back({op->tag, op->name + ": " + op->detail});
            matched.push_back(op->matrix);
        }
    }
    // Completeness: every basis element must be reachable from the catalog.
    bool complete = !matched.empty();
    if (complete) {
        const RatMatrix matched_rows = stack_vecs(matched);
        for (const RatMatrix& b : space.basis)
            if (!in_row_span(matched_rows, b.vec_row())) {
                complete = false;
                break;
            }
    }
    if (!complete)
        labels.push_back({OperatorTag::Unknown, "basis element outside the stored catalog"});
    return labels;
}

bool check_equivariance(const RatMatrix& a, int target_degree, const Spacetime& st,
                        const GroupElement& g, const Form& w) {
    if (g.spacetime != st.kind || !is_member(st.kind, g.matrix))
        throw std::invalid_argument("check_equivariance: element is not in the spacetime's group");
    if (a.cols() != degree_dim(w.degree()) || a.rows() != degree_dim(target_degree))
        throw std::invalid_argument("check_equivariance: operator/form degree mismatch");
    const Form lhs = pullback(g, apply_componentwise(a, target_degree, w));
    const Form rhs = apply_componentwise(a, target_degree, pullback(g, w));
    return lhs == rhs;
}

bool invariant_subspace_check(const Spacetime& st, int p, const RatMatrix& basis_columns) {
    if (basis_columns.rows() != degree_dim(p))
        throw std::invalid_argument("invariant_subspace_check: column height must be d_p");
    for (const RatMatrix& g : all_generators(st, p, /*include_boosts=*/true))
        if (!columns_in_span(basis_columns, g * basis_columns)) return false;
    return true;
}

KernelImageReport kernel_image_report(const RatMatrix& a, const Spacetime& st, int p, int q) {
    if (a.rows() != degree_dim(q) || a.cols() != degree_dim(p))
        throw std::invalid_argument("kernel_image_report: operator shape does not match degrees");
    const std::vector<RatMatrix> kernel = nullspace_basis(a);
    RatMatrix kernel_cols(degree_dim(p), kernel.size());
    for (std::size_t j = 0; j < kernel.size(); ++j)
        for (std::size_t i = 0; i < kernel_cols.rows(); ++i)
            kernel_cols.at(i, j) = kernel[j].at(i, 0);
    const RatMatrix image_cols = a.is_zero() ? RatMatrix(degree_dim(q), 0)
                                             : column_space_basis(a);
    KernelImageReport report{kernel_cols, image_cols, true, true};
    if (kernel_cols.cols() > 0)
        report.kernel_invariant = invariant_subspace_check(st, p, kernel_cols);
    if (image_cols.cols() > 0)
        report.image_invariant = invariant_subspace_check(st, q, image_cols);
    return report;
}

}  // namespace stforms
