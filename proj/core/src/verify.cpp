#include "stforms/verify.hpp"

#include "stforms/catalog.hpp"
#include "stforms/form_ops.hpp"
#include "stforms/generators.hpp"
#include "stforms/intertwine.hpp"
#include "stforms/json_io.hpp"
#include "stforms/linalg.hpp"
#include "stforms/rng.hpp"

#include <sstream>

namespace stforms {

namespace {

std::string describe_counterexample(const std::string& group, const std::string& what,
                                    const GroupElement* g, const Form* w) {
    std::ostringstream os;
    os << "{\"group\":\"" << group << "\",\"what\":\"" << what << "\"";
    if (g) os << ",\"element\":" << group_element_to_json(*g);
    if (w) os << ",\"form\":" << form_to_json(*w);
    os << "}";
    return os.str();
}

}  // namespace

VerifyReport run_verification(const VerifyConfig& cfg) {
    VerifyReport report;
    Rng rng(cfg.seed);

    std::vector<CatalogOp> ops = catalog();
    if (cfg.tamper && !ops.empty()) {
        // Negative control: corrupt the Galilei a22 analog.
        for (CatalogOp& op : ops)
            if (op.spacetime == SpacetimeKind::Galilei && op.name == "a22")
                op.matrix.at(0, 3) = Rational(2);
    }

    auto note_failure = [&](VerifyGroupResult& g, const std::string& what,
                            const GroupElement* el, const Form* w) {
        ++g.failures;
        if (report.first_counterexample.empty())
            report.first_counterexample = describe_counterexample(g.name, what, el, w);
    };

    {
        VerifyGroupResult g{"equivariance", 0, 0, 0};
        for (const CatalogOp& op : ops) {
            const Spacetime& st = spacetime(op.spacetime);
            for (int t = 0; t < cfg.trials; ++t) {
                const GroupElement el = rng.group_element(op.spacetime);
                const Form w = rng.form(op.p);
                ++g.checks;
                if (!check_equivariance(op.matrix, op.q, st, el, w))
                    note_failure(g, op.name + " is not equivariant", &el, &w);
            }
        }
        report.groups.push_back(g);
    }

    {
        VerifyGroupResult g{"d-pullback-commutation", 0, 0, 0};
        for (SpacetimeKind kind : kAllSpacetimes)
            for (int t = 0; t < cfg.trials; ++t) {
                const GroupElement el = rng.group_element(kind);
                const int p = static_cast<int>(rng.int_in(0, 3));
                const Form w = rng.form(p);
                ++g.checks;
                if (pullback(el, exterior_derivative(w)) != exterior_derivative(pullback(el, w)))
                    note_failure(g, "pullback does not commute with d", &el, &w);
            }
        report.groups.push_back(g);
    }

    {
        VerifyGroupResult g{"composition-identities", 0, 0, 0};
        for (const CompositionIdentity& id : composition_identities()) {
            ++g.checks;
            const CatalogOp* lhs = nullptr;
            const CatalogOp* left = nullptr;
            const CatalogOp* right = nullptr;
            for (const CatalogOp& op : ops) {
                if (op.spacetime != id.spacetime) continue;
                if (op.name == id.lhs) lhs = &op;
                if (op.name == id.left) left = &op;
                if (op.name == id.right) right = &op;
            }
            if (!lhs || !left || !right || lhs->matrix != left->matrix * right->matrix)
                note_failure(g, id.lhs + " != " + id.left + " * " + id.right, nullptr, nullptr);
        }
        report.groups.push_back(g);
    }

    {
        VerifyGroupResult g{"invariant-subspaces", 0, 0, 0};
        for (const InvariantSubspace& s : invariant_subspaces()) {
            ++g.checks;
            if (!invariant_subspace_check(spacetime(s.spacetime), s.p, s.basis_columns))
                note_failure(g, s.detail + " not invariant", nullptr, nullptr);
            // The same span must fail for the Lorentz representation.
            ++g.checks;
            if (invariant_subspace_check(spacetime(SpacetimeKind::Minkowski), s.p,
                                         s.basis_columns))
                note_failure(g, s.detail + " unexpectedly Lorentz-invariant", nullptr, nullptr);
        }
        for (const char* name : {"a31", "a32"}) {
            const CatalogOp* op = find_catalog_op(SpacetimeKind::Galilei, name);
            ++g.checks;
            const KernelImageReport ki =
                kernel_image_report(op->matrix, spacetime(SpacetimeKind::Galilei), op->p, op->q);
            if (!ki.kernel_invariant || !ki.image_invariant)
                note_failure(g, std::string(name) + " kernel/image not invariant", nullptr,
                             nullptr);
        }
        report.groups.push_back(g);
    }

    {
        VerifyGroupResult g{"solver-catalog-classification", 0, 0, 0};
        for (SpacetimeKind kind : kAllSpacetimes) {
            const Spacetime& st = spacetime(kind);
            for (int q = 0; q <= 4; ++q)
                for (int p = 0; p <= 4; ++p) {
                    const IntertwinerSpace space =
                        solve_intertwiners(st, p, q, ConstraintMode::Full);
                    ++g.checks;
                    // Every tampered/cataloged matrix at this cell must span
                    // the solver output and vice versa.
                    bool bad = false;
                    std::vector<RatMatrix> cell;
                    for (const CatalogOp& op : ops)
                        if (op.spacetime == kind && op.q == q && op.p == p)
                            cell.push_back(op.matrix);
                    if (cell.empty()) {
                        bad = space.dim() != 0;
                    } else {
                        RatMatrix cat_rows(cell.size(), degree_dim(q) * degree_dim(p));
                        for (std::size_t i = 0; i < cell.size(); ++i)
                            for (std::size_t k = 0; k < cat_rows.cols(); ++k)
                                cat_rows.at(i, k) = cell[i].vec_row().at(0, k);
                        if (space.dim() != rank(cat_rows)) bad = true;
                        for (const RatMatrix& c : cell) {
                            RatMatrix basis_rows(space.dim(), cat_rows.cols());
                            for (std::size_t i = 0; i < space.dim(); ++i)
                                for (std::size_t k = 0; k < cat_rows.cols(); ++k)
                                    basis_rows.at(i, k) = space.basis[i].vec_row().at(0, k);
                            if (space.dim() == 0 || !in_row_span(basis_rows, c.vec_row()))
                                bad = true;
                        }
                    }
                    if (bad) {
                        if (cfg.allow_unknown)
                            ++g.warnings;
                        else
                            note_failure(g,
                                         "cell (" + std::to_string(q) + "," + std::to_string(p) +
                                             ") of " + to_string(kind) +
                                             " disagrees with the catalog",
                                         nullptr, nullptr);
                    }
                }
        }
        report.groups.push_back(g);
    }

    {
        VerifyGroupResult g{"negative-witness", 0, 0, 0};
        // The Minkowski star on 1-forms must fail Galilei equivariance.
        const GroupElement boost =
            make_boost(SpacetimeKind::Galilei, {Rational(1), Rational(0), Rational(0)});
        Form dx(1);
        dx.set_coeff(2u, Poly4::constant(Rational(1)));
        const RatMatrix mink_star = hodge_component_matrix(SpacetimeKind::Minkowski, 1);
        ++g.checks;
        const Form lhs = pullback(boost, apply_componentwise(mink_star, 3, dx));
        const Form rhs = apply_componentwise(mink_star, 3, pullback(boost, dx));
        if (lhs == rhs)
            note_failure(g, "Minkowski star unexpectedly Galilei-equivariant", &boost, &dx);
        report.groups.push_back(g);
    }

    return report;
}

}  // namespace stforms
