#pragma once

#include "stforms/matrix.hpp"
#include "stforms/spacetime.hpp"

#include <string>
#include <vector>

namespace stforms {

enum class OperatorTag { Zero, Identity, HodgeAnalog, DtWedge, InteriorT, Composition, Unknown };

std::string to_string(OperatorTag tag);
std::string tag_abbrev(OperatorTag tag);

/// One cataloged intertwining operator between form-component spaces.
struct CatalogOp {
    SpacetimeKind spacetime;
    int q;        // target degree
    int p;        // source degree
    std::string name;  // e.g. "a32"
    OperatorTag tag;
    std::string detail;
    RatMatrix matrix;  // d_q x d_p
};

/// Full table of nonzero intertwining operators (identities included) for
/// all three spacetimes.
const std::vector<CatalogOp>& catalog();

std::vector<const CatalogOp*> catalog_at(SpacetimeKind kind, int q, int p);
const CatalogOp* find_catalog_op(SpacetimeKind kind, const std::string& name);

/// Identities of the form lhs == left * right among cataloged operators.
struct CompositionIdentity {
    SpacetimeKind spacetime;
    std::string lhs;
    std::string left;
    std::string right;
};
const std::vector<CompositionIdentity>& composition_identities();

/// Component-column spans that are invariant under the full generator set of
/// their spacetime (and, for the Minkowski counterparts, are not).
struct InvariantSubspace {
    SpacetimeKind spacetime;
    int p;
    RatMatrix basis_columns;  // d_p x k
    std::string detail;
};
const std::vector<InvariantSubspace>& invariant_subspaces();

}  // namespace stforms
