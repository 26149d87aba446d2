#include "stforms/catalog.hpp"

#include "stforms/generators.hpp"

#include <stdexcept>

namespace stforms {

namespace {

using K = SpacetimeKind;

// Block constructors for the 9 shapes the operators take.
RatMatrix scalar1(int k) {
    RatMatrix m(1, 1);
    m.at(0, 0) = Rational(k);
    return m;
}

// 4x4 [[k, 0],[0, c*I]]
RatMatrix diag_f_a(int k, int c) {
    RatMatrix m(4, 4);
    m.at(0, 0) = Rational(k);
    for (std::size_t i = 1; i < 4; ++i) m.at(i, i) = Rational(c);
    return m;
}

// 6x6 [[ul*I, ur*I],[ll*I, lr*I]]
RatMatrix blocks6(int ul, int ur, int ll, int lr) {
    RatMatrix m(6, 6);
    for (std::size_t i = 0; i < 3; ++i) {
        m.at(i, i) = Rational(ul);
        m.at(i, i + 3) = Rational(ur);
        m.at(i + 3, i) = Rational(ll);
        m.at(i + 3, i + 3) = Rational(lr);
    }
    return m;
}

// 4x1 (k; 0)
RatMatrix col_k(int k) {
    RatMatrix m(4, 1);
    m.at(0, 0) = Rational(k);
    return m;
}

// 1x4 (k, 0^T)
RatMatrix row_k(int k) {
    RatMatrix m(1, 4);
    m.at(0, 0) = Rational(k);
    return m;
}

// 6x4 [[0, u*I],[0, l*I]]
RatMatrix tall64(int u, int l) {
    RatMatrix m(6, 4);
    for (std::size_t i = 0; i < 3; ++i) {
        m.at(i, i + 1) = Rational(u);
        m.at(i + 3, i + 1) = Rational(l);
    }
    return m;
}

// 4x6 [[0^T, 0^T],[lI, rI]]
RatMatrix wide46(int l, int r) {
    RatMatrix m(4, 6);
    for (std::size_t i = 0; i < 3; ++i) {
        m.at(i + 1, i) = Rational(l);
        m.at(i + 1, i + 3) = Rational(r);
    }
    return m;
}

std::vector<CatalogOp> build_catalog() {
    std::vector<CatalogOp> ops;
    auto add = [&](K st, int q, int p, std::string name, OperatorTag tag, std::string detail,
                   RatMatrix m) {
        if (m.rows() != degree_dim(q) || m.cols() != degree_dim(p))
            throw std::logic_error("catalog: shape mismatch for " + name);
        ops.push_back({st, q, p, std::move(name), tag, std::move(detail), std::move(m)});
    };

    for (K st : kAllSpacetimes) {
        const std::string where = to_string(st);
        // Unit operators on every degree.
        add(st, 0, 0, "a00", OperatorTag::Identity, "identity on scalars", scalar1(1));
        add(st, 1, 1, "a11", OperatorTag::Identity, "identity on 1-form components", diag_f_a(1, 1));
        add(st, 2, 2, "a22id", OperatorTag::Identity, "identity on 2-form components",
            blocks6(1, 0, 0, 1));
        add(st, 3, 3, "a33", OperatorTag::Identity, "identity on 3-form components", diag_f_a(1, 1));
        add(st, 4, 4, "a44", OperatorTag::Identity, "identity on 4-form components", scalar1(1));
        // Star family endpoints, shared by all three spacetimes.
        add(st, 4, 0, "a40", OperatorTag::HodgeAnalog, "f -> f dt^dV", scalar1(1));
        add(st, 0, 4, "a04", OperatorTag::HodgeAnalog, "f dt^dV -> f", scalar1(1));
    }

    // Minkowski: the Hodge star on degrees 1..3.
    add(K::Minkowski, 3, 1, "a31", OperatorTag::HodgeAnalog, "f dt + a.dr -> dt^a.dS + f dV",
        diag_f_a(1, 1));
    add(K::Minkowski, 1, 3, "a13", OperatorTag::HodgeAnalog, "dt^a.dS + f dV -> f dt + a.dr",
        diag_f_a(1, 1));
    add(K::Minkowski, 2, 2, "a22", OperatorTag::HodgeAnalog, "dt^a.dr + b.dS -> dt^b.dr - a.dS",
        blocks6(0, 1, -1, 0));

    // Galilei: degenerate star analogs plus the degree +1 family dt^(.).
    add(K::Galilei, 3, 1, "a31", OperatorTag::HodgeAnalog, "f dt + a.dr -> dt^a.dS",
        diag_f_a(0, 1));
    add(K::Galilei, 2, 2, "a22", OperatorTag::HodgeAnalog, "dt^a.dr + b.dS -> dt^b.dr",
        blocks6(0, 1, 0, 0));
    add(K::Galilei, 1, 3, "a13", OperatorTag::HodgeAnalog, "dt^a.dS + f dV -> f dt",
        diag_f_a(1, 0));
    add(K::Galilei, 1, 0, "a10", OperatorTag::DtWedge, "a10 = dt^ on O^0", col_k(1));
    add(K::Galilei, 2, 1, "a21", OperatorTag::DtWedge, "a21 = dt^ on O^1", tall64(1, 0));
    add(K::Galilei, 3, 2, "a32", OperatorTag::DtWedge, "a32 = dt^ on O^2", wide46(0, 1));
    add(K::Galilei, 4, 3, "a43", OperatorTag::DtWedge, "a43 = dt^ on O^3", row_k(1));
    add(K::Galilei, 0, 3, "a03", OperatorTag::Composition, "a03 = a04 . a43", row_k(1));
    add(K::Galilei, 1, 4, "a14", OperatorTag::Composition, "a14 = a10 . a04", col_k(1));

    // Carroll: degenerate star analogs plus the degree -1 family i_{d/dt}.
    add(K::Carroll, 3, 1, "a31", OperatorTag::HodgeAnalog, "f dt + a.dr -> f dV", diag_f_a(1, 0));
    add(K::Carroll, 2, 2, "a22", OperatorTag::HodgeAnalog, "dt^a.dr + b.dS -> a.dS",
        blocks6(0, 0, 1, 0));
    add(K::Carroll, 1, 3, "a13", OperatorTag::HodgeAnalog, "dt^a.dS + f dV -> a.dr",
        diag_f_a(0, 1));
    add(K::Carroll, 0, 1, "a01", OperatorTag::InteriorT, "a01 = i_dt on O^1", row_k(1));
    add(K::Carroll, 1, 2, "a12", OperatorTag::InteriorT, "a12 = i_dt on O^2", wide46(1, 0));
    add(K::Carroll, 2, 3, "a23", OperatorTag::InteriorT, "a23 = i_dt on O^3", tall64(0, 1));
    add(K::Carroll, 3, 4, "a34", OperatorTag::InteriorT, "a34 = i_dt on O^4", col_k(1));
    add(K::Carroll, 3, 0, "a30", OperatorTag::Composition, "a30 = a34 . a40", col_k(1));
    add(K::Carroll, 4, 1, "a41", OperatorTag::Composition, "a41 = a40 . a01", row_k(1));

    return ops;
}

}  // namespace

std::string to_string(OperatorTag tag) {
    switch (tag) {
        case OperatorTag::Zero: return "zero";
        case OperatorTag::Identity: return "identity";
        case OperatorTag::HodgeAnalog: return "hodge_analog";
        case OperatorTag::DtWedge: return "dt_wedge";
        case OperatorTag::InteriorT: return "interior_t";
        case OperatorTag::Composition: return "composition";
        case OperatorTag::Unknown: return "unknown";
    }
    return "?";
}

std::string tag_abbrev(OperatorTag tag) {
    switch (tag) {
        case OperatorTag::Zero: return ".";
        case OperatorTag::Identity: return "id";
        case OperatorTag::HodgeAnalog: return "star";
        case OperatorTag::DtWedge: return "dtw";
        case OperatorTag::InteriorT: return "it";
        case OperatorTag::Composition: return "comp";
        case OperatorTag::Unknown: return "??";
    }
    return "?";
}

const std::vector<CatalogOp>& catalog() {
    static const std::vector<CatalogOp> table = build_catalog();
    return table;
}

std::vector<const CatalogOp*> catalog_at(SpacetimeKind kind, int q, int p) {
    std::vector<const CatalogOp*> out;
    for (const CatalogOp& op : catalog())
        if (op.spacetime == kind && op.q == q && op.p == p) out.push_back(&op);
    return out;
}

const CatalogOp* find_catalog_op(SpacetimeKind kind, const std::string& name) {
    for (const CatalogOp& op : catalog())
        if (op.spacetime == kind && op.name == name) return &op;
    return nullptr;
}

const std::vector<CompositionIdentity>& composition_identities() {
    static const std::vector<CompositionIdentity> ids = {
        {K::Galilei, "a03", "a04", "a43"},
        {K::Galilei, "a14", "a10", "a04"},
        {K::Carroll, "a30", "a34", "a40"},
        {K::Carroll, "a41", "a40", "a01"},
    };
    return ids;
}

const std::vector<InvariantSubspace>& invariant_subspaces() {
    auto cols = [](std::size_t dim, std::vector<std::size_t> idx) {
        RatMatrix m(dim, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j) m.at(idx[j], j) = Rational(1);
        return m;
    };
    static const std::vector<InvariantSubspace> spans = {
        {K::Galilei, 1, cols(4, {0}), "(f;0) in O^1"},
        {K::Galilei, 2, cols(6, {0, 1, 2}), "(a;0) in O^2"},
        {K::Galilei, 3, cols(4, {1, 2, 3}), "(0;a) in O^3"},
        {K::Carroll, 1, cols(4, {1, 2, 3}), "(0;a) in O^1"},
        {K::Carroll, 2, cols(6, {3, 4, 5}), "(0;b) in O^2"},
        {K::Carroll, 3, cols(4, {0}), "(f;0) in O^3"},
    };
    return spans;
}

}  // namespace stforms
