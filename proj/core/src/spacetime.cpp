#include "stforms/spacetime.hpp"

#include <stdexcept>

namespace stforms {

namespace {

Spacetime make(SpacetimeKind kind, int l1, int l2) {
    RatMatrix xi(1, 4);
    xi.at(0, 0) = Rational(1);
    RatMatrix tv(4, 1);
    tv.at(0, 0) = Rational(1);
    return Spacetime{kind, Rational(l1), Rational(l2), xi, tv};
}

}  // namespace

const Spacetime& spacetime(SpacetimeKind kind) {
    static const Spacetime minkowski = make(SpacetimeKind::Minkowski, 1, 1);
    static const Spacetime galilei = make(SpacetimeKind::Galilei, 0, 1);
    static const Spacetime carroll = make(SpacetimeKind::Carroll, 1, 0);
    switch (kind) {
        case SpacetimeKind::Minkowski: return minkowski;
        case SpacetimeKind::Galilei: return galilei;
        case SpacetimeKind::Carroll: return carroll;
    }
    throw std::invalid_argument("spacetime: unknown kind");
}

std::string to_string(SpacetimeKind kind) {
    switch (kind) {
        case SpacetimeKind::Minkowski: return "minkowski";
        case SpacetimeKind::Galilei: return "galilei";
        case SpacetimeKind::Carroll: return "carroll";
    }
    return "?";
}

std::optional<SpacetimeKind> parse_spacetime(std::string_view name) {
    if (name == "minkowski" || name == "lorentz") return SpacetimeKind::Minkowski;
    if (name == "galilei") return SpacetimeKind::Galilei;
    if (name == "carroll") return SpacetimeKind::Carroll;
    return std::nullopt;
}

}  // namespace stforms
