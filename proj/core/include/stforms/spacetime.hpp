#pragma once

#include "stforms/matrix.hpp"
#include "stforms/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace stforms {

enum class SpacetimeKind { Minkowski, Galilei, Carroll };

/// One of the three flat (1+3)-dimensional homogeneous spacetimes, carrying
/// its boost parameters and the distinguished clock covector / time vector
/// in adapted coordinates.
struct Spacetime {
    SpacetimeKind kind;
    Rational lambda1;          // (1,1) Minkowski, (0,1) Galilei, (1,0) Carroll
    Rational lambda2;
    RatMatrix clock_covector;  // 1x4, the dt direction: (1,0,0,0)
    RatMatrix time_vector;     // 4x1, the d/dt direction: (1;0;0;0)
};

const Spacetime& spacetime(SpacetimeKind kind);

constexpr std::array<SpacetimeKind, 3> kAllSpacetimes = {
    SpacetimeKind::Minkowski, SpacetimeKind::Galilei, SpacetimeKind::Carroll};

std::string to_string(SpacetimeKind kind);
std::optional<SpacetimeKind> parse_spacetime(std::string_view name);

}  // namespace stforms
