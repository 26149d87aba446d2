#pragma once

#include "stforms/form.hpp"
#include "stforms/group.hpp"
#include "stforms/matrix.hpp"
#include "stforms/spacetime.hpp"

#include <cstdint>

namespace stforms {

/// Deterministic, platform-independent PRNG (splitmix64) with exact-value
/// helpers. The same seed always produces the same stream, so every
/// randomized suite is reproducible byte for byte.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    /// Uniform-ish integer in [lo, hi] (bias-free range reduction is
    /// unnecessary here; determinism is the contract).
    long long int_in(long long lo, long long hi);

    /// Small rational with numerator in [-max_num, max_num], denominator in [1, max_den].
    Rational rational(int max_num = 9, int max_den = 3);
    Rational nonzero_rational(int max_num = 9, int max_den = 3);

    Poly4 poly(int max_terms = 3, int max_total_degree = 3);
    Form form(int degree);

    /// Exactly orthogonal rational rotation from a random integer quaternion.
    RatMatrix rotation3();

    GroupElement rotation_element(SpacetimeKind kind);
    GroupElement boost_element(SpacetimeKind kind);
    /// Product of a random boost and a random rotation.
    GroupElement group_element(SpacetimeKind kind);

private:
    std::uint64_t state_;
};

}  // namespace stforms
