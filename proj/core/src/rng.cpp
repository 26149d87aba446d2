#include "stforms/rng.hpp"

#include "stforms/generators.hpp"

#include <bit>
#include <stdexcept>

namespace stforms {

std::uint64_t Rng::next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

long long Rng::int_in(long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("Rng: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next_u64() % span);
}

Rational Rng::rational(int max_num, int max_den) {
    return Rational(BigInt(int_in(-max_num, max_num)), BigInt(int_in(1, max_den)));
}

Rational Rng::nonzero_rational(int max_num, int max_den) {
    Rational r = rational(max_num, max_den);
    while (r.is_zero()) r = rational(max_num, max_den);
    return r;
}

Poly4 Rng::poly(int max_terms, int max_total_degree) {
    Poly4 p;
    const long long terms = int_in(0, max_terms);
    for (long long k = 0; k < terms; ++k) {
        Exponents e{0, 0, 0, 0};
        const long long total = int_in(0, max_total_degree);
        for (long long d = 0; d < total; ++d) ++e[int_in(0, 3)];
        p += Poly4::monomial(e, rational());
    }
    return p;
}

Form Rng::form(int degree) {
    Form f(degree);
    for (unsigned mask = 0; mask < 16; ++mask)
        if (std::popcount(mask) == degree) f.set_coeff(mask, poly());
    return f;
}

RatMatrix Rng::rotation3() {
    long long a = 0, b = 0, c = 0, d = 0;
    while (a == 0 && b == 0 && c == 0 && d == 0) {
        a = int_in(-4, 4);
        b = int_in(-4, 4);
        c = int_in(-4, 4);
        d = int_in(-4, 4);
    }
    const Rational n(a * a + b * b + c * c + d * d);
    auto entry = [&](long long v) { return Rational(v) / n; };
    RatMatrix r(3, 3);
    r.at(0, 0) = entry(a * a + b * b - c * c - d * d);
    r.at(0, 1) = entry(2 * (b * c - a * d));
    r.at(0, 2) = entry(2 * (b * d + a * c));
    r.at(1, 0) = entry(2 * (b * c + a * d));
    r.at(1, 1) = entry(a * a - b * b + c * c - d * d);
    r.at(1, 2) = entry(2 * (c * d - a * b));
    r.at(2, 0) = entry(2 * (b * d - a * c));
    r.at(2, 1) = entry(2 * (c * d + a * b));
    r.at(2, 2) = entry(a * a - b * b - c * c + d * d);
    return r;
}

GroupElement Rng::rotation_element(SpacetimeKind kind) {
    return make_rotation(kind, rotation3());
}

GroupElement Rng::boost_element(SpacetimeKind kind) {
    if (kind == SpacetimeKind::Minkowski) {
        // Rational point on the unit hyperbola: c = (1+m^2)/(1-m^2), s = 2m/(1-m^2).
        Rational m = rational(3, 4);
        while ((m * m) == Rational(1)) m = rational(3, 4);
        const Rational den = Rational(1) - m * m;
        const Rational c = (Rational(1) + m * m) / den;
        const Rational s = (m + m) / den;
        const int axis = static_cast<int>(int_in(1, 3));
        if (c > Rational(0)) return make_lorentz_boost(axis, c, s);
        return make_lorentz_boost(axis, -c, -s);
    }
    return make_boost(kind, {rational(), rational(), rational()});
}

GroupElement Rng::group_element(SpacetimeKind kind) {
    return boost_element(kind) * rotation_element(kind);
}

}  // namespace stforms
