#pragma once

#include "stforms/matrix.hpp"
#include "stforms/rational.hpp"

#include <array>
#include <map>
#include <string>

namespace stforms {

/// Exponent tuple in the fixed variable order (t, x, y, z).
using Exponents = std::array<int, 4>;

/// Multivariate polynomial in (t, x, y, z) over Rational. Stored as a sparse
/// ordered term map with no zero coefficients and non-negative exponents.
class Poly4 {
public:
    Poly4() = default;
    static Poly4 constant(const Rational& c);
    static Poly4 variable(int axis);  // 0 = t, 1 = x, 2 = y, 3 = z
    static Poly4 monomial(const Exponents& e, const Rational& c);

    const std::map<Exponents, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The coefficient of the given exponent tuple (zero if absent).
    Rational coefficient(const Exponents& e) const;

    Poly4 operator-() const;
    Poly4& operator+=(const Poly4& o);
    Poly4& operator-=(const Poly4& o);
    friend Poly4 operator+(Poly4 a, const Poly4& b) { return a += b; }
    friend Poly4 operator-(Poly4 a, const Poly4& b) { return a -= b; }
    friend Poly4 operator*(const Poly4& a, const Poly4& b);
    Poly4 scale(const Rational& s) const;

    friend bool operator==(const Poly4& a, const Poly4& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly4& a, const Poly4& b) { return !(a == b); }

    Poly4 derivative(int axis) const;

    /// Substitutes x_a -> sum_b A[a][b] x_b + t[a] (exact composition with an
    /// affine map; A is 4x4).
    Poly4 substitute_affine(const RatMatrix& A, const std::array<Rational, 4>& shift) const;

    std::string str() const;

private:
    std::map<Exponents, Rational> terms_;

    void add_term(const Exponents& e, const Rational& c);
};

}  // namespace stforms
