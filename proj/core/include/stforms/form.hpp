#pragma once

#include "stforms/poly.hpp"

#include <array>
#include <vector>

namespace stforms {

/// Differential form of homogeneous degree p in 0..4 on flat (1+3) spacetime
/// with polynomial coefficients. Internally held on the 16-element coordinate
/// basis dt^{0|1} ^ dx^I, indexed by bitmask (bit 0 = dt, 1 = dx, 2 = dy,
/// 3 = dz); only masks of popcount p carry coefficients. The external
/// encoding is the 1+3 component column (f / (f;a) / (a;b) / (f;a) / f).
class Form {
public:
    explicit Form(int degree);

    static Form zero(int degree) { return Form(degree); }
    /// Builds from the coordinate-basis coefficient table; throws if a mask
    /// of the wrong popcount carries a nonzero coefficient.
    static Form from_basis16(int degree, const std::array<Poly4, 16>& coeff);
    /// Builds from the 1+3 component column (size d_p).
    static Form from_components(int degree, const std::vector<Poly4>& components);

    int degree() const { return degree_; }
    const std::array<Poly4, 16>& basis16() const { return coeff_; }
    const Poly4& coeff(unsigned mask) const { return coeff_[mask]; }
    /// Sets a coordinate-basis coefficient; mask popcount must equal degree.
    void set_coeff(unsigned mask, const Poly4& c);

    /// The 1+3 component column, length d_p.
    std::vector<Poly4> components() const;

    bool is_zero() const;
    friend bool operator==(const Form& a, const Form& b) {
        return a.degree_ == b.degree_ && a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    Form operator-() const;
    friend Form operator+(const Form& a, const Form& b);
    friend Form operator-(const Form& a, const Form& b);
    Form scale(const Rational& s) const;

    std::string str() const;

private:
    int degree_;
    std::array<Poly4, 16> coeff_;
};

}  // namespace stforms
