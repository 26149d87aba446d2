#include "stforms/form.hpp"

#include "stforms/generators.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace stforms {

namespace {

constexpr unsigned kMaskDt = 1u;
constexpr unsigned kMaskDx = 2u;
constexpr unsigned kMaskDy = 4u;
constexpr unsigned kMaskDz = 8u;

void check_degree(int p) {
    if (p < 0 || p > 4) throw std::invalid_argument("Form: degree must be in 0..4");
}

}  // namespace

Form::Form(int degree) : degree_(degree) { check_degree(degree); }

Form Form::from_basis16(int degree, const std::array<Poly4, 16>& coeff) {
    Form f(degree);
    for (unsigned mask = 0; mask < 16; ++mask) {
        if (coeff[mask].is_zero()) continue;
        if (std::popcount(mask) != degree)
            throw std::invalid_argument("Form: coefficient on basis element of wrong degree");
        f.coeff_[mask] = coeff[mask];
    }
    return f;
}

void Form::set_coeff(unsigned mask, const Poly4& c) {
    if (mask >= 16 || std::popcount(mask) != degree_)
        throw std::invalid_argument("Form: basis mask does not match degree");
    coeff_[mask] = c;
}

Form Form::from_components(int degree, const std::vector<Poly4>& c) {
    check_degree(degree);
    if (c.size() != degree_dim(degree))
        throw std::invalid_argument("Form: component column has wrong length");
    Form f(degree);
    switch (degree) {
        case 0:
            f.coeff_[0] = c[0];
            break;
        case 1:
            f.coeff_[kMaskDt] = c[0];
            f.coeff_[kMaskDx] = c[1];
            f.coeff_[kMaskDy] = c[2];
            f.coeff_[kMaskDz] = c[3];
            break;
        case 2:
            // dt^(a.dr): a_i on dt^dx_i
            f.coeff_[kMaskDt | kMaskDx] = c[0];
            f.coeff_[kMaskDt | kMaskDy] = c[1];
            f.coeff_[kMaskDt | kMaskDz] = c[2];
            // b.dS with dS = (dy^dz, dz^dx, dx^dy)
            f.coeff_[kMaskDy | kMaskDz] = c[3];
            f.coeff_[kMaskDx | kMaskDz] = -c[4];
            f.coeff_[kMaskDx | kMaskDy] = c[5];
            break;
        case 3:
            f.coeff_[kMaskDx | kMaskDy | kMaskDz] = c[0];
            f.coeff_[kMaskDt | kMaskDy | kMaskDz] = c[1];
            f.coeff_[kMaskDt | kMaskDx | kMaskDz] = -c[2];
            f.coeff_[kMaskDt | kMaskDx | kMaskDy] = c[3];
            break;
        case 4:
            f.coeff_[15] = c[0];
            break;
    }
    return f;
}

std::vector<Poly4> Form::components() const {
    switch (degree_) {
        case 0:
            return {coeff_[0]};
        case 1:
            return {coeff_[kMaskDt], coeff_[kMaskDx], coeff_[kMaskDy], coeff_[kMaskDz]};
        case 2:
            return {coeff_[kMaskDt | kMaskDx], coeff_[kMaskDt | kMaskDy],
                    coeff_[kMaskDt | kMaskDz], coeff_[kMaskDy | kMaskDz],
                    -coeff_[kMaskDx | kMaskDz], coeff_[kMaskDx | kMaskDy]};
        case 3:
            return {coeff_[kMaskDx | kMaskDy | kMaskDz], coeff_[kMaskDt | kMaskDy | kMaskDz],
                    -coeff_[kMaskDt | kMaskDx | kMaskDz], coeff_[kMaskDt | kMaskDx | kMaskDy]};
        case 4:
            return {coeff_[15]};
    }
    throw std::logic_error("unreachable");
}

bool Form::is_zero() const {
    for (const auto& c : coeff_)
        if (!c.is_zero()) return false;
    return true;
}

Form Form::operator-() const {
    Form f(degree_);
    for (unsigned m = 0; m < 16; ++m) f.coeff_[m] = -coeff_[m];
    return f;
}

Form operator+(const Form& a, const Form& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("Form: degree mismatch in addition");
    Form f(a.degree_);
    for (unsigned m = 0; m < 16; ++m) f.coeff_[m] = a.coeff_[m] + b.coeff_[m];
    return f;
}

Form operator-(const Form& a, const Form& b) {
    if (a.degree_ != b.degree_)
        throw std::invalid_argument("Form: degree mismatch in subtraction");
    Form f(a.degree_);
    for (unsigned m = 0; m < 16; ++m) f.coeff_[m] = a.coeff_[m] - b.coeff_[m];
    return f;
}

Form Form::scale(const Rational& s) const {
    Form f(degree_);
    for (unsigned m = 0; m < 16; ++m) f.coeff_[m] = coeff_[m].scale(s);
    return f;
}

std::string Form::str() const {
    static const char* names[4] = {"dt", "dx", "dy", "dz"};
    std::ostringstream os;
    bool first = true;
    for (unsigned m = 0; m < 16; ++m) {
        if (coeff_[m].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << '(' << coeff_[m].str() << ')';
        for (int b = 0; b < 4; ++b)
            if (m & (1u << b)) os << ' ' << names[b];
    }
    if (first) os << "0 (degree " << degree_ << ")";
    return os.str();
}

}  // namespace stforms
