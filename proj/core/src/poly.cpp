#include "stforms/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace stforms {

Poly4 Poly4::constant(const Rational& c) {
    Poly4 p;
    p.add_term({0, 0, 0, 0}, c);
    return p;
}

Poly4 Poly4::variable(int axis) {
    if (axis < 0 || axis > 3) throw std::invalid_argument("Poly4: variable index must be 0..3");
    Exponents e{0, 0, 0, 0};
    e[axis] = 1;
    return monomial(e, Rational(1));
}

Poly4 Poly4::monomial(const Exponents& e, const Rational& c) {
    for (int x : e)
        if (x < 0) throw std::invalid_argument("Poly4: negative exponent");
    Poly4 p;
    p.add_term(e, c);
    return p;
}

bool Poly4::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0, 0});
}

Rational Poly4::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly4::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly4 Poly4::operator-() const {
    Poly4 p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

Poly4& Poly4::operator+=(const Poly4& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly4& Poly4::operator-=(const Poly4& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly4 operator*(const Poly4& a, const Poly4& b) {
    Poly4 p;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e;
            for (int i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    return p;
}

Poly4 Poly4::scale(const Rational& s) const {
    Poly4 p;
    if (s.is_zero()) return p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, c * s);
    return p;
}

Poly4 Poly4::derivative(int axis) const {
    if (axis < 0 || axis > 3) throw std::invalid_argument("Poly4: variable index must be 0..3");
    Poly4 p;
    for (const auto& [e, c] : terms_) {
        if (e[axis] == 0) continue;
        Exponents d = e;
        d[axis] -= 1;
        p.add_term(d, c * Rational(e[axis]));
    }
    return p;
}

Poly4 Poly4::substitute_affine(const RatMatrix& A, const std::array<Rational, 4>& shift) const {
    if (A.rows() != 4 || A.cols() != 4)
        throw std::invalid_argument("Poly4: affine substitution needs a 4x4 matrix");
    std::array<Poly4, 4> image;  // x_a -> linear polynomial
    for (int a = 0; a < 4; ++a) {
        Poly4 lin = constant(shift[a]);
        for (int b = 0; b < 4; ++b) {
            if (A.at(a, b).is_zero()) continue;
            lin += variable(b).scale(A.at(a, b));
        }
        image[a] = lin;
    }
    // Power cache per variable, grown on demand; shared across terms.
    std::array<std::vector<Poly4>, 4> powers;
    for (int a = 0; a < 4; ++a) powers[a].push_back(constant(Rational(1)));
    auto power = [&](int a, int e) -> const Poly4& {
        while (static_cast<int>(powers[a].size()) <= e)
            powers[a].push_back(powers[a].back() * image[a]);
        return powers[a][e];
    };
    Poly4 out;
    for (const auto& [e, c] : terms_) {
        Poly4 term = constant(c);
        for (int a = 0; a < 4; ++a)
            if (e[a] > 0) term = term * power(a, e[a]);
        out += term;
    }
    return out;
}

std::string Poly4::str() const {
    if (terms_.empty()) return "0";
    static const char* names[4] = {"t", "x", "y", "z"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (int i = 0; i < 4; ++i) {
            if (e[i] == 0) continue;
            os << '*' << names[i];
            if (e[i] > 1) os << '^' << e[i];
        }
    }
    return os.str();
}

}  // namespace stforms
