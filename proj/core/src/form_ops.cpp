#include "stforms/form_ops.hpp"

#include "stforms/generators.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace stforms {

namespace {

// Sign of dx^{m1} ^ dx^{m2} relative to the sorted basis element of m1|m2:
// parity of the number of pairs (i in m1, j in m2) with i > j.
int merge_sign(unsigned m1, unsigned m2) {
    int inversions = 0;
    for (int j = 0; j < 4; ++j) {
        if (!(m2 & (1u << j))) continue;
        for (int i = j + 1; i < 4; ++i)
            if (m1 & (1u << i)) ++inversions;
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

AffineMap AffineMap::linear(const RatMatrix& A) {
    if (A.rows() != 4 || A.cols() != 4)
        throw std::invalid_argument("AffineMap: matrix must be 4x4");
    return AffineMap{A, {Rational(0), Rational(0), Rational(0), Rational(0)}};
}

Form exterior_derivative(const Form& w) {
    if (w.degree() == 4)
        throw std::domain_error("exterior_derivative: no 5-forms on a 4-dimensional spacetime");
    Form out(w.degree() + 1);
    for (unsigned mask = 0; mask < 16; ++mask) {
        const Poly4& c = w.coeff(mask);
        if (c.is_zero()) continue;
        for (int v = 0; v < 4; ++v) {
            if (mask & (1u << v)) continue;
            const Poly4 dc = c.derivative(v);
            if (dc.is_zero()) continue;
            const unsigned target = mask | (1u << v);
            const int sgn = merge_sign(1u << v, mask);
            Poly4 acc = out.coeff(target);
            acc += (sgn == 1) ? dc : -dc;
            out.set_coeff(target, acc);
        }
    }
    return out;
}

Form wedge(const Form& a, const Form& b) {
    if (a.degree() + b.degree() > 4)
        throw std::domain_error("wedge: degree overflow past the top form");
    Form out(a.degree() + b.degree());
    for (unsigned ma = 0; ma < 16; ++ma) {
        const Poly4& ca = a.coeff(ma);
        if (ca.is_zero()) continue;
        for (unsigned mb = 0; mb < 16; ++mb) {
            if (ma & mb) continue;
            const Poly4& cb = b.coeff(mb);
            if (cb.is_zero()) continue;
            const unsigned target = ma | mb;
            const int sgn = merge_sign(ma, mb);
            Poly4 prod = ca * cb;
            Poly4 acc = out.coeff(target);
            acc += (sgn == 1) ? prod : -prod;
            out.set_coeff(target, acc);
        }
    }
    return out;
}

Form interior_product(const std::array<Rational, 4>& X, const Form& w) {
    if (w.degree() == 0)
        throw std::domain_error("interior_product: undefined on 0-forms");
    Form out(w.degree() - 1);
    for (unsigned mask = 0; mask < 16; ++mask) {
        const Poly4& c = w.coeff(mask);
        if (c.is_zero()) continue;
        int position = 0;  // rank of the slot within the ascending wedge
        for (int b = 0; b < 4; ++b) {
            if (!(mask & (1u << b))) continue;
            if (!X[b].is_zero()) {
                const unsigned target = mask & ~(1u << b);
                Poly4 acc = out.coeff(target);
                Poly4 contrib = c.scale(X[b]);
                acc += (position % 2 == 0) ? contrib : -contrib;
                out.set_coeff(target, acc);
            }
            ++position;
        }
    }
    return out;
}

Form pullback(const AffineMap& map, const Form& w) {
    Form out(w.degree());
    for (unsigned mask = 0; mask < 16; ++mask) {
        const Poly4& c = w.coeff(mask);
        if (c.is_zero()) continue;
        const Poly4 pulled = c.substitute_affine(map.A, map.shift);
        // Expand the wedge of the transformed covectors dx^a -> sum_b A_ab dx^b.
        std::map<unsigned, Rational> partial{{0u, Rational(1)}};
        for (int a = 0; a < 4; ++a) {
            if (!(mask & (1u << a))) continue;
            std::map<unsigned, Rational> next;
            for (const auto& [pm, val] : partial) {
                for (int b = 0; b < 4; ++b) {
                    const Rational& aab = map.A.at(a, b);
                    if (aab.is_zero() || (pm & (1u << b))) continue;
                    const int sgn = merge_sign(pm, 1u << b);
                    Rational contrib = val * aab;
                    if (sgn < 0) contrib = -contrib;
                    auto [it, inserted] = next.emplace(pm | (1u << b), contrib);
                    if (!inserted) {
                        it->second += contrib;
                        if (it->second.is_zero()) next.erase(it);
                    }
                }
            }
            partial = std::move(next);
        }
        for (const auto& [pm, val] : partial) {
            Poly4 acc = out.coeff(pm);
            acc += pulled.scale(val);
            out.set_coeff(pm, acc);
        }
    }
    return out;
}

Form pullback(const GroupElement& g, const Form& w) {
    return pullback(AffineMap::from_group(g), w);
}

RatMatrix hodge_component_matrix(SpacetimeKind kind, int p) {
    if (p < 0 || p > 4) throw std::invalid_argument("hodge: degree must be in 0..4");
    auto deg1or3 = [](int f_coeff, int a_coeff) {
        RatMatrix m(4, 4);
        m.at(0, 0) = Rational(f_coeff);
        for (std::size_t i = 1; i < 4; ++i) m.at(i, i) = Rational(a_coeff);
        return m;
    };
    auto deg2 = [](int ul, int ur, int ll, int lr) {
        RatMatrix m(6, 6);
        for (std::size_t i = 0; i < 3; ++i) {
            m.at(i, i) = Rational(ul);
            m.at(i, i + 3) = Rational(ur);
            m.at(i + 3, i) = Rational(ll);
            m.at(i + 3, i + 3) = Rational(lr);
        }
        return m;
    };
    auto scalar = [](int v) {
        RatMatrix m(1, 1);
        m.at(0, 0) = Rational(v);
        return m;
    };
    switch (kind) {
        case SpacetimeKind::Minkowski:
            switch (p) {
                case 0: return scalar(1);            // f -> f dt^dV
                case 1: return deg1or3(1, 1);        // f dt + a.dr -> dt^a.dS + f dV
                case 2: return deg2(0, 1, -1, 0);    // -> dt^b.dr - a.dS
                case 3: return deg1or3(1, 1);        // -> f dt + a.dr
                case 4: return scalar(-1);           // f dt^dV -> -f
            }
            break;
        case SpacetimeKind::Galilei:
            switch (p) {
                case 0: return scalar(1);            // f -> f dt^dV
                case 1: return deg1or3(0, 1);        // -> dt^a.dS
                case 2: return deg2(0, 1, 0, 0);     // -> dt^b.dr
                case 3: return deg1or3(1, 0);        // -> f dt
                case 4: return scalar(-1);           // -> -f
            }
            break;
        case SpacetimeKind::Carroll:
            switch (p) {
                case 0: return scalar(1);            // f -> f dt^dV
                case 1: return deg1or3(1, 0);        // -> f dV
                case 2: return deg2(0, 0, -1, 0);    // -> -a.dS
                case 3: return deg1or3(0, 1);        // -> a.dr
                case 4: return scalar(-1);           // -> -f
            }
            break;
    }
    throw std::logic_error("unreachable");
}

Form hodge_star(SpacetimeKind kind, const Form& w) {
    return apply_componentwise(hodge_component_matrix(kind, w.degree()), 4 - w.degree(), w);
}

Form dt_form() {
    Form dt(1);
    dt.set_coeff(1u, Poly4::constant(Rational(1)));
    return dt;
}

Form dt_wedge(const Form& w) {
    if (w.degree() > 3) throw std::domain_error("dt_wedge: degree overflow past the top form");
    return wedge(dt_form(), w);
}

Form time_interior(const Form& w) {
    return interior_product({Rational(1), Rational(0), Rational(0), Rational(0)}, w);
}

Form apply_componentwise(const RatMatrix& op, int target_degree, const Form& w) {
    const std::vector<Poly4> in = w.components();
    if (op.cols() != in.size() || op.rows() != degree_dim(target_degree))
        throw std::invalid_argument("apply_componentwise: operator shape does not match degrees");
    std::vector<Poly4> out(op.rows());
    for (std::size_t i = 0; i < op.rows(); ++i)
        for (std::size_t j = 0; j < op.cols(); ++j) {
            if (op.at(i, j).is_zero()) continue;
            out[i] += in[j].scale(op.at(i, j));
        }
    return Form::from_components(target_degree, out);
}

}  // namespace stforms
