#include "stforms/generators.hpp"

#include <stdexcept>

namespace stforms {

namespace {

void check_degree(int p) {
    if (p < 0 || p > 4) throw std::invalid_argument("degree must be in 0..4");
}

void check_axis(int axis) {
    if (axis < 1 || axis > 3) throw std::invalid_argument("axis must be in 1..3");
}

int levi_civita(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    // parity of the permutation (i,j,k) of (1,2,3)
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

// Embeds a 3x3 block at (ro, co) of an n x n zero matrix.
void put_block(RatMatrix& m, std::size_t ro, std::size_t co, const RatMatrix& b,
               const Rational& scale) {
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(ro + i, co + j) = scale * b.at(i, j);
}

}  // namespace

std::size_t degree_dim(int p) {
    check_degree(p);
    static constexpr std::size_t dims[5] = {1, 4, 6, 4, 1};
    return dims[p];
}

RatMatrix cross_matrix(int axis) {
    check_axis(axis);
    RatMatrix l(3, 3);
    for (int i = 1; i <= 3; ++i)
        for (int k = 1; k <= 3; ++k) l.at(i - 1, k - 1) = Rational(levi_civita(i, axis, k));
    return l;
}

RatMatrix rotation_generator(int p, int axis) {
    check_degree(p);
    check_axis(axis);
    const RatMatrix l = cross_matrix(axis);
    switch (p) {
        case 0:
        case 4:
            return RatMatrix(1, 1);
        case 1:
        case 3: {
            RatMatrix s(4, 4);
            put_block(s, 1, 1, l, Rational(1));
            return s;
        }
        case 2: {
            RatMatrix s(6, 6);
            put_block(s, 0, 0, l, Rational(1));
            put_block(s, 3, 3, l, Rational(1));
            return s;
        }
    }
    throw std::logic_error("unreachable");
}

RatMatrix boost_generator(const Rational& lambda1, const Rational& lambda2, int p, int axis) {
    check_degree(p);
    check_axis(axis);
    switch (p) {
        case 0:
        case 4:
            return RatMatrix(1, 1);
        case 1: {
            RatMatrix n(4, 4);
            n.at(0, axis) = lambda2;
            n.at(axis, 0) = lambda1;
            return n;
        }
        case 2: {
            const RatMatrix l = cross_matrix(axis);
            RatMatrix n(6, 6);
            put_block(n, 0, 3, l, -lambda2);
            put_block(n, 3, 0, l, lambda1);
            return n;
        }
        case 3: {
            RatMatrix n(4, 4);
            n.at(0, axis) = lambda1;
            n.at(axis, 0) = lambda2;
            return n;
        }
    }
    throw std::logic_error("unreachable");
}

RatMatrix boost_generator(const Spacetime& st, int p, int axis) {
    return boost_generator(st.lambda1, st.lambda2, p, axis);
}

bool swap_rule_check(const Spacetime& st, int axis) {
    return boost_generator(st.lambda2, st.lambda1, 1, axis) ==
               boost_generator(st.lambda1, st.lambda2, 3, axis) &&
           boost_generator(st.lambda2, st.lambda1, 3, axis) ==
               boost_generator(st.lambda1, st.lambda2, 1, axis);
}

std::vector<RatMatrix> all_generators(const Spacetime& st, int p, bool include_boosts) {
    std::vector<RatMatrix> gens;
    for (int j = 1; j <= 3; ++j) gens.push_back(rotation_generator(p, j));
    if (include_boosts)
        for (int j = 1; j <= 3; ++j) gens.push_back(boost_generator(st, p, j));
    return gens;
}

}  // namespace stforms
