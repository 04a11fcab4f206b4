#include "hopfd2/algebra.hpp"

#include <array>

namespace hopfd2 {

SVec Algebra::product(const SVec& a, const SVec& b) const {
    return mul.apply(sv::kron(a, b, dim));
}

Matrix Algebra::left_mult(const SVec& a) const {
    Matrix m(dim, dim);
    for (int j = 0; j < dim; ++j) m.col_mut(j) = product(a, sv::unit(j));
    return m;
}

Matrix Algebra::right_mult(const SVec& a) const {
    Matrix m(dim, dim);
    for (int j = 0; j < dim; ++j) m.col_mut(j) = product(sv::unit(j), a);
    return m;
}

Algebra Algebra::opposite() const {
    Algebra o = *this;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) o.mul.col_mut(i * dim + j) = mul.col(j * dim + i);
    return o;
}

std::optional<std::string> Algebra::validate() const {
    if (mul.rows() != dim || mul.cols() != dim * dim)
        return std::string("multiplication table has wrong shape");
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            SVec ij = mul.col(i * dim + j);
            for (int k = 0; k < dim; ++k) {
                SVec lhs = product(ij, sv::unit(k));
                SVec rhs = product(sv::unit(i), mul.col(j * dim + k));
                if (!sv::equal(lhs, rhs))
                    return "associativity fails on (e" + std::to_string(i) + " e" +
                           std::to_string(j) + ") e" + std::to_string(k);
            }
        }
    for (int i = 0; i < dim; ++i) {
        if (!sv::equal(product(unit, sv::unit(i)), sv::unit(i)) ||
            !sv::equal(product(sv::unit(i), unit), sv::unit(i)))
            return "unit law fails on e" + std::to_string(i);
    }
    return std::nullopt;
}

bool Algebra::is_commutative() const {
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (!sv::equal(mul.col(i * dim + j), mul.col(j * dim + i))) return false;
    return true;
}

Algebra Algebra::from_constants(const Field& f, int dim, const std::vector<std::vector<SVec>>& c,
                                const SVec& unit) {
    Algebra a;
    a.field = f;
    a.dim = dim;
    a.mul = Matrix(dim, dim * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a.mul.col_mut(i * dim + j) = c.at(i).at(j);
    a.unit = unit;
    return a;
}

Algebra Algebra::ground(const Field& f) {
    Algebra a;
    a.field = f;
    a.dim = 1;
    a.mul = Matrix(1, 1);
    a.mul.col_mut(0) = sv::unit(0, Scalar::in(f, 1));
    a.unit = sv::unit(0, Scalar::in(f, 1));
    return a;
}

Algebra Algebra::group(const Field& f, const std::vector<std::vector<int>>& t) {
    int n = static_cast<int>(t.size());
    Algebra a;
    a.field = f;
    a.dim = n;
    a.mul = Matrix(n, n * n);
    int e = -1;
    for (int g = 0; g < n; ++g) {
        bool id = true;
        for (int h = 0; h < n; ++h) {
            a.mul.col_mut(g * n + h) = sv::unit(t[g][h], Scalar::in(f, 1));
            if (t[g][h] != h) id = false;
        }
        if (id) e = g;
    }
    if (e < 0) throw InputError("group table has no identity");
    a.unit = sv::unit(e, Scalar::in(f, 1));
    return a;
}

Algebra Algebra::cyclic_group(const Field& f, int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) t[g][h] = (g + h) % n;
    return group(f, t);
}

std::vector<std::vector<int>> s3_table() {
    // Permutations of {0,1,2} as images; composition (gh)(x) = g(h(x)).
    const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                                      {1, 2, 0},
                                                      {2, 0, 1},
                                                      {1, 0, 2},
                                                      {0, 2, 1},
                                                      {2, 1, 0}}};
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int g = 0; g < 6; ++g)
        for (int h = 0; h < 6; ++h) {
            std::array<int, 3> c{};
            for (int x = 0; x < 3; ++x) c[x] = perms[g][perms[h][x]];
            for (int k = 0; k < 6; ++k)
                if (perms[k] == c) t[g][h] = k;
        }
    return t;
}

std::vector<int> group_inverses(const std::vector<std::vector<int>>& t) {
    int n = static_cast<int>(t.size());
    int e = 0;
    for (int g = 0; g < n; ++g) {
        bool id = true;
        for (int h = 0; h < n; ++h)
            if (t[g][h] != h) id = false;
        if (id) e = g;
    }
    std::vector<int> inv(n, -1);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (t[g][h] == e) inv[g] = h;
    return inv;
}

Algebra Algebra::s3(const Field& f) { return group(f, s3_table()); }

Algebra Algebra::matrices(const Field& f, int n) {
    int d = n * n;
    Algebra a;
    a.field = f;
    a.dim = d;
    a.mul = Matrix(d, d * d);
    SVec unit;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (j == k) a.mul.col_mut((i * n + j) * d + (k * n + l)) = sv::unit(i * n + l, Scalar::in(f, 1));
    for (int i = 0; i < n; ++i) unit.emplace_back(i * n + i, Scalar::in(f, 1));
    a.unit = unit;
    return a;
}

Algebra Algebra::functions(const Field& f, int n) {
    Algebra a;
    a.field = f;
    a.dim = n;
    a.mul = Matrix(n, n * n);
    SVec unit;
    for (int i = 0; i < n; ++i) {
        a.mul.col_mut(i * n + i) = sv::unit(i, Scalar::in(f, 1));
        unit.emplace_back(i, Scalar::in(f, 1));
    }
    a.unit = unit;
    return a;
}

}  // namespace hopfd2
