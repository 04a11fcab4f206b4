#include "hopfd2/catalog.hpp"

#include <algorithm>
#include <numeric>

namespace hopfd2 {

FrobeniusExtension group_extension(const std::string& name, const Field& f,
                                   const std::vector<std::vector<int>>& table, const std::vector<int>& subgroup) {
    int n = static_cast<int>(table.size());
    int k = static_cast<int>(subgroup.size());
    std::vector<std::vector<int>> sub(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            int g = table[subgroup[a]][subgroup[b]];
            auto it = std::find(subgroup.begin(), subgroup.end(), g);
            if (it == subgroup.end()) throw InputError(name + ": subgroup not closed");
            sub[a][b] = static_cast<int>(it - subgroup.begin());
        }
    Scalar one = Scalar::in(f, 1);
    FrobeniusExtension e;
    e.name = name;
    e.N = Algebra::group(f, sub);
    e.M = Algebra::group(f, table);
    e.incl = Matrix(n, k);
    e.phi = Matrix(k, n);
    for (int a = 0; a < k; ++a) {
        e.incl.col_mut(a) = sv::unit(subgroup[a], one);
        e.phi.col_mut(subgroup[a]) = sv::unit(a, one);
    }
    std::vector<int> inv = group_inverses(table);
    std::vector<bool> covered(n, false);
    for (int g = 0; g < n; ++g) {
        if (covered[g]) continue;
        for (int h : subgroup) covered[table[g][h]] = true;
        e.dual_basis.emplace_back(sv::unit(g, one), sv::unit(inv[g], one));
    }
    return e;
}

FrobeniusExtension matrix_extension(const std::string& name, const Field& f, int n) {
    Scalar one = Scalar::in(f, 1);
    FrobeniusExtension e;
    e.name = name;
    e.N = Algebra::ground(f);
    e.M = Algebra::matrices(f, n);
    e.incl = Matrix::from_columns(n * n, {e.M.unit});
    e.phi = Matrix(1, n * n);
    for (int a = 0; a < n; ++a) e.phi.col_mut(a * n + a) = sv::unit(0, one);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) e.dual_basis.emplace_back(sv::unit(b * n + a, one), sv::unit(a * n + b, one));
    return e;
}

FrobeniusExtension trivial_extension(const Field& f) {
    Scalar one = Scalar::in(f, 1);
    FrobeniusExtension e;
    e.name = "trivial";
    e.N = Algebra::ground(f);
    e.M = Algebra::ground(f);
    e.incl = Matrix::identity(1);
    e.phi = Matrix::identity(1);
    e.dual_basis.emplace_back(sv::unit(0, one), sv::unit(0, one));
    return e;
}

std::vector<std::string> extension_names() { return {"trivial", "qc2", "qc2-in-qc4", "mat2", "qs3"}; }

bool is_extension_name(const std::string& name) {
    auto n = extension_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

namespace {

std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) t[g][h] = (g + h) % n;
    return t;
}

}  // namespace

FrobeniusExtension catalog_extension(const std::string& name, const Field& f) {
    if (name == "trivial") return trivial_extension(f);
    if (name == "qc2") return group_extension(name, f, cyclic_table(2), {0});
    if (name == "qc2-in-qc4") return group_extension(name, f, cyclic_table(4), {0, 2});
    if (name == "mat2") return matrix_extension(name, f, 2);
    if (name == "qs3") return group_extension(name, f, s3_table(), {0});
    throw InputError("unknown catalog extension: " + name);
}

namespace {

int identity_of(const std::vector<std::vector<int>>& t) {
    int n = static_cast<int>(t.size());
    for (int g = 0; g < n; ++g) {
        bool id = true;
        for (int h = 0; h < n; ++h) id = id && t[g][h] == h;
        if (id) return g;
    }
    throw InputError("group table has no identity");
}

// Shared shape of a Hopf algebra viewed as a Hopf algebroid over k.
HopfAlgebroid over_ground(const std::string& name, const Field& f, const Algebra& A, const Matrix& gamma,
                          const Matrix& eps, const Matrix& S) {
    HopfAlgebroid h;
    h.name = name;
    Matrix unit = Matrix::from_columns(A.dim, {A.unit});
    h.left = {A, Algebra::ground(f), unit, unit, gamma, eps};
    h.right = {A, Algebra::ground(f), unit, unit, gamma, eps};
    h.S = S;
    h.S_inv = S;
    return h;
}

}  // namespace

HopfExample group_hopf(const std::string& name, const Field& f, const std::vector<std::vector<int>>& table) {
    Scalar one = Scalar::in(f, 1);
    Algebra A = Algebra::group(f, table);
    int n = A.dim;
    auto inv = group_inverses(table);
    Matrix gamma(n * n, n), eps(1, n), S(n, n);
    SVec sum;
    for (int g = 0; g < n; ++g) {
        gamma.col_mut(g) = sv::unit(g * n + g, one);
        eps.col_mut(g) = sv::unit(0, one);
        S.col_mut(g) = sv::unit(inv[g], one);
        sum.emplace_back(g, one);
    }
    return {over_ground(name, f, A, gamma, eps, S), sum};
}

HopfExample function_hopf(const std::string& name, const Field& f, const std::vector<std::vector<int>>& table) {
    Scalar one = Scalar::in(f, 1);
    Algebra A = Algebra::functions(f, static_cast<int>(table.size()));
    int n = A.dim;
    int e = identity_of(table);
    auto inv = group_inverses(table);
    Matrix gamma(n * n, n), eps(1, n), S(n, n);
    std::vector<std::vector<std::pair<int, Scalar>>> cols(n);
    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) cols[table[y][z]].emplace_back(y * n + z, one);
    for (int x = 0; x < n; ++x) {
        gamma.col_mut(x) = sv::collect(std::move(cols[x]));
        if (x == e) eps.col_mut(x) = sv::unit(0, one);
        S.col_mut(x) = sv::unit(inv[x], one);
    }
    return {over_ground(name, f, A, gamma, eps, S), sv::unit(e, one)};
}

HopfExample trivial_hopf(const Field& f) {
    Scalar one = Scalar::in(f, 1);
    Algebra k = Algebra::ground(f);
    Matrix id = Matrix::from_columns(1, {sv::unit(0, one)});
    return {over_ground("hopf-trivial", f, k, id, id, id), sv::unit(0, one)};
}

HopfExample sweedler_hopf(const Field& f) {
    Scalar one = Scalar::in(f, 1), neg = Scalar::in(f, -1);
    auto v = [](std::vector<std::pair<int, Scalar>> t) { return sv::collect(std::move(t)); };
    // basis 1, g, x, gx
    std::vector<std::vector<SVec>> c(4, std::vector<SVec>(4));
    for (int k = 0; k < 4; ++k) c[0][k] = c[k][0] = sv::unit(k, one);
    c[1][1] = sv::unit(0, one);
    c[1][2] = sv::unit(3, one);
    c[1][3] = sv::unit(2, one);
    c[2][1] = sv::unit(3, neg);
    c[3][1] = sv::unit(2, neg);
    Algebra A = Algebra::from_constants(f, 4, c, sv::unit(0, one));
    Matrix gamma(16, 4), eps(1, 4), S(4, 4), S_inv(4, 4);
    gamma.col_mut(0) = sv::unit(0, one);
    gamma.col_mut(1) = sv::unit(1 * 4 + 1, one);
    gamma.col_mut(2) = v({{2 * 4 + 0, one}, {1 * 4 + 2, one}});
    gamma.col_mut(3) = v({{3 * 4 + 1, one}, {0 * 4 + 3, one}});
    eps.col_mut(0) = eps.col_mut(1) = sv::unit(0, one);
    S.col_mut(0) = sv::unit(0, one);
    S.col_mut(1) = sv::unit(1, one);
    S.col_mut(2) = sv::unit(3, neg);
    S.col_mut(3) = sv::unit(2, one);
    S_inv.col_mut(0) = sv::unit(0, one);
    S_inv.col_mut(1) = sv::unit(1, one);
    S_inv.col_mut(2) = sv::unit(3, one);
    S_inv.col_mut(3) = sv::unit(2, neg);
    HopfAlgebroid h = over_ground("hopf-sweedler", f, A, gamma, eps, S);
    h.S_inv = S_inv;
    return {h, v({{2, one}, {3, neg}})};
}

std::vector<std::string> hopf_names() { return {"hopf-trivial", "hopf-qc2", "hopf-fnc2", "hopf-sweedler"}; }

bool is_hopf_name(const std::string& name) {
    auto n = hopf_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

HopfExample catalog_hopf(const std::string& name, const Field& f) {
    if (name == "hopf-trivial") return trivial_hopf(f);
    if (name == "hopf-qc2") return group_hopf(name, f, cyclic_table(2));
    if (name == "hopf-fnc2") return function_hopf(name, f, cyclic_table(2));
    if (name == "hopf-sweedler") return sweedler_hopf(f);
    throw InputError("unknown catalog Hopf algebroid: " + name);
}

}  // namespace hopfd2
