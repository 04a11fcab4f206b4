#include "doctest.h"
#include "support.hpp"

#include "hopfd2/linalg.hpp"

using namespace hopfd2;
using hopfd2::testing::random_matrix;
using hopfd2::testing::random_vector;

namespace {

Matrix dense(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Scalar>> d;
    for (auto& r : rows) {
        d.emplace_back();
        for (long v : r) d.back().push_back(Scalar(v));
    }
    return Matrix::from_dense(d);
}

}  // namespace

TEST_CASE("scalar arithmetic is exact over Q and F_p") {
    Scalar a(3, 7), b(-5, 2);
    CHECK((a + (-a)).is_zero());
    CHECK((a * a.inverse()).is_one());
    CHECK((a / b) * b == a);
    Scalar c = Scalar::parse("-10/4");
    CHECK(c.str() == "-5/2");
    Scalar f = Scalar::in(Field{7}, 5);
    CHECK((f * f.inverse()).is_one());
    CHECK((f + Scalar::in(Field{7}, 2)).is_zero());
    CHECK_THROWS(Scalar::parse("1/0"));
    CHECK_THROWS(Scalar::parse("x"));
}

TEST_CASE("solve") {
    auto x = solve(Matrix::identity(2), sv::from_dense({Scalar(3), Scalar(5)}));
    REQUIRE(x);
    CHECK(sv::equal(*x, sv::from_dense({Scalar(3), Scalar(5)})));

    CHECK(solve(Matrix(2, 2), SVec{}).has_value());

    Matrix a = dense({{1, 1}});
    SVec b = sv::unit(0, Scalar(2));
    auto y = solve(a, b);
    REQUIRE(y);
    CHECK(sv::equal(a.apply(*y), b));

    CHECK_FALSE(solve(Matrix(1, 2), sv::unit(0)).has_value());
    CHECK_THROWS_AS(solve(a, sv::from_dense({Scalar(1), Scalar(1)})), InputError);
}

TEST_CASE("kernel") {
    CHECK(kernel(Matrix::identity(3)).dim() == 0);
    CHECK(kernel(Matrix(3, 3)).dim() == 3);
    Matrix a = dense({{1, 1}});
    Subspace k = kernel(a);
    CHECK(k.dim() + rank(a) == 2);
    REQUIRE(k.dim() == 1);
    CHECK(a.apply(k.basis[0]).empty());
    CHECK(subspace_contains(k, sv::from_dense({Scalar(1), Scalar(-1)})));
}

TEST_CASE("quotient_by") {
    Quotient q0 = quotient_by(3, Subspace{3, {}});
    CHECK(q0.projection == Matrix::identity(3));
    Quotient qf = quotient_by(2, Subspace{2, {sv::unit(0), sv::unit(1)}});
    CHECK(qf.dim == 0);
    Subspace s{2, {sv::from_dense({Scalar(1), Scalar(-1)})}};
    Quotient q = quotient_by(2, s);
    CHECK(q.dim == 1);
    CHECK(q.projection.apply(s.basis[0]).empty());
}

TEST_CASE("tensor") {
    CHECK(tensor(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
    std::mt19937_64 rng(7);
    Matrix b = random_matrix(rng, 2, 3);
    CHECK(tensor(Matrix(2, 2), b).is_zero());
    for (int trial = 0; trial < 10; ++trial) {
        Matrix a = random_matrix(rng, 2, 2), a2 = random_matrix(rng, 2, 2);
        Matrix c = random_matrix(rng, 2, 2), c2 = random_matrix(rng, 2, 2);
        Matrix lhs = tensor(a * a2, c * c2);
        Matrix rhs = tensor(a, c) * tensor(a2, c2);
        CHECK(lhs == rhs);
        // entrywise definition
        Matrix t = tensor(a, c);
        bool ok = true;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l)
                        if (t.at(i * 2 + k, j * 2 + l) != a.at(i, j) * c.at(k, l)) ok = false;
        CHECK(ok);
        Matrix x = random_matrix(rng, 4, 3);
        CHECK(tensor_times(a, c, x) == tensor(a, c) * x);
    }
}

TEST_CASE("property: quotients, rank-nullity, solve_many, inverse") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + trial % 7, m = 1 + (trial * 3) % 6;
        Matrix a = random_matrix(rng, m, n, 0.5);
        Subspace k = kernel(a);
        CHECK(k.dim() + rank(a) == n);
        for (auto& v : k.basis) CHECK(a.apply(v).empty());

        std::vector<SVec> gens;
        for (int g = 0; g < trial % 4; ++g) gens.push_back(random_vector(rng, n));
        Quotient q = quotient_by_span(n, gens);
        CHECK(q.projection * q.section == Matrix::identity(q.dim));
        Matrix defect = q.section * q.projection - Matrix::identity(n);
        Subspace rel{n, q.relations.basis};
        for (auto& c : defect.columns()) CHECK(subspace_contains(rel, c));
        for (auto& g : gens) CHECK(q.projection.apply(g).empty());

        Matrix x = random_matrix(rng, n, 2);
        Matrix b = a * x;
        auto y = solve_many(a, b);
        REQUIRE(y);
        CHECK(a * *y == b);

        Matrix sq = random_matrix(rng, n, n, 0.7);
        if (auto inv = inverse(sq)) {
            CHECK(sq * *inv == Matrix::identity(n));
            CHECK(*inv * sq == Matrix::identity(n));
        } else {
            CHECK(rank(sq) < n);
        }
    }
}

TEST_CASE("coordinates") {
    std::mt19937_64 rng(3);
    std::vector<SVec> basis = {sv::from_dense({Scalar(1), Scalar(2), Scalar(0)}),
                               sv::from_dense({Scalar(0), Scalar(1), Scalar(1)})};
    Coordinates c(3, basis);
    SVec v = sv::add(sv::scale(basis[0], Scalar(3)), sv::scale(basis[1], Scalar(-2)));
    CHECK(sv::equal(c.coords(v), sv::from_dense({Scalar(3), Scalar(-2)})));
    CHECK_FALSE(c.try_coords(sv::unit(0)).has_value());
    CHECK_THROWS_AS(c.coords(sv::unit(0)), ConsistencyError);
}

TEST_CASE("prime field elimination") {
    Field f{2};
    // (1 1; 1 1) has rank 1 over any field; (1 1; 1 -1) is singular only over F_2.
    std::vector<std::vector<Scalar>> d = {{Scalar::in(f, 1), Scalar::in(f, 1)},
                                          {Scalar::in(f, 1), Scalar::in(f, -1)}};
    CHECK(rank(Matrix::from_dense(d)) == 1);
    CHECK(rank(dense({{1, 1}, {1, -1}})) == 2);
}
