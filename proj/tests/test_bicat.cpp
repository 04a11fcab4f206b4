#include "doctest.h"
#include "support.hpp"

#include "hopfd2/bicat.hpp"

using namespace hopfd2;

namespace {

const Field Q{};

Matrix inclusion(int rows, const std::vector<int>& images) {
    Matrix m(rows, static_cast<int>(images.size()));
    for (std::size_t k = 0; k < images.size(); ++k) m.col_mut(static_cast<int>(k)) = sv::unit(images[k]);
    return m;
}

Matrix unit_inclusion(const Algebra& a) { return Matrix::column(a.unit, a.dim); }

}  // namespace

TEST_CASE("algebra axioms") {
    CHECK_FALSE(Algebra::cyclic_group(Q, 4).validate());
    CHECK_FALSE(Algebra::s3(Q).validate());
    CHECK_FALSE(Algebra::matrices(Q, 2).validate());
    CHECK_FALSE(Algebra::s3(Q).is_commutative());
    Algebra bad = Algebra::cyclic_group(Q, 2);
    bad.mul.set(0, 1, Scalar(1));
    auto err = bad.validate();
    REQUIRE(err);
    CHECK(err->find("associativity") != std::string::npos);
}

TEST_CASE("hom_bimodule") {
    auto inst = MonoidalInstance::vec(Q);
    auto m2 = monoid_from_algebra(Algebra::matrices(Q, 2), "M2");
    Bimodule reg = regular_bimodule(m2);
    CHECK_FALSE(validate_bimodule(inst, reg));
    auto maps = hom_bimodule(inst, reg, reg);
    CHECK(maps.size() == 1);
    for (auto& f : maps) CHECK(is_bimodule_map(inst, reg, reg, f));

    // Simple modules of the two-point function algebra are not isomorphic.
    Algebra fn2 = Algebra::functions(Q, 2);
    auto f2 = monoid_from_algebra(fn2, "F2");
    auto k = monoid_from_algebra(Algebra::ground(Q), "Q");
    Bimodule s1{f2, k, Obj{1, {}}, {Matrix::identity(1), Matrix(1, 1)}, {Matrix::identity(1)}};
    Bimodule s2{f2, k, Obj{1, {}}, {Matrix(1, 1), Matrix::identity(1)}, {Matrix::identity(1)}};
    CHECK_FALSE(validate_bimodule(inst, s1));
    CHECK_FALSE(validate_bimodule(inst, s2));
    CHECK(hom_bimodule(inst, s1, s2).empty());

    // QC2 over the ground field on both sides.
    Algebra c2 = Algebra::cyclic_group(Q, 2);
    Bimodule m = algebra_bimodule(c2, k, unit_inclusion(c2), k, unit_inclusion(c2));
    CHECK(hom_bimodule(inst, m, m).size() == 4);

    Bimodule other = regular_bimodule(f2);
    CHECK_THROWS_AS(hom_bimodule(inst, m, other), InputError);
}

TEST_CASE("tensor_over") {
    auto inst = MonoidalInstance::vec(Q);
    Algebra c2 = Algebra::cyclic_group(Q, 2), c4 = Algebra::cyclic_group(Q, 4);
    auto k = monoid_from_algebra(Algebra::ground(Q), "Q");
    auto s = monoid_from_algebra(c2, "C2");

    Bimodule reg = regular_bimodule(s);
    Bimodule n = algebra_bimodule(c2, s, inclusion(2, {0, 1}), k, unit_inclusion(c2));
    CHECK(tensor_over(inst, reg, n).P.dim() == n.dim());

    Bimodule m = algebra_bimodule(c2, k, unit_inclusion(c2), k, unit_inclusion(c2));
    TensorOver mm = tensor_over(inst, m, m);
    CHECK(mm.P.dim() == 4);

    Bimodule q4 = algebra_bimodule(c4, s, inclusion(4, {0, 2}), s, inclusion(4, {0, 2}));
    CHECK_FALSE(validate_bimodule(inst, q4));
    TensorOver t = tensor_over(inst, q4, q4);
    // oracle: 16 minus the rank of the balancing relations
    std::vector<SVec> rel;
    for (int kk = 0; kk < 2; ++kk)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                rel.push_back(sv::sub(sv::kron(q4.rops[kk].col(i), sv::unit(j), 4),
                                      sv::kron(sv::unit(i), q4.lops[kk].col(j), 4)));
    CHECK(t.P.dim() == 16 - rank(Matrix::from_columns(16, rel)));
    CHECK(t.P.dim() == 8);
    CHECK_FALSE(validate_bimodule(inst, t.P));
    for (auto& r : rel) CHECK(t.q.projection.apply(r).empty());
    CHECK(rank(t.q.projection) == t.P.dim());

    CHECK_THROWS_AS(tensor_over(inst, n, n), InputError);
}

TEST_CASE("induced_map functoriality") {
    auto inst = MonoidalInstance::vec(Q);
    Algebra c4 = Algebra::cyclic_group(Q, 4);
    auto s = monoid_from_algebra(Algebra::cyclic_group(Q, 2), "C2");
    Bimodule q4 = algebra_bimodule(c4, s, inclusion(4, {0, 2}), s, inclusion(4, {0, 2}));
    TensorOver t = tensor_over(inst, q4, q4);
    Matrix id4 = Matrix::identity(4);
    CHECK(induced_map(t, t, id4, id4) == Matrix::identity(t.P.dim()));

    auto basis = hom_bimodule(inst, q4, q4);
    REQUIRE(basis.size() == 8);
    std::mt19937_64 rng(5);
    auto random_map = [&] {
        Matrix f(4, 4);
        for (auto& b : basis) f = f + b.scaled(hopfd2::testing::small_scalar(rng));
        return f;
    };
    for (int trial = 0; trial < 5; ++trial) {
        Matrix p = random_map(), p2 = random_map(), q = random_map(), q2 = random_map();
        Matrix lhs = induced_map(t, t, p * p2, q * q2);
        Matrix rhs = induced_map(t, t, p, q) * induced_map(t, t, p2, q2);
        CHECK(lhs == rhs);
        CHECK(is_bimodule_map(inst, t.P, t.P, induced_map(t, t, p, q)));
    }
}

TEST_CASE("bicategory coherence on QC2") {
    auto inst = MonoidalInstance::vec(Q);
    Algebra c2 = Algebra::cyclic_group(Q, 2);
    Bicat b(inst);
    int n = b.add_object(monoid_from_algebra(Algebra::ground(Q), "N"));
    auto mmon = monoid_from_algebra(c2, "M");
    int m = b.add_object(mmon);
    Matrix unit = unit_inclusion(c2);
    int i = b.add_generator("i", algebra_bimodule(c2, b.object(n), unit, mmon, inclusion(2, {0, 1})), n, m);
    int j = b.add_generator("j", algebra_bimodule(c2, mmon, inclusion(2, {0, 1}), b.object(n), unit), m, n);
    auto I = b.g(i), J = b.g(j);

    CHECK(b.dim(I) == 2);
    CHECK(b.dim(b.u(m)) == 2);
    CHECK(b.dim(b.h(b.h(I, J), I)) == 4);
    CHECK(&b.realize(b.h(I, J)) == &b.realize(b.h(I, J)));
    CHECK_THROWS_AS(b.h(I, I), InputError);

    CHECK(b.pentagon(I, J, I, J));
    CHECK(b.pentagon(J, I, J, I));
    CHECK(b.triangle(I, J));
    CHECK(b.triangle(J, I));

    Cell ru = b.runit(I);
    CHECK(rank(ru.m) == b.dim(I));
    CHECK(b.is_cell(ru));
    Cell a = b.assoc(I, J, I);
    CHECK(rank(a.m) == b.dim(a.src));
    CHECK(b.compose(b.assoc_inv(I, J, I), a).m == Matrix::identity(b.dim(a.src)));

    auto e1 = b.h(b.h(I, J), b.h(I, J));
    auto e2 = b.h(I, b.h(J, b.h(I, J)));
    auto e3 = b.h(b.h(I, b.h(J, I)), J);
    CHECK(b.coherence_iso(e1, e1).m == Matrix::identity(b.dim(e1)));
    Cell c12 = b.coherence_iso(e1, e2), c23 = b.coherence_iso(e2, e3), c13 = b.coherence_iso(e1, e3);
    CHECK(b.compose(c23, c12).m == c13.m);
    CHECK(b.coherence_iso(e1, e3, Bicat::Strategy::Rewriting).m == c13.m);
    CHECK(b.coherence_iso(b.h(b.h(I, J), I), b.h(I, b.h(J, I))).m == b.assoc(I, J, I).m);
    CHECK(b.coherence_iso(b.h(I, J), b.h(I, b.h(b.u(m), J))).m.rows() == 2);
    CHECK(b.coherence_iso(b.h(I, J), b.h(b.u(n), b.h(I, J))).m.cols() == 2);
    CHECK_THROWS_AS(b.coherence_iso(b.h(I, J), b.h(b.h(I, J), b.h(I, J))), InputError);

    auto v = b.hom(b.h(I, J), b.h(I, J));
    CHECK(v.size() == 4);
    CHECK(preserves_coequalizer(inst, b.generator(i), b.generator(j), Obj{3, {}}));
}
