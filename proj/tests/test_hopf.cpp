#include "doctest.h"

#include "hopfd2/catalog.hpp"

using namespace hopfd2;

namespace {

std::vector<std::vector<int>> cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) t[g][h] = (g + h) % n;
    return t;
}

bool has_failure(const Report& r, const std::string& prefix) {
    for (auto& it : r.items)
        if (!it.pass && it.name.rfind(prefix, 0) == 0) return true;
    return false;
}

// (1+g)x for the Sweedler algebra, the distinguished integral otherwise.
SVec left_integral(const HopfExample& ex, const std::string& name) {
    return name == "hopf-sweedler" ? sv::add(sv::unit(2), sv::unit(3)) : ex.integral;
}

}  // namespace

TEST_CASE("catalog Hopf algebroids verify") {
    for (auto& name : hopf_names()) {
        CAPTURE(name);
        auto ex = catalog_hopf(name);
        auto rep = verify(ex.hopf);
        INFO(rep.summary());
        CHECK(rep.pass());
        CHECK(is_right_integral(ex.hopf, ex.integral));
        CHECK(is_left_integral(ex.hopf, ex.integral) == (name != "hopf-sweedler"));
        CHECK(right_nondegeneracy(ex.hopf, ex.integral));
    }
    CHECK_THROWS_AS(catalog_hopf("nope"), InputError);
}

TEST_CASE("Sweedler algebra by hand") {
    auto ex = catalog_hopf("hopf-sweedler");
    const HopfAlgebroid& h = ex.hopf;
    const Algebra& A = h.A();
    SVec one = sv::unit(0), g = sv::unit(1), x = sv::unit(2), gx = sv::unit(3);
    CHECK(sv::equal(A.product(g, x), gx));
    CHECK(sv::equal(A.product(x, g), sv::scale(gx, Scalar(-1))));
    CHECK(A.product(x, x).empty());
    CHECK(sv::equal(A.product(g, g), one));
    CHECK(h.S * h.S_inv == Matrix::identity(4));
    CHECK(h.S * h.S != Matrix::identity(4));
    // (1+g)x is the left integral
    SVec left = sv::add(x, gx);
    CHECK(is_left_integral(h, left));
    CHECK_FALSE(is_right_integral(h, left));
    CHECK_FALSE(sv::equal(h.S.apply(ex.integral), ex.integral));
}

TEST_CASE("group algebra tables by hand") {
    auto ex = catalog_hopf("hopf-qc2");
    const Algebra& A = ex.hopf.A();
    SVec one = sv::unit(0), g = sv::unit(1);
    CHECK(sv::equal(A.product(g, g), one));
    CHECK(sv::equal(ex.hopf.left.gamma.col(1), sv::unit(3)));
    CHECK(sv::equal(ex.hopf.S.col(1), g));
}

TEST_CASE("a wrong antipode breaks axiom iv") {
    auto ex = group_hopf("qc3", Field{}, cyclic(3));
    REQUIRE(verify(ex.hopf).pass());
    ex.hopf.S = Matrix::identity(3);
    ex.hopf.S_inv = ex.hopf.S;
    auto rep = verify(ex.hopf);
    CHECK_FALSE(rep.pass());
    CHECK(rep.find("H.iv.L")->residual_rank > 0);
    CHECK(rep.find("H.iv.R")->residual_rank > 0);
    // S(g)g = g² ≠ 1 = s_Rπ_R(g)
    SVec g = sv::unit(1);
    CHECK_FALSE(sv::equal(ex.hopf.A().product(ex.hopf.S.apply(g), g), sv::unit(0)));

    // On C₂ the identity is the antipode, so swap 1 and g instead.
    auto c2 = catalog_hopf("hopf-qc2");
    Matrix swap(2, 2);
    swap.set(1, 0, Scalar(1));
    swap.set(0, 1, Scalar(1));
    c2.hopf.S = swap;
    c2.hopf.S_inv = swap;
    auto r2 = verify(c2.hopf);
    CHECK(has_failure(r2, "H.iv"));
}

TEST_CASE("integrals of small Hopf algebroids") {
    auto triv = catalog_hopf("hopf-trivial");
    auto ti = find_integrals(triv.hopf);
    CHECK(ti.left.basis.size() == 1);
    CHECK(ti.right.basis.size() == 1);

    auto ex = catalog_hopf("hopf-qc2");
    auto ints = find_integrals(ex.hopf);
    REQUIRE(ints.left.basis.size() == 1);
    Matrix a = Matrix::from_columns(2, ints.left.basis), b = Matrix::from_columns(2, {ex.integral});
    CHECK(same_span(a, b));
    CHECK(sv::equal(ex.hopf.S.apply(ex.integral), ex.integral));
    for (auto side : {Side::Left, Side::Right}) {
        auto rep = lemma_equivalences(ex.hopf, ex.integral, side);
        INFO(rep.summary());
        CHECK(rep.pass());
    }
    CHECK_FALSE(is_left_integral(ex.hopf, sv::unit(0)));
}

TEST_CASE("dual rings of the group algebra are function algebras") {
    auto ex = catalog_hopf("hopf-qc2");
    for (auto kind : {DualKind::UpperRight, DualKind::UpperLeft, DualKind::LowerRight, DualKind::LowerLeft}) {
        CAPTURE(dual_name(kind));
        DualRing D = dual_ring(ex.hopf, kind);
        REQUIRE(D.dim() == 2);
        CHECK(D.ring.is_commutative());
        auto rep = verify_dual_ring(ex.hopf, D);
        INFO(rep.summary());
        CHECK(rep.pass());
        // transpose of γ(g) = g⊗g: evaluation functionals are orthogonal idempotents
        std::vector<SVec> delta;
        for (int g = 0; g < 2; ++g) {
            Matrix m(1, 2);
            m.set(0, g, Scalar(1));
            delta.push_back(D.coords(m));
        }
        CHECK(sv::equal(D.ring.product(delta[0], delta[0]), delta[0]));
        CHECK(sv::equal(D.ring.product(delta[1], delta[1]), delta[1]));
        CHECK(D.ring.product(delta[0], delta[1]).empty());
        CHECK(sv::equal(sv::add(delta[0], delta[1]), D.ring.unit));
    }
    auto triv = catalog_hopf("hopf-trivial");
    CHECK(dual_ring(triv.hopf, DualKind::UpperRight).dim() == 1);
}

TEST_CASE("non-degeneracy witnesses") {
    auto triv = catalog_hopf("hopf-trivial");
    auto tw = left_nondegeneracy(triv.hopf, triv.integral);
    REQUIRE(tw);
    CHECK(sv::equal(tw->upper_right.map(tw->lambda).col(0), sv::unit(0)));

    for (auto& name : hopf_names()) {
        CAPTURE(name);
        auto ex = catalog_hopf(name);
        auto lw = left_nondegeneracy(ex.hopf, left_integral(ex, name));
        REQUIRE(lw);
        CHECK(rank(lw->ell_R) == ex.hopf.dim());
        CHECK(verify_left_witness(ex.hopf, *lw).pass());
        auto rw = right_nondegeneracy(ex.hopf, ex.integral);
        REQUIRE(rw);
        CHECK(verify_right_witness(ex.hopf, *rw).pass());
    }
    auto ex = catalog_hopf("hopf-qc2");
    CHECK_FALSE(left_nondegeneracy(ex.hopf, SVec{}));
    // Over F₂ the integral 1+g still gives φ⇀ℓ = φ(1)1 + φ(g)g, a bijection.
    auto f2 = catalog_hopf("hopf-qc2", Field{2});
    auto w2 = left_nondegeneracy(f2.hopf, f2.integral);
    REQUIRE(w2);
    CHECK(rank(w2->ell_R) == 2);
}

TEST_CASE("dual and second dual") {
    for (auto& name : hopf_names()) {
        CAPTURE(name);
        auto ex = catalog_hopf(name);
        if (name == "hopf-sweedler") {
            CHECK_THROWS_AS(dualize(ex.hopf, ex.integral), InputError);
            continue;
        }
        auto d = dualize(ex.hopf, ex.integral);
        auto rep = verify(d.hopf);
        INFO(rep.summary());
        CHECK(rep.pass());
        auto sd = second_dual(ex.hopf, ex.integral);
        INFO(sd.report.summary());
        CHECK(sd.report.pass());
        CHECK_FALSE(sd.choice.empty());
    }
    auto qc2 = catalog_hopf("hopf-qc2");
    auto d = dualize(qc2.hopf, qc2.integral);
    CHECK(d.hopf.A().is_commutative());
    CHECK(d.hopf.dim() == 2);
    CHECK_THROWS_AS(dualize(qc2.hopf, sv::unit(0)), InputError);
}

TEST_CASE("morphism checks") {
    auto ex = catalog_hopf("hopf-qc2");
    const HopfAlgebroid& h = ex.hopf;
    auto id = check_morphism(h, h, Matrix::identity(2), Matrix::identity(1), true);
    CHECK(id.pass());
    auto anti = check_left_morphism(h.left, op_cop(h.right), h.S, h.right.pi * h.left.s, true);
    INFO(anti.summary());
    CHECK(anti.pass());
    Matrix zero(2, 2);
    CHECK_FALSE(check_morphism(h, h, zero, Matrix::identity(1), true).pass());
}
