#include "doctest.h"

#include <map>
#include <random>

#include "hopfd2/catalog.hpp"
#include "hopfd2/construct.hpp"
#include "support.hpp"

using namespace hopfd2;

namespace {

const Construction& built(const std::string& name) {
    static std::map<std::string, Construction> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, construct(extension_datum(catalog_extension(name)))).first;
    return it->second;
}

const std::vector<std::string> kSmall = {"trivial", "qc2", "qc2-in-qc4", "mat2"};

SVec random_element(std::mt19937_64& rng, int n) { return testing::random_vector(rng, n); }

}  // namespace

TEST_CASE("endomorphism ring dimensions") {
    struct Row {
        const char* name;
        int a, l;
    };
    // dim End_{N,N}(M) and dim C_M(N) counted by hand
    for (Row r : {Row{"trivial", 1, 1}, Row{"qc2", 4, 2}, Row{"qc2-in-qc4", 8, 4}, Row{"mat2", 16, 4}}) {
        CAPTURE(r.name);
        const Harmonic& h = built(r.name).h;
        CHECK(h.A.dim() == r.a);
        CHECK(h.B.dim() == r.a);
        CHECK(h.L.dim() == r.l);
        CHECK(h.R.dim() == r.l);
    }
    CHECK_FALSE(built("mat2").h.L.alg.is_commutative());
}

TEST_CASE("harmonic battery") {
    for (auto& name : kSmall) {
        CAPTURE(name);
        auto rep = verify_harmonic(built(name).h);
        INFO(rep.summary());
        CHECK(rep.pass());
    }
}

TEST_CASE("trivial extension gives identity transforms") {
    const Harmonic& h = built("trivial").h;
    CHECK(residual_item("F", "", h.F - Matrix::identity(1)).pass);
    CHECK(residual_item("Fd", "", h.Fd - Matrix::identity(1)).pass);
    CHECK(residual_item("S", "", h.S_A - Matrix::identity(1)).pass);
    CHECK(residual_item("mu", "", h.mu - h.nu).pass);
    CHECK(sv::equal(h.convA.product(h.A.alg.unit, h.A.alg.unit), h.A.alg.unit));
}

TEST_CASE("QC2 transforms by direct evaluation") {
    const Harmonic& h = built("qc2").h;
    const Algebra& A = h.A.alg;
    CHECK(rank(h.F) == 4);
    CHECK(residual_item("mu=nu", "", h.mu - h.nu).pass);
    for (int x = 0; x < 4; ++x) {
        CHECK(sv::equal(h.convA.product(h.iA(), sv::unit(x)), sv::unit(x)));
        CHECK(sv::equal(h.convA.product(sv::unit(x), h.iA()), sv::unit(x)));
        for (int y = 0; y < 4; ++y) {
            SVec lhs = h.F.apply(A.product(sv::unit(x), sv::unit(y)));
            CHECK(sv::equal(lhs, h.convB.product(h.F.col(y), h.F.col(x))));
            CHECK(sv::equal(h.S_A.apply(A.product(sv::unit(x), sv::unit(y))),
                            A.product(h.S_A.col(y), h.S_A.col(x))));
        }
    }
    CHECK(sv::equal(h.S_A.apply(h.iA()), h.iA()));
}

TEST_CASE("mu is anti-multiplicative on mat2") {
    const Harmonic& h = built("mat2").h;
    for (int x = 0; x < h.L.dim(); ++x)
        for (int y = 0; y < h.L.dim(); ++y)
            CHECK(sv::equal(h.mu.apply(h.L.alg.product(sv::unit(x), sv::unit(y))),
                            h.R.alg.product(h.mu.col(y), h.mu.col(x))));
}

TEST_CASE("quasi-bases for iota and its dual") {
    std::map<std::string, int> expected = {{"trivial", 1}, {"qc2", 2}, {"qc2-in-qc4", 2}, {"mat2", 4}};
    for (auto& name : kSmall) {
        CAPTURE(name);
        const Construction& c = built(name);
        CHECK(c.qb.size() <= expected[name]);
        CHECK(verify_d2(c.h.f, c.h.A, c.qb).pass());
        CHECK(verify_d2(swapped(c.h.f), c.h.B, c.qbB).pass());
        auto ids = quasibasis_identities(c.h, c.qb);
        INFO(ids.summary());
        CHECK(ids.pass());
    }
}

TEST_CASE("quasi-basis search is deterministic") {
    const Construction& c = built("mat2");
    auto again = find_d2_quasibasis(c.h.f, c.h.A, 16, quasibasis_leg_spaces(c.h));
    REQUIRE(again);
    REQUIRE(again->size() == c.qb.size());
    for (int k = 0; k < c.qb.size(); ++k) {
        CHECK(sv::equal(again->terms[k].first, c.qb.terms[k].first));
        CHECK(sv::equal(again->terms[k].second, c.qb.terms[k].second));
    }
    CHECK_FALSE(find_d2_quasibasis(c.h.f, c.h.A, 1, quasibasis_leg_spaces(c.h)));
}

TEST_CASE("assembled A and B are Hopf algebroids") {
    for (auto& name : kSmall) {
        CAPTURE(name);
        const Construction& c = built(name);
        auto ra = verify(c.A);
        INFO(ra.summary());
        CHECK(ra.pass());
        auto rb = verify(c.B);
        INFO(rb.summary());
        CHECK(rb.pass());
        auto rs = verify_structure_forms(c.h, c.qb, c.A, c.B);
        INFO(rs.summary());
        CHECK(rs.pass());
    }
    const Construction& q = built("qc2");
    CHECK(q.A.dim() == 4);
    CHECK(q.A.left.L.dim == 2);
    Quotient t = left_tensor(q.A.left);
    const SVec& one = q.A.A().unit;
    CHECK(sv::equal(t.projection.apply(q.A.left.gamma.apply(one)), t.projection.apply(sv::kron(one, one, 4))));
    CHECK(residual_item("piB", "", q.B.left.pi - q.h.nu * q.h.phi_L * q.h.Finv).pass);
}

TEST_CASE("assemble_hopf rejects a truncated quasi-basis") {
    const Construction& c = built("qc2");
    D2QuasiBasis bad = c.qb;
    bad.terms.pop_back();
    CHECK_FALSE(verify_d2(c.h.f, c.h.A, bad).pass());
    CHECK_THROWS_AS(assemble_hopf(c.h.f, bad), ConsistencyError);
    CHECK(verify(assemble_hopf(c.h.f, c.qb)).pass());
}

TEST_CASE("integral, duality isomorphisms and strict duality") {
    for (auto& name : kSmall) {
        CAPTURE(name);
        const Construction& c = built(name);
        auto d = duality_isos(c.h, c.qb, c.A);
        auto ri = verify_duality_isos(c.h, d);
        INFO(ri.summary());
        CHECK(ri.pass());
        auto rint = verify_integral(c.h, c.A, d);
        INFO(rint.summary());
        CHECK(rint.pass());
        auto rs = verify_strict_duality(c.h, c.A, c.B, d);
        INFO(rs.summary());
        CHECK(rs.pass());
    }
    const Construction& q = built("qc2");
    auto w = left_nondegeneracy(q.A, q.h.iA());
    REQUIRE(w);
    CHECK(rank(w->ell_R) == 4);
    auto ints = find_integrals(q.A);
    CHECK(subspace_contains(ints.left, q.h.iA()));
    CHECK(subspace_contains(ints.right, q.h.iA()));
    for (auto side : {Side::Left, Side::Right}) CHECK(lemma_equivalences(q.A, q.h.iA(), side).pass());
}

TEST_CASE("second dual of the constructed A") {
    for (auto& name : {"trivial", "qc2", "mat2"}) {
        CAPTURE(name);
        const Construction& c = built(name);
        auto sd = second_dual(c.A, c.h.iA());
        INFO(sd.report.summary());
        CHECK(sd.report.pass());
    }
}

TEST_CASE("property: identities on random elements") {
    std::mt19937_64 rng(20240601);
    for (auto& name : {"qc2", "qc2-in-qc4", "mat2"}) {
        CAPTURE(name);
        const Construction& c = built(name);
        const Harmonic& h = c.h;
        const Algebra& A = h.A.alg;
        const Algebra& C = h.convA;
        int n = A.dim;
        Quotient ql = left_tensor(c.A.left);
        for (int trial = 0; trial < 5; ++trial) {
            SVec a1 = random_element(rng, n), a2 = random_element(rng, n), a3 = random_element(rng, n);
            CHECK(sv::equal(h.F.apply(A.product(a1, a2)), h.convB.product(h.F.apply(a2), h.F.apply(a1))));
            CHECK(sv::equal(h.F.apply(C.product(a1, a2)), h.B.alg.product(h.F.apply(a1), h.F.apply(a2))));
            CHECK(sv::equal(h.S_A.apply(A.product(a1, a2)), A.product(h.S_A.apply(a2), h.S_A.apply(a1))));
            CHECK(sv::equal(C.product(a1, C.product(a2, a3)), C.product(C.product(a1, a2), a3)));
            SVec g12 = c.A.left.gamma.apply(A.product(a1, a2));
            SVec gg = tensor_mul(A, c.A.left.gamma.apply(a1), c.A.left.gamma.apply(a2));
            CHECK(sv::equal(ql.projection.apply(g12), ql.projection.apply(gg)));
            SVec rhs;
            for (auto& [y, x] : c.qb.terms)
                rhs = sv::add(rhs, A.product(C.product(A.product(a1, y), a2), C.product(x, a3)));
            CHECK(sv::equal(C.product(a1, A.product(a2, a3)), rhs));
        }
    }
}
