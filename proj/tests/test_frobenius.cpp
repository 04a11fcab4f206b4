#include "doctest.h"

#include "hopfd2/catalog.hpp"

using namespace hopfd2;

TEST_CASE("catalog extensions validate with expected dims") {
    struct Row {
        const char* name;
        int n, m;
    };
    for (Row r : {Row{"trivial", 1, 1}, Row{"qc2", 1, 2}, Row{"qc2-in-qc4", 2, 4}, Row{"mat2", 1, 4}, Row{"qs3", 1, 6}}) {
        CAPTURE(r.name);
        auto e = catalog_extension(r.name);
        CHECK_FALSE(e.validate());
        CHECK(e.N.dim == r.n);
        CHECK(e.M.dim == r.m);
    }
    CHECK_THROWS_AS(catalog_extension("nope"), InputError);
}

TEST_CASE("dual basis identities of catalog extensions") {
    for (auto& name : extension_names()) {
        CAPTURE(name);
        auto e = catalog_extension(name);
        for (int m = 0; m < e.M.dim; ++m) {
            SVec lhs, rhs;
            for (auto& [x, y] : e.dual_basis) {
                SVec px = e.incl.apply(e.phi.apply(e.M.product(sv::unit(m), x)));
                lhs = sv::add(lhs, e.M.product(px, y));
                SVec py = e.incl.apply(e.phi.apply(e.M.product(y, sv::unit(m))));
                rhs = sv::add(rhs, e.M.product(x, py));
            }
            CHECK(sv::equal(lhs, sv::unit(m)));
            CHECK(sv::equal(rhs, sv::unit(m)));
        }
    }
}

TEST_CASE("rigidity holds on catalog extensions") {
    for (auto& name : {"trivial", "qc2", "qc2-in-qc4", "mat2"}) {
        CAPTURE(name);
        auto f = extension_datum(catalog_extension(name));
        auto rep = verify_rigidity(f);
        INFO(rep.summary());
        CHECK(rep.pass());
        CHECK(rep.items.size() == 8);
    }
}

TEST_CASE("rigidity fails for a truncated coevaluation") {
    auto e = catalog_extension("qc2");
    e.dual_basis.resize(1);
    auto rep = verify_rigidity(extension_datum(e));
    CHECK_FALSE(rep.pass());
    const CheckItem* r3 = rep.find("rigrel.3");
    REQUIRE(r3);
    CHECK_FALSE(r3->pass);
    CHECK(r3->residual_rank > 0);
    CHECK(rep.find("rigrel.1")->pass);
    CHECK(rep.find("rigrel.2")->pass);
}

TEST_CASE("datum typing is enforced") {
    auto f = extension_datum(catalog_extension("qc2"));
    CHECK_THROWS_AS(make_datum(f.bicat, f.i, f.j, f.coev_R, f.ev_R, f.ev_L, f.coev_L), InputError);
    auto s = swapped(f);
    CHECK(verify_rigidity(s).pass());
}

TEST_CASE("endomorphism rings") {
    auto f = extension_datum(catalog_extension("qc2"));
    const Bicat& b = f.b();
    CHECK(endo_ring(b, f.ij()).dim() == 4);
    CHECK(endo_ring(b, f.ji()).dim() == 4);
    CHECK(endo_ring(b, f.i).dim() == 2);
    CHECK(endo_ring(b, f.j).dim() == 2);
    auto m = extension_datum(catalog_extension("mat2"));
    auto A = endo_ring(m.b(), m.ij());
    CHECK(A.dim() == 16);
    auto L = endo_ring(m.b(), m.i);
    CHECK(L.dim() == 4);
    CHECK_FALSE(L.alg.is_commutative());
    CHECK_FALSE(A.alg.validate());
    for (int k = 0; k < A.dim(); ++k) CHECK(sv::equal(A.coords(A.basis[k]), sv::unit(k)));
}
