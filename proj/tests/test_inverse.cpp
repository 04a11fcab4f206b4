#include "doctest.h"

#include <map>
#include <random>

#include "hopfd2/catalog.hpp"
#include "hopfd2/inverse.hpp"
#include "support.hpp"

using namespace hopfd2;

namespace {

const RoundTrip& trip(const std::string& name) {
    static std::map<std::string, RoundTrip> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        auto ex = catalog_hopf(name);
        it = cache.emplace(name, roundtrip(ex.hopf, ex.integral)).first;
    }
    return it->second;
}

const std::vector<std::string> kTrips = {"hopf-trivial", "hopf-qc2", "hopf-fnc2"};

}  // namespace

TEST_CASE("convolution on the trivial Hopf algebroid is the product") {
    const RoundTrip& rt = trip("hopf-trivial");
    CHECK(rt.conv.conv.mul == rt.conv.H.A().mul);
    CHECK(sv::equal(rt.conv.conv.unit, sv::unit(0)));
}

TEST_CASE("convolution on QC2 with i = 1+g") {
    const RoundTrip& rt = trip("hopf-qc2");
    const Algebra& C = rt.conv.conv;
    // group elements are orthogonal idempotents for ∗
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) CHECK(sv::equal(C.product(sv::unit(a), sv::unit(b)), a == b ? sv::unit(a) : SVec{}));
    CHECK(sv::equal(C.unit, sv::add(sv::unit(0), sv::unit(1))));
    auto rep = verify_conv_frobenius(rt.conv);
    INFO(rep.summary());
    CHECK(rep.pass());
    CHECK(rep.find("conv.convform.left")->pass);
    CHECK(rep.find("conv.convform.right")->pass);
}

TEST_CASE("convolution on functions on C2 is the group product") {
    const RoundTrip& rt = trip("hopf-fnc2");
    const Algebra& C = rt.conv.conv;
    // δ_x∗δ_y = δ_xy
    CHECK(sv::equal(C.product(sv::unit(1), sv::unit(1)), sv::unit(0)));
    CHECK(sv::equal(C.product(sv::unit(0), sv::unit(1)), sv::unit(1)));
    CHECK(sv::equal(C.unit, sv::unit(0)));
}

TEST_CASE("Frobenius algebra, rigidity and coherence forms") {
    for (auto& name : kTrips) {
        CAPTURE(name);
        const RoundTrip& rt = trip(name);
        auto conv = verify_conv_frobenius(rt.conv);
        INFO(conv.summary());
        CHECK(conv.pass());
        auto rig = verify_rigidity(rt.f);
        INFO(rig.summary());
        CHECK(rig.pass());
        auto coh = verify_coherence_forms(rt.conv, rt.f);
        INFO(coh.summary());
        CHECK(coh.pass());
        CHECK(rt.f.b().instance().kind() == MonoidalInstance::Kind::ModH);
    }
    const RoundTrip& q = trip("hopf-qc2");
    const Bicat& b = q.f.b();
    CHECK(b.dim(q.f.i) == 2);
    CHECK(b.dim(q.f.ij()) == 2);
    CHECK(q.f.ev_R.m.rows() == 1);
    CHECK(q.f.coev_R.m.cols() == 2);
}

TEST_CASE("Lambda and the quasi-basis") {
    for (auto& name : kTrips) {
        CAPTURE(name);
        const RoundTrip& rt = trip(name);
        auto rep = verify_lambda(rt.conv, rt.h.A, rt.lambda);
        INFO(rep.summary());
        CHECK(rep.pass());
        CHECK(verify_d2(rt.f, rt.h.A, rt.lambda.qb).pass());
        CHECK(rt.lambda.qb.size() <= rt.conv.H.dim());
    }
    const RoundTrip& t = trip("hopf-trivial");
    CHECK(t.lambda.qb.size() == 1);
    CHECK(sv::equal(t.lambda.Lambda.col(0), t.h.A.alg.unit));
    const RoundTrip& q = trip("hopf-qc2");
    D2QuasiBasis bad = q.lambda.qb;
    bad.terms.pop_back();
    CHECK_FALSE(verify_d2(q.f, q.h.A, bad).pass());
}

TEST_CASE("round trip is a strict isomorphism") {
    for (auto& name : kTrips) {
        CAPTURE(name);
        const RoundTrip& rt = trip(name);
        INFO(rt.report.summary());
        CHECK(rt.report.pass());
        CHECK(rt.A.dim() == rt.conv.H.dim());
        for (auto item : {"iso.morphism.strict", "iso.proof.S", "iso.proof.conv", "iso.proof.gamma", "iso.proof.s",
                          "iso.proof.t", "iso.proof.mu", "iso.proof.pi"}) {
            CAPTURE(item);
            REQUIRE(rt.report.find(item));
            CHECK(rt.report.find(item)->pass);
        }
    }
    CHECK(trip("hopf-qc2").A.left.L.dim == 1);
}

TEST_CASE("a wrong Lambda is rejected") {
    RoundTrip bad = trip("hopf-qc2");
    Matrix swap = Matrix::from_columns(2, {sv::unit(1), sv::unit(0)});
    bad.lambda.Lambda = bad.lambda.Lambda * swap;
    auto rep = verify_roundtrip_iso(bad);
    CHECK_FALSE(rep.pass());
    CHECK(rep.find("iso.proof.pi")->residual_rank > 0);
}

TEST_CASE("S-invariance and two-sidedness") {
    for (auto& name : hopf_names()) {
        CAPTURE(name);
        auto ex = catalog_hopf(name);
        auto rep = s_invariance_remark(ex.hopf, ex.integral);
        INFO(rep.summary());
        CHECK(rep.pass());
    }
    auto sw = catalog_hopf("hopf-sweedler");
    CHECK_FALSE(is_left_integral(sw.hopf, sw.integral));
    CHECK_THROWS_AS(conv_on_H(sw.hopf, sw.integral), InputError);
    CHECK_THROWS_AS(roundtrip(sw.hopf, sw.integral), InputError);
}

TEST_CASE("conv_on_H rejects bad integrals") {
    auto ex = catalog_hopf("hopf-qc2");
    CHECK_THROWS_AS(conv_on_H(ex.hopf, sv::unit(0)), InputError);
    CHECK_THROWS_AS(conv_on_H(ex.hopf, SVec{}), InputError);
    CHECK_THROWS_AS(s_invariance_remark(ex.hopf, sv::unit(1)), InputError);
}

TEST_CASE("property: convolution identities on random elements") {
    std::mt19937_64 rng(20240601);
    for (auto& name : {"hopf-qc2", "hopf-fnc2"}) {
        CAPTURE(name);
        const RoundTrip& rt = trip(name);
        const Algebra& A = rt.conv.H.A();
        const Algebra& C = rt.conv.conv;
        const Matrix& Lam = rt.lambda.Lambda;
        int n = A.dim;
        for (int trial = 0; trial < 5; ++trial) {
            SVec x = testing::random_vector(rng, n), y = testing::random_vector(rng, n),
                 z = testing::random_vector(rng, n);
            CHECK(sv::equal(C.product(x, C.product(y, z)), C.product(C.product(x, y), z)));
            CHECK(sv::equal(rt.h.A.alg.product(Lam.apply(x), Lam.apply(y)), Lam.apply(A.product(x, y))));
            CHECK(sv::equal(rt.h.convA.product(Lam.apply(x), Lam.apply(y)), Lam.apply(C.product(x, y))));
            CHECK(sv::equal(rt.h.S_A.apply(Lam.apply(x)), Lam.apply(rt.conv.H.S.apply(x))));
        }
    }
}
