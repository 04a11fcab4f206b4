// Acceptance suite: one line per criterion, exact arithmetic over the rationals.

#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfd2/catalog.hpp"
#include "hopfd2/construct.hpp"
#include "hopfd2/d2.hpp"
#include "hopfd2/inverse.hpp"
#include "hopfd2/io.hpp"
#include "hopfd2/pipeline.hpp"

using namespace hopfd2;

namespace {

const Field Q{};

// Accumulates the failures of one criterion.
struct Verdict {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    // The report passes and contains every named item.
    void expect(const Report& r, const std::string& subject, const std::vector<std::string>& required = {}) {
        for (auto& it : r.items)
            if (!it.pass)
                failures.push_back(subject + ": " + it.name +
                                   (it.residual_rank ? " (residual rank " + std::to_string(it.residual_rank) + ")" : ""));
        for (auto& n : required)
            if (!r.find(n)) failures.push_back(subject + ": missing check " + n);
        if (r.items.empty()) failures.push_back(subject + ": empty report");
    }
    bool pass() const { return failures.empty(); }
};

struct Forward {
    FrobeniusExtension e;
    FrobeniusDatum f;
    Harmonic h;
    std::optional<D2QuasiBasis> qb;
    D2QuasiBasis qbB;
    HopfAlgebroid A, B;
    double rigidity_seconds = 0;
};

std::map<std::string, Forward>& forwards() {
    static std::map<std::string, Forward> cache;
    if (!cache.empty()) return cache;
    for (auto& name : extension_names()) {
        Forward w;
        w.e = catalog_extension(name, Q);
        w.f = extension_datum(w.e);
        w.h = build_harmonic(w.f);
        w.qb = find_d2_quasibasis(w.f, w.h.A, 16, quasibasis_leg_spaces(w.h));
        if (w.qb) {
            w.qbB = dual_quasibasis(w.h, *w.qb);
            w.A = build_hopf_A(w.h, *w.qb);
            w.B = build_hopf_B(w.h, *w.qb);
        }
        cache.emplace(name, std::move(w));
    }
    return cache;
}

// Runs fn on every extension with a quasi-basis; missing ones fail.
void each_forward(Verdict& v, const std::function<void(const std::string&, Forward&)>& fn) {
    for (auto& [name, w] : forwards()) {
        if (!w.qb) {
            v.expect(false, name + ": no quasi-basis");
            continue;
        }
        fn(name, w);
    }
}

const std::vector<std::string> kRigidity = {"rigrel.1", "rigrel.2", "rigrel.3", "rigrel.4"};

Verdict criterion_rigidity() {
    Verdict v;
    for (auto& name : extension_names()) {
        auto e = catalog_extension(name, Q);
        Stopwatch sw;
        Report r = verify_rigidity(extension_datum(e));
        double s = sw.seconds();
        v.expect(r, name, kRigidity);
        double limit = name == "qs3" ? 30.0 : 1.0;
        v.expect(s < limit, name + ": " + std::to_string(s) + " s exceeds " + std::to_string(limit) + " s");
    }
    v.notes.push_back(std::to_string(extension_names().size()) + " extensions");
    return v;
}

Verdict criterion_d2() {
    Verdict v;
    each_forward(v, [&](const std::string& name, Forward& w) {
        v.expect(verify_d2(w.f, w.h.A, *w.qb), name + " iota", {"d2.identity"});
        v.expect(verify_d2(swapped(w.f), w.h.B, w.qbB), name + " iota_bar", {"d2.identity"});
    });
    return v;
}

Verdict criterion_fourier() {
    Verdict v;
    each_forward(v, [&](const std::string& name, Forward& w) {
        const Harmonic& h = w.h;
        v.expect(rank(h.F) == h.A.dim() && rank(h.Fd) == h.A.dim(), name + ": F or Fd singular");
        v.expect(h.A.dim() == h.B.dim(), name + ": dim A != dim B");
        v.expect(verify_fourier(h), name,
                 {"F.inv.left", "F.inv.right", "Fd.inv.left", "Fd.inv.right", "fri.F.comp", "fri.Fd.comp",
                  "fri.F.conv", "fri.Fd.conv", "dims.A=B"});
    });
    return v;
}

Verdict criterion_bialgebroid() {
    Verdict v;
    const std::vector<std::string> left = {"L.rings", "L.s.hom", "L.t.antihom", "L.st.commute", "L.gamma.bimodule",
                                           "L.cros", "L.gamma.unit", "L.gmp.lifts", "L.gmp.sections", "L.coassoc",
                                           "L.counit.left", "L.counit.right", "L.pi.bimodule", "L.pi.unit",
                                           "L.pi.mult"};
    std::vector<std::string> right;
    for (auto& n : left) right.push_back("R" + n.substr(1));
    each_forward(v, [&](const std::string& name, Forward& w) {
        v.expect(verify_left(w.A.left), name + " A", left);
        v.expect(verify_right(w.A.right), name + " A", right);
        v.expect(verify_left(w.B.left), name + " B", left);
        v.expect(verify_right(w.B.right), name + " B", right);
        v.expect(verify_structure_forms(w.h, *w.qb, w.A, w.B), name,
                 {"gamma.A.L.forms", "gamma.A.R.forms", "gamma.B.L.forms", "gamma.B.R.forms", "piform.i",
                  "piform.ii", "piform.iii", "piform.iv"});
    });
    return v;
}

Verdict criterion_hopf() {
    Verdict v;
    const std::vector<std::string> axioms = {"H.i.sL=tR", "H.i.tL=sR", "H.ii.LR",  "H.ii.RL", "H.S.bijective",
                                             "H.iii.L",   "H.iii.R",   "H.iv.L",   "H.iv.R"};
    each_forward(v, [&](const std::string& name, Forward& w) {
        v.expect(verify_hopf_axioms(w.A), name + " A", axioms);
        v.expect(verify_hopf_axioms(w.B), name + " B", axioms);
    });
    return v;
}

Verdict criterion_integral() {
    Verdict v;
    each_forward(v, [&](const std::string& name, Forward& w) {
        SVec i = w.h.iA();
        v.expect(is_left_integral(w.A, i) && is_right_integral(w.A, i), name + ": i_A not two sided");
        v.expect(sv::equal(w.A.S.apply(i), i), name + ": S_A(i_A) != i_A");
        DualityIsos d = duality_isos(w.h, *w.qb, w.A);
        v.expect(verify_integral(w.h, w.A, d), name,
                 {"int.left", "int.right", "int.S_invariant", "nondeg.left.bijective", "nondeg.right.bijective",
                  "conv.integral.R", "conv.integral.R_left", "conv.integral.L", "conv.integral.L_left"});
    });
    return v;
}

Verdict criterion_duality() {
    Verdict v;
    each_forward(v, [&](const std::string& name, Forward& w) {
        DualityIsos d = duality_isos(w.h, *w.qb, w.A);
        v.expect(verify_duality_isos(w.h, d), name, {"alpha.A*.hom", "alpha.A*.inv.left", "alpha.A*.inv.right"});
        v.expect(verify_strict_duality(w.h, w.A, w.B, d), name,
                 {"duality.s", "duality.t", "duality.gamma", "duality.pi", "duality.S", "duality.morphism.strict"});
        auto sd = second_dual(w.A, w.h.iA());
        v.expect(sd.report, name + " second dual", {"morphism.strict", "morphism.bijective"});
    });
    return v;
}

std::map<std::string, RoundTrip>& trips() {
    static std::map<std::string, RoundTrip> cache;
    return cache;
}

Verdict criterion_roundtrip() {
    Verdict v;
    for (auto name : {"hopf-qc2", "hopf-fnc2"}) {
        auto ex = catalog_hopf(name, Q);
        Stopwatch sw;
        RoundTrip t = roundtrip(ex.hopf, ex.integral);
        double s = sw.seconds();
        v.expect(t.report, name,
                 {"iso.morphism.strict", "iso.morphism.bijective", "iso.proof.S", "iso.proof.conv",
                  "iso.proof.gamma", "iso.proof.s", "iso.proof.t", "iso.proof.mu", "iso.proof.pi"});
        v.expect(s < 60.0, std::string(name) + ": " + std::to_string(s) + " s exceeds 60 s");
        trips().emplace(name, std::move(t));
    }
    // Both directions of the S-invariance criterion need witnesses.
    int invariant_left = 0, neither = 0;
    for (auto& name : hopf_names()) {
        auto ex = catalog_hopf(name, Q);
        const HopfAlgebroid& H = ex.hopf;
        bool invariant = sv::equal(H.S.apply(ex.integral), ex.integral);
        bool left = is_left_integral(H, ex.integral);
        v.expect(s_invariance_remark(H, ex.integral), name, {"remark.iff", "remark.chain.first", "remark.chain.end"});
        v.expect(invariant == left, name + ": S-invariance and two-sidedness disagree");
        invariant_left += invariant && left;
        neither += !invariant && !left;
        if (!invariant) {
            bool rejected = false;
            try {
                conv_on_H(H, ex.integral);
            } catch (const InputError&) {
                rejected = true;
            }
            v.expect(rejected, name + ": a non-invariant integral was accepted");
        }
    }
    v.expect(invariant_left > 0, "no example with an S-invariant two sided integral");
    v.expect(neither > 0, "no example with a right-only integral");
    return v;
}

Verdict criterion_negative() {
    Verdict v;
    JobOptions opt;
    opt.pipeline = Pipeline::All;
    nlohmann::json flat = nlohmann::json::parse(emit_document(catalog_extension("qc2", Q))).flatten();
    const std::set<std::string> header = {"/format", "/kind", "/name", "/modulus"};
    int tried = 0, invalid = 0, failed = 0;
    for (auto& [ptr, value] : flat.items()) {
        if (header.count(ptr) || !value.is_string()) continue;
        nlohmann::json mutated = flat;
        mutated[ptr] = (Scalar::parse(value.get<std::string>()) + Scalar(1)).str();
        JobResult r = run_text(mutated.unflatten().dump(), opt);
        ++tried;
        if (r.status == kInvalidInput) {
            ++invalid;
            v.expect(!r.error.empty(), ptr + ": status 3 without a named violation");
            continue;
        }
        if (r.status != kCheckFailed) {
            v.expect(false, ptr + ": status " + std::to_string(r.status));
            continue;
        }
        ++failed;
        bool attributed = false;
        for (auto& s : r.stages)
            for (auto& it : s.items) attributed = attributed || (!it.pass && (it.residual_rank > 0 || !it.detail.empty()));
        v.expect(attributed, ptr + ": failure without a residual");
    }
    v.expect(tried > 0, "no structure constants perturbed");
    v.notes.push_back(std::to_string(tried) + " perturbations, " + std::to_string(invalid) + " invalid, " +
                      std::to_string(failed) + " failing checks");
    return v;
}

// All bracketings of a composable word.
std::vector<ExprP> bracketings(const Bicat& b, const std::vector<ExprP>& w, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return {w[lo]};
    std::vector<ExprP> out;
    for (std::size_t k = lo + 1; k < hi; ++k)
        for (auto& l : bracketings(b, w, lo, k))
            for (auto& r : bracketings(b, w, k, hi)) out.push_back(b.h(l, r));
    return out;
}

void appendix(Verdict& v, const std::string& label, const Bicat& b, const ExprP& I, const ExprP& J, const Obj& extra) {
    const MonoidalInstance& inst = b.instance();
    v.expect(b.pentagon(I, J, I, J) && b.pentagon(J, I, J, I), label + ": pentagon");
    v.expect(b.triangle(I, J) && b.triangle(J, I), label + ": triangle");
    int words = 0, paths = 0;
    for (const ExprP& first : {I, J})
        for (std::size_t len = 1; len <= 5; ++len) {
            std::vector<ExprP> w;
            for (std::size_t k = 0; k < len; ++k) w.push_back(k % 2 == 0 ? first : (first == I ? J : I));
            auto exprs = bracketings(b, w, 0, len);
            exprs.push_back(b.h(b.u(exprs[0]->t0), exprs[0]));
            exprs.push_back(b.h(exprs[0], b.u(exprs[0]->s0)));
            ++words;
            std::string tag = label + " word " + std::to_string(words);
            int d = b.dim(exprs[0]);
            for (auto& e1 : exprs)
                for (auto& e2 : exprs) {
                    Cell c12 = b.coherence_iso(e1, e2);
                    v.expect(b.coherence_iso(e1, e2, Bicat::Strategy::Rewriting).m == c12.m,
                             tag + ": strategies disagree");
                    v.expect(b.compose(b.coherence_iso(e2, e1), c12).m == Matrix::identity(d),
                             tag + ": round trip is not the identity");
                    for (auto& e3 : exprs) {
                        ++paths;
                        v.expect(b.compose(b.coherence_iso(e2, e3), c12).m == b.coherence_iso(e1, e3).m,
                                 tag + ": composite depends on the path");
                    }
                }
        }
    const Bimodule& X = b.generator(I->index);
    const Bimodule& Xb = b.generator(J->index);
    Obj unit = inst.unit();
    for (const Obj* z : std::initializer_list<const Obj*>{&unit, &extra, &X.obj, &Xb.obj}) {
        v.expect(preserves_coequalizer(inst, X, Xb, *z), label + ": coequalizer of (X, Xb)");
        v.expect(preserves_coequalizer(inst, Xb, X, *z), label + ": coequalizer of (Xb, X)");
    }
    v.notes.push_back(label + " " + std::to_string(paths) + " paths");
}

Verdict criterion_appendix() {
    Verdict v;
    for (auto name : {"qc2", "mat2"}) {
        FrobeniusDatum f = extension_datum(catalog_extension(name, Q));
        appendix(v, std::string("VEC ") + name, f.b(), f.i, f.j, Obj{3, {}});
    }
    for (auto name : {"hopf-qc2", "hopf-fnc2"}) {
        auto it = trips().find(name);
        if (it == trips().end()) {
            auto ex = catalog_hopf(name, Q);
            it = trips().emplace(name, roundtrip(ex.hopf, ex.integral)).first;
        }
        const RoundTrip& t = it->second;
        v.expect(verify_coherence_forms(t.conv, t.f), std::string("MODH ") + name, {"coh.coequalizer"});
        const Algebra& H = t.conv.H.A();
        Obj regular{H.dim, {}};
        for (int a = 0; a < H.dim; ++a) regular.act.push_back(H.right_mult(sv::unit(a)));
        appendix(v, std::string("MODH ") + name, t.f.b(), t.f.i, t.f.j, regular);
    }
    return v;
}

}  // namespace

int main() {
    struct Criterion {
        const char* title;
        Verdict (*run)();
    };
    const Criterion criteria[] = {
        {"rigidity relations on trivial, qc2, qc2-in-qc4, mat2, qs3", criterion_rigidity},
        {"D2 quasi-bases for iota and iota_bar", criterion_d2},
        {"Fourier transforms and exchange laws", criterion_fourier},
        {"left and right bialgebroid axioms, structure forms", criterion_bialgebroid},
        {"Hopf algebroid axioms for A and B", criterion_hopf},
        {"two sided S-invariant non-degenerate integral i_A", criterion_integral},
        {"strict duality B = (A*)_{i_A} and the second dual", criterion_duality},
        {"round trip H -> A and the S-invariance criterion", criterion_roundtrip},
        {"negative controls on qc2", criterion_negative},
        {"bicategory coherence and coequalizers in VEC and MODH", criterion_appendix},
    };
    int failed = 0, n = 0;
    for (auto& c : criteria) {
        ++n;
        Stopwatch sw;
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.failures.push_back(std::string("exception: ") + e.what());
        }
        std::printf("criterion %2d %s  %s  [%.2f s]", n, v.pass() ? "PASS" : "FAIL", c.title, sw.seconds());
        for (auto& note : v.notes) std::printf("  (%s)", note.c_str());
        std::printf("\n");
        for (std::size_t k = 0; k < v.failures.size() && k < 10; ++k) std::printf("    %s\n", v.failures[k].c_str());
        if (v.failures.size() > 10) std::printf("    ... %zu more\n", v.failures.size() - 10);
        failed += !v.pass();
    }
    std::printf("%d/%d criteria passed\n", n - failed, n);
    return failed == 0 ? 0 : 1;
}
