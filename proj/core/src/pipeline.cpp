#include "hopfd2/pipeline.hpp"

#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hopfd2/inverse.hpp"

namespace hopfd2 {

namespace {

const char* kRandom = "identities on random elements drawn from the recorded seed";

const std::vector<std::pair<Pipeline, std::string>> kNames = {
    {Pipeline::Rigidity, "rigidity"},   {Pipeline::D2, "d2"},         {Pipeline::BuildHopf, "build-hopf"},
    {Pipeline::VerifyHopf, "verify-hopf"}, {Pipeline::Dualize, "dualize"}, {Pipeline::Roundtrip, "roundtrip"},
    {Pipeline::All, "all"}};

// Stages with a precondition failure stop the job with kInvalidInput.
struct InvalidInput {
    std::string message;
};

class Runner {
public:
    explicit Runner(JobResult& r) : r_(r) {}

    // Runs fn into a fresh stage; internal inconsistencies become a failing item.
    bool stage(const std::string& title, const std::function<void(Report&)>& fn) {
        Report rep;
        rep.title = title;
        Stopwatch sw;
        try {
            fn(rep);
        } catch (const ConsistencyError& e) {
            rep.add(bool_item(title + ".consistency", "internal consistency of the construction", false, e.what()));
        } catch (const InputError& e) {
            throw InvalidInput{e.what()};
        }
        rep.seconds = sw.seconds();
        bool ok = rep.pass();
        r_.stages.push_back(std::move(rep));
        return ok;
    }

private:
    JobResult& r_;
};

SVec random_element(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<Scalar> d;
    for (int k = 0; k < n; ++k) d.emplace_back(coef(rng));
    return sv::from_dense(d);
}

void random_extension(Report& rep, const Construction& c, std::uint64_t seed) {
    const Harmonic& h = c.h;
    const Algebra& A = h.A.alg;
    const Algebra& C = h.convA;
    int n = A.dim;
    std::mt19937_64 rng(seed);
    Quotient ql = left_tensor(c.A.left);
    Residuals fri(h.B.dim()), anti(n), assoc(n), gmp(ql.dim), comp(n);
    for (int trial = 0; trial < 4; ++trial) {
        SVec a1 = random_element(rng, n), a2 = random_element(rng, n), a3 = random_element(rng, n);
        fri.add(h.F.apply(A.product(a1, a2)), h.convB.product(h.F.apply(a2), h.F.apply(a1)));
        anti.add(h.S_A.apply(A.product(a1, a2)), A.product(h.S_A.apply(a2), h.S_A.apply(a1)));
        assoc.add(C.product(a1, C.product(a2, a3)), C.product(C.product(a1, a2), a3));
        gmp.add(ql.projection.apply(c.A.left.gamma.apply(A.product(a1, a2))),
                ql.projection.apply(tensor_mul(A, c.A.left.gamma.apply(a1), c.A.left.gamma.apply(a2))));
        SVec rhs;
        for (auto& [y, x] : c.qb.terms)
            rhs = sv::add(rhs, A.product(C.product(A.product(a1, y), a2), C.product(x, a3)));
        comp.add(C.product(a1, A.product(a2, a3)), rhs);
    }
    rep.add(fri.item("random.fri", kRandom));
    rep.add(anti.item("random.S_A.anti", kRandom));
    rep.add(assoc.item("random.conv.assoc", kRandom));
    rep.add(gmp.item("random.gmp", kRandom));
    rep.add(comp.item("random.comp", kRandom));
}

void random_hopf(Report& rep, const HopfAlgebroid& H, std::uint64_t seed) {
    const Algebra& A = H.A();
    int n = A.dim;
    std::mt19937_64 rng(seed);
    Quotient ql = left_tensor(H.left), qr = right_tensor(H.right);
    Residuals anti(n), gl(ql.dim), gr(qr.dim);
    for (int trial = 0; trial < 4; ++trial) {
        SVec a1 = random_element(rng, n), a2 = random_element(rng, n);
        SVec a12 = A.product(a1, a2);
        anti.add(H.S.apply(a12), A.product(H.S.apply(a2), H.S.apply(a1)));
        gl.add(ql.projection.apply(H.left.gamma.apply(a12)),
               ql.projection.apply(tensor_mul(A, H.left.gamma.apply(a1), H.left.gamma.apply(a2))));
        gr.add(qr.projection.apply(H.right.gamma.apply(a12)),
               qr.projection.apply(tensor_mul(A, H.right.gamma.apply(a1), H.right.gamma.apply(a2))));
    }
    rep.add(anti.item("random.S.anti", kRandom));
    rep.add(gl.item("random.gamma_L", kRandom));
    rep.add(gr.item("random.gamma_R", kRandom));
}

void run_extension(Runner& run, JobResult& res, const FrobeniusExtension& e, const JobOptions& opt) {
    Pipeline p = opt.pipeline;
    FrobeniusDatum f = extension_datum(e);
    if (!run.stage("rigidity", [&](Report& r) { r.append(verify_rigidity(f)); })) return;
    if (p == Pipeline::Rigidity) return;

    Construction c;
    bool found = false;
    bool ok = run.stage("d2", [&](Report& r) {
        c.h = build_harmonic(f);
        auto qb = find_d2_quasibasis(f, c.h.A, opt.max_terms, quasibasis_leg_spaces(c.h));
        r.add(bool_item("d2.found", "d2: a quasi-basis exists", qb.has_value(),
                        qb ? std::to_string(qb->size()) + " terms"
                           : "none with at most " + std::to_string(opt.max_terms) + " terms"));
        if (!qb) return;
        found = true;
        c.qb = *qb;
        c.qbB = dual_quasibasis(c.h, c.qb);
        r.append(verify_d2(f, c.h.A, c.qb), "iota.");
        r.append(verify_d2(swapped(f), c.h.B, c.qbB), "iota_bar.");
        r.append(quasibasis_identities(c.h, c.qb));
    });
    if (!found || p == Pipeline::D2) return;

    ok = run.stage("fourier", [&](Report& r) { r.append(verify_harmonic(c.h)); }) && ok;
    ok = run.stage("hopf", [&](Report& r) {
        c.A = build_hopf_A(c.h, c.qb);
        c.B = build_hopf_B(c.h, c.qb);
        r.append(verify(c.A), "A.");
        r.append(verify(c.B), "B.");
        r.append(verify_structure_forms(c.h, c.qb, c.A, c.B));
    }) && ok;
    if (p == Pipeline::BuildHopf || p == Pipeline::VerifyHopf) return;
    if (!ok) return;

    if (p == Pipeline::Dualize || p == Pipeline::All) {
        run.stage("integral", [&](Report& r) {
            DualityIsos d = duality_isos(c.h, c.qb, c.A);
            r.append(verify_duality_isos(c.h, d));
            r.append(verify_integral(c.h, c.A, d));
            r.append(verify_strict_duality(c.h, c.A, c.B, d));
        });
        run.stage("second-dual", [&](Report& r) {
            auto sd = second_dual(c.A, c.h.iA());
            r.append(sd.report);
        });
    }
    if (p == Pipeline::All && c.A.dim() > opt.roundtrip_limit)
        res.skipped.push_back("roundtrip: dim A = " + std::to_string(c.A.dim()) + " exceeds the limit " +
                              std::to_string(opt.roundtrip_limit));
    else if (p == Pipeline::Roundtrip || p == Pipeline::All)
        run.stage("roundtrip", [&](Report& r) { r.append(roundtrip(c.A, c.h.iA()).report); });
    if (p == Pipeline::All) run.stage("random", [&](Report& r) { random_extension(r, c, opt.seed); });
}

void run_hopf(Runner& run, JobResult& res, const HopfExample& ex, const JobOptions& opt) {
    Pipeline p = opt.pipeline;
    const HopfAlgebroid& H = ex.hopf;
    run.stage("hopf", [&](Report& r) {
        r.append(verify(H));
        bool right = is_right_integral(H, ex.integral);
        r.add(bool_item("int.right", "integrals: Υa = Υs_Rπ_R(a)", right));
        auto w = right_nondegeneracy(H, ex.integral);
        r.add(bool_item("int.nondegenerate.right", "non-degenerate integral", w.has_value()));
        if (!w || !right) return;
        r.append(verify_right_witness(H, *w));
        r.append(lemma_equivalences(H, ex.integral, Side::Right));
        r.append(s_invariance_remark(H, ex.integral));
    });
    if (p == Pipeline::VerifyHopf) return;
    if (p == Pipeline::All && !is_left_integral(H, ex.integral)) {
        res.skipped.push_back("dual: the integral is not two sided");
        res.skipped.push_back("roundtrip: the integral is not two sided");
        run.stage("random", [&](Report& r) { random_hopf(r, H, opt.seed); });
        return;
    }
    if (p == Pipeline::Dualize || p == Pipeline::All)
        run.stage("dual", [&](Report& r) {
            DualHopf d = dualize(H, ex.integral);
            r.append(verify(d.hopf), "dual.");
            r.append(verify_left_witness(H, d.witness));
            r.append(second_dual(H, ex.integral).report);
        });
    if (p == Pipeline::Roundtrip || p == Pipeline::All)
        run.stage("roundtrip", [&](Report& r) { r.append(roundtrip(H, ex.integral).report); });
    if (p == Pipeline::All) run.stage("random", [&](Report& r) { random_hopf(r, H, opt.seed); });
}

}  // namespace

std::string pipeline_name(Pipeline p) {
    for (auto& [k, n] : kNames)
        if (k == p) return n;
    return "?";
}

std::optional<Pipeline> parse_pipeline(const std::string& s) {
    for (auto& [k, n] : kNames)
        if (n == s) return k;
    return std::nullopt;
}

bool JobResult::pass() const {
    if (!error.empty()) return false;
    for (auto& s : stages)
        if (!s.pass()) return false;
    return true;
}

JobResult run_job(const Document& doc, const JobOptions& opt) {
    JobResult r;
    r.subject = doc.name;
    r.kind = doc.is_extension() ? "extension" : "hopf";
    r.options = opt;
    Runner run(r);
    try {
        if (doc.is_extension()) {
            if (auto err = doc.extension->validate()) throw InvalidInput{*err};
            run_extension(run, r, *doc.extension, opt);
        } else {
            if (auto err = validate_structure(doc.hopf->hopf)) throw InvalidInput{*err};
            Pipeline p = opt.pipeline;
            if (p == Pipeline::Rigidity || p == Pipeline::D2 || p == Pipeline::BuildHopf) {
                r.status = kParseError;
                r.error = "pipeline " + pipeline_name(p) + " needs an extension document";
                return r;
            }
            run_hopf(run, r, *doc.hopf, opt);
        }
    } catch (const InvalidInput& e) {
        r.status = kInvalidInput;
        r.error = e.message;
        return r;
    } catch (const InputError& e) {
        r.status = kInvalidInput;
        r.error = e.what();
        return r;
    }
    r.status = r.pass() ? kPass : kCheckFailed;
    return r;
}

JobResult run_text(const std::string& text, const JobOptions& opt) {
    try {
        return run_job(parse_document(text), opt);
    } catch (const ParseError& e) {
        JobResult r;
        r.options = opt;
        r.status = kParseError;
        r.error = e.what();
        return r;
    }
}

std::string render_machine(const JobResult& r, bool timings) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["subject"] = r.subject;
    j["kind"] = r.kind;
    j["pipeline"] = pipeline_name(r.options.pipeline);
    j["seed"] = r.options.seed;
    j["max_terms"] = r.options.max_terms;
    j["status"] = r.status;
    j["verdict"] = r.status == kPass ? "pass" : "fail";
    if (!r.error.empty()) j["error"] = r.error;
    ordered_json stages = ordered_json::array();
    for (auto& s : r.stages) {
        ordered_json st;
        st["stage"] = s.title;
        st["pass"] = s.pass();
        if (timings) st["seconds"] = s.seconds;
        ordered_json items = ordered_json::array();
        for (auto& it : s.items) {
            ordered_json i;
            i["name"] = it.name;
            i["anchor"] = it.anchor;
            i["pass"] = it.pass;
            i["residual_rank"] = it.residual_rank;
            if (!it.detail.empty()) i["detail"] = it.detail;
            if (timings) i["seconds"] = it.seconds;
            items.push_back(std::move(i));
        }
        st["checks"] = std::move(items);
        stages.push_back(std::move(st));
    }
    j["stages"] = std::move(stages);
    if (!r.skipped.empty()) j["skipped"] = r.skipped;
    return j.dump(1) + "\n";
}

std::string render_human(const JobResult& r, bool timings) {
    std::ostringstream os;
    os << (r.subject.empty() ? "<input>" : r.subject) << " [" << r.kind << "] pipeline " << pipeline_name(r.options.pipeline)
       << ", seed " << r.options.seed << ", max terms " << r.options.max_terms << "\n";
    if (!r.error.empty()) os << "error: " << r.error << "\n";
    for (auto& s : r.stages) {
        int passed = 0;
        for (auto& it : s.items) passed += it.pass;
        os << "\n== " << s.title << " (" << passed << "/" << s.items.size() << ")";
        if (timings) os << "  " << s.seconds << "s";
        os << "\n";
        for (auto& it : s.items) {
            os << (it.pass ? "  PASS " : "  FAIL ") << it.name;
            if (!it.pass && it.residual_rank) os << "  residual rank " << it.residual_rank;
            if (timings && it.seconds > 0) os << "  " << it.seconds << "s";
            os << "\n";
            if (!it.anchor.empty()) os << "       " << it.anchor << "\n";
            if (!it.detail.empty()) os << "       " << it.detail << "\n";
        }
    }
    for (auto& s : r.skipped) os << "\nskipped " << s << "\n";
    os << "\nverdict: " << (r.status == kPass ? "pass" : "fail") << " (status " << r.status << ")\n";
    return os.str();
}

}  // namespace hopfd2
