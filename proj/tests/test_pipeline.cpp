#include "doctest.h"

#include "hopfd2/pipeline.hpp"

using namespace hopfd2;

namespace {

JobOptions options(Pipeline p, std::uint64_t seed = 7) {
    JobOptions o;
    o.pipeline = p;
    o.seed = seed;
    return o;
}

std::string corrupted_qc2() {
    std::string t = emit_document(catalog_document("qc2"));
    auto pos = t.find("[\"0\",\"1\",\"1\",\"0\"]");
    REQUIRE(pos != std::string::npos);
    return t.replace(pos, 17, "[\"2\",\"1\",\"1\",\"0\"]");
}

}  // namespace

TEST_CASE("pipeline names") {
    for (auto p : {Pipeline::Rigidity, Pipeline::D2, Pipeline::BuildHopf, Pipeline::VerifyHopf, Pipeline::Dualize,
                   Pipeline::Roundtrip, Pipeline::All})
        CHECK(parse_pipeline(pipeline_name(p)) == p);
    CHECK_FALSE(parse_pipeline("everything"));
}

TEST_CASE("catalog jobs pass") {
    for (auto name : {"trivial", "qc2"}) {
        CAPTURE(name);
        JobResult r = run_job(catalog_document(name), options(Pipeline::All));
        CHECK(r.status == kPass);
        CHECK(r.pass());
        CHECK(r.stages.size() >= 7);
        for (auto& s : r.stages)
            for (auto& it : s.items) {
                CAPTURE(it.name);
                CHECK_FALSE(it.anchor.empty());
                CHECK(it.pass);
            }
    }
    JobResult h = run_job(catalog_document("hopf-fnc2"), options(Pipeline::All));
    CHECK(h.status == kPass);
    CHECK(h.stages.size() == 4);
}

TEST_CASE("pipeline selects stages") {
    auto titles = [](const JobResult& r) {
        std::vector<std::string> t;
        for (auto& s : r.stages) t.push_back(s.title);
        return t;
    };
    Document qc2 = catalog_document("qc2");
    using V = std::vector<std::string>;
    CHECK(titles(run_job(qc2, options(Pipeline::Rigidity))) == V{"rigidity"});
    CHECK(titles(run_job(qc2, options(Pipeline::D2))) == V{"rigidity", "d2"});
    CHECK(titles(run_job(qc2, options(Pipeline::BuildHopf))) == V{"rigidity", "d2", "fourier", "hopf"});
    CHECK(titles(run_job(qc2, options(Pipeline::Dualize))) ==
          V{"rigidity", "d2", "fourier", "hopf", "integral", "second-dual"});

    JobOptions small = options(Pipeline::All);
    small.roundtrip_limit = 2;
    JobResult r = run_job(qc2, small);
    CHECK(r.status == kPass);
    REQUIRE(r.skipped.size() == 1);
    CHECK(r.skipped[0].rfind("roundtrip", 0) == 0);

    JobOptions starved = options(Pipeline::D2);
    starved.max_terms = 1;
    JobResult s = run_job(qc2, starved);
    CHECK(s.status == kCheckFailed);
    CHECK_FALSE(s.stages.back().find("d2.found")->pass);
}

TEST_CASE("exit statuses") {
    JobResult bad = run_text(corrupted_qc2(), options(Pipeline::All));
    CHECK(bad.status == kInvalidInput);
    CHECK(bad.error.find("associativity") != std::string::npos);
    CHECK(bad.stages.empty());

    JobResult garbled = run_text("{\"format\": \"hopfd2\",", options(Pipeline::All));
    CHECK(garbled.status == kParseError);
    CHECK(garbled.error.find("line") != std::string::npos);

    Document hopf = catalog_document("hopf-qc2");
    for (auto p : {Pipeline::Rigidity, Pipeline::D2, Pipeline::BuildHopf})
        CHECK(run_job(hopf, options(p)).status == kParseError);

    hopf.hopf->integral = hopf.hopf->hopf.A().unit;
    JobResult wrong = run_job(hopf, options(Pipeline::VerifyHopf));
    CHECK(wrong.status == kCheckFailed);
    CHECK_FALSE(wrong.stages[0].find("int.right")->pass);

    Document sweedler = catalog_document("hopf-sweedler");
    JobResult all = run_job(sweedler, options(Pipeline::All));
    CHECK(all.status == kPass);
    CHECK(all.skipped.size() == 2);
    CHECK(run_job(sweedler, options(Pipeline::Dualize)).status == kInvalidInput);
    JobResult rt = run_job(sweedler, options(Pipeline::Roundtrip));
    CHECK(rt.status == kInvalidInput);
    CHECK(rt.stages.size() == 1);
    CHECK(rt.stages[0].pass());
}

TEST_CASE("reports are deterministic and record the seed") {
    Document qc2 = catalog_document("qc2");
    std::string a = render_machine(run_job(qc2, options(Pipeline::All, 42)));
    std::string b = render_machine(run_job(qc2, options(Pipeline::All, 42)));
    CHECK(a == b);
    CHECK(a.find("\"seed\": 42") != std::string::npos);
    CHECK(a.find("\"seconds\"") == std::string::npos);
    CHECK(render_machine(run_job(qc2, options(Pipeline::Rigidity)), true).find("\"seconds\"") != std::string::npos);

    std::string c = render_machine(run_job(qc2, options(Pipeline::All, 43)));
    CHECK(c.find("\"seed\": 43") != std::string::npos);

    std::string human = render_human(run_job(qc2, options(Pipeline::Rigidity)));
    CHECK(human.find("seed 7") != std::string::npos);
    CHECK(human.find("PASS rigrel.1") != std::string::npos);
    CHECK(human.find("verdict: pass (status 0)") != std::string::npos);
    CHECK(render_human(run_text(corrupted_qc2(), options(Pipeline::All))).find("status 3") != std::string::npos);
}
