#include <algorithm>
#include <atomic>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "hopfd2/pipeline.hpp"

using namespace hopfd2;

namespace {

struct Common {
    std::string input;
    std::string example;
    std::string pipeline;
    std::string format = "human";
    std::uint64_t seed = 0;
    int max_terms = 16;
    int roundtrip_limit = 16;
    bool timings = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_pipeline) {
    auto* in = cmd->add_option("--input", c.input, "structure-constant document");
    auto* ex = cmd->add_option("--example", c.example, "catalog entry instead of a file");
    in->excludes(ex);
    if (with_pipeline)
        cmd->add_option("--pipeline", c.pipeline, "rigidity|d2|build-hopf|verify-hopf|dualize|roundtrip|all");
    cmd->add_option("--format", c.format, "machine|human")->check(CLI::IsMember({"machine", "human"}));
    cmd->add_option("--seed", c.seed, "seed of the random identity checks");
    cmd->add_option("--max-terms", c.max_terms, "longest quasi-basis searched")->check(CLI::Range(1, 4096));
    cmd->add_option("--roundtrip-limit", c.roundtrip_limit, "largest dim A round-tripped by pipeline all");
    cmd->add_flag("--timings", c.timings, "include timings in the report");
}

int run(const Common& c, Pipeline fallback) {
    JobOptions opt;
    opt.pipeline = fallback;
    opt.seed = c.seed;
    opt.max_terms = c.max_terms;
    opt.roundtrip_limit = c.roundtrip_limit;
    JobResult r;
    r.options = opt;
    if (!c.pipeline.empty()) {
        auto p = parse_pipeline(c.pipeline);
        if (!p) {
            std::cerr << "unknown pipeline " << c.pipeline << "\n";
            return kParseError;
        }
        opt.pipeline = r.options.pipeline = *p;
    }
    try {
        if (!c.example.empty()) r = run_job(catalog_document(c.example), opt);
        else if (!c.input.empty()) r = run_job(read_document(c.input), opt);
        else {
            std::cerr << "one of --input or --example is required\n";
            return kParseError;
        }
    } catch (const ParseError& e) {
        r.status = kParseError;
        r.error = e.what();
    } catch (const InputError& e) {
        r.status = kParseError;
        r.error = e.what();
    }
    std::cout << (c.format == "machine" ? render_machine(r, c.timings) : render_human(r, c.timings));
    return r.status;
}

// Pipeline all on every catalog entry with a pool of workers; one line per entry.
int check_catalog(const Common& c, unsigned jobs) {
    auto names = catalog_names();
    std::vector<JobResult> results(names.size());
    JobOptions opt;
    opt.seed = c.seed;
    opt.max_terms = c.max_terms;
    opt.roundtrip_limit = c.roundtrip_limit;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < names.size();) results[k] = run_job(catalog_document(names[k]), opt);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    int status = kPass;
    for (std::size_t k = 0; k < names.size(); ++k) {
        const JobResult& r = results[k];
        if (c.format == "machine") {
            std::cout << render_machine(r, c.timings);
        } else {
            int passed = 0, total = 0;
            for (auto& s : r.stages)
                for (auto& it : s.items) {
                    passed += it.pass;
                    ++total;
                }
            std::cout << names[k] << ": " << (r.status == kPass ? "pass" : "fail") << " (status " << r.status << ", "
                      << passed << "/" << total << " checks)";
            if (!r.error.empty()) std::cout << "  " << r.error;
            for (auto& s : r.skipped) std::cout << "  skipped " << s;
            std::cout << "\n";
        }
        status = std::max(status, r.status);
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hopf algebroids of depth two Frobenius 1-morphisms"};
    app.require_subcommand(1);
    Common common;

    struct Command {
        const char* name;
        const char* help;
        Pipeline pipeline;
        bool with_pipeline;
    };
    const Command commands[] = {
        {"verify-extension", "rigidity, D2 and the forward construction of an extension", Pipeline::All, true},
        {"build-hopf", "build and verify the Hopf algebroids A and B", Pipeline::BuildHopf, false},
        {"verify-hopf", "verify a Hopf algebroid and its integral", Pipeline::VerifyHopf, false},
        {"dualize", "dual Hopf algebroid and second dual", Pipeline::Dualize, false},
        {"roundtrip", "rebuild a Hopf algebroid from its convolution Frobenius algebra", Pipeline::Roundtrip, false},
    };
    std::vector<std::pair<CLI::App*, Pipeline>> subs;
    for (auto& cmd : commands) {
        auto* sub = app.add_subcommand(cmd.name, cmd.help);
        add_common(sub, common, cmd.with_pipeline);
        subs.emplace_back(sub, cmd.pipeline);
    }

    auto* catalog = app.add_subcommand("catalog", "built-in examples");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "names of the built-in examples");
    auto* emit = catalog->add_subcommand("emit", "print the document of an example");
    std::string name;
    std::uint64_t modulus = 0;
    emit->add_option("name", name, "example name")->required();
    emit->add_option("--modulus", modulus, "prime modulus, 0 for the rationals");
    auto* check = catalog->add_subcommand("check", "pipeline all on every example");
    Common check_opts;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    check->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
    check->add_option("--format", check_opts.format, "machine|human")->check(CLI::IsMember({"machine", "human"}));
    check->add_option("--seed", check_opts.seed, "seed of the random identity checks");
    check->add_option("--max-terms", check_opts.max_terms, "longest quasi-basis searched")->check(CLI::Range(1, 4096));
    check->add_option("--roundtrip-limit", check_opts.roundtrip_limit, "largest dim A round-tripped");
    check->add_flag("--timings", check_opts.timings, "include timings in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kParseError;
    }

    if (list->parsed()) {
        for (auto& n : catalog_names()) std::cout << n << "\n";
        return 0;
    }
    if (emit->parsed()) {
        try {
            std::cout << emit_document(catalog_document(name, Field{modulus}));
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return kParseError;
        }
        return 0;
    }
    if (check->parsed()) return check_catalog(check_opts, jobs);
    for (auto& [sub, pipeline] : subs)
        if (sub->parsed()) return run(common, pipeline);
    return kParseError;
}
