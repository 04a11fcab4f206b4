#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfd2/io.hpp"

namespace hopfd2 {

enum class Pipeline { Rigidity, D2, BuildHopf, VerifyHopf, Dualize, Roundtrip, All };

std::string pipeline_name(Pipeline p);
std::optional<Pipeline> parse_pipeline(const std::string& s);

/// Exit statuses of a job.
enum Status : int { kPass = 0, kCheckFailed = 1, kParseError = 2, kInvalidInput = 3 };

struct JobOptions {
    Pipeline pipeline = Pipeline::All;
    std::uint64_t seed = 0;
    int max_terms = 16;
    /// Under pipeline all, extensions with dim A above this skip the round trip.
    int roundtrip_limit = 16;
};

struct JobResult {
    std::string subject;
    std::string kind;  // extension or hopf
    JobOptions options;
    int status = kPass;
    std::string error;
    std::vector<Report> stages;
    std::vector<std::string> skipped;  // stage: reason

    bool pass() const;
};

/// Runs the selected stages. Structural invalidity gives kInvalidInput with
/// the violated axiom, a pipeline not applicable to the document kind gives
/// kParseError, any failing check kCheckFailed.
JobResult run_job(const Document& doc, const JobOptions& opt);
/// Parses first; parse errors give kParseError with their location.
JobResult run_text(const std::string& text, const JobOptions& opt);

/// Deterministic JSON report; timings are included only on request.
std::string render_machine(const JobResult& r, bool timings = false);
/// Text report with one line per check and its anchor.
std::string render_human(const JobResult& r, bool timings = false);

}  // namespace hopfd2
