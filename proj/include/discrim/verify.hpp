#pragma once
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace discrim::verify {

using u64 = std::uint64_t;

enum class Outcome { kPass, kFail, kSkip };

struct Row {
    u64 index = 0;
    Outcome outcome = Outcome::kPass;
    u64 value = 0;
    std::string witness;  // empty or deterministic detail text
};

struct Report {
    std::string target;
    u64 lo = 0, hi = 0;
    std::vector<Row> rows;  // ascending, contiguous; resumed runs hold only the new tail
    u64 pass = 0, fail = 0, skip = 0;  // whole-range counts, resumed prefix included
    double wall_seconds = 0;  // never serialized
    bool interrupted = false;
};

struct JobOptions {
    std::optional<std::pair<u64, u64>> range;  // default per target
    unsigned workers = 1;
    std::string checkpoint_path;
    std::string report_path;
    std::optional<u64> interrupt_after;  // test hook: stop after this many rows
};

struct TargetInfo {
    std::string name;
    u64 default_lo = 1, default_hi = 1;
    std::string summary;
};

const std::vector<TargetInfo>& catalog();
const TargetInfo* find_target(const std::string& name);

// runs one catalog target. Rows are a pure function of (target, range); a
// resumed run appends to report_path and must reproduce the uninterrupted
// bytes exactly. Throws checkpoint_error on digest or target mismatch.
Report run_job(const std::string& target, const JobOptions& opts = {});

// "index<TAB>status<TAB>value<TAB>witness" rows plus a final summary record
void write_report(const Report& r, std::ostream& out);
std::string render_rows(const Report& r);     // rows only, no summary
std::string render_summary(const Report& r);  // single summary line

}  // namespace discrim::verify
