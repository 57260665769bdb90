#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "discrim/errors.hpp"
#include "discrim/primes.hpp"
#include "discrim/registry.hpp"
#include "discrim/verify.hpp"

namespace {

using discrim::reg::i64;
using discrim::reg::u64;

struct Usage : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::pair<u64, u64> parse_range(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == s.size())
        throw Usage("range must be LO:HI");
    try {
        size_t a = 0, b = 0;
        u64 lo = std::stoull(s.substr(0, colon), &a);
        u64 hi = std::stoull(s.substr(colon + 1), &b);
        if (a != colon || b != s.size() - colon - 1) throw Usage("range must be LO:HI");
        return {lo, hi};
    } catch (const Usage&) {
        throw;
    } catch (const std::exception&) {
        throw Usage("range must be LO:HI");
    }
}

// splits trailing positionals into (params, indices); count = indices expected
std::pair<std::vector<i64>, std::vector<u64>> split_args(const discrim::reg::FunctionEntry& fn,
                                                         const std::vector<i64>& rest,
                                                         unsigned count) {
    if (rest.size() != fn.param_count + count) {
        std::ostringstream os;
        os << fn.name << " expects " << fn.param_count << " parameter(s) ";
        os << (fn.param_count ? "(" + fn.params_help + ") " : "") << "and " << count << " index";
        os << (count > 1 ? " arguments" : " argument");
        throw Usage(os.str());
    }
    std::vector<i64> params(rest.begin(), rest.begin() + fn.param_count);
    std::vector<u64> idx;
    for (size_t i = fn.param_count; i < rest.size(); ++i) {
        if (rest[i] < 1) throw Usage("indices must be positive");
        idx.push_back(static_cast<u64>(rest[i]));
    }
    fn.check_params(params);
    return {params, idx};
}

const discrim::reg::FunctionEntry& lookup(const std::string& name) {
    const auto* fn = discrim::reg::find(name);
    if (!fn) throw Usage("unknown function: " + name);
    return *fn;
}

void render_line(std::ostream& out, const std::string& format, u64 n, u64 v) {
    if (format == "table")
        out << n << '\t' << v << '\n';
    else if (format == "csv")
        out << n << ',' << v << '\n';
    else if (format == "bfile")
        out << n << ' ' << v << '\n';
    else
        out << "{\"n\":" << n << ",\"value\":" << v << ",\"witness\":\"\"}" << '\n';
}

int cmd_compute(const std::string& name, const std::vector<i64>& rest, u64 cap) {
    const auto& fn = lookup(name);
    auto [params, idx] = split_args(fn, rest, 1);
    std::cout << fn.eval(params, idx[0], cap) << '\n';
    return 0;
}

int cmd_table(const std::string& name, const std::vector<i64>& rest, const std::string& format,
              const std::string& out_path, u64 cap) {
    const auto& fn = lookup(name);
    auto [params, idx] = split_args(fn, rest, 2);
    if (idx[0] > idx[1]) throw Usage("n_from must not exceed n_to");
    std::ostringstream body;
    if (format == "csv") body << "n,value\n";
    for (u64 n = idx[0]; n <= idx[1]; ++n) render_line(body, format, n, fn.eval(params, n, cap));
    if (out_path.empty()) {
        std::cout << body.str();
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!f) throw discrim::io_error("cannot open " + out_path);
    f << body.str();
    f.flush();
    if (!f) throw discrim::io_error("write failed: " + out_path);
    return 0;
}

int cmd_verify(const std::string& target, const std::string& range, unsigned workers,
               const std::string& checkpoint, std::string report,
               std::optional<u64> interrupt_after) {
    namespace dv = discrim::verify;
    const auto* info = dv::find_target(target);
    if (!info) throw Usage("unknown target: " + target);
    dv::JobOptions opts;
    if (!range.empty()) opts.range = parse_range(range);
    opts.workers = workers;
    opts.checkpoint_path = checkpoint;
    if (report.empty()) report = target + ".report";
    opts.report_path = report;
    opts.interrupt_after = interrupt_after;
    dv::Report rep = dv::run_job(target, opts);
    std::cout << "target=" << rep.target << " range=" << rep.lo << ':' << rep.hi
              << " pass=" << rep.pass << " fail=" << rep.fail << " skip=" << rep.skip
              << (rep.interrupted ? " interrupted" : "") << " wall=" << rep.wall_seconds << "s\n";
    return rep.fail > 0 ? 1 : 0;
}

int cmd_list_targets() {
    for (const auto& ti : discrim::verify::catalog())
        std::cout << ti.name << '\t' << ti.default_lo << ':' << ti.default_hi << '\t' << ti.summary
                  << '\n';
    return 0;
}

int cmd_scan(const std::string& name, u64 n_max, std::optional<i64> q) {
    namespace dp = discrim::primes;
    std::vector<u64> ex;
    if (name == "E4" || name == "E6" || name == "E12") {
        u64 d = name == "E4" ? 4 : name == "E6" ? 6 : 12;
        ex = dp::scan_exception_set({d, d - 1}, dp::Window::kTwoNTo24, n_max);
    } else if (name == "L32") {
        ex = dp::scan_exception_set({3, 1}, dp::Window::kThreeNTo3433, n_max);
    } else if (name == "L43") {
        if (!q) throw Usage("L43 requires --q");
        u64 qq = static_cast<u64>(*q);
        if (*q < 3 || *q % 2 == 0 || !dp::is_prime(qq)) throw Usage("--q must be an odd prime");
        ex = dp::scan_exception_set({qq, 1}, dp::Window::kTwoNTo24, n_max, true);
    } else {
        throw Usage("unknown set: " + name);
    }
    std::cout << '{';
    for (size_t i = 0; i < ex.size(); ++i) std::cout << (i ? "," : "") << ex[i];
    std::cout << "}\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discriminator toolkit: sequence distinctness moduli, closed forms, "
                 "and verification jobs"};
    app.require_subcommand(0, 1);

    std::string name, format = "table", out_path, target, range, checkpoint, report;
    std::vector<i64> rest;
    unsigned workers = 1;
    u64 cap = 0, scan_max = 0;
    std::optional<u64> interrupt_after;
    std::optional<i64> scan_q;
    bool list_targets = false;

    auto* compute = app.add_subcommand("compute", "evaluate a registered function at one index");
    compute->add_option("name", name, "function name (see --help-functions)")->required();
    compute->add_option("args", rest, "function parameters, then the index n");
    compute->add_option("--cap", cap, "modulus search ceiling override")->group("");

    auto* table = app.add_subcommand("table", "evaluate a function over an index range");
    table->add_option("name", name, "function name")->required();
    table->add_option("args", rest, "function parameters, then n_from and n_to");
    table->add_option("--format", format, "table | csv | json-lines | bfile")
        ->check(CLI::IsMember({"table", "csv", "json-lines", "bfile"}));
    table->add_option("--out", out_path, "write to this file instead of stdout");
    table->add_option("--cap", cap, "modulus search ceiling override")->group("");

    auto* verify = app.add_subcommand("verify", "run a claim-verification job");
    verify->add_option("target", target, "claim tag, e.g. thm-1.1i or conj-1.2");
    verify->add_option("--range", range, "index range LO:HI (defaults to the catalog range)");
    verify->add_option("--workers", workers, "parallel workers")->check(CLI::Range(1u, 256u));
    verify->add_option("--checkpoint", checkpoint, "checkpoint file for resumable runs");
    verify->add_option("--report", report, "report path (default <target>.report)");
    verify->add_flag("--list", list_targets, "list catalog targets and exit");
    verify->add_option("--interrupt-after", interrupt_after, "stop after this many rows")
        ->group("");

    auto* scan = app.add_subcommand("scan", "compute a prime-window exception set");
    scan->add_option("set", name, "E4 | E6 | E12 | L32 | L43")->required();
    scan->add_option("n_max", scan_max, "scan indices 1..n_max")->required();
    scan->add_option("--q", scan_q, "odd prime for L43");

    bool help_functions = false;
    app.add_flag("--help-functions", help_functions, "list registered functions and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (help_functions) {
        for (const auto& fn : discrim::reg::registry())
            std::cout << fn.name << (fn.param_count ? " <" + fn.params_help + ">" : "") << "\t"
                      << fn.summary << '\n';
        return 0;
    }

    try {
        if (compute->parsed()) return cmd_compute(name, rest, cap);
        if (table->parsed()) return cmd_table(name, rest, format, out_path, cap);
        if (verify->parsed()) {
            if (list_targets) return cmd_list_targets();
            if (target.empty()) throw Usage("verify needs a target or --list");
            return cmd_verify(target, range, workers, checkpoint, report, interrupt_after);
        }
        if (scan->parsed()) return cmd_scan(name, scan_max, scan_q);
        throw Usage("no subcommand");
    } catch (const discrim::checkpoint_error& e) {
        std::cerr << "checkpoint error: " << e.what() << '\n';
        return 5;
    } catch (const discrim::cap_exhausted& e) {
        std::cerr << "cap exhausted: " << e.what() << '\n';
        return 3;
    } catch (const discrim::io_error& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}
