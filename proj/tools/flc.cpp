// flc: command-line front end over the flagcode C interface.
//
// Exit status: 0 success, 1 a verification came out negative, 2 usage,
// parse or argument errors.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flagcode/flagcode.h"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

int report_error(const char* action, int status) {
    std::fprintf(stderr, "flc: %s: %s (%s)\n", action, flc_last_error(), flc_status_name(status));
    return kUsage;
}

struct CodeHandle {
    flc_code* ptr = nullptr;
    ~CodeHandle() { flc_free(ptr); }
};

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { flc_string_free(ptr); }
};

int write_or_print(const flc_code* code, const std::string& out) {
    if (!out.empty()) {
        const int s = flc_save(code, out.c_str());
        return s == FLC_OK ? kOk : report_error("save", s);
    }
    OwnedString text;
    const int s = flc_serialize(code, &text.ptr);
    if (s != FLC_OK) return report_error("serialize", s);
    std::fputs(text.ptr, stdout);
    return kOk;
}

int load(const std::string& path, CodeHandle& code) {
    const int s = flc_load(path.c_str(), &code.ptr);
    return s == FLC_OK ? kOk : report_error(("load " + path).c_str(), s);
}

void print_spread(const flc_spread_report& r, const char* details) {
    std::printf("spread expected=%llu actual=%zu coverage_checked=%s violations=%zu valid=%s\n",
                static_cast<unsigned long long>(r.expected_size), r.actual_size, r.coverage_checked ? "true" : "false",
                r.violations, r.ok ? "true" : "false");
    if (details && *details) std::fputs(details, stdout);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flag codes over finite fields: construction, verification and erasure-channel simulation", "flc"};
    app.require_subcommand(1);

    std::uint32_t p = 2, m = 1;
    std::size_t k = 2, n = 0;
    std::string out, file, type;

    auto* construct = app.add_subcommand("construct", "full flag code on F_q^{2k} from the planar spread");
    construct->add_option("--p", p, "field characteristic")->required();
    construct->add_option("--m", m, "extension degree")->required();
    construct->add_option("--k", k, "half the ambient dimension")->required();
    construct->add_option("--out", out, "output file (stdout if omitted)");

    auto* info = app.add_subcommand("info", "summarize a code file");
    info->add_option("file", file, "code file")->required();

    auto* verify = app.add_subcommand("verify", "distance, optimality and structural checks");
    verify->add_option("file", file, "code file")->required();

    auto* punct = app.add_subcommand("puncture", "restrict a code to a subtype");
    punct->add_option("file", file, "code file")->required();
    punct->add_option("--type", type, "target type, e.g. 1,3")->required();
    punct->add_option("--out", out, "output file (stdout if omitted)");

    auto* divisor = app.add_subcommand("divisor-construct", "optimum distance code of a type ending at a divisor of n");
    divisor->add_option("--p", p, "field characteristic")->required();
    divisor->add_option("--m", m, "extension degree")->required();
    divisor->add_option("--n", n, "ambient dimension")->required();
    divisor->add_option("--type", type, "type, e.g. 1,2,3")->required();
    divisor->add_option("--out", out, "output file (stdout if omitted)");

    flc_sim_params sim;
    flc_sim_params_init(&sim);
    std::vector<std::size_t> packets;
    std::string format = "text";
    bool with_trials = false;
    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo erasure channel with decoding");
    simulate->add_option("file", file, "code file")->required();
    simulate->add_option("--trials", sim.trials, "number of trials")->capture_default_str();
    simulate->add_option("--seed", sim.seed, "base seed")->capture_default_str();
    simulate->add_option("--erasure-prob", sim.erasure_prob, "newest-row column erasure probability")
        ->check(CLI::Range(0.0, 1.0));
    simulate->add_option("--blackout-prob", sim.blackout_prob, "whole-shot blackout probability")
        ->check(CLI::Range(0.0, 1.0));
    simulate->add_option("--packets", packets, "packets per shot: one value or one per shot")->delimiter(',');
    simulate->add_option("--threads", sim.threads, "worker threads (output does not depend on it)");
    simulate->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    simulate->add_flag("--with-trials", with_trials, "text format: list every trial");

    std::size_t max_witnesses = 64;
    auto* maxclique = app.add_subcommand("maxclique", "exact maximum clique of the full-flag distance graph");
    maxclique->add_option("--p", p, "field characteristic")->required();
    maxclique->add_option("--m", m, "extension degree")->required();
    maxclique->add_option("--n", n, "even ambient dimension")->required();
    maxclique->add_option("--max-witnesses", max_witnesses, "maximum cliques to inspect")->capture_default_str();

    auto* spread = app.add_subcommand("spread-verify", "check a spread from a code file or a fresh construction");
    spread->add_option("file", file, "code file (type (k), or a type containing n/2)");
    auto* sp = spread->add_option("--p", p, "field characteristic");
    auto* sm = spread->add_option("--m", m, "extension degree");
    auto* sk = spread->add_option("--k", k, "member dimension");
    auto* sn = spread->add_option("--n", n, "ambient dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    if (construct->parsed()) {
        CodeHandle code;
        const int s = flc_construct_full(p, m, k, &code.ptr);
        if (s != FLC_OK) return report_error("construct", s);
        return write_or_print(code.ptr, out);
    }

    if (info->parsed()) {
        CodeHandle code;
        if (int rc = load(file, code)) return rc;
        std::uint32_t fp = 0, fm = 0;
        flc_field(code.ptr, &fp, &fm);
        OwnedString t;
        flc_type_string(code.ptr, &t.ptr);
        std::printf("field p=%u m=%u\nn %zu\ntype %s\nflags %zu\nprovenance %s", fp, fm, flc_ambient(code.ptr), t.ptr,
                    flc_size(code.ptr), flc_provenance(code.ptr));
        const char* detail = flc_provenance_detail(code.ptr);
        if (*detail) std::printf(" %s", detail);
        std::printf("\n");
        return kOk;
    }

    if (verify->parsed()) {
        CodeHandle code;
        if (int rc = load(file, code)) return rc;
        flc_verify_report r;
        const int s = flc_verify(code.ptr, &r);
        if (s != FLC_OK) return report_error("verify", s);
        std::printf("size=%zu mindist=%zu optimum=%s\n", r.size, r.min_distance, r.optimum ? "true" : "false");
        std::printf("bound=%zu disjoint=%s characterization=%s\n", r.bound, r.disjoint ? "true" : "false",
                    r.characterization ? "true" : "false");
        if (r.construction_checked) std::printf("projected-structure=%s\n", r.construction_ok ? "ok" : "violated");
        const bool consistent = (r.optimum != 0) == (r.characterization != 0);
        if (!consistent) std::printf("verdict-mismatch=true\n");
        return r.optimum && consistent ? kOk : kFailed;
    }

    if (punct->parsed()) {
        CodeHandle code, result;
        if (int rc = load(file, code)) return rc;
        const int s = flc_puncture(code.ptr, type.c_str(), &result.ptr);
        if (s != FLC_OK) return report_error("puncture", s);
        return write_or_print(result.ptr, out);
    }

    if (divisor->parsed()) {
        CodeHandle code;
        const int s = flc_construct_divisor(p, m, n, type.c_str(), &code.ptr);
        if (s != FLC_OK) return report_error("divisor-construct", s);
        return write_or_print(code.ptr, out);
    }

    if (simulate->parsed()) {
        CodeHandle code;
        if (int rc = load(file, code)) return rc;
        sim.packets = packets.empty() ? nullptr : packets.data();
        sim.packets_len = packets.size();
        sim.machine = format == "machine";
        sim.with_trials = with_trials;
        OwnedString report;
        const int s = flc_simulate(code.ptr, &sim, &report.ptr);
        if (s != FLC_OK) return report_error("simulate", s);
        std::fputs(report.ptr, stdout);
        return kOk;
    }

    if (maxclique->parsed()) {
        flc_maxclique_report r;
        const int s = flc_maxclique(p, m, n, max_witnesses, &r);
        if (s != FLC_OK) return report_error("maxclique", s);
        std::printf("vertices=%zu edges=%zu distance=%zu symmetric=%s loop_free=%s\n", r.vertices, r.edges,
                    r.distance, r.symmetric ? "true" : "false", r.loop_free ? "true" : "false");
        std::printf("clique_number=%zu witnesses=%zu witnesses_spread_ok=%zu\n", r.clique_number, r.witnesses,
                    r.witnesses_spread_ok);
        return r.symmetric && r.loop_free && r.witnesses == r.witnesses_spread_ok ? kOk : kFailed;
    }

    if (spread->parsed()) {
        flc_spread_report r;
        OwnedString details;
        int s;
        if (!file.empty()) {
            CodeHandle code;
            if (int rc = load(file, code)) return rc;
            s = flc_spread_verify_code(code.ptr, &r, &details.ptr);
        } else {
            if (!sp->count() || !sm->count() || !sk->count() || !sn->count()) {
                std::fprintf(stderr, "flc: spread-verify needs a code file or all of --p --m --k --n\n");
                return kUsage;
            }
            s = flc_spread_verify_built(p, m, k, n, &r, &details.ptr);
        }
        if (s != FLC_OK) return report_error("spread-verify", s);
        print_spread(r, details.ptr);
        return r.ok ? kOk : kFailed;
    }
    return kUsage;
}
