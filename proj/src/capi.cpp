#include "flagcode/flagcode.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "flagcode/codefile.hpp"
#include "flagcode/codes.hpp"
#include "flagcode/simulation.hpp"

using namespace flagcode;

struct flc_code {
    FlagCode code;
};

namespace {

thread_local std::string g_last_error;

template <class F>
int guarded(F&& body) {
    try {
        g_last_error.clear();
        body();
        return FLC_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return static_cast<int>(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return FLC_E_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = std::string("internal error: ") + e.what();
        return FLC_E_INTERNAL;
    } catch (...) {
        g_last_error = "internal error";
        return FLC_E_INTERNAL;
    }
}

int null_argument(const char* what) {
    g_last_error = std::string("null argument: ") + what;
    return FLC_E_NULL_ARGUMENT;
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void hand_out(FlagCode code, flc_code** out) { *out = new flc_code{std::move(code)}; }

FieldPtr make_field(std::uint32_t p, std::uint32_t m) { return Field::create(p, m); }

void fill(const SpreadReport& r, flc_spread_report* out, char** details) {
    out->expected_size = r.expected_size;
    out->actual_size = r.actual_size;
    out->coverage_checked = r.coverage_checked;
    out->violations = r.violations.size();
    out->ok = r.ok();
    if (details) {
        std::string text;
        for (const auto& v : r.violations) text += v.describe() + "\n";
        *details = duplicate(text);
    }
}

}  // namespace

extern "C" {

const char* flc_last_error(void) { return g_last_error.c_str(); }

const char* flc_status_name(int status) {
    if (status == FLC_OK) return "ok";
    if (status == FLC_E_NULL_ARGUMENT) return "null argument";
    if (status == FLC_E_INTERNAL) return "internal error";
    if (status >= FLC_E_INVALID_ARGUMENT && status <= FLC_E_IO) return to_string(static_cast<ErrorCode>(status));
    return "unknown status";
}

void flc_string_free(char* s) { std::free(s); }

int flc_construct_full(uint32_t p, uint32_t m, size_t k, flc_code** out) {
    if (!out) return null_argument("out");
    return guarded([&] { hand_out(construct_full_flag_code(make_field(p, m), k), out); });
}

int flc_construct_divisor(uint32_t p, uint32_t m, size_t n, const char* type, flc_code** out) {
    if (!out || !type) return null_argument(!out ? "out" : "type");
    return guarded([&] { hand_out(divisor_type_code(make_field(p, m), FlagType::parse(n, type)), out); });
}

int flc_puncture(const flc_code* code, const char* type, flc_code** out) {
    if (!code || !type || !out) return null_argument("code/type/out");
    return guarded([&] { hand_out(puncture(code->code, FlagType::parse(code->code.ambient(), type)), out); });
}

int flc_parse(const char* text, flc_code** out) {
    if (!text || !out) return null_argument("text/out");
    return guarded([&] { hand_out(parse_code(text), out); });
}

int flc_load(const char* path, flc_code** out) {
    if (!path || !out) return null_argument("path/out");
    return guarded([&] { hand_out(load_code(path), out); });
}

int flc_serialize(const flc_code* code, char** out) {
    if (!code || !out) return null_argument("code/out");
    return guarded([&] { *out = duplicate(serialize(code->code)); });
}

int flc_save(const flc_code* code, const char* path) {
    if (!code || !path) return null_argument("code/path");
    return guarded([&] { save_code(code->code, path); });
}

void flc_free(flc_code* code) { delete code; }

size_t flc_size(const flc_code* code) { return code ? code->code.size() : 0; }

size_t flc_ambient(const flc_code* code) { return code ? code->code.ambient() : 0; }

int flc_field(const flc_code* code, uint32_t* p, uint32_t* m) {
    if (!code || !p || !m) return null_argument("code/p/m");
    *p = code->code.field()->p();
    *m = code->code.field()->m();
    return FLC_OK;
}

int flc_type_string(const flc_code* code, char** out) {
    if (!code || !out) return null_argument("code/out");
    return guarded([&] { *out = duplicate(code->code.type().to_string()); });
}

const char* flc_provenance(const flc_code* code) { return code ? to_string(code->code.provenance()) : ""; }

const char* flc_provenance_detail(const flc_code* code) {
    return code ? code->code.provenance_detail().c_str() : "";
}

int flc_verify(const flc_code* code, flc_verify_report* out) {
    if (!code || !out) return null_argument("code/out");
    return guarded([&] {
        const auto r = is_optimum_distance(code->code);
        *out = flc_verify_report{};
        out->size = r.size;
        out->min_distance = r.min_distance;
        out->bound = r.bound;
        out->optimum = r.optimum;
        out->disjoint = r.disjoint;
        out->characterization = r.characterization;
        if (code->code.type().is_full() && code->code.ambient() % 2 == 0) {
            out->construction_checked = 1;
            out->construction_ok = verify_projected_structure(code->code).ok();
        }
    });
}

void flc_sim_params_init(flc_sim_params* params) {
    if (!params) return;
    *params = flc_sim_params{};
    params->trials = 1000;
    params->threads = 1;
}

int flc_simulate(const flc_code* code, const flc_sim_params* params, char** report) {
    if (!code || !params || !report) return null_argument("code/params/report");
    return guarded([&] {
        SimulationConfig cfg;
        cfg.trials = params->trials;
        cfg.threads = params->threads == 0 ? 1 : params->threads;
        cfg.channel.seed = params->seed;
        cfg.channel.erasure_prob = params->erasure_prob;
        cfg.channel.blackout_prob = params->blackout_prob;
        if (params->packets) cfg.channel.packets_per_shot.assign(params->packets, params->packets + params->packets_len);
        const auto r = simulate(code->code, cfg);
        *report = duplicate(params->machine ? format_machine(r) : format_text(r, params->with_trials != 0));
    });
}

int flc_maxclique(uint32_t p, uint32_t m, size_t n, size_t max_witnesses, flc_maxclique_report* out) {
    if (!out) return null_argument("out");
    return guarded([&] {
        const auto r = maximality_oracle(make_field(p, m), n, max_witnesses);
        *out = flc_maxclique_report{};
        out->vertices = r.vertices;
        out->edges = r.edges;
        out->distance = r.distance;
        out->clique_number = r.clique_number;
        out->witnesses = r.witnesses.size();
        for (const auto& s : r.witness_spread_reports) out->witnesses_spread_ok += s.ok();
        out->symmetric = r.symmetric;
        out->loop_free = r.loop_free;
    });
}

int flc_spread_verify_code(const flc_code* code, flc_spread_report* out, char** details) {
    if (!code || !out) return null_argument("code/out");
    return guarded([&] {
        const FlagCode& c = code->code;
        if (c.type().length() == 1) {
            fill(verify_spread(spread_from_code(c)), out, details);
            return;
        }
        const auto& dims = c.type().dims();
        const std::size_t k = c.ambient() / 2;
        auto at = std::find(dims.begin(), dims.end(), k);
        if (c.ambient() % 2 != 0 || at == dims.end())
            throw Error(ErrorCode::TypeMismatch, "code has no n/2-dimensional coordinate to read a spread from");
        std::vector<Matrix> gens;
        for (const Subspace& s : projected_code(c, static_cast<std::size_t>(at - dims.begin()) + 1))
            gens.push_back(s.basis());
        fill(verify_spread(Spread(c.field(), c.ambient(), k, std::move(gens))), out, details);
    });
}

int flc_spread_verify_built(uint32_t p, uint32_t m, size_t k, size_t n, flc_spread_report* out, char** details) {
    if (!out) return null_argument("out");
    return guarded([&] { fill(verify_spread(build_spread(make_field(p, m), k, n)), out, details); });
}

int flc_check_admissibility(uint64_t q, size_t n, size_t k, flc_admissibility* out, char** reason) {
    if (!out) return null_argument("out");
    return guarded([&] {
        const auto v = check_spread_projection_dimension(q, n, k);
        out->admissible = v.admissible;
        out->special_case = v.special_case;
        out->s = v.s;
        out->spread_size = v.spread_size;
        out->next_bound = v.next_bound;
        if (reason) *reason = duplicate(v.reason);
    });
}

}  // extern "C"
