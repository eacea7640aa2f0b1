#include "flagcode/simulation.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace flagcode {

bool trace_respects_erasure_contract(const Flag& sent, const StutteringFlag& received) {
    const auto& x = received.subspaces();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!sent[i].contains(x[i])) return false;
        if (i + 1 < x.size() && !x[i + 1].contains(x[i])) return false;
    }
    return true;
}

namespace {

TrialRecord run_trial(const FlagCode& code, const DecoderIndex& index, const ChannelConfig& channel, std::size_t k,
                      std::size_t trial) {
    SplitMix64 rng(SplitMix64::derive_seed(channel.seed, trial));
    TrialRecord rec;
    rec.trial = trial;
    rec.sent = static_cast<std::size_t>(rng.uniform(code.size()));
    const auto trace = transmit(code, rec.sent, channel, rng);
    rec.total_error = trace.total_error;
    rec.correctable = correctable(trace.total_error, k);
    rec.contract_ok = trace_respects_erasure_contract(code.flag(rec.sent), trace.received);
    const auto outcome = decode(code, index, trace.received);
    rec.decoded = outcome.decoded();
    rec.correct = rec.decoded && outcome.flag_index == rec.sent;
    rec.decode_shot = rec.decoded ? outcome.shot : 0;
    rec.failure = outcome.reason;
    return rec;
}

SimulationSummary summarize(const std::vector<TrialRecord>& records) {
    SimulationSummary s;
    s.trials = records.size();
    for (const auto& r : records) {
        s.correctable += r.correctable;
        s.decoded += r.decoded;
        s.correct += r.correct;
        s.decoded_wrong += r.decoded && !r.correct;
        s.no_condition += r.failure == DecodeOutcome::Reason::NoConditionMet;
        s.contract_violations += r.failure == DecodeOutcome::Reason::ChannelContractViolated;
        s.correctable_correct += r.correctable && r.correct;
        s.trace_contract_failures += !r.contract_ok;
        s.total_error_sum += r.total_error;
    }
    return s;
}

std::string fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

double ratio(std::size_t a, std::size_t b) { return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b); }

const char* reason_name(DecodeOutcome::Reason r) {
    switch (r) {
        case DecodeOutcome::Reason::None: return "none";
        case DecodeOutcome::Reason::NoConditionMet: return "no-condition-met";
        case DecodeOutcome::Reason::ChannelContractViolated: return "channel-contract-violated";
    }
    return "?";
}

}  // namespace

SimulationReport simulate(const FlagCode& code, const SimulationConfig& cfg) {
    if (!code.type().is_full() || code.ambient() % 2 != 0)
        throw Error(ErrorCode::TypeMismatch, "simulation decodes full flag codes on F_q^{2k}");
    cfg.channel.validate(code.type().length());
    const DecoderIndex index = DecoderIndex::build(code);

    SimulationReport report;
    report.config = cfg;
    report.k = code.ambient() / 2;
    report.code_size = code.size();
    report.records.resize(cfg.trials);

    // each worker fills a contiguous slice, so the merged order is the trial order
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(cfg.threads, cfg.trials));
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) report.records[t] = run_trial(code, index, cfg.channel, report.k, t);
    };
    if (workers == 1) {
        work(0, cfg.trials);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = cfg.trials * w / workers, end = cfg.trials * (w + 1) / workers;
            pool.emplace_back([&, w, begin, end] {
                try {
                    work(begin, end);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    report.summary = summarize(report.records);
    return report;
}

std::string format_text(const SimulationReport& report, bool with_trials) {
    const auto& c = report.config.channel;
    const auto& s = report.summary;
    std::ostringstream out;
    out << "simulation k=" << report.k << " code_size=" << report.code_size << " trials=" << s.trials
        << " seed=" << c.seed << " erasure_prob=" << fixed6(c.erasure_prob)
        << " blackout_prob=" << fixed6(c.blackout_prob) << " packets=";
    if (c.packets_per_shot.empty()) {
        out << "default";
    } else {
        for (std::size_t i = 0; i < c.packets_per_shot.size(); ++i) out << (i ? "," : "") << c.packets_per_shot[i];
    }
    out << '\n';
    if (with_trials)
        for (const auto& r : report.records)
            out << "trial " << r.trial << " sent=" << r.sent << " error=" << r.total_error
                << " correctable=" << (r.correctable ? "yes" : "no") << " decoded=" << (r.decoded ? "yes" : "no")
                << " correct=" << (r.correct ? "yes" : "no") << " shot=" << r.decode_shot
                << " reason=" << reason_name(r.failure) << '\n';
    out << "correctable " << s.correctable << '/' << s.trials << '\n'
        << "decoded " << s.decoded << '/' << s.trials << '\n'
        << "correct " << s.correct << '/' << s.trials << " rate=" << fixed6(ratio(s.correct, s.trials)) << '\n'
        << "decoded_wrong " << s.decoded_wrong << '\n'
        << "no_condition_met " << s.no_condition << '\n'
        << "channel_contract_violated " << s.contract_violations << '\n'
        << "correctable_decoded_correctly " << s.correctable_correct << '/' << s.correctable
        << " rate=" << fixed6(ratio(s.correctable_correct, s.correctable)) << '\n'
        << "mean_total_error " << fixed6(ratio(s.total_error_sum, s.trials)) << '\n';
    return out.str();
}

std::string format_machine(const SimulationReport& report) {
    using nlohmann::ordered_json;
    std::string out;
    for (const auto& r : report.records) {
        ordered_json j;
        j["record"] = "trial";
        j["trial"] = r.trial;
        j["sent"] = r.sent;
        j["total_error"] = r.total_error;
        j["correctable"] = r.correctable;
        j["decoded"] = r.decoded;
        j["correct"] = r.correct;
        j["decode_shot"] = r.decode_shot;
        j["reason"] = reason_name(r.failure);
        out += j.dump();
        out += '\n';
    }
    const auto& c = report.config.channel;
    const auto& s = report.summary;
    ordered_json j;
    j["record"] = "summary";
    j["k"] = report.k;
    j["code_size"] = report.code_size;
    j["trials"] = s.trials;
    j["seed"] = c.seed;
    j["erasure_prob"] = fixed6(c.erasure_prob);
    j["blackout_prob"] = fixed6(c.blackout_prob);
    j["packets_per_shot"] = c.packets_per_shot;
    j["correctable"] = s.correctable;
    j["decoded"] = s.decoded;
    j["correct"] = s.correct;
    j["decoded_wrong"] = s.decoded_wrong;
    j["no_condition_met"] = s.no_condition;
    j["channel_contract_violated"] = s.contract_violations;
    j["correctable_decoded_correctly"] = s.correctable_correct;
    j["success_rate"] = fixed6(ratio(s.correct, s.trials));
    j["correctable_success_rate"] = fixed6(ratio(s.correctable_correct, s.correctable));
    out += j.dump();
    out += '\n';
    return out;
}

}  // namespace flagcode
