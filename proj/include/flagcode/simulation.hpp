#ifndef FLAGCODE_SIMULATION_HPP
#define FLAGCODE_SIMULATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "flagcode/channel.hpp"
#include "flagcode/decoder.hpp"

namespace flagcode {

struct SimulationConfig {
    ChannelConfig channel;
    std::size_t trials = 1000;
    unsigned threads = 1;  ///< trial partitions; results do not depend on it
};

struct TrialRecord {
    std::size_t trial = 0;
    std::size_t sent = 0;
    std::size_t total_error = 0;
    bool correctable = false;
    bool decoded = false;
    bool correct = false;  ///< decoded and equal to the sent flag
    std::size_t decode_shot = 0;  ///< 0 when nothing was decoded
    DecodeOutcome::Reason failure = DecodeOutcome::Reason::None;
    bool contract_ok = false;  ///< X_i ⊆ F_i and X_i ⊆ X_{i+1} on this trace
};

struct SimulationSummary {
    std::size_t trials = 0;
    std::size_t correctable = 0;
    std::size_t decoded = 0;
    std::size_t correct = 0;
    std::size_t decoded_wrong = 0;
    std::size_t no_condition = 0;
    std::size_t contract_violations = 0;  ///< decoder-reported
    std::size_t correctable_correct = 0;
    std::size_t trace_contract_failures = 0;  ///< X_i ⊆ F_i or nesting broken
    std::size_t total_error_sum = 0;
};

struct SimulationReport {
    SimulationConfig config;
    std::size_t k = 0;
    std::size_t code_size = 0;
    std::vector<TrialRecord> records;  ///< ordered by trial
    SimulationSummary summary;
};

/// Trial t draws its randomness from SplitMix64(derive_seed(seed, t)): the
/// sent flag first, then the channel. Needs a code the decoder accepts.
SimulationReport simulate(const FlagCode& code, const SimulationConfig& cfg);

/// Line-oriented text; per-trial lines only when with_trials.
std::string format_text(const SimulationReport& report, bool with_trials);

/// JSON Lines: one object per trial, then one summary object.
std::string format_machine(const SimulationReport& report);

/// X_i ⊆ F_i for all i and X_i ⊆ X_{i+1}.
bool trace_respects_erasure_contract(const Flag& sent, const StutteringFlag& received);

}  // namespace flagcode

#endif  // FLAGCODE_SIMULATION_HPP
