#ifndef FLAGCODE_CHANNEL_HPP
#define FLAGCODE_CHANNEL_HPP

#include <cstdint>
#include <vector>

#include "flagcode/flags.hpp"
#include "flagcode/random.hpp"

namespace flagcode {

/// Erasure channel parameters.
///
/// At shot i the receiver gets a_i random combinations Z_i = Y_i G^(t_i) of
/// the first t_i generator rows. With probability blackout_prob the shot
/// delivers nothing; otherwise, with probability erasure_prob, the column of
/// Y_i that multiplies the newest row is zeroed.
struct ChannelConfig {
    std::vector<std::size_t> packets_per_shot;  ///< a_1..a_r; empty means a_i = t_i
    double erasure_prob = 0.0;
    double blackout_prob = 0.0;
    std::uint64_t seed = 0;

    /// Throws InvalidArgument for probabilities outside [0, 1] or a wrong a_i count.
    void validate(std::size_t shots) const;
    std::size_t packets(std::size_t shot_index, const FlagType& type) const;
};

struct ErrorAccounting {
    std::vector<std::size_t> shot_errors;  ///< e_i = d_S(F_i, X_i)
    std::size_t total_error = 0;
};

/// e_i = d_S(F_i, X_i) and e = sum e_i. Throws TypeMismatch.
ErrorAccounting error_accounting(const Flag& sent, const StutteringFlag& received);

struct TransmissionTrace {
    std::size_t sent_flag_index = 0;
    StutteringFlag received;
    std::vector<Matrix> y_matrices;  ///< a_i x t_i
    std::vector<Matrix> z_matrices;  ///< a_i x n
    std::vector<bool> blackout;
    std::vector<std::size_t> shot_errors;
    std::size_t total_error = 0;
};

/// One transmission with randomness drawn from rng. Throws IndexOutOfRange.
TransmissionTrace transmit(const FlagCode& code, std::size_t flag_index, const ChannelConfig& cfg, SplitMix64& rng);

/// As above with a generator seeded from cfg.seed.
TransmissionTrace transmit(const FlagCode& code, std::size_t flag_index, const ChannelConfig& cfg);

/// Deterministic replay with given Y_i (y[i] must have t_i columns, any row count).
/// Throws ShapeMismatch.
TransmissionTrace inject(const FlagCode& code, std::size_t flag_index, const std::vector<Matrix>& y);

}  // namespace flagcode

#endif  // FLAGCODE_CHANNEL_HPP
