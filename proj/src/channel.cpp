#include "flagcode/channel.hpp"

#include <stdexcept>

namespace flagcode {

void ChannelConfig::validate(std::size_t shots) const {
    if (!(erasure_prob >= 0.0 && erasure_prob <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "erasure probability must lie in [0, 1]");
    if (!(blackout_prob >= 0.0 && blackout_prob <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "blackout probability must lie in [0, 1]");
    if (!packets_per_shot.empty() && packets_per_shot.size() != 1 && packets_per_shot.size() != shots)
        throw Error(ErrorCode::InvalidArgument, "packets per shot needs 1 or " + std::to_string(shots) + " values");
}

std::size_t ChannelConfig::packets(std::size_t shot_index, const FlagType& type) const {
    if (packets_per_shot.empty()) return type.dim(shot_index);
    if (packets_per_shot.size() == 1) return packets_per_shot.front();
    return packets_per_shot[shot_index];
}

ErrorAccounting error_accounting(const Flag& sent, const StutteringFlag& received) {
    if (sent.type().ambient() != received.type().ambient() || sent.type().length() != received.type().length())
        throw Error(ErrorCode::TypeMismatch, "received sequence does not match the flag type");
    ErrorAccounting acc;
    for (std::size_t i = 0; i < sent.subspaces().size(); ++i) {
        acc.shot_errors.push_back(subspace_distance(sent[i], received[i]));
        acc.total_error += acc.shot_errors.back();
    }
    return acc;
}

namespace {

TransmissionTrace assemble(const FlagCode& code, std::size_t flag_index, std::vector<Matrix> y,
                           std::vector<bool> blackout) {
    const Flag& sent = code.flag(flag_index);
    const Matrix& gen = code.generator(flag_index);
    const FlagType& type = code.type();

    std::vector<Matrix> z;
    std::vector<Subspace> x;
    Matrix gathered(code.field(), 0, code.ambient());
    for (std::size_t i = 0; i < type.length(); ++i) {
        z.push_back(multiply(y[i], row_prefix(gen, type.dim(i))));
        gathered = stack(gathered, z.back());
        x.push_back(Subspace::from_matrix(gathered));
        if (!sent[i].contains(x.back())) throw std::logic_error("erasure channel produced X_i outside F_i");
    }
    StutteringFlag received(type, std::move(x));
    const auto acc = error_accounting(sent, received);
    return TransmissionTrace{flag_index,         std::move(received), std::move(y), std::move(z),
                             std::move(blackout), acc.shot_errors,     acc.total_error};
}

}  // namespace

TransmissionTrace transmit(const FlagCode& code, std::size_t flag_index, const ChannelConfig& cfg, SplitMix64& rng) {
    const FlagType& type = code.type();
    cfg.validate(type.length());
    if (flag_index >= code.size()) throw Error(ErrorCode::IndexOutOfRange, "flag index " + std::to_string(flag_index));

    const auto q = code.field()->q();
    std::vector<Matrix> y;
    std::vector<bool> blackout;
    for (std::size_t i = 0; i < type.length(); ++i) {
        const std::size_t t = type.dim(i);
        const bool dark = rng.bernoulli(cfg.blackout_prob);
        blackout.push_back(dark);
        const std::size_t a = dark ? 0 : cfg.packets(i, type);
        Matrix yi(code.field(), a, t);
        for (std::size_t r = 0; r < a; ++r)
            for (std::size_t c = 0; c < t; ++c) yi(r, c) = static_cast<Elem>(rng.uniform(q));
        if (a > 0 && rng.bernoulli(cfg.erasure_prob))
            for (std::size_t r = 0; r < a; ++r) yi(r, t - 1) = 0;
        y.push_back(std::move(yi));
    }
    return assemble(code, flag_index, std::move(y), std::move(blackout));
}

TransmissionTrace transmit(const FlagCode& code, std::size_t flag_index, const ChannelConfig& cfg) {
    SplitMix64 rng(cfg.seed);
    return transmit(code, flag_index, cfg, rng);
}

TransmissionTrace inject(const FlagCode& code, std::size_t flag_index, const std::vector<Matrix>& y) {
    const FlagType& type = code.type();
    if (flag_index >= code.size()) throw Error(ErrorCode::IndexOutOfRange, "flag index " + std::to_string(flag_index));
    if (y.size() != type.length())
        throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(type.length()) + " Y matrices");
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i].cols() != type.dim(i))
            throw Error(ErrorCode::ShapeMismatch, "Y_" + std::to_string(i + 1) + " must have " +
                                                      std::to_string(type.dim(i)) + " columns");
        if (!y[i].field()->same_as(*code.field())) throw Error(ErrorCode::FieldMismatch, "Y over a different field");
    }
    return assemble(code, flag_index, y, std::vector<bool>(y.size(), false));
}

}  // namespace flagcode
