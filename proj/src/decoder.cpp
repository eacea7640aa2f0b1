#include "flagcode/decoder.hpp"

namespace flagcode {

DecoderIndex DecoderIndex::build(const FlagCode& code) {
    if (!is_disjoint(code)) throw Error(ErrorCode::NotDisjoint, "decoder lookup needs a disjoint flag code");
    DecoderIndex idx;
    const std::size_t r = code.type().length();
    idx.members_.resize(r);
    idx.maps_.resize(r);
    for (std::size_t f = 0; f < code.size(); ++f)
        for (std::size_t i = 0; i < r; ++i) {
            idx.members_[i].push_back(code.flag(f)[i]);
            idx.maps_[i].emplace(code.flag(f)[i], f);
        }
    return idx;
}

const std::vector<Subspace>& DecoderIndex::projected(std::size_t i) const {
    if (i < 1 || i > members_.size()) throw Error(ErrorCode::IndexOutOfRange, "coordinate " + std::to_string(i));
    return members_[i - 1];
}

std::optional<std::size_t> DecoderIndex::lookup(std::size_t i, const Subspace& s) const {
    if (i < 1 || i > maps_.size()) throw Error(ErrorCode::IndexOutOfRange, "coordinate " + std::to_string(i));
    auto it = maps_[i - 1].find(s);
    if (it == maps_[i - 1].end()) return std::nullopt;
    return it->second;
}

namespace {

std::size_t half_dimension(const FlagCode& code) {
    if (!code.type().is_full() || code.ambient() % 2 != 0)
        throw Error(ErrorCode::TypeMismatch, "decoder targets full flag codes on F_q^{2k}");
    return code.ambient() / 2;
}

}  // namespace

DecodeOutcome decode_prefix(const FlagCode& code, const DecoderIndex& index, std::span<const Subspace> prefix) {
    const std::size_t k = half_dimension(code);
    if (prefix.size() > code.type().length() || index.coordinates() != code.type().length())
        throw Error(ErrorCode::TypeMismatch, "received prefix longer than the flag type");

    DecodeOutcome out;
    for (std::size_t i = 1; i <= prefix.size(); ++i) {
        const Subspace& xi = prefix[i - 1];
        if (xi.ambient() != code.ambient()) throw Error(ErrorCode::TypeMismatch, "received subspace in wrong space");
        const bool fires = i <= k ? xi.dim() > 0 : xi.dim() > 2 * (i - k);
        if (!fires) continue;

        out.shot = i;
        const Subspace* hit = nullptr;
        for (const Subspace& c : index.projected(i))
            if (c.contains(xi)) {
                if (!hit) hit = &c;
                ++out.matches;
            }
        if (!hit) {
            out.verdict = DecodeOutcome::Verdict::Failure;
            out.reason = DecodeOutcome::Reason::ChannelContractViolated;
            return out;
        }
        out.verdict = DecodeOutcome::Verdict::Decoded;
        out.reason = DecodeOutcome::Reason::None;
        out.flag_index = *index.lookup(i, *hit);
        return out;
    }
    return out;
}

DecodeOutcome decode(const FlagCode& code, const DecoderIndex& index, const StutteringFlag& x) {
    if (x.type().ambient() != code.ambient() || x.type().length() != code.type().length())
        throw Error(ErrorCode::TypeMismatch, "received stuttering flag does not match the code type");
    return decode_prefix(code, index, x.subspaces());
}

bool correctable(std::size_t total_error, std::size_t k) noexcept { return total_error + 1 <= k * k; }

}  // namespace flagcode
