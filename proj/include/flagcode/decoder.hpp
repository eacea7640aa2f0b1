#ifndef FLAGCODE_DECODER_HPP
#define FLAGCODE_DECODER_HPP

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "flagcode/flags.hpp"

namespace flagcode {

/// Per-coordinate lookup from a projected codeword to the flag holding it.
/// Built once per code; only disjoint codes have bijective lookups.
class DecoderIndex {
public:
    /// Throws NotDisjoint.
    static DecoderIndex build(const FlagCode& code);

    std::size_t coordinates() const noexcept { return members_.size(); }

    /// Members of C_i in flag order, 1 <= i <= r.
    const std::vector<Subspace>& projected(std::size_t i) const;

    /// Flag index whose i-th subspace is s.
    std::optional<std::size_t> lookup(std::size_t i, const Subspace& s) const;

private:
    std::vector<std::vector<Subspace>> members_;
    std::vector<std::unordered_map<Subspace, std::size_t, SubspaceHash>> maps_;
};

struct DecodeOutcome {
    enum class Verdict { Decoded, Failure };
    enum class Reason { None, NoConditionMet, ChannelContractViolated };

    Verdict verdict = Verdict::Failure;
    Reason reason = Reason::NoConditionMet;
    std::size_t flag_index = 0;  ///< valid when decoded
    std::size_t shot = 0;        ///< 1-based shot at which the decision was taken
    std::size_t matches = 0;     ///< codewords of C_shot containing X_shot (1 on success)

    bool decoded() const noexcept { return verdict == Verdict::Decoded; }
};

/**
 * @brief Shot-by-shot erasure decoding of the full flag construction on F_q^{2k}.
 *
 * Walks i = 1, 2, ...; the first shot with dim X_i > 0 (i <= k) or
 * dim X_i > 2(i - k) (i > k) decides: X_i is matched against C_i and the
 * unique codeword containing it names the flag. A qualifying X_i inside no
 * codeword means the channel was not erasure-only.
 *
 * Throws TypeMismatch unless the code has full type on an even-dimensional
 * space and x matches it.
 */
DecodeOutcome decode(const FlagCode& code, const DecoderIndex& index, const StutteringFlag& x);

/// Online form: decides from the shots received so far (X_1, ..., X_i).
/// NoConditionMet here means "not yet".
DecodeOutcome decode_prefix(const FlagCode& code, const DecoderIndex& index, std::span<const Subspace> prefix);

/// e <= k^2 - 1, half the code distance 2k^2 rounded down.
bool correctable(std::size_t total_error, std::size_t k) noexcept;

}  // namespace flagcode

#endif  // FLAGCODE_DECODER_HPP
