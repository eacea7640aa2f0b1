#ifndef FLAGCODE_CODEFILE_HPP
#define FLAGCODE_CODEFILE_HPP

#include <string>

#include "flagcode/flags.hpp"

namespace flagcode {

/**
 * Text form of a flag code:
 *
 *     FLC 1
 *     q <p> <m> <c0> ... <cm>
 *     n <n>
 *     type <t1,...,tr>
 *     flags <N>
 *     # provenance <tag> <detail>
 *     flag 0
 *     <t_r rows of n element integers>
 *     flag 1
 *     ...
 *
 * Lines starting with '#' and blank lines are ignored, except that a
 * "# provenance" line restores the code's provenance.
 */
std::string serialize(const FlagCode& code);

/// Throws ParseError (with the line number) for anything malformed,
/// including entries >= q, a bad modulus and out-of-order flag indices.
FlagCode parse_code(const std::string& text);

/// Throws IoError when the file cannot be read or written.
FlagCode load_code(const std::string& path);
void save_code(const FlagCode& code, const std::string& path);

}  // namespace flagcode

#endif  // FLAGCODE_CODEFILE_HPP
