#ifndef FLAGCODE_COMPANION_HPP
#define FLAGCODE_COMPANION_HPP

#include "flagcode/gf.hpp"
#include "flagcode/linalg.hpp"

namespace flagcode {

/// Companion matrix of a monic primitive polynomial of degree k over the
/// field: ones on the subdiagonal, last column -c_0, ..., -c_{k-1}.
/// Its multiplicative order is q^k - 1. Throws NotPrimitive otherwise.
Matrix companion_matrix(const FieldPtr& field, const Poly& poly);

}  // namespace flagcode

#endif  // FLAGCODE_COMPANION_HPP
