#include "flagcode/companion.hpp"

namespace flagcode {

Matrix companion_matrix(const FieldPtr& field, const Poly& poly) {
    const int k = poly::degree(poly);
    if (k < 1) throw Error(ErrorCode::NotPrimitive, "companion polynomial must have degree >= 1");
    if (poly[k] != 1) throw Error(ErrorCode::NotPrimitive, "companion polynomial must be monic");
    for (Elem c : poly)
        if (!field->contains(c)) throw Error(ErrorCode::InvalidArgument, "coefficient out of field range");
    if (!poly::is_primitive(*field, poly)) throw Error(ErrorCode::NotPrimitive, "polynomial is not primitive");

    const auto n = static_cast<std::size_t>(k);
    Matrix m(field, n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = 1;
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = field->neg(poly[i]);
    return m;
}

}  // namespace flagcode
