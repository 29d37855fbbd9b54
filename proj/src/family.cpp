#include "concord/family.hpp"

#include "concord/errors.hpp"

namespace concord {

LaurentPoly family_poly(const FamilyIndex& idx) {
    if (idx.n < 1) throw invalid_input_error("family_poly: n must be >= 1");
    if (idx.sign != 1 && idx.sign != -1) throw invalid_input_error("family_poly: sign must be +-1");
    if (idx.n > 5000 || idx.k > 5000 || idx.k < -5000)
        throw resource_limit_error("family_poly: index " + to_string(idx) +
                                   " is beyond the supported expansion range");
    LaurentPoly t_minus_1 = LaurentPoly::variable() - LaurentPoly(1);
    LaurentPoly tail = pow(t_minus_1, static_cast<unsigned long>(idx.n)) *
                       LaurentPoly::monomial(idx.sign, idx.k);
    return LaurentPoly(1) + tail;
}

std::string to_string(const FamilyIndex& idx) {
    return "(k=" + std::to_string(idx.k) + ", n=" + std::to_string(idx.n) + ", " +
           (idx.sign > 0 ? "+" : "-") + ")";
}

} // namespace concord
