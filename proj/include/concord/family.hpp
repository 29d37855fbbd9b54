#pragma once

#include <string>

#include "concord/laurent.hpp"

namespace concord {

/// Index (k, n, sign) of the surgery family polynomial 1 + sign * t^k (t-1)^n.
/// k may be any integer; n >= 1.
struct FamilyIndex {
    long k = 0;
    int n = 1;
    int sign = +1;

    bool operator==(const FamilyIndex&) const = default;
};

/// Exact expansion of 1 + sign * t^k (t-1)^n. Not normalized.
LaurentPoly family_poly(const FamilyIndex& idx);

/// Short display form, e.g. "(k=1, n=2, -)".
std::string to_string(const FamilyIndex& idx);

} // namespace concord
