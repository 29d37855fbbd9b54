#pragma once

#include <utility>
#include <vector>

#include "concord/laurent.hpp"

namespace concord {

/// Hard cap on the degree span accepted by factorization-backed operations.
/// Exceeding it raises resource_limit_error, never an approximate answer.
inline constexpr long kDefaultDegreeLimit = 24;

/// Complete factorization of normalize(f) over Z:
///   normalize(f) == content * prod factors[i].first ^ factors[i].second
/// with each factor irreducible over Z, primitive, and in canonical
/// (normalized) form. Factors are sorted in a fixed canonical order.
struct Factorization {
    Int content; // positive
    std::vector<std::pair<LaurentPoly, int>> factors;

    /// Re-multiplies all parts; equals normalize of the original input.
    LaurentPoly product() const;
};

/// Irreducible factorization over Z via squarefree decomposition, modular
/// factorization and Hensel lifting. f != 0; span of normalize(f) must not
/// exceed degree_limit.
Factorization factor_int(const LaurentPoly& f, long degree_limit = kDefaultDegreeLimit);

/// Splits f (up to units) as self_reciprocal * rest, where self_reciprocal is
/// the maximal factor g with normalize(conjugate(g)) == normalize(g). Every
/// root of f on the unit circle is a root of self_reciprocal, with the same
/// multiplicity. Integer content goes to rest. The two parts multiply to
/// normalize(f) exactly.
std::pair<LaurentPoly, LaurentPoly> reciprocal_part(const LaurentPoly& f);

} // namespace concord
