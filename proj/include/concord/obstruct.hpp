#pragma once

#include "concord/factor.hpp"
#include "concord/family.hpp"
#include "concord/laurent.hpp"
#include "concord/matrix.hpp"
#include "concord/report.hpp"
#include "concord/spectrum.hpp"

namespace concord {

/// Wheel clover surgery data: n legs, linking exponent k of the knot with the
/// embedded wheel, and the corner sign of the linking matrix. legs >= 2 for
/// the matrix route; legs = 1 is served by the closed form only.
struct WheelSpec {
    int legs = 2;
    long k = 0;
    int sign = +1;

    bool operator==(const WheelSpec&) const = default;
};

void validate(const WheelSpec& w);

/// The n x n block D: t-1 on the diagonal, 1 on the superdiagonal,
/// sign * t^k in the lower-left corner. legs >= 2.
LaurentMatrix wheel_d_block(const WheelSpec& w);

/// The hyperbolic 2n x 2n linking matrix B = [[0, D], [D*, 0]] of the lifted
/// surgery link. legs >= 2.
LaurentMatrix build_wheel_matrix(const WheelSpec& w);

/// det D in closed form: (t-1)^n + s' t^k with s' = sign * (-1)^(n-1).
/// The sign convention is pinned against the symbolic determinant in tests.
LaurentPoly wheel_det_closed_form(const WheelSpec& w);

/// The Alexander-polynomial ratio of a wheel surgery:
/// normalize(det B) = normalize(det D * conjugate(det D)). Computed from the
/// symbolic determinant for legs >= 2 (cross-checked against the closed
/// form), from the closed form alone for legs = 1. Evaluates to 1 at t = 1.
LaurentPoly wheel_delta_ratio(const WheelSpec& w);

/// Necessary condition for being surgery-equivalent to the unknot along
/// 1-loop clovers: every unit-circle root of delta must be e^{+-i pi/3}.
/// Obstructed reports the off-class minimal polynomial; otherwise
/// Inconclusive (the test cannot certify equivalence).
ObstructionReport c1_unknot_obstruction(const LaurentPoly& delta,
                                        long degree_limit = kDefaultDegreeLimit);

/// Pair version: after deleting the e^{+-i pi/3} entries, the unit-circle
/// spectra of d1 and d2 must agree as multisets. Symmetric in its arguments;
/// Inconclusive when the spectra match.
ObstructionReport c1_pair_obstruction(const LaurentPoly& d1, const LaurentPoly& d2,
                                      long degree_limit = kDefaultDegreeLimit);

struct SearchBounds {
    int max_factors = 2;
    long max_k = 8;
    int max_n = 4;
};

/// Bounded search for explicit theta, theta' (products of family polynomials)
/// with d2 * theta' * conj(theta') = d1 * theta * conj(theta) up to units.
/// Passed carries the family indices; Inconclusive means only that the
/// bounded grid is exhausted. A grid too large to enumerate raises
/// resource_limit_error instead.
ObstructionReport family_witness_search(const LaurentPoly& d1, const LaurentPoly& d2,
                                        const SearchBounds& bounds = {});

/// Necessary condition for dKp arising from dK by one wheel surgery: dK must
/// divide dKp in Z[t, t^-1]. Passed carries the exact quotient, Obstructed
/// the maximal common factor.
ObstructionReport divisibility_check(const LaurentPoly& dK, const LaurentPoly& dKp);

} // namespace concord
