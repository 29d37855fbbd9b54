#pragma once

#include <vector>

#include "concord/factor.hpp"
#include "concord/laurent.hpp"
#include "concord/zpoly.hpp"

namespace concord {

/// One root class of f on the unit circle, encoded through x = z + 1/z.
/// For a conjugate pair z, z-bar off the real axis the entry stands for both;
/// for z = +-1 (x = +-2) it stands for the single root.
struct SpectrumEntry {
    LaurentPoly min_poly; // irreducible over Q, primitive, positive leading coefficient, variable x
    int multiplicity;     // root multiplicity in f
    mpq_class lo, hi;     // isolating interval for this root of min_poly, lo <= x0 <= hi
    double approx;        // numeric midpoint, for display only

    /// x = 1, i.e. z = e^{+-i pi/3}: the only unit-circle roots a surgery
    /// family polynomial can have.
    bool is_sixth_root_class() const;
    bool at_z_plus_one() const;  // min_poly == x - 2
    bool at_z_minus_one() const; // min_poly == x + 2
};

/// Exact multiset of unit-circle roots, entries sorted by increasing x.
struct UnitCircleSpectrum {
    std::vector<SpectrumEntry> entries;

    bool empty() const { return entries.empty(); }
    /// Number of roots of f on the circle counted with multiplicity
    /// (interior entries count twice: z and its conjugate).
    long total_roots_on_circle() const;
    /// True when every entry is the x = 1 class.
    bool only_sixth_roots() const;
};

/// Exact unit-circle root localization: takes the self-reciprocal part,
/// rewrites its even-span palindrome as t^m * g(t + 1/t), isolates the real
/// roots of g in [-2, 2] with Sturm sequences over exact rationals, and
/// reports each as (minimal polynomial of x, multiplicity). Roots at z = +-1
/// are split off first by direct evaluation. f != 0.
UnitCircleSpectrum unit_circle_roots(const LaurentPoly& f, long degree_limit = kDefaultDegreeLimit);

namespace sturm {

/// Sturm chain of a squarefree integer polynomial; elements are primitive
/// integer polynomials obtained from the rational chain by positive scaling.
std::vector<zp::Poly> chain(const zp::Poly& q);

/// Number of roots of the chain's polynomial in the half-open interval (a, b].
long count_roots(const std::vector<zp::Poly>& ch, const mpq_class& a, const mpq_class& b);

} // namespace sturm

} // namespace concord
