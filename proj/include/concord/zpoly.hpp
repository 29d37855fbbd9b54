#pragma once

#include <utility>
#include <vector>

#include "concord/laurent.hpp"

namespace concord::zp {

/// Dense polynomial over Z, little-endian: p[i] is the coefficient of t^i.
/// No trailing (high-degree) zeros are stored; the zero polynomial is {}.
/// Internal representation behind the Laurent-ring algorithms (division, gcd,
/// squarefree decomposition, factorization, Sturm chains).
using Poly = std::vector<Int>;

int degree(const Poly& p); // -1 for the zero polynomial
void trim(Poly& p);
bool is_zero(const Poly& p);
Int lc(const Poly& p); // leading coefficient; 0 for zero

Poly from_laurent(const LaurentPoly& f);                  // requires min_exp >= 0
Poly from_laurent_shifted(const LaurentPoly& f, long& shift); // f = t^shift * result
LaurentPoly to_laurent(const Poly& p, long shift = 0);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly scale(const Poly& a, const Int& c);
Poly shift_up(const Poly& a, int k); // multiply by t^k
Poly derivative(const Poly& a);

Int eval(const Poly& p, const Int& x);
/// Sign of p(x) for rational x, computed exactly (no rounding).
int sign_at(const Poly& p, const mpq_class& x);

Int content(const Poly& p);        // gcd of coefficients, >= 0
Poly primitive_part(const Poly& p); // p / content(p); sign of lc preserved

/// Quotient of a by b when the division is exact over Z[t]; returns false
/// (q unspecified) when a step fails or a nonzero remainder is left.
bool divide_exact(const Poly& a, const Poly& b, Poly& q);

/// Pseudo-remainder: rem(lc(b)^(deg a - deg b + 1) * a, b), exact over Z.
Poly pseudo_rem(const Poly& a, const Poly& b);

/// Primitive gcd with positive leading coefficient (primitive PRS).
Poly gcd(const Poly& a, const Poly& b);

/// Yun squarefree decomposition of a primitive polynomial with lc > 0:
/// returns pairs (factor, multiplicity) with product(factor^mult) == p,
/// factors primitive, squarefree, pairwise coprime, lc > 0.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

/// Coefficient reversal t^deg * p(1/t).
Poly reverse(const Poly& p);

Int max_abs_coeff(const Poly& p);

} // namespace concord::zp
