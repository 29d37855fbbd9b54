#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace concord {

using Int = mpz_class;

/// Integer Laurent polynomial in one variable t, i.e. an element of Z[t,t^-1].
///
/// Stored as a finite map exponent -> coefficient. Invariants: no stored
/// coefficient is zero, and the zero polynomial has an empty term map.
/// Exponents may be negative. Equality is exact term-by-term equality.
///
/// All operations are pure functions returning fresh values, so instances can
/// be shared freely between threads.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) { add_term(Int(c), 0); }
    LaurentPoly(const Int& c) { add_term(c, 0); }

    static LaurentPoly monomial(Int coeff, long exp);
    /// The variable t itself.
    static LaurentPoly variable();

    bool is_zero() const { return terms_.empty(); }
    /// Lowest/highest exponent carrying a nonzero coefficient. Zero input rejected.
    long min_exp() const;
    long max_exp() const;
    /// max_exp - min_exp; the degree of the normalized representative.
    long span() const;

    Int coeff(long exp) const;
    const std::map<long, Int>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Adds coeff * t^exp, erasing the entry if the sum cancels.
    LaurentPoly& add_term(const Int& coeff, long exp);

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    bool operator==(const LaurentPoly& other) const { return terms_ == other.terms_; }
    bool operator!=(const LaurentPoly& other) const { return !(*this == other); }
    /// Arbitrary total order (term-lexicographic); used for canonical sorting.
    bool operator<(const LaurentPoly& other) const;

private:
    std::map<long, Int> terms_;
};

enum class ArithOp { add, sub, mul, neg };

/// Exact ring arithmetic dispatcher; b is ignored for neg.
LaurentPoly arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op);

/// The involution t <-> t^-1: every term c*t^e becomes c*t^-e.
LaurentPoly conjugate(const LaurentPoly& f);

/// Canonical representative of f modulo the units +-t^k: the unique unit
/// multiple with lowest exponent 0 and positive leading coefficient.
/// Idempotent; normalize(u*f) == normalize(f) for every unit u. Rejects 0.
///
/// Note: this unit convention is a choice (it keeps cyclotomic polynomials in
/// their textbook form, e.g. t - 1 rather than 1 - t).
LaurentPoly normalize(const LaurentPoly& f);

/// True iff a and b agree up to a unit +-t^k.
bool unit_equal(const LaurentPoly& a, const LaurentPoly& b);

/// True iff f is its own conjugate up to units (f != 0).
bool is_symmetric(const LaurentPoly& f);

enum class EvalPoint { one, minus_one };

/// Exact integer value of f at t = 1 or t = -1.
Int evaluate(const LaurentPoly& f, EvalPoint point);

LaurentPoly pow(const LaurentPoly& f, unsigned long e);

/// The n-th cyclotomic polynomial, computed by iterated exact division of
/// t^n - 1 by the lower-order cyclotomics. n >= 1.
LaurentPoly cyclotomic(unsigned long n);

/// Parses whitespace-insensitive sums of monomials with integer coefficients:
/// "1 - t + t^2", "t^-2 + 3", "-3t^4 + 2*t". Throws invalid_input_error.
LaurentPoly parse_poly(std::string_view text, char var = 't');

/// Exponent-ascending canonical text, e.g. "1 - t + t^2". Inverse of parse_poly.
std::string to_string(const LaurentPoly& f, char var = 't');

} // namespace concord
