#include "concord/laurent.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "concord/errors.hpp"
#include "concord/zpoly.hpp"

namespace concord {

LaurentPoly LaurentPoly::monomial(Int coeff, long exp) {
    LaurentPoly p;
    p.add_term(coeff, exp);
    return p;
}

LaurentPoly LaurentPoly::variable() { return monomial(1, 1); }

long LaurentPoly::min_exp() const {
    if (terms_.empty()) throw invalid_input_error("min_exp of the zero polynomial");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (terms_.empty()) throw invalid_input_error("max_exp of the zero polynomial");
    return terms_.rbegin()->first;
}

long LaurentPoly::span() const { return max_exp() - min_exp(); }

Int LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

LaurentPoly& LaurentPoly::add_term(const Int& coeff, long exp) {
    if (coeff == 0) return *this;
    auto [it, inserted] = terms_.emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(c, e);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(-c, e);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ca * cb, ea + eb);
    return r;
}

bool LaurentPoly::operator<(const LaurentPoly& other) const {
    auto i = terms_.begin(), j = other.terms_.begin();
    for (; i != terms_.end() && j != other.terms_.end(); ++i, ++j) {
        if (i->first != j->first) return i->first < j->first;
        if (i->second != j->second) return i->second < j->second;
    }
    return j != other.terms_.end();
}

LaurentPoly arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::neg: return -a;
    }
    throw invalid_input_error("unknown arithmetic operation");
}

LaurentPoly conjugate(const LaurentPoly& f) {
    LaurentPoly r;
    for (const auto& [e, c] : f.terms()) r.add_term(c, -e);
    return r;
}

LaurentPoly normalize(const LaurentPoly& f) {
    if (f.is_zero()) throw invalid_input_error("normalize: zero polynomial has no canonical form");
    const long shift = -f.min_exp();
    const bool flip = f.terms().rbegin()->second < 0;
    LaurentPoly r;
    for (const auto& [e, c] : f.terms()) r.add_term(flip ? Int(-c) : c, e + shift);
    return r;
}

bool unit_equal(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return normalize(a) == normalize(b);
}

bool is_symmetric(const LaurentPoly& f) {
    if (f.is_zero()) return false;
    return normalize(conjugate(f)) == normalize(f);
}

Int evaluate(const LaurentPoly& f, EvalPoint point) {
    Int v = 0;
    for (const auto& [e, c] : f.terms()) {
        if (point == EvalPoint::minus_one && (e % 2 != 0))
            v -= c;
        else
            v += c;
    }
    return v;
}

LaurentPoly pow(const LaurentPoly& f, unsigned long e) {
    LaurentPoly r(1);
    LaurentPoly base = f;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

LaurentPoly cyclotomic(unsigned long n) {
    if (n == 0) throw invalid_input_error("cyclotomic: order must be >= 1");
    // Phi_d for each divisor d of n, in increasing order of d.
    std::vector<std::pair<unsigned long, zp::Poly>> lower;
    for (unsigned long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        zp::Poly num(d + 1, Int(0));
        num[0] = -1;
        num[d] = 1; // t^d - 1
        for (const auto& [e, phi] : lower) {
            if (d % e != 0) continue;
            zp::Poly q;
            if (!zp::divide_exact(num, phi, q))
                throw std::logic_error("cyclotomic: inexact division");
            num = q;
        }
        if (d == n) return zp::to_laurent(num);
        lower.emplace_back(d, num);
    }
    throw std::logic_error("cyclotomic: unreachable");
}

namespace {

struct Scanner {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return s[pos];
    }
    bool take(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    // unsigned digit run as an arbitrary-precision integer
    bool digits(Int& out) {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) return false;
        out = Int(std::string(s.substr(start, pos - start)));
        return true;
    }
};

} // namespace

LaurentPoly parse_poly(std::string_view text, char var) {
    Scanner sc{text};
    LaurentPoly result;
    bool first = true;
    while (!sc.done()) {
        int sign = 1;
        if (sc.take('+')) {
            sign = 1;
        } else if (sc.take('-')) {
            sign = -1;
        } else if (!first) {
            throw invalid_input_error("polynomial syntax: expected '+' or '-' at position " +
                                      std::to_string(sc.pos));
        }
        first = false;

        Int coeff;
        bool have_coeff = sc.digits(coeff);
        if (have_coeff) sc.take('*');

        long exp = 0;
        bool have_var = sc.take(var);
        if (have_var) {
            exp = 1;
            if (sc.take('^')) {
                int esign = sc.take('-') ? -1 : 1;
                Int e;
                if (!sc.digits(e))
                    throw invalid_input_error("polynomial syntax: exponent expected at position " +
                                              std::to_string(sc.pos));
                if (!e.fits_slong_p()) throw invalid_input_error("polynomial syntax: exponent too large");
                exp = esign * e.get_si();
            }
        }
        if (!have_coeff && !have_var)
            throw invalid_input_error("polynomial syntax: term expected at position " +
                                      std::to_string(sc.pos));
        if (!have_coeff) coeff = 1;
        result.add_term(sign * coeff, exp);
    }
    if (first) throw invalid_input_error("polynomial syntax: empty input");
    return result;
}

std::string to_string(const LaurentPoly& f, char var) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        const bool neg = c < 0;
        if (first) {
            if (neg) out << '-';
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        Int a = abs(c);
        if (a != 1 || e == 0) out << a.get_str();
        if (e != 0) {
            out << var;
            if (e != 1) out << '^' << e;
        }
    }
    return out.str();
}

} // namespace concord
