#include "concord/zpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "concord/errors.hpp"

namespace concord::zp {

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_zero(const Poly& p) { return p.empty(); }

Int lc(const Poly& p) { return p.empty() ? Int(0) : p.back(); }

Poly from_laurent(const LaurentPoly& f) {
    if (f.is_zero()) return {};
    if (f.min_exp() < 0) throw invalid_input_error("from_laurent: negative exponent present");
    Poly p(static_cast<std::size_t>(f.max_exp()) + 1, Int(0));
    for (const auto& [e, c] : f.terms()) p[static_cast<std::size_t>(e)] = c;
    return p;
}

Poly from_laurent_shifted(const LaurentPoly& f, long& shift) {
    if (f.is_zero()) {
        shift = 0;
        return {};
    }
    shift = f.min_exp();
    Poly p(static_cast<std::size_t>(f.span()) + 1, Int(0));
    for (const auto& [e, c] : f.terms()) p[static_cast<std::size_t>(e - shift)] = c;
    return p;
}

LaurentPoly to_laurent(const Poly& p, long shift) {
    LaurentPoly f;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) f.add_term(p[i], static_cast<long>(i) + shift);
    return f;
}

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly neg(const Poly& a) {
    Poly r = a;
    for (auto& c : r) c = -c;
    return r;
}

Poly scale(const Poly& a, const Int& c) {
    if (c == 0) return {};
    Poly r = a;
    for (auto& x : r) x *= c;
    return r;
}

Poly shift_up(const Poly& a, int k) {
    if (a.empty()) return {};
    Poly r(a.size() + static_cast<std::size_t>(k), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i + static_cast<std::size_t>(k)] = a[i];
    return r;
}

Poly derivative(const Poly& a) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1, Int(0));
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
    trim(r);
    return r;
}

Int eval(const Poly& p, const Int& x) {
    Int v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

int sign_at(const Poly& p, const mpq_class& x) {
    // sum c_i u^i v^(d-i) has the sign of p(u/v) since v > 0
    const Int& u = x.get_num();
    const Int& v = x.get_den();
    Int s = 0;
    Int upow = 1;
    std::vector<Int> upows(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        upows[i] = upow;
        upow *= u;
    }
    Int vpow = 1;
    for (std::size_t i = p.size(); i-- > 0;) {
        s += p[i] * upows[i] * vpow;
        vpow *= v;
    }
    return sgn(s);
}

Int content(const Poly& p) {
    Int g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly primitive_part(const Poly& p) {
    Int c = content(p);
    if (c == 0 || c == 1) return p;
    Poly r = p;
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return r;
}

bool divide_exact(const Poly& a, const Poly& b, Poly& q) {
    if (b.empty()) return false;
    if (a.empty()) {
        q.clear();
        return true;
    }
    if (a.size() < b.size()) return false;
    Poly r = a;
    q.assign(a.size() - b.size() + 1, Int(0));
    const Int& blead = b.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        Int& top = r[k + b.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), blead.get_mpz_t())) return false;
        Int c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), blead.get_mpz_t());
        q[k] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[k + i] -= c * b[i];
    }
    trim(r);
    if (!r.empty()) return false;
    trim(q);
    return true;
}

Poly pseudo_rem(const Poly& a, const Poly& b) {
    if (b.empty()) throw std::logic_error("pseudo_rem: division by zero polynomial");
    Poly r = a;
    trim(r);
    const int db = degree(b);
    const Int& blead = b.back();
    while (degree(r) >= db) {
        const int dr = degree(r);
        Poly nr = scale(r, blead);
        const Int& c = r.back();
        for (std::size_t i = 0; i < b.size(); ++i)
            nr[static_cast<std::size_t>(dr - db) + i] -= c * b[i];
        r = std::move(nr);
        trim(r);
        if (degree(r) == dr) throw std::logic_error("pseudo_rem: degree did not drop");
    }
    return r;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly r0 = primitive_part(a);
    Poly r1 = primitive_part(b);
    trim(r0);
    trim(r1);
    if (r0.empty()) std::swap(r0, r1);
    while (!r1.empty()) {
        Poly r = pseudo_rem(r0, r1);
        r0 = std::move(r1);
        r1 = primitive_part(r);
    }
    if (!r0.empty() && r0.back() < 0) r0 = neg(r0);
    return r0;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    std::vector<std::pair<Poly, int>> out;
    if (degree(p) <= 0) return out;
    Poly f = p;
    Poly fp = derivative(f);
    Poly g = gcd(f, fp);
    if (degree(g) == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    Poly c, d, t;
    if (!divide_exact(f, g, c)) throw std::logic_error("squarefree: inexact division");
    if (!divide_exact(fp, g, t)) throw std::logic_error("squarefree: inexact division");
    d = sub(t, derivative(c));
    int i = 1;
    while (degree(c) > 0) {
        Poly a = gcd(c, d);
        if (degree(a) > 0) out.emplace_back(a, i);
        Poly c2, t2;
        if (!divide_exact(c, a, c2)) throw std::logic_error("squarefree: inexact division");
        if (!divide_exact(d, a, t2)) throw std::logic_error("squarefree: inexact division");
        c = std::move(c2);
        d = sub(t2, derivative(c));
        ++i;
    }
    return out;
}

Poly reverse(const Poly& p) {
    Poly r(p.rbegin(), p.rend());
    // strip what were low-order zeros
    trim(r);
    return r;
}

Int max_abs_coeff(const Poly& p) {
    Int m = 0;
    for (const auto& c : p) {
        Int a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

} // namespace concord::zp
