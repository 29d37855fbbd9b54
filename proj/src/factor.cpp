#include "concord/factor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "concord/errors.hpp"
#include "concord/zpoly.hpp"

namespace concord {

namespace {

// ---------------------------------------------------------------------------
// arithmetic mod a small odd prime p (p < 2^31, products fit in 64 bits)
// ---------------------------------------------------------------------------

using MPoly = std::vector<long long>; // coefficients in [0, p)

void mtrim(MPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int mdeg(const MPoly& a) { return static_cast<int>(a.size()) - 1; }

long long mod_pow(long long b, long long e, long long p) {
    long long r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

long long mod_inv(long long a, long long p) { return mod_pow((a % p + p) % p, p - 2, p); }

MPoly mp_mul(const MPoly& a, const MPoly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    mtrim(r);
    return r;
}

MPoly mp_sub(const MPoly& a, const MPoly& b, long long p) {
    MPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] % p + p) % p;
    mtrim(r);
    return r;
}

MPoly mp_rem(MPoly a, const MPoly& b, long long p) {
    mtrim(a);
    const int db = mdeg(b);
    const long long inv = mod_inv(b.back(), p);
    while (mdeg(a) >= db) {
        const int da = mdeg(a);
        const long long c = a.back() * inv % p;
        for (int i = 0; i <= db; ++i) {
            auto& x = a[static_cast<std::size_t>(da - db + i)];
            x = (x - c * b[static_cast<std::size_t>(i)]) % p;
            if (x < 0) x += p;
        }
        mtrim(a);
    }
    return a;
}

MPoly mp_monic(MPoly a, long long p) {
    mtrim(a);
    if (a.empty()) return a;
    const long long inv = mod_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

MPoly mp_gcd(MPoly a, MPoly b, long long p) {
    mtrim(a);
    mtrim(b);
    while (!b.empty()) {
        MPoly r = mp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return mp_monic(a, p);
}

MPoly mp_powmod(const MPoly& base, const Int& e, const MPoly& f, long long p) {
    MPoly r{1};
    MPoly b = mp_rem(base, f, p);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mp_rem(mp_mul(r, r, p), f, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mp_rem(mp_mul(r, b, p), f, p);
    }
    return r;
}

MPoly mp_derivative(const MPoly& a, long long p) {
    if (a.size() <= 1) return {};
    MPoly r(a.size() - 1, 0);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long long>(i % p) % p;
    mtrim(r);
    return r;
}

// quotient of a by b mod p when the remainder is known to vanish
MPoly mp_rem_quotient(const MPoly& a, const MPoly& b, long long p) {
    MPoly r = a;
    mtrim(r);
    const int db = mdeg(b);
    const long long inv = mod_inv(b.back(), p);
    MPoly q(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    while (mdeg(r) >= db) {
        const int dr = mdeg(r);
        const long long c = r.back() * inv % p;
        q[static_cast<std::size_t>(dr - db)] = c;
        for (int i = 0; i <= db; ++i) {
            auto& x = r[static_cast<std::size_t>(dr - db + i)];
            x = (x - c * b[static_cast<std::size_t>(i)]) % p;
            if (x < 0) x += p;
        }
        mtrim(r);
    }
    mtrim(q);
    return q;
}

// Cantor-Zassenhaus equal-degree splitting. g monic, all factors of degree d.
void mp_edf(const MPoly& g, int d, long long p, std::mt19937_64& rng, std::vector<MPoly>& out) {
    if (mdeg(g) == d) {
        out.push_back(g);
        return;
    }
    Int expo;
    mpz_ui_pow_ui(expo.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    expo = (expo - 1) / 2;
    while (true) {
        MPoly r(static_cast<std::size_t>(mdeg(g)), 0);
        for (auto& c : r) c = static_cast<long long>(rng() % static_cast<unsigned long long>(p));
        mtrim(r);
        if (mdeg(r) < 1) continue;
        MPoly s = mp_powmod(r, expo, g, p);
        if (s.empty()) continue;
        s[0] = (s[0] - 1 + p) % p;
        mtrim(s);
        MPoly w = mp_gcd(s, g, p);
        if (mdeg(w) > 0 && mdeg(w) < mdeg(g)) {
            MPoly q = mp_monic(mp_rem_quotient(g, w, p), p);
            mp_edf(w, d, p, rng, out);
            mp_edf(q, d, p, rng, out);
            return;
        }
    }
}

// distinct-degree + equal-degree factorization of a monic squarefree f mod p
std::vector<MPoly> factor_mod_p(MPoly f, long long p, std::mt19937_64& rng) {
    std::vector<MPoly> out;
    MPoly v = f;
    MPoly h{0, 1}; // t
    int d = 0;
    while (mdeg(v) >= 2 * (d + 1)) {
        ++d;
        h = mp_powmod(h, Int(static_cast<long>(p)), v, p);
        MPoly hx = h;
        // h - t
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = (hx[1] - 1 + p) % p;
        mtrim(hx);
        MPoly g = mp_gcd(hx, v, p);
        if (mdeg(g) > 0) {
            mp_edf(g, d, p, rng, out);
            v = mp_monic(mp_rem_quotient(v, g, p), p);
            h = mp_rem(h, v, p);
        }
    }
    if (mdeg(v) > 0) out.push_back(mp_monic(v, p));
    return out;
}

// extended Euclid mod p: s*a + t*b = 1 for coprime a, b
void mp_bezout(const MPoly& a, const MPoly& b, long long p, MPoly& s, MPoly& t) {
    MPoly r0 = a, r1 = b;
    MPoly s0{1}, s1{}, t0{}, t1{1};
    mtrim(r0);
    mtrim(r1);
    while (!r1.empty()) {
        MPoly q = mp_rem_quotient(r0, r1, p);
        MPoly r2 = mp_sub(r0, mp_mul(q, r1, p), p);
        MPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
        MPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (mdeg(r0) != 0) throw std::logic_error("mp_bezout: inputs not coprime");
    const long long inv = mod_inv(r0[0], p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    s = std::move(s0);
    t = std::move(t0);
}

// ---------------------------------------------------------------------------
// Hensel lifting over Z/m with arbitrary-precision m
// ---------------------------------------------------------------------------

using VPoly = std::vector<Int>;

void vtrim(VPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int vdeg(const VPoly& a) { return static_cast<int>(a.size()) - 1; }

VPoly v_reduce(const VPoly& a, const Int& m) {
    VPoly r = a;
    for (auto& c : r) {
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
    vtrim(r);
    return r;
}

VPoly v_from_m(const MPoly& a) {
    VPoly r;
    r.reserve(a.size());
    for (auto c : a) r.emplace_back(static_cast<long>(c));
    return r;
}

VPoly v_mulmod(const VPoly& a, const VPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    VPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return v_reduce(r, m);
}

VPoly v_addmod(const VPoly& a, const VPoly& b, const Int& m) {
    VPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return v_reduce(r, m);
}

VPoly v_submod(const VPoly& a, const VPoly& b, const Int& m) {
    VPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return v_reduce(r, m);
}

// division by a monic divisor mod m
void v_divmod_monic(const VPoly& a, const VPoly& b, const Int& m, VPoly& q, VPoly& r) {
    r = a;
    vtrim(r);
    const int db = vdeg(b);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Int(0));
    while (vdeg(r) >= db) {
        const int dr = vdeg(r);
        Int c = r.back();
        q[static_cast<std::size_t>(dr - db)] = c;
        for (int i = 0; i <= db; ++i) {
            auto& x = r[static_cast<std::size_t>(dr - db + i)];
            x -= c * b[static_cast<std::size_t>(i)];
            mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
        }
        vtrim(r);
    }
    q = v_reduce(q, m);
}

struct LiftPair {
    VPoly g, h, s, t;
};

// one quadratic Hensel step: modulus m -> m^2; f, g, h monic, f = g*h (mod m),
// s*g + t*h = 1 (mod m)
LiftPair hensel_step(const VPoly& f, const LiftPair& in, const Int& m) {
    const Int m2 = m * m;
    VPoly e = v_submod(f, v_mulmod(in.g, in.h, m2), m2);
    VPoly q, r;
    v_divmod_monic(v_mulmod(in.s, e, m2), in.h, m2, q, r);
    VPoly g = v_addmod(in.g, v_addmod(v_mulmod(in.t, e, m2), v_mulmod(q, in.g, m2), m2), m2);
    VPoly h = v_addmod(in.h, r, m2);
    VPoly b = v_submod(v_addmod(v_mulmod(in.s, g, m2), v_mulmod(in.t, h, m2), m2), VPoly{Int(1)}, m2);
    VPoly c, d;
    v_divmod_monic(v_mulmod(in.s, b, m2), h, m2, c, d);
    VPoly s = v_submod(in.s, d, m2);
    VPoly t = v_submod(in.t, v_addmod(v_mulmod(in.t, b, m2), v_mulmod(c, g, m2), m2), m2);
    return {g, h, s, t};
}

// lifts the full list of pairwise-coprime monic factors of f from mod p to
// mod target (target = p^(2^J)); factor tree recursion
void hensel_tree(const VPoly& f, const std::vector<MPoly>& base, std::size_t lo, std::size_t hi,
                 long long p, const Int& target, std::vector<VPoly>& out) {
    if (hi - lo == 1) {
        out[lo] = v_reduce(f, target);
        return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    MPoly g0{1}, h0{1};
    for (std::size_t i = lo; i < mid; ++i) g0 = mp_mul(g0, base[i], p);
    for (std::size_t i = mid; i < hi; ++i) h0 = mp_mul(h0, base[i], p);
    MPoly s0, t0;
    mp_bezout(g0, h0, p, s0, t0);
    LiftPair cur{v_from_m(g0), v_from_m(h0), v_from_m(s0), v_from_m(t0)};
    Int m(static_cast<long>(p));
    while (m < target) {
        cur = hensel_step(v_reduce(f, m * m), cur, m);
        m *= m;
    }
    hensel_tree(v_reduce(cur.g, target), base, lo, mid, p, target, out);
    hensel_tree(v_reduce(cur.h, target), base, mid, hi, p, target, out);
}

Int symmetric(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (r * 2 > m) r -= m;
    return r;
}

zp::Poly symmetric_poly(const VPoly& a, const Int& m) {
    zp::Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = symmetric(a[i], m);
    zp::trim(r);
    return r;
}

constexpr long long kPrimes[] = {3,    5,    7,    11,   13,   17,   19,   23,  29,  31,  37,
                                 41,   43,   47,   53,   59,   61,   67,   71,  73,  79,  83,
                                 89,   97,   101,  103,  107,  109,  113,  127, 131, 137, 139,
                                 149,  151,  157,  163,  167,  173,  179,  181, 191, 193, 197,
                                 199,  211,  223,  227,  229,  233,  239,  241, 251, 257, 263,
                                 269,  271,  277,  281,  283,  293,  307,  311, 313, 317, 331,
                                 337,  347,  349,  353,  359,  367,  373,  379, 383, 389, 397,
                                 401,  409,  419,  421,  431,  433,  439,  443, 449, 457, 461,
                                 463,  467,  479,  487,  491,  499,  503,  509, 521, 523, 541};

constexpr long kRecombinationBudget = 1L << 20;

// irreducible factors of a primitive squarefree polynomial (deg >= 1);
// the returned factors are primitive with positive leading coefficient and
// multiply to +-S
std::vector<zp::Poly> factor_squarefree(zp::Poly S) {
    if (zp::lc(S) < 0) S = zp::neg(S);
    const int d = zp::degree(S);
    if (d == 1) return {S};

    // monicize: G(u) = a^(d-1) * S(u/a) is monic with integer coefficients,
    // G_i = S_i * a^(d-1-i)
    const Int a = zp::lc(S);
    zp::Poly G(S.size());
    {
        G[static_cast<std::size_t>(d)] = 1;
        Int apow = 1;
        for (int i = d - 1; i >= 0; --i) {
            G[static_cast<std::size_t>(i)] = S[static_cast<std::size_t>(i)] * apow;
            apow *= a;
        }
    }

    // prime with G squarefree mod p
    long long p = 0;
    for (long long cand : kPrimes) {
        MPoly gm(G.size());
        for (std::size_t i = 0; i < G.size(); ++i) {
            Int c;
            mpz_mod_ui(c.get_mpz_t(), G[i].get_mpz_t(), static_cast<unsigned long>(cand));
            gm[i] = c.get_si();
        }
        mtrim(gm);
        if (mdeg(gm) != d) continue; // G is monic, so the degree never drops mod p
        MPoly der = mp_derivative(gm, cand);
        if (der.empty()) continue;
        if (mdeg(mp_gcd(gm, der, cand)) == 0) {
            p = cand;
            break;
        }
    }
    if (p == 0) throw resource_limit_error("factor_int: no usable prime for modular factorization");

    std::mt19937_64 rng(0x5eed5eedULL + static_cast<unsigned long long>(d));
    MPoly gm(G.size());
    for (std::size_t i = 0; i < G.size(); ++i) {
        Int c;
        mpz_mod_ui(c.get_mpz_t(), G[i].get_mpz_t(), static_cast<unsigned long>(p));
        gm[i] = c.get_si();
    }
    std::vector<MPoly> modular = factor_mod_p(gm, p, rng);
    if (modular.size() == 1) return {S};
    std::sort(modular.begin(), modular.end());

    // factor coefficient bound (Mignotte-style, deliberately generous)
    Int bound = zp::max_abs_coeff(G) * (d + 1);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(d));
    const Int m_min = 2 * bound + 1;
    Int target(static_cast<long>(p));
    while (target < m_min) target *= target;

    std::vector<VPoly> lifted(modular.size());
    VPoly f_target;
    f_target.reserve(G.size());
    for (const auto& c : G) f_target.push_back(c);
    hensel_tree(v_reduce(f_target, target), modular, 0, modular.size(), p, target, lifted);

    // subset recombination against the remaining cofactor
    std::vector<zp::Poly> found;
    std::vector<std::size_t> pool(lifted.size());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
    zp::Poly G_rem = G;
    long budget = kRecombinationBudget;

    for (std::size_t size = 1; !pool.empty() && size <= pool.size() / 2;) {
        bool found_at_this_size = false;
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            if (--budget < 0) throw resource_limit_error("factor_int: recombination budget exceeded");
            // skip complement duplicates when the subset is exactly half the pool
            if (!(2 * size == pool.size() && idx[0] != 0)) {
                VPoly prod{Int(1)};
                for (std::size_t i : idx) prod = v_mulmod(prod, lifted[pool[i]], target);
                zp::Poly cand = symmetric_poly(prod, target);
                Int c0 = cand.empty() ? Int(0) : cand.front();
                bool plausible = c0 != 0 && !G_rem.empty() &&
                                 mpz_divisible_p(G_rem.front().get_mpz_t(), c0.get_mpz_t());
                zp::Poly quot;
                if (plausible && zp::divide_exact(G_rem, cand, quot)) {
                    found.push_back(cand);
                    G_rem = quot;
                    std::vector<std::size_t> next_pool;
                    for (std::size_t i = 0, k = 0; i < pool.size(); ++i) {
                        if (k < idx.size() && idx[k] == i) {
                            ++k;
                            continue;
                        }
                        next_pool.push_back(pool[i]);
                    }
                    pool = std::move(next_pool);
                    found_at_this_size = true;
                    break;
                }
            }
            // next combination
            std::size_t i = size;
            while (i-- > 0) {
                if (idx[i] != i + pool.size() - size) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) goto combinations_done;
            }
        }
    combinations_done:
        if (!found_at_this_size) ++size;
    }
    if (zp::degree(G_rem) > 0) found.push_back(G_rem);

    // map the monic factors of G back to factors of S
    std::vector<zp::Poly> result;
    for (const auto& gfac : found) {
        zp::Poly h(gfac.size());
        Int apow = 1;
        for (std::size_t i = 0; i < gfac.size(); ++i) {
            h[i] = gfac[i] * apow;
            apow *= a;
        }
        zp::Poly f = zp::primitive_part(h);
        if (zp::lc(f) < 0) f = zp::neg(f);
        result.push_back(std::move(f));
    }
    return result;
}

} // namespace

LaurentPoly Factorization::product() const {
    LaurentPoly r(content);
    for (const auto& [f, m] : factors) r = r * pow(f, static_cast<unsigned long>(m));
    return r;
}

Factorization factor_int(const LaurentPoly& f, long degree_limit) {
    if (f.is_zero()) throw invalid_input_error("factor_int: zero polynomial");
    LaurentPoly F = normalize(f);
    if (F.span() > degree_limit)
        throw resource_limit_error("factor_int: degree span " + std::to_string(F.span()) +
                                   " exceeds limit " + std::to_string(degree_limit));
    zp::Poly P = zp::from_laurent(F);
    Factorization out;
    out.content = zp::content(P);
    zp::Poly PP = zp::primitive_part(P);

    std::map<LaurentPoly, int> acc;
    for (const auto& [sf, mult] : zp::squarefree_decomposition(PP)) {
        for (const auto& q : factor_squarefree(sf)) acc[normalize(zp::to_laurent(q))] += mult;
    }
    out.factors.assign(acc.begin(), acc.end());

    if (out.product() != F) throw std::logic_error("factor_int: product check failed");
    return out;
}

std::pair<LaurentPoly, LaurentPoly> reciprocal_part(const LaurentPoly& f) {
    if (f.is_zero()) throw invalid_input_error("reciprocal_part: zero polynomial");
    LaurentPoly F = normalize(f);
    zp::Poly P = zp::from_laurent(F);
    zp::Poly A = zp::primitive_part(P);
    zp::Poly R = zp::reverse(A);
    if (zp::lc(R) < 0) R = zp::neg(R);
    zp::Poly s = zp::gcd(A, R);
    zp::Poly rest;
    if (!zp::divide_exact(P, s, rest)) throw std::logic_error("reciprocal_part: inexact division");
    return {zp::to_laurent(s), zp::to_laurent(rest)};
}

} // namespace concord
