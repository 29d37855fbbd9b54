#include "concord/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

#include "concord/errors.hpp"

namespace concord {

namespace {

const LaurentPoly kXMinusOne = LaurentPoly::variable() - LaurentPoly(1);
const LaurentPoly kXMinusTwo = LaurentPoly::variable() - LaurentPoly(2);
const LaurentPoly kXPlusTwo = LaurentPoly::variable() + LaurentPoly(2);

// rational-coefficient Euclidean remainder, then cleared to a primitive
// integer polynomial by a positive factor (sign pattern preserved)
zp::Poly neg_rem_primitive(const zp::Poly& a, const zp::Poly& b) {
    std::vector<mpq_class> r(a.begin(), a.end());
    auto deg = [](const std::vector<mpq_class>& p) { return static_cast<int>(p.size()) - 1; };
    auto trimq = [](std::vector<mpq_class>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trimq(r);
    const int db = static_cast<int>(b.size()) - 1;
    const mpq_class blead(b.back());
    while (deg(r) >= db) {
        const mpq_class c = r.back() / blead;
        const int shift = deg(r) - db;
        for (int i = 0; i <= db; ++i)
            r[static_cast<std::size_t>(shift + i)] -= c * mpq_class(b[static_cast<std::size_t>(i)]);
        trimq(r);
    }
    // clear denominators and content; multiply by -1 for the Sturm recurrence
    Int den = 1;
    for (auto& c : r) {
        c.canonicalize();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    zp::Poly out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        mpq_class scaled = r[i] * mpq_class(den);
        out[i] = -scaled.get_num();
    }
    zp::trim(out);
    return zp::primitive_part(out);
}

int sign_variations(const std::vector<zp::Poly>& ch, const mpq_class& x) {
    int vars = 0;
    int last = 0;
    for (const auto& p : ch) {
        const int s = zp::sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++vars;
        last = s;
    }
    return vars;
}

struct IsolatedRoot {
    mpq_class lo, hi;
    double approx;
};

// isolates all roots of an irreducible q, deg q >= 2, inside (lo0, hi0);
// q has no rational roots so interval endpoints never hit a root
std::vector<IsolatedRoot> isolate_roots(const zp::Poly& q, const mpq_class& lo0,
                                        const mpq_class& hi0) {
    const auto ch = sturm::chain(q);
    std::vector<IsolatedRoot> out;
    std::vector<std::pair<mpq_class, mpq_class>> work{{lo0, hi0}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        const long n = sturm::count_roots(ch, lo, hi);
        if (n == 0) continue;
        if (n == 1) {
            mpq_class a = lo, b = hi;
            const mpq_class width_target(Int(1), Int(1) << 44);
            for (int iter = 0; iter < 96 && b - a > width_target; ++iter) {
                mpq_class mid = (a + b) / 2;
                if (sturm::count_roots(ch, a, mid) == 1)
                    b = mid;
                else
                    a = mid;
            }
            out.push_back({a, b, mpq_class((a + b) / 2).get_d()});
            continue;
        }
        mpq_class mid = (lo + hi) / 2;
        work.push_back({lo, mid});
        work.push_back({mid, hi});
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });
    return out;
}

} // namespace

namespace sturm {

std::vector<zp::Poly> chain(const zp::Poly& q) {
    std::vector<zp::Poly> ch;
    zp::Poly p0 = q;
    zp::trim(p0);
    if (p0.empty()) throw invalid_input_error("sturm::chain: zero polynomial");
    ch.push_back(p0);
    zp::Poly p1 = zp::derivative(p0);
    while (!p1.empty()) {
        ch.push_back(p1);
        if (zp::degree(p1) == 0) break;
        zp::Poly r = neg_rem_primitive(ch[ch.size() - 2], p1);
        p1 = std::move(r);
    }
    return ch;
}

long count_roots(const std::vector<zp::Poly>& ch, const mpq_class& a, const mpq_class& b) {
    return sign_variations(ch, a) - sign_variations(ch, b);
}

} // namespace sturm

bool SpectrumEntry::is_sixth_root_class() const { return min_poly == kXMinusOne; }
bool SpectrumEntry::at_z_plus_one() const { return min_poly == kXMinusTwo; }
bool SpectrumEntry::at_z_minus_one() const { return min_poly == kXPlusTwo; }

long UnitCircleSpectrum::total_roots_on_circle() const {
    long n = 0;
    for (const auto& e : entries) n += (e.at_z_plus_one() || e.at_z_minus_one() ? 1 : 2) * e.multiplicity;
    return n;
}

bool UnitCircleSpectrum::only_sixth_roots() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const SpectrumEntry& e) { return e.is_sixth_root_class(); });
}

UnitCircleSpectrum unit_circle_roots(const LaurentPoly& f, long degree_limit) {
    if (f.is_zero()) throw invalid_input_error("unit_circle_roots: zero polynomial");
    UnitCircleSpectrum spec;
    zp::Poly P = zp::from_laurent(normalize(f));

    // roots at z = +-1 by direct evaluation and exact deflation
    int mult_plus = 0, mult_minus = 0;
    const zp::Poly t_minus_1{Int(-1), Int(1)};
    const zp::Poly t_plus_1{Int(1), Int(1)};
    while (zp::eval(P, 1) == 0) {
        zp::Poly q;
        if (!zp::divide_exact(P, t_minus_1, q)) throw std::logic_error("deflation at t=1 failed");
        P = std::move(q);
        ++mult_plus;
    }
    while (zp::eval(P, -1) == 0) {
        zp::Poly q;
        if (!zp::divide_exact(P, t_plus_1, q)) throw std::logic_error("deflation at t=-1 failed");
        P = std::move(q);
        ++mult_minus;
    }

    // self-reciprocal part; after removing +-1 roots it is a strict palindrome
    // of even span
    zp::Poly A = zp::primitive_part(P);
    zp::Poly R = zp::reverse(A);
    if (zp::lc(R) < 0) R = zp::neg(R);
    zp::Poly s = zp::gcd(A, R);
    const int ds = zp::degree(s);
    if (ds > 0) {
        if (ds % 2 != 0 || s != zp::reverse(s))
            throw std::logic_error("unit_circle_roots: self-reciprocal part is not a palindrome");
        const int m = ds / 2;
        // s(t)/t^m = c_m + sum_{j>=1} c_{m+j} (t^j + t^-j); rewrite in
        // x = t + 1/t via the recurrence P_0 = 2, P_1 = x, P_j = x P_{j-1} - P_{j-2}
        zp::Poly g{s[static_cast<std::size_t>(m)]};
        zp::Poly pj_prev{Int(2)};      // P_0
        zp::Poly pj{Int(0), Int(1)};   // P_1
        for (int j = 1; j <= m; ++j) {
            g = zp::add(g, zp::scale(pj, s[static_cast<std::size_t>(m + j)]));
            if (j < m) {
                zp::Poly next = zp::sub(zp::mul(zp::Poly{Int(0), Int(1)}, pj), pj_prev);
                pj_prev = std::move(pj);
                pj = std::move(next);
            }
        }

        const Factorization fac = factor_int(zp::to_laurent(g), degree_limit);
        for (const auto& [min_poly, mult] : fac.factors) {
            zp::Poly q = zp::from_laurent(min_poly);
            if (zp::degree(q) == 1) {
                mpq_class root(-q[0], q[1]);
                root.canonicalize();
                if (root > -2 && root < 2)
                    spec.entries.push_back({min_poly, mult, root, root, root.get_d()});
                continue;
            }
            for (const auto& iso : isolate_roots(q, mpq_class(-2), mpq_class(2)))
                spec.entries.push_back({min_poly, mult, iso.lo, iso.hi, iso.approx});
        }
    }

    if (mult_plus > 0)
        spec.entries.push_back({kXMinusTwo, mult_plus, mpq_class(2), mpq_class(2), 2.0});
    if (mult_minus > 0)
        spec.entries.push_back({kXPlusTwo, mult_minus, mpq_class(-2), mpq_class(-2), -2.0});

    std::sort(spec.entries.begin(), spec.entries.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.approx < b.approx; });
    return spec;
}

} // namespace concord
