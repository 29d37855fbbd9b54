#include "concord/obstruct.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "concord/errors.hpp"
#include "concord/knots.hpp"
#include "concord/zpoly.hpp"

namespace concord {

void validate(const WheelSpec& w) {
    if (w.legs < 1) throw invalid_input_error("wheel: legs must be >= 1");
    if (w.sign != 1 && w.sign != -1) throw invalid_input_error("wheel: sign must be +-1");
    if (w.legs > 64 || w.k > 5000 || w.k < -5000)
        throw resource_limit_error("wheel: parameters beyond the supported symbolic range");
}

LaurentMatrix wheel_d_block(const WheelSpec& w) {
    validate(w);
    if (w.legs < 2)
        throw invalid_input_error("wheel: the displayed matrix needs n >= 2; use the closed form");
    const std::size_t n = static_cast<std::size_t>(w.legs);
    const LaurentPoly t_minus_1 = LaurentPoly::variable() - LaurentPoly(1);
    LaurentMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        d.at(i, i) = t_minus_1;
        if (i + 1 < n) d.at(i, i + 1) = LaurentPoly(1);
    }
    d.at(n - 1, 0) = LaurentPoly::monomial(w.sign, w.k);
    return d;
}

LaurentMatrix build_wheel_matrix(const WheelSpec& w) {
    const LaurentMatrix d = wheel_d_block(w);
    const LaurentMatrix ds = d.conjugate_transpose();
    const std::size_t n = d.rows();
    LaurentMatrix b(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            b.at(i, n + j) = d.at(i, j);
            b.at(n + i, j) = ds.at(i, j);
        }
    return b;
}

LaurentPoly wheel_det_closed_form(const WheelSpec& w) {
    validate(w);
    const int s = (w.legs % 2 == 1) ? w.sign : -w.sign;
    return pow(LaurentPoly::variable() - LaurentPoly(1), static_cast<unsigned long>(w.legs)) +
           LaurentPoly::monomial(s, w.k);
}

LaurentPoly wheel_delta_ratio(const WheelSpec& w) {
    validate(w);
    const LaurentPoly closed = wheel_det_closed_form(w);
    const LaurentPoly from_closed = normalize(closed * conjugate(closed));
    if (w.legs < 2) return from_closed;
    const LaurentPoly ratio = normalize(laurent_det(build_wheel_matrix(w)));
    if (ratio != from_closed)
        throw std::logic_error("wheel_delta_ratio: determinant disagrees with the closed form");
    return ratio;
}

ObstructionReport c1_unknot_obstruction(const LaurentPoly& delta, long degree_limit) {
    require_alexander_poly(delta, "c1_unknot_obstruction");
    const UnitCircleSpectrum spec = unit_circle_roots(delta, degree_limit);
    ObstructionReport r;
    for (const auto& e : spec.entries) {
        if (e.is_sixth_root_class()) continue;
        r.verdict = Verdict::Obstructed;
        r.reason = "c1_unknot.off_sixth_root_spectrum";
        r.witness = e.min_poly;
        r.witness_var = 'x';
        r.detail = "unit-circle root with z + 1/z near " + std::to_string(e.approx) +
                   " (minimal polynomial " + to_string(e.min_poly, 'x') + ", multiplicity " +
                   std::to_string(e.multiplicity) + ") cannot arise from 1-loop clover surgery";
        return r;
    }
    r.verdict = Verdict::Inconclusive;
    r.reason = "c1_unknot.spectrum_within_sixth_roots";
    r.detail = "all unit-circle roots are e^{+-i pi/3}; the necessary condition cannot obstruct";
    return r;
}

namespace {

// spectrum with the e^{+-i pi/3} entries removed, as a canonical multiset
std::map<std::pair<std::string, int>, int> reduced_spectrum(const LaurentPoly& d,
                                                            long degree_limit) {
    std::map<std::pair<std::string, int>, int> out;
    for (const auto& e : unit_circle_roots(d, degree_limit).entries) {
        if (e.is_sixth_root_class()) continue;
        out[{to_string(e.min_poly, 'x'), e.multiplicity}]++;
    }
    return out;
}

} // namespace

ObstructionReport c1_pair_obstruction(const LaurentPoly& d1, const LaurentPoly& d2,
                                      long degree_limit) {
    require_alexander_poly(d1, "c1_pair_obstruction");
    require_alexander_poly(d2, "c1_pair_obstruction");
    const auto s1 = reduced_spectrum(d1, degree_limit);
    const auto s2 = reduced_spectrum(d2, degree_limit);
    ObstructionReport r;
    if (s1 == s2) {
        r.verdict = Verdict::Inconclusive;
        r.reason = "c1_pair.spectra_match";
        r.detail = "unit-circle spectra agree away from e^{+-i pi/3}";
        return r;
    }
    // first entry whose count differs, in canonical order
    auto i1 = s1.begin();
    auto i2 = s2.begin();
    std::pair<std::string, int> diff;
    while (true) {
        if (i1 == s1.end()) {
            diff = i2->first;
            break;
        }
        if (i2 == s2.end() || *i1 != *i2) {
            diff = (i2 == s2.end() || i1->first <= i2->first) ? i1->first : i2->first;
            break;
        }
        ++i1;
        ++i2;
    }
    r.verdict = Verdict::Obstructed;
    r.reason = "c1_pair.spectrum_mismatch";
    r.witness = parse_poly(diff.first, 'x');
    r.witness_var = 'x';
    r.detail = "unit-circle root class " + diff.first + " (multiplicity " +
               std::to_string(diff.second) +
               ") appears in the two spectra a different number of times";
    return r;
}

ObstructionReport family_witness_search(const LaurentPoly& d1, const LaurentPoly& d2,
                                        const SearchBounds& bounds) {
    require_alexander_poly(d1, "family_witness_search");
    require_alexander_poly(d2, "family_witness_search");
    if (bounds.max_factors < 1 || bounds.max_k < 0 || bounds.max_n < 1)
        throw invalid_input_error("family_witness_search: bounds must be positive");

    std::vector<FamilyIndex> indices;
    for (long k = -bounds.max_k; k <= bounds.max_k; ++k)
        for (int n = 1; n <= bounds.max_n; ++n)
            for (int sign : {+1, -1}) indices.push_back({k, n, sign});

    // multisets of indices with repetition, sizes 0..max_factors
    double est = 1;
    for (int m = 1; m <= bounds.max_factors; ++m) {
        double c = 1;
        for (int i = 0; i < m; ++i) c = c * (static_cast<double>(indices.size()) + i) / (i + 1);
        est += c;
    }
    if (est > 2e6)
        throw resource_limit_error("family_witness_search: bound grid of ~" +
                                   std::to_string(static_cast<long>(est)) +
                                   " products per side exceeds the search budget");

    // dense products: every normalized factor lives in Z[t], and unit
    // normalization of the keys erases the difference
    std::vector<zp::Poly> symmetric_products(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const LaurentPoly f = family_poly(indices[i]);
        symmetric_products[i] = zp::from_laurent(normalize(f * conjugate(f)));
    }

    struct Side {
        std::map<LaurentPoly, std::vector<FamilyIndex>> seen;
        std::vector<const LaurentPoly*> order;
    };
    // smallest witnesses first: exact sizes 0, 1, ..., max_factors in order
    auto enumerate = [&](const LaurentPoly& base, Side& side) {
        const zp::Poly base_dense = zp::from_laurent(normalize(base));
        std::vector<FamilyIndex> current;
        auto rec = [&](auto&& self, std::size_t start, int remaining, const zp::Poly& prod) -> void {
            if (remaining == 0) {
                auto [it, inserted] = side.seen.emplace(normalize(zp::to_laurent(prod)), current);
                if (inserted) side.order.push_back(&it->first);
                return;
            }
            for (std::size_t i = start; i < indices.size(); ++i) {
                current.push_back(indices[i]);
                self(self, i, remaining - 1, zp::mul(prod, symmetric_products[i]));
                current.pop_back();
            }
        };
        for (int m = 0; m <= bounds.max_factors; ++m) rec(rec, 0, m, base_dense);
    };

    Side left, right;
    enumerate(d1, left);
    enumerate(d2, right);

    // among all matches prefer the fewest family factors in total
    const LaurentPoly* best_key = nullptr;
    std::size_t best_size = 0;
    for (const LaurentPoly* key : left.order) {
        auto hit = right.seen.find(*key);
        if (hit == right.seen.end()) continue;
        const std::size_t total = left.seen.at(*key).size() + hit->second.size();
        if (!best_key || total < best_size) {
            best_key = key;
            best_size = total;
        }
    }
    if (best_key) {
        ObstructionReport r;
        r.verdict = Verdict::Passed;
        r.reason = "witness_search.family_products_found";
        r.has_family_witness = true;
        r.theta = left.seen.at(*best_key);
        r.theta_prime = right.seen.at(*best_key);
        r.witness = *best_key;
        r.detail = "d1 * theta * conj(theta) = d2 * theta' * conj(theta') = " +
                   to_string(*best_key) + " up to units, with " + std::to_string(r.theta.size()) +
                   " + " + std::to_string(r.theta_prime.size()) + " family factors";
        // re-verify by direct arithmetic
        LaurentPoly lhs = d1, rhs = d2;
        for (const auto& i : r.theta) {
            const LaurentPoly f = family_poly(i);
            lhs = lhs * f * conjugate(f);
        }
        for (const auto& i : r.theta_prime) {
            const LaurentPoly f = family_poly(i);
            rhs = rhs * f * conjugate(f);
        }
        if (normalize(lhs) != normalize(rhs))
            throw std::logic_error("family_witness_search: witness failed re-verification");
        return r;
    }

    ObstructionReport r;
    r.verdict = Verdict::Inconclusive;
    r.reason = "witness_search.exhausted_bounds";
    r.detail = "no family product matched within max_factors=" + std::to_string(bounds.max_factors) +
               ", max_k=" + std::to_string(bounds.max_k) + ", max_n=" + std::to_string(bounds.max_n) +
               "; absence within bounds proves nothing";
    return r;
}

ObstructionReport divisibility_check(const LaurentPoly& dK, const LaurentPoly& dKp) {
    require_alexander_poly(dK, "divisibility_check");
    require_alexander_poly(dKp, "divisibility_check");
    const LaurentPoly a = normalize(dK);
    const LaurentPoly b = normalize(dKp);
    zp::Poly q;
    ObstructionReport r;
    if (zp::divide_exact(zp::from_laurent(b), zp::from_laurent(a), q)) {
        r.verdict = Verdict::Passed;
        r.reason = "divisibility.exact_quotient";
        r.witness = zp::to_laurent(q);
        r.detail = "dK divides dKp with quotient " + to_string(*r.witness);
        return r;
    }
    r.verdict = Verdict::Obstructed;
    r.reason = "divisibility.nonzero_remainder";
    r.witness = zp::to_laurent(zp::gcd(zp::from_laurent(a), zp::from_laurent(b)));
    r.detail = "dK does not divide dKp; their maximal common factor is " + to_string(*r.witness);
    return r;
}

} // namespace concord
