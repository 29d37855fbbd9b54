#include "concord/knots.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "concord/errors.hpp"
#include "concord/matrix.hpp"
#include "concord/zpoly.hpp"

namespace concord {

SeifertMatrix::SeifertMatrix(std::vector<std::vector<long long>> entries)
    : entries_(std::move(entries)) {
    const std::size_t n = entries_.size();
    for (const auto& row : entries_)
        if (row.size() != n) throw invalid_input_error("seifert matrix must be square");
    if (n % 2 != 0) throw invalid_input_error("seifert matrix must have even size");
    // det(V - V^T) = +-1
    LaurentMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            d.at(i, j) = LaurentPoly(entries_[i][j] - entries_[j][i]);
    Int det = evaluate(laurent_det(d), EvalPoint::one);
    if (det != 1 && det != -1)
        throw invalid_input_error("seifert matrix rejected: V - V^T is not unimodular (det = " +
                                  det.get_str() + ")");
}

KnotDescriptor KnotDescriptor::unknot() { return {}; }

KnotDescriptor KnotDescriptor::torus(long long p, long long q) {
    if (std::abs(p) < 2 || std::abs(q) < 2)
        throw invalid_input_error("torus knot parameters must satisfy |p|, |q| >= 2");
    if (std::gcd(p, q) != 1) throw invalid_input_error("torus knot parameters must be coprime");
    KnotDescriptor k;
    k.kind = Kind::Torus;
    k.p = p;
    k.q = q;
    return k;
}

KnotDescriptor KnotDescriptor::from_seifert(SeifertMatrix m) {
    KnotDescriptor k;
    k.kind = Kind::Seifert;
    k.seifert = std::move(m);
    return k;
}

KnotDescriptor KnotDescriptor::sum(KnotDescriptor a, KnotDescriptor b) {
    KnotDescriptor k;
    k.kind = Kind::Sum;
    k.children.push_back(std::move(a));
    k.children.push_back(std::move(b));
    return k;
}

KnotDescriptor KnotDescriptor::mirror(KnotDescriptor inner) {
    KnotDescriptor k;
    k.kind = Kind::Mirror;
    k.children.push_back(std::move(inner));
    return k;
}

namespace {
constexpr int kMaxKnotDepth = 256;

KnotDescriptor knot_from_json_impl(const nlohmann::json& j, int depth);
} // namespace

KnotDescriptor KnotDescriptor::from_json(const nlohmann::json& j) {
    return knot_from_json_impl(j, 0);
}

namespace {
KnotDescriptor knot_from_json_impl(const nlohmann::json& j, int depth) {
    if (depth > kMaxKnotDepth)
        throw invalid_input_error("knot: expression nested deeper than " +
                                  std::to_string(kMaxKnotDepth) + " levels");
    if (!j.is_object() || !j.contains("type"))
        throw invalid_input_error("knot: expected an object with field 'type'");
    const std::string type = j.at("type").get<std::string>();
    auto require = [&](const char* field) -> const nlohmann::json& {
        if (!j.contains(field))
            throw invalid_input_error("knot of type '" + type + "': missing field '" + field + "'");
        return j.at(field);
    };
    if (type == "unknot") return KnotDescriptor::unknot();
    if (type == "torus") {
        if (!require("p").is_number_integer() || !require("q").is_number_integer())
            throw invalid_input_error("knot of type 'torus': fields 'p', 'q' must be integers");
        return KnotDescriptor::torus(j.at("p").get<long long>(), j.at("q").get<long long>());
    }
    if (type == "seifert") {
        const auto& m = require("matrix");
        if (!m.is_array()) throw invalid_input_error("knot of type 'seifert': 'matrix' must be an array");
        std::vector<std::vector<long long>> rows;
        for (const auto& r : m) {
            if (!r.is_array())
                throw invalid_input_error("knot of type 'seifert': 'matrix' rows must be arrays");
            std::vector<long long> row;
            for (const auto& c : r) {
                if (!c.is_number_integer())
                    throw invalid_input_error("knot of type 'seifert': matrix entries must be integers");
                row.push_back(c.get<long long>());
            }
            rows.push_back(std::move(row));
        }
        return KnotDescriptor::from_seifert(SeifertMatrix(std::move(rows)));
    }
    if (type == "sum")
        return KnotDescriptor::sum(knot_from_json_impl(require("left"), depth + 1),
                                   knot_from_json_impl(require("right"), depth + 1));
    if (type == "mirror") return KnotDescriptor::mirror(knot_from_json_impl(require("of"), depth + 1));
    throw invalid_input_error("knot: unknown type '" + type + "'");
}
} // namespace

nlohmann::json KnotDescriptor::to_json() const {
    switch (kind) {
        case Kind::Unknot: return {{"type", "unknot"}};
        case Kind::Torus: return {{"type", "torus"}, {"p", p}, {"q", q}};
        case Kind::Seifert: {
            nlohmann::json m = nlohmann::json::array();
            for (const auto& row : seifert->entries()) m.push_back(row);
            return {{"type", "seifert"}, {"matrix", m}};
        }
        case Kind::Sum:
            return {{"type", "sum"}, {"left", children[0].to_json()}, {"right", children[1].to_json()}};
        case Kind::Mirror: return {{"type", "mirror"}, {"of", children[0].to_json()}};
    }
    throw std::logic_error("knot: bad kind");
}

std::string to_string(const KnotDescriptor& k) {
    switch (k.kind) {
        case KnotDescriptor::Kind::Unknot: return "unknot";
        case KnotDescriptor::Kind::Torus:
            return "torus(" + std::to_string(k.p) + "," + std::to_string(k.q) + ")";
        case KnotDescriptor::Kind::Seifert:
            return "seifert(" + std::to_string(k.seifert->size()) + "x" +
                   std::to_string(k.seifert->size()) + ")";
        case KnotDescriptor::Kind::Sum:
            return "sum(" + to_string(k.children[0]) + ", " + to_string(k.children[1]) + ")";
        case KnotDescriptor::Kind::Mirror: return "mirror(" + to_string(k.children[0]) + ")";
    }
    return "?";
}

namespace {

LaurentPoly torus_alexander(long long p, long long q) {
    const unsigned long P = static_cast<unsigned long>(std::abs(p));
    const unsigned long Q = static_cast<unsigned long>(std::abs(q));
    if (P * Q > 1000000)
        throw resource_limit_error("torus knot degree p*q = " + std::to_string(P * Q) +
                                   " is beyond the supported range");
    auto t_pow_minus_1 = [](unsigned long e) {
        zp::Poly r(e + 1, Int(0));
        r[0] = -1;
        r[e] = 1;
        return r;
    };
    // (t^PQ - 1) / (t^P - 1), times (t - 1), divided by (t^Q - 1)
    zp::Poly acc, tmp;
    if (!zp::divide_exact(t_pow_minus_1(P * Q), t_pow_minus_1(P), acc))
        throw std::logic_error("torus_alexander: inexact division");
    acc = zp::mul(acc, t_pow_minus_1(1));
    if (!zp::divide_exact(acc, t_pow_minus_1(Q), tmp))
        throw std::logic_error("torus_alexander: inexact division");
    return normalize(zp::to_laurent(tmp));
}

LaurentPoly seifert_alexander(const SeifertMatrix& v) {
    const std::size_t n = v.size();
    if (n == 0) return LaurentPoly(1);
    LaurentMatrix m(n, n);
    const LaurentPoly t = LaurentPoly::variable();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = LaurentPoly(v.at(i, j)) - t * LaurentPoly(v.at(j, i));
    return normalize(laurent_det(m));
}

} // namespace

LaurentPoly alexander(const KnotDescriptor& k) {
    switch (k.kind) {
        case KnotDescriptor::Kind::Unknot: return LaurentPoly(1);
        case KnotDescriptor::Kind::Torus: return torus_alexander(k.p, k.q);
        case KnotDescriptor::Kind::Seifert: return seifert_alexander(*k.seifert);
        case KnotDescriptor::Kind::Sum:
            return normalize(alexander(k.children[0]) * alexander(k.children[1]));
        case KnotDescriptor::Kind::Mirror: return normalize(conjugate(alexander(k.children[0])));
    }
    throw std::logic_error("alexander: bad kind");
}

void require_alexander_poly(const LaurentPoly& delta, const std::string& context) {
    if (delta.is_zero()) throw invalid_input_error(context + ": zero polynomial");
    Int at_one = evaluate(delta, EvalPoint::one);
    if (at_one != 1 && at_one != -1)
        throw invalid_input_error(context + ": polynomial has value " + at_one.get_str() +
                                  " at t = 1, not +-1");
    if (!is_symmetric(delta))
        throw invalid_input_error(context + ": polynomial is not symmetric up to units");
}

namespace {

struct Pairing {
    bool ok = false;
    LaurentPoly witness;
    LaurentPoly offending;
    std::string why;
};

// Tries to split the factor multiset of delta into conjugate pairs
// (g, conjugate(g)) with self-conjugate factors to even powers and the
// integer content a perfect square. On success the witness f satisfies
// normalize(f * conjugate(f)) == normalize(delta).
Pairing conjugate_pairing(const LaurentPoly& delta, long degree_limit) {
    Pairing out;
    const LaurentPoly target = normalize(delta);
    const Factorization fac = factor_int(target, degree_limit);

    if (mpz_perfect_square_p(fac.content.get_mpz_t()) == 0) {
        out.offending = LaurentPoly(fac.content);
        out.why = "content_not_square";
        return out;
    }
    Int content_root;
    mpz_sqrt(content_root.get_mpz_t(), fac.content.get_mpz_t());
    LaurentPoly witness(content_root);

    std::map<LaurentPoly, int> remaining(fac.factors.begin(), fac.factors.end());
    while (!remaining.empty()) {
        auto [q, e] = *remaining.begin();
        remaining.erase(remaining.begin());
        const LaurentPoly qc = normalize(conjugate(q));
        if (qc == q) {
            if (e % 2 != 0) {
                out.offending = q;
                out.why = "self_conjugate_odd_multiplicity";
                return out;
            }
            witness = witness * pow(q, static_cast<unsigned long>(e / 2));
            continue;
        }
        auto it = remaining.find(qc);
        if (it == remaining.end() || it->second != e) {
            out.offending = q;
            out.why = "unpaired_factor";
            return out;
        }
        remaining.erase(it);
        witness = witness * pow(std::max(q, qc), static_cast<unsigned long>(e));
    }

    if (normalize(witness * conjugate(witness)) != target)
        throw std::logic_error("conjugate_pairing: witness check failed");
    out.ok = true;
    out.witness = witness;
    return out;
}

ObstructionReport factorization_test(const LaurentPoly& delta, long degree_limit,
                                     const std::string& prefix, const std::string& passed_detail) {
    require_alexander_poly(delta, prefix);
    const Pairing pairing = conjugate_pairing(delta, degree_limit);
    ObstructionReport r;
    if (pairing.ok) {
        r.verdict = Verdict::Passed;
        r.reason = prefix + ".conjugate_pairing";
        r.witness = pairing.witness;
        r.detail = passed_detail + " witness " + to_string(pairing.witness) + ".";
    } else {
        r.verdict = Verdict::Obstructed;
        r.reason = prefix + "." + pairing.why;
        r.witness = pairing.offending;
        r.detail = "no factorization delta = f(t) f(1/t) exists; blocked by " +
                   to_string(pairing.offending) + ".";
    }
    return r;
}

} // namespace

ObstructionReport fox_milnor_test(const LaurentPoly& delta, long degree_limit) {
    return factorization_test(delta, degree_limit, "fox_milnor",
                              "necessary slice condition holds:");
}

ObstructionReport double_slice_test(const LaurentPoly& delta, long degree_limit) {
    return factorization_test(delta, degree_limit, "double_slice",
                              "necessary double-slice condition holds:");
}

} // namespace concord
