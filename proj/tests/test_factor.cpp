#include <doctest.h>

#include <random>
#include <thread>

#include "concord/errors.hpp"
#include "concord/factor.hpp"

#include "oracles.hpp"

using namespace concord;

namespace {
LaurentPoly P(const char* s) { return parse_poly(s); }

bool has_factor(const Factorization& f, const LaurentPoly& q, int mult) {
    for (const auto& [g, m] : f.factors)
        if (g == q && m == mult) return true;
    return false;
}
} // namespace

TEST_CASE("stevedore polynomial splits into a conjugate pair") {
    Factorization f = factor_int(P("2t^2 - 5t + 2"));
    CHECK(f.content == 1);
    REQUIRE(f.factors.size() == 2);
    CHECK(has_factor(f, P("2t - 1"), 1));
    CHECK(has_factor(f, P("t - 2"), 1));
    // expansion oracle
    CHECK(P("2t - 1") * P("t - 2") == P("2t^2 - 5t + 2"));
    CHECK(f.product() == P("2t^2 - 5t + 2"));
}

TEST_CASE("phi_10 is irreducible") {
    const LaurentPoly phi10 = P("t^4 - t^3 + t^2 - t + 1");

    // exhaustive oracle: a proper factorization of a quartic has a factor of
    // degree <= 2; Mignotte bounds its coefficients by 2^4 sqrt(5) < 10
    bool divisor_found = false;
    zp::Poly target = zp::from_laurent(phi10);
    for (int a = -9; a <= 9 && !divisor_found; ++a)
        for (int b = -9; b <= 9 && !divisor_found; ++b)
            for (int c = -9; c <= 9 && !divisor_found; ++c) {
                zp::Poly cand{Int(c), Int(b), Int(a)};
                zp::trim(cand);
                if (zp::degree(cand) < 1) continue;
                zp::Poly q;
                if (zp::divide_exact(target, cand, q) && zp::degree(q) > 0) divisor_found = true;
            }
    CHECK(!divisor_found);

    Factorization f = factor_int(phi10);
    CHECK(f.content == 1);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == phi10);
    CHECK(f.factors[0].second == 1);
}

TEST_CASE("constructed square") {
    Factorization f = factor_int(P("t^2 - t + 1") * P("t^2 - t + 1"));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == P("t^2 - t + 1"));
    CHECK(f.factors[0].second == 2);
}

TEST_CASE("content and units") {
    Factorization f = factor_int(P("-2t + 2"));
    CHECK(f.content == 2);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == P("t - 1"));
    CHECK(f.product() == normalize(P("-2t + 2")));

    Factorization c = factor_int(P("6"));
    CHECK(c.content == 6);
    CHECK(c.factors.empty());
}

TEST_CASE("t^24 - 1 splits into the cyclotomics of the divisors of 24") {
    LaurentPoly f = LaurentPoly::monomial(1, 24) - LaurentPoly(1);
    Factorization fac = factor_int(f);
    CHECK(fac.content == 1);
    CHECK(fac.factors.size() == 8);
    for (unsigned long d : {1UL, 2UL, 3UL, 4UL, 6UL, 8UL, 12UL, 24UL}) CHECK(has_factor(fac, cyclotomic(d), 1));
    CHECK(fac.product() == f);
}

TEST_CASE("degree guard and zero input") {
    CHECK_THROWS_AS(factor_int(pow(P("t - 1"), 25)), resource_limit_error);
    CHECK_NOTHROW(factor_int(pow(P("t - 1"), 24)));
    CHECK_THROWS_AS(factor_int(LaurentPoly()), invalid_input_error);
    // a custom limit overrides the default
    CHECK_THROWS_AS(factor_int(pow(P("t - 1"), 8), 6), resource_limit_error);
}

TEST_CASE("re-multiplication on random products") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        LaurentPoly a = oracles::random_poly(rng, 4, 4, true);
        LaurentPoly b = oracles::random_poly(rng, 4, 4, true);
        LaurentPoly c = oracles::random_poly(rng, 3, 3, false);
        LaurentPoly f = a * b * c;
        if (f.is_zero()) continue;
        Factorization fac = factor_int(f);
        CHECK(fac.product() == normalize(f));
        for (const auto& [q, m] : fac.factors) {
            CHECK(m >= 1);
            CHECK(q == normalize(q));
        }
    }
}

TEST_CASE("factorization is safe to run concurrently") {
    LaurentPoly f = P("2t^2 - 5t + 2") * cyclotomic(12) * pow(P("t - 2"), 2);
    Factorization base = factor_int(f);
    std::vector<std::thread> workers;
    std::vector<bool> ok(4, false);
    for (int i = 0; i < 4; ++i)
        workers.emplace_back([&, i] { ok[static_cast<std::size_t>(i)] = factor_int(f).product() == base.product(); });
    for (auto& w : workers) w.join();
    for (int i = 0; i < 4; ++i) CHECK(ok[static_cast<std::size_t>(i)]);
}

TEST_CASE("self-reciprocal part") {
    auto [s1, r1] = reciprocal_part(P("t^2 - t + 1") * P("t - 2"));
    CHECK(s1 == P("t^2 - t + 1"));
    CHECK(unit_equal(r1, P("t - 2")));
    CHECK(s1 * r1 == normalize(P("t^2 - t + 1") * P("t - 2")));

    auto [s2, r2] = reciprocal_part(P("t - 1"));
    CHECK(s2 == P("t - 1"));
    CHECK(r2 == P("1"));

    auto [s3, r3] = reciprocal_part(P("2t - 1"));
    CHECK(s3 == P("1"));
    CHECK(unit_equal(r3, P("2t - 1")));

    // multiplicity: min of the pair multiplicities survives on each side
    auto [s4, r4] = reciprocal_part(pow(P("t - 2"), 3) * P("2t - 1"));
    CHECK(unit_equal(s4, P("t - 2") * P("2t - 1")));

    CHECK_THROWS_AS(reciprocal_part(LaurentPoly()), invalid_input_error);

    std::mt19937_64 rng(29);
    for (int i = 0; i < 60; ++i) {
        LaurentPoly f = oracles::random_poly(rng, 6, 5, true);
        if (f.is_zero()) continue;
        auto [s, r] = reciprocal_part(f);
        CHECK(is_symmetric(s));
        CHECK(s * r == normalize(f));
    }
}
