#include <doctest.h>

#include <random>

#include "concord/errors.hpp"
#include "concord/laurent.hpp"
#include "concord/zpoly.hpp"

#include "oracles.hpp"

using namespace concord;

namespace {
LaurentPoly P(const char* s) { return parse_poly(s); }
} // namespace

TEST_CASE("arithmetic on small examples") {
    CHECK(P("t - 1") * P("t - 1") == P("t^2 - 2t + 1"));
    LaurentPoly f = P("3t^5 - 2 + t^-1");
    CHECK((f + (-f)).is_zero());
    CHECK(P("1 + t^-1") * P("t") == P("t + 1"));
    CHECK(arith(P("t"), P("1"), ArithOp::add) == P("t + 1"));
    CHECK(arith(P("t"), P("1"), ArithOp::sub) == P("t - 1"));
    CHECK(arith(P("t + 1"), P("t - 1"), ArithOp::mul) == P("t^2 - 1"));
    CHECK(arith(P("t"), LaurentPoly(), ArithOp::neg) == P("-t"));
}

TEST_CASE("ring laws on random inputs") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly a = oracles::random_poly(rng, 6, 5, true);
        LaurentPoly b = oracles::random_poly(rng, 6, 5, true);
        LaurentPoly c = oracles::random_poly(rng, 6, 5, true);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
    }
}

TEST_CASE("conjugate") {
    CHECK(conjugate(P("t^2 - t + 1")) == P("t^-2 - t^-1 + 1"));
    CHECK(conjugate(LaurentPoly()).is_zero());
    LaurentPoly f = P("3t^5 - 2 + t^-1");
    CHECK(conjugate(conjugate(f)) == f);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly a = oracles::random_poly(rng, 8, 9, true);
        CHECK(conjugate(conjugate(a)) == a);
        LaurentPoly b = oracles::random_poly(rng, 8, 9, true);
        CHECK(conjugate(a * b) == conjugate(a) * conjugate(b));
    }
}

TEST_CASE("normalize canonical form") {
    CHECK(normalize(P("-t^3 + t^2")) == P("t - 1"));
    CHECK(normalize(P("t^-2 - t^-1 + 1")) == P("t^2 - t + 1"));
    CHECK(normalize(P("5")) == P("5"));
    CHECK_THROWS_AS(normalize(LaurentPoly()), invalid_input_error);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly f = oracles::random_poly(rng, 7, 9, true);
        LaurentPoly n = normalize(f);
        CHECK(normalize(n) == n); // idempotent
        CHECK(n.min_exp() == 0);
        CHECK(n.terms().rbegin()->second > 0);
        // invariant under every unit +-t^k
        std::uniform_int_distribution<long> kd(-5, 5);
        long k = kd(rng);
        CHECK(normalize(f * LaurentPoly::monomial(1, k)) == n);
        CHECK(normalize(f * LaurentPoly::monomial(-1, k)) == n);
        CHECK(unit_equal(f, f * LaurentPoly::monomial(-1, k)));
    }
}

TEST_CASE("evaluate at +-1") {
    CHECK(evaluate(P("t^2 - t + 1"), EvalPoint::one) == 1);
    CHECK(evaluate(P("1") + P("t^2") * pow(P("t - 1"), 3), EvalPoint::one) == 1);
    CHECK(evaluate(P("t - 3"), EvalPoint::minus_one) == -4);
    CHECK(evaluate(P("t^-1 + t"), EvalPoint::minus_one) == -2);
    CHECK(evaluate(LaurentPoly(), EvalPoint::one) == 0);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == P("t - 1"));
    CHECK(cyclotomic(2) == P("t + 1"));
    CHECK(cyclotomic(6) == P("t^2 - t + 1"));

    // independent route for Phi_10: divide t^10 - 1 by the hand-written
    // Phi_1, Phi_2, Phi_5
    zp::Poly num(11, Int(0));
    num[0] = -1;
    num[10] = 1;
    zp::Poly q;
    REQUIRE(zp::divide_exact(num, zp::from_laurent(P("t - 1")), q));
    REQUIRE(zp::divide_exact(q, zp::from_laurent(P("t + 1")), q));
    REQUIRE(zp::divide_exact(q, zp::from_laurent(P("1 + t + t^2 + t^3 + t^4")), q));
    CHECK(zp::to_laurent(q) == P("t^4 - t^3 + t^2 - t + 1"));
    CHECK(cyclotomic(10) == P("t^4 - t^3 + t^2 - t + 1"));

    CHECK_THROWS_AS(cyclotomic(0), invalid_input_error);

    // classical value at 1: p for prime powers, 1 otherwise
    CHECK(evaluate(cyclotomic(1), EvalPoint::one) == 0);
    for (unsigned long n = 2; n <= 30; ++n) {
        unsigned long p = 0;
        Int expected = oracles::is_prime_power(n, p) ? Int(static_cast<long>(p)) : Int(1);
        CHECK(evaluate(cyclotomic(n), EvalPoint::one) == expected);
    }

    // product over divisors reassembles t^n - 1
    for (unsigned long n : {6UL, 12UL, 15UL}) {
        LaurentPoly prod(1);
        for (unsigned long d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic(d);
        LaurentPoly expect = LaurentPoly::monomial(1, static_cast<long>(n)) - LaurentPoly(1);
        CHECK(prod == expect);
    }
}

TEST_CASE("polynomial text syntax") {
    CHECK(to_string(P("1 - t + t^2")) == "1 - t + t^2");
    CHECK(to_string(P("t^-2 + 3")) == "t^-2 + 3");
    CHECK(P("-3t^4 + 2*t") == LaurentPoly::monomial(-3, 4) + LaurentPoly::monomial(2, 1));
    CHECK(P("  1-t+ t ^ 2 ") == P("1 - t + t^2"));
    CHECK(to_string(LaurentPoly()) == "0");
    CHECK(P("0").is_zero());
    CHECK(P("2t^2 - 5t + 2") == P("2 - 5t + 2t^2"));

    CHECK_THROWS_AS(parse_poly(""), invalid_input_error);
    CHECK_THROWS_AS(parse_poly("t^"), invalid_input_error);
    CHECK_THROWS_AS(parse_poly("1 +"), invalid_input_error);
    CHECK_THROWS_AS(parse_poly("x + 1"), invalid_input_error);
    CHECK(parse_poly("x^2 - 1", 'x') == LaurentPoly::monomial(1, 2) - LaurentPoly(1));

    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly f = oracles::random_poly(rng, 9, 99, true);
        CHECK(parse_poly(to_string(f)) == f);
    }
}

TEST_CASE("symmetry predicate") {
    CHECK(is_symmetric(P("t^2 - t + 1")));
    CHECK(is_symmetric(P("1")));
    CHECK(is_symmetric(P("t - 1")));
    CHECK(!is_symmetric(P("t^2 - 2")));
    CHECK(!is_symmetric(LaurentPoly()));
}
