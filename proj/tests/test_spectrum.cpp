#include <doctest.h>

#include <cmath>
#include <random>

#include "concord/errors.hpp"
#include "concord/spectrum.hpp"

#include "oracles.hpp"

using namespace concord;

namespace {
LaurentPoly P(const char* s) { return parse_poly(s); }
LaurentPoly X(const char* s) { return parse_poly(s, 'x'); }

// exact entries vs the numeric oracle: total count and x values to 1e-9
void check_against_numeric_oracle(const LaurentPoly& f) {
    const UnitCircleSpectrum spec = unit_circle_roots(f);
    const auto oracle = oracles::numeric_circle_x_values(f);

    long oracle_count = 0;
    for (const auto& [x, m] : oracle) oracle_count += m;
    CHECK(spec.total_roots_on_circle() == oracle_count);

    std::vector<std::pair<double, int>> exact;
    for (const auto& e : spec.entries) {
        const int copies = (e.at_z_plus_one() || e.at_z_minus_one()) ? 1 : 2;
        for (int i = 0; i < copies; ++i) exact.emplace_back(e.approx, e.multiplicity);
    }
    std::sort(exact.begin(), exact.end());
    REQUIRE(exact.size() == oracle.size());
    for (std::size_t i = 0; i < exact.size(); ++i) {
        CHECK(std::abs(exact[i].first - oracle[i].first) < 1e-9);
        CHECK(exact[i].second == oracle[i].second);
    }
}
} // namespace

TEST_CASE("phi_6 spectrum is exactly the sixth-root class") {
    const UnitCircleSpectrum s = unit_circle_roots(P("t^2 - t + 1"));
    REQUIRE(s.entries.size() == 1);
    CHECK(s.entries[0].min_poly == X("x - 1"));
    CHECK(s.entries[0].multiplicity == 1);
    CHECK(s.entries[0].is_sixth_root_class());
    CHECK(s.entries[0].approx == doctest::Approx(1.0));
    CHECK(s.only_sixth_roots());
    CHECK(s.total_roots_on_circle() == 2);
}

TEST_CASE("t^2 - 3t + 1 has no unit-circle roots") {
    // real roots (3 +- sqrt 5)/2, a reciprocal pair off the circle
    const UnitCircleSpectrum s = unit_circle_roots(P("t^2 - 3t + 1"));
    CHECK(s.empty());
    check_against_numeric_oracle(P("t^2 - 3t + 1"));
}

TEST_CASE("phi_10 spectrum: two golden-ratio classes") {
    const LaurentPoly phi10 = P("t^4 - t^3 + t^2 - t + 1");

    // numeric oracle: the four primitive 10th roots of unity give
    // x = 2cos(pi/5) and 2cos(3pi/5), the roots of x^2 - x - 1
    const auto xs = oracles::numeric_circle_x_values(phi10);
    REQUIRE(xs.size() == 4);
    CHECK(xs[0].first == doctest::Approx((1.0 - std::sqrt(5.0)) / 2).epsilon(1e-12));
    CHECK(xs[2].first == doctest::Approx((1.0 + std::sqrt(5.0)) / 2).epsilon(1e-12));

    const UnitCircleSpectrum s = unit_circle_roots(phi10);
    REQUIRE(s.entries.size() == 2);
    for (const auto& e : s.entries) {
        CHECK(e.min_poly == X("x^2 - x - 1"));
        CHECK(e.multiplicity == 1);
        CHECK(!e.is_sixth_root_class());
    }
    CHECK(s.entries[0].approx == doctest::Approx(-0.6180339887).epsilon(1e-9));
    CHECK(s.entries[1].approx == doctest::Approx(1.6180339887).epsilon(1e-9));
    check_against_numeric_oracle(phi10);
}

TEST_CASE("roots at z = +-1") {
    const UnitCircleSpectrum s1 = unit_circle_roots(P("t - 1") * P("t^2 - t + 1"));
    REQUIRE(s1.entries.size() == 2);
    CHECK(s1.entries[0].min_poly == X("x - 1"));
    CHECK(s1.entries[1].min_poly == X("x - 2"));
    CHECK(s1.entries[1].at_z_plus_one());
    CHECK(s1.total_roots_on_circle() == 3);

    const UnitCircleSpectrum s2 = unit_circle_roots(P("t + 1"));
    REQUIRE(s2.entries.size() == 1);
    CHECK(s2.entries[0].min_poly == X("x + 2"));
    CHECK(s2.entries[0].at_z_minus_one());

    const UnitCircleSpectrum s3 = unit_circle_roots(pow(P("t - 1"), 3));
    REQUIRE(s3.entries.size() == 1);
    CHECK(s3.entries[0].multiplicity == 3);
}

TEST_CASE("multiplicities and off-circle factors") {
    const UnitCircleSpectrum s = unit_circle_roots(pow(P("t^2 - t + 1"), 2) * P("t - 2"));
    REQUIRE(s.entries.size() == 1);
    CHECK(s.entries[0].min_poly == X("x - 1"));
    CHECK(s.entries[0].multiplicity == 2);

    CHECK(unit_circle_roots(P("1")).empty());
    CHECK(unit_circle_roots(P("t^7")).empty());
    CHECK_THROWS_AS(unit_circle_roots(LaurentPoly()), invalid_input_error);
}

TEST_CASE("f * conjugate(f) has an even spectrum") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 40; ++i) {
        LaurentPoly f = oracles::random_poly(rng, 5, 6, true);
        const UnitCircleSpectrum s = unit_circle_roots(f * conjugate(f));
        for (const auto& e : s.entries) CHECK(e.multiplicity % 2 == 0);
    }
}

TEST_CASE("exact spectrum agrees with the numeric root finder") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 25; ++i) check_against_numeric_oracle(oracles::random_poly(rng, 6, 9, false));
    // polynomials engineered to have circle roots
    check_against_numeric_oracle(cyclotomic(5) * P("t - 3"));
    check_against_numeric_oracle(cyclotomic(12));
    check_against_numeric_oracle(P("t + 1") * P("t + 1") * cyclotomic(3));
}

TEST_CASE("higher cyclotomic spectra") {
    // Phi_7: three conjugate pairs, x-minimal polynomial x^3 + x^2 - 2x - 1
    const UnitCircleSpectrum s7 = unit_circle_roots(cyclotomic(7));
    REQUIRE(s7.entries.size() == 3);
    for (const auto& e : s7.entries) {
        CHECK(e.min_poly == X("x^3 + x^2 - 2x - 1"));
        CHECK(e.multiplicity == 1);
    }
    CHECK(s7.total_roots_on_circle() == 6);
    check_against_numeric_oracle(cyclotomic(7));

    // Phi_15 has degree 8: four pairs, minimal polynomial x^4 - x^3 - 4x^2 + 4x + 1
    const UnitCircleSpectrum s15 = unit_circle_roots(cyclotomic(15));
    REQUIRE(s15.entries.size() == 4);
    for (const auto& e : s15.entries) CHECK(e.min_poly == X("x^4 - x^3 - 4x^2 + 4x + 1"));
    check_against_numeric_oracle(cyclotomic(15));

    // mixed: repeated off-circle reciprocal pair, circle roots, and z = 1
    const LaurentPoly mixed =
        pow(P("t^2 - 3t + 1"), 2) * cyclotomic(5) * P("t - 1");
    const UnitCircleSpectrum sm = unit_circle_roots(mixed);
    REQUIRE(sm.entries.size() == 3);
    CHECK(sm.entries[0].min_poly == X("x^2 + x - 1")); // 2cos(2pi/5), 2cos(4pi/5)
    CHECK(sm.entries[1].min_poly == X("x^2 + x - 1"));
    CHECK(sm.entries[2].min_poly == X("x - 2"));
    check_against_numeric_oracle(mixed);
}

TEST_CASE("minimal polynomial with conjugate roots outside the circle range") {
    // palindrome whose x-image x^2 - 3x + 1 has roots (3 +- sqrt5)/2: only
    // 0.38.. corresponds to a circle pair, 2.61.. to a real reciprocal pair
    const LaurentPoly f = P("t^4 - 3t^3 + 3t^2 - 3t + 1");
    const UnitCircleSpectrum s = unit_circle_roots(f);
    REQUIRE(s.entries.size() == 1);
    CHECK(s.entries[0].min_poly == X("x^2 - 3x + 1"));
    CHECK(s.entries[0].multiplicity == 1);
    CHECK(s.entries[0].approx == doctest::Approx((3.0 - std::sqrt(5.0)) / 2).epsilon(1e-9));
    CHECK(s.total_roots_on_circle() == 2);
    check_against_numeric_oracle(f);
}

TEST_CASE("sturm chains count real roots exactly") {
    // x^2 - 2: roots +-sqrt(2)
    const auto ch = sturm::chain(zp::from_laurent(X("x^2 - 2")));
    CHECK(sturm::count_roots(ch, mpq_class(-2), mpq_class(2)) == 2);
    CHECK(sturm::count_roots(ch, mpq_class(0), mpq_class(2)) == 1);
    CHECK(sturm::count_roots(ch, mpq_class(-2), mpq_class(0)) == 1);
    CHECK(sturm::count_roots(ch, mpq_class(3), mpq_class(5)) == 0);

    // Wilkinson-flavored: (x-1)(x-2)(x-3) rational endpoints between roots
    const auto ch3 = sturm::chain(zp::from_laurent(X("x^3 - 6x^2 + 11x - 6")));
    CHECK(sturm::count_roots(ch3, mpq_class(0), mpq_class(4)) == 3);
    CHECK(sturm::count_roots(ch3, mpq_class(3, 2), mpq_class(5, 2)) == 1);
}
