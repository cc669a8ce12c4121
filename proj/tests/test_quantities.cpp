#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "stdiff/errors.hpp"
#include "stdiff/quantities.hpp"

using namespace stdiff;

TEST_CASE("load_constants: empty config yields defaults") {
    const auto c = load_constants("");
    CHECK(c == default_constants());
    CHECK(c.G == 6.674e-11);
    CHECK(c.N_A == 6.02214076e23);
    CHECK(c.k_B == 1.380649e-23);
    CHECK(c.l_P == 1.616255e-35);
    CHECK(c.m_P == 2.176434e-8);
    CHECK(c.r_N == 1.0e-15);
    CHECK(c.m_N == 1.6726e-27);
}

TEST_CASE("load_constants: single override") {
    const auto c = load_constants("r_N 3.3e-15");
    CHECK(c.r_N == 3.3e-15);
    auto expected = default_constants();
    expected.r_N = 3.3e-15;
    CHECK(c == expected);
}

TEST_CASE("load_constants: comments, blank lines and tabs") {
    const auto c = load_constants("# nucleus model\n\n  m_N\t1.67e-27   # proton-ish\nG 6.67430e-11\n");
    CHECK(c.m_N == 1.67e-27);
    CHECK(c.G == 6.67430e-11);
}

TEST_CASE("load_constants: rejections") {
    CHECK_THROWS_AS(load_constants("G -1"), NonPositive);
    CHECK_THROWS_AS(load_constants("G 0"), NonPositive);
    CHECK_THROWS_AS(load_constants("hbar 1.05e-34"), UnknownConstant);
    CHECK_THROWS_AS(load_constants("G"), ParseError);
    CHECK_THROWS_AS(load_constants("G abc"), ParseError);
    try {
        load_constants("g 1");
        FAIL("expected UnknownConstant");
    } catch (const UnknownConstant& e) {
        CHECK(e.name() == "g");
    }
}

TEST_CASE("embedded defaults file matches the listed CODATA digits") {
    CHECK(default_constants_text() ==
          "# SI defaults (CODATA 2018; r_N and m_N are model parameters)\n"
          "G 6.674e-11\n"
          "N_A 6.02214076e23\n"
          "k_B 1.380649e-23\n"
          "l_P 1.616255e-35\n"
          "m_P 2.176434e-8\n"
          "r_N 1.0e-15\n"
          "m_N 1.6726e-27\n");
}

TEST_CASE("asd_to_psd examples") {
    const auto s = asd_to_psd(accel_asd(4.91e-9));
    CHECK(s.unit() == Unit::AccelPsd);
    CHECK(s.value() == doctest::Approx(2.411e-17).epsilon(1e-3));
    CHECK(asd_to_psd(force_asd(0)).value() == 0);
    CHECK(asd_to_psd(force_asd(1)).value() == 1);
    CHECK(asd_to_psd(force_asd(1)).unit() == Unit::ForcePsd);
    CHECK_THROWS_AS(asd_to_psd(force_asd(-1)), NegativeInput);
    CHECK_THROWS_AS(asd_to_psd(kilograms(1)), UnitMismatch);
    CHECK_THROWS_AS(psd_to_asd(force_asd(1)), UnitMismatch);
}

TEST_CASE("psd_to_asd inverts asd_to_psd over [1e-30, 1e30]") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10000; ++i) {
        const double x = oracle::log_uniform(rng, -30, 30);
        const auto back = psd_to_asd(asd_to_psd(force_asd(x)));
        REQUIRE(back.unit() == Unit::ForceAsd);
        REQUIRE(oracle::rel_close(back.value(), x, 1e-12));
    }
}

TEST_CASE("mismatched units never combine") {
    for (auto a : kAllUnits) {
        for (auto b : kAllUnits) {
            const Quantity qa(1.0, a), qb(2.0, b);
            if (a == b) {
                CHECK((qa + qb).value() == 3.0);
                CHECK((qb - qa).value() == 1.0);
                CHECK(qa < qb);
            } else {
                CHECK_THROWS_AS(qa + qb, UnitMismatch);
                CHECK_THROWS_AS(qa - qb, UnitMismatch);
                CHECK_THROWS_AS((void)(qa < qb), UnitMismatch);
                CHECK(qa != qb);
            }
        }
    }
}

TEST_CASE("non-finite values are rejected at construction") {
    CHECK_THROWS_AS(Quantity(std::numeric_limits<double>::quiet_NaN(), Unit::Kilogram), Error);
    CHECK_THROWS_AS(Quantity(std::numeric_limits<double>::infinity(), Unit::Hertz), Error);
    CHECK_THROWS_AS(kilograms(1e308) * 10.0, Error);
}

TEST_CASE("angular_frequency is 2 pi f") {
    const auto w = angular_frequency(hertz(1e5));
    CHECK(w.unit() == Unit::RadianPerSecond);
    CHECK(w.value() == doctest::Approx(628318.5307179586));
    CHECK_THROWS_AS(angular_frequency(radians_per_second(1)), UnitMismatch);
}
