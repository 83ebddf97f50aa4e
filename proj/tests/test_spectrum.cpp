#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "oracles.hpp"
#include "zetacyl/errors.hpp"
#include "zetacyl/spectrum.hpp"

using namespace zetacyl;

TEST_CASE("arithmetic construction materializes lambda_n = alpha n + beta") {
    auto s = TangentialSpectrum::arithmetic(1.0, 0.0, 10000);
    CHECK(s.entries().size() == 10000);
    CHECK(s.entries()[0].lambda == 1.0);
    CHECK(s.entries()[41].lambda == 42.0);
    CHECK(s.entries()[0].multiplicity == 1);
    auto h = TangentialSpectrum::arithmetic(1.0, -0.5, 10000);
    CHECK(h.entries()[0].lambda == 0.5);
    CHECK(h.entries()[9].lambda == 9.5);
}

TEST_CASE("explicit list sorts and merges") {
    auto s = TangentialSpectrum::explicit_list({{2.0, 1}, {1.0, 3}});
    REQUIRE(s.entries().size() == 2);
    CHECK(s.entries()[0].lambda == 1.0);
    CHECK(s.entries()[0].multiplicity == 3);
    CHECK(s.entries()[1].lambda == 2.0);
    auto m = TangentialSpectrum::explicit_list({{1.0, 1}, {1.0, 2}, {3.0, 1}});
    REQUIRE(m.entries().size() == 2);
    CHECK(m.entries()[0].multiplicity == 3);
}

TEST_CASE("nonpositive eigenvalues are rejected") {
    CHECK_THROWS_AS(TangentialSpectrum::explicit_list({{0.0, 1}}), NonPositiveEigenvalue);
    CHECK_THROWS_AS(TangentialSpectrum::explicit_list({{-1.0, 1}}), NonPositiveEigenvalue);
    CHECK_THROWS_AS(TangentialSpectrum::arithmetic(1.0, -1.0), NonPositiveEigenvalue);
}

TEST_CASE("spectrum file round trip and validation") {
    {
        std::ofstream out("spec_ok.txt");
        out << "# lambda multiplicity\n1.5 2\n2.5\n\n3.5 1 # trailing comment\n";
    }
    auto s = TangentialSpectrum::from_file("spec_ok.txt");
    REQUIRE(s.entries().size() == 3);
    CHECK(s.entries()[0].lambda == 1.5);
    CHECK(s.entries()[0].multiplicity == 2);
    CHECK(s.entries()[1].multiplicity == 1);
    {
        std::ofstream out("spec_bad.txt");
        out << "1.0 1\n-2.0 1\n";
    }
    CHECK_THROWS_AS(TangentialSpectrum::from_file("spec_bad.txt"), NonPositiveEigenvalue);
    std::remove("spec_ok.txt");
    std::remove("spec_bad.txt");
}

TEST_CASE("heat trace against direct summation oracle at t = 1") {
    auto s = TangentialSpectrum::preset("integer");
    double direct = 0.0;
    for (int n = 100; n >= 1; --n) direct += std::exp(-double(n) * double(n));
    direct *= 2.0;
    CHECK(s.heat_trace_y(1.0) == doctest::Approx(direct).epsilon(1e-13));
    CHECK(direct == doctest::Approx(0.7726372049).epsilon(1e-9));
}

TEST_CASE("heat trace decays monotonically to zero") {
    auto s = TangentialSpectrum::preset("half-integer");
    double prev = 1e300;
    for (double t : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 64.0}) {
        double v = s.heat_trace_y(t);
        CHECK(v > 0.0);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(s.heat_trace_y(100.0) < 2.1 * std::exp(-0.25 * 100.0));
}

TEST_CASE("theta-transform branch agrees with direct summation at t = 0.01") {
    for (const char* name : {"integer", "half-integer"}) {
        auto s = TangentialSpectrum::preset(name);
        double beta = (std::string(name) == "integer") ? 0.0 : -0.5;
        double direct = 0.0;
        for (int n = 10000; n >= 1; --n) {
            double lam = double(n) + beta;
            direct += std::exp(-lam * lam * 0.01);
        }
        direct *= 2.0;
        CHECK(std::fabs(s.heat_trace_y(0.01) - direct) < 1e-12 * direct);
    }
    // scattered small t values, including deep Euler-Maclaurin territory
    auto s = TangentialSpectrum::preset("integer");
    for (double t : {0.09, 0.05, 1e-3, 1e-5}) {
        double direct = 0.0;
        int nmax = int(std::ceil(9.0 / std::sqrt(t)));
        for (int n = nmax; n >= 1; --n) direct += std::exp(-double(n) * double(n) * t);
        direct *= 2.0;
        CHECK(std::fabs(s.heat_trace_y(t) - direct) < 1e-12 * direct);
    }
}

TEST_CASE("heat trace is completely monotone on a grid") {
    auto s = TangentialSpectrum::preset("integer");
    std::vector<double> ts, vs;
    for (int i = 0; i <= 60; ++i) {
        ts.push_back(0.05 + 0.1 * i);
        vs.push_back(s.heat_trace_y(ts.back()));
    }
    for (size_t i = 0; i + 1 < vs.size(); ++i) CHECK(vs[i + 1] < vs[i]);
    for (size_t i = 0; i + 2 < vs.size(); ++i) CHECK(vs[i] - 2.0 * vs[i + 1] + vs[i + 2] > 0.0);
}

TEST_CASE("truncation guard raises when the materialized list is too short") {
    auto s = TangentialSpectrum::arithmetic(1.0, 0.0, 3);
    CHECK_THROWS_AS(s.heat_trace_y(0.2), TruncationInsufficient);
    CHECK_NOTHROW(s.heat_trace_y(50.0));
}

TEST_CASE("zeta_B2 at 0 via the Hurwitz oracle") {
    auto integer = TangentialSpectrum::preset("integer");
    auto half = TangentialSpectrum::preset("half-integer");
    CHECK(integer.zeta_b2_at_0() ==
          doctest::Approx(2.0 * oracles::hurwitz(0.0, 1.0)).epsilon(1e-12));
    CHECK(integer.zeta_b2_at_0() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::fabs(half.zeta_b2_at_0()) < 1e-12);
    CHECK(integer.regularized_count() == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("zeta_B2 at s = 2 matches the direct summation oracle") {
    auto s = TangentialSpectrum::preset("integer");
    double direct = 0.0;
    for (int n = 200000; n >= 1; --n) direct += std::pow(double(n), -4.0);
    direct = 2.0 * (direct + std::pow(200000.0, -3.0) / 3.0);  // integral tail
    double pi4_45 = std::pow(3.14159265358979323846, 4) / 45.0;
    CHECK(s.zeta_b2(Complex(2.0)).real() == doctest::Approx(pi4_45).epsilon(1e-12));
    CHECK(s.zeta_b2(Complex(2.0)).real() == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("doubling multiplicities doubles the zeta values") {
    auto one = TangentialSpectrum::explicit_list({{0.7, 1}, {1.3, 2}, {2.9, 1}});
    auto two = TangentialSpectrum::explicit_list({{0.7, 2}, {1.3, 4}, {2.9, 2}});
    CHECK(two.zeta_b2_at_0() == doctest::Approx(2.0 * one.zeta_b2_at_0()));
    CHECK(two.zeta_b2(Complex(1.7)).real() ==
          doctest::Approx(2.0 * one.zeta_b2(Complex(1.7)).real()).epsilon(1e-14));
    CHECK(two.zeta_b2_at_minus_half() == doctest::Approx(2.0 * one.zeta_b2_at_minus_half()));
}

TEST_CASE("Mellin route agrees with the Hurwitz route on arithmetic families") {
    for (const char* name : {"integer", "half-integer"}) {
        auto s = TangentialSpectrum::preset(name);
        for (double sv : {2.0, 3.0, 1.5}) {
            Complex hurwitz_route = s.zeta_b2(Complex(sv));
            Complex mellin_route = s.zeta_b2_mellin(Complex(sv));
            CHECK(std::abs(hurwitz_route - mellin_route) < 1e-9 * std::abs(hurwitz_route));
        }
    }
}

TEST_CASE("Mellin route on explicit lists agrees with the exact finite sum") {
    auto s = TangentialSpectrum::explicit_list({{0.8, 1}, {1.6, 2}, {2.9, 1}});
    for (double sv : {2.0, 1.2, 0.2, -0.3}) {
        Complex exact = s.zeta_b2(Complex(sv));
        Complex mellin = s.zeta_b2_mellin(Complex(sv));
        CHECK(std::abs(exact - mellin) < 1e-7 * (1.0 + std::abs(exact)));
    }
}

TEST_CASE("Mellin route reproduces the continued value at 0 and the strip edge") {
    auto s = TangentialSpectrum::preset("integer");
    CHECK(std::fabs(s.zeta_b2_mellin(Complex(0.0)).real() - (-1.0)) < 1e-7);
    // inside the continued strip, against the Hurwitz route
    Complex left = s.zeta_b2_mellin(Complex(-0.4));
    CHECK(std::abs(left - s.zeta_b2(Complex(-0.4))) < 1e-6 * (1.0 + std::abs(left)));
    CHECK_THROWS_AS(s.zeta_b2_mellin(Complex(-1.5)), ContinuationUnavailable);
    CHECK_THROWS_AS(s.zeta_b2(Complex(0.5)), PoleError);
}

TEST_CASE("zeta_B2 is real on the real axis and additive over disjoint unions") {
    auto a = TangentialSpectrum::explicit_list({{0.9, 1}, {2.1, 1}});
    auto b = TangentialSpectrum::explicit_list({{1.4, 2}, {3.3, 1}});
    auto u = TangentialSpectrum::explicit_list({{0.9, 1}, {2.1, 1}, {1.4, 2}, {3.3, 1}});
    for (double sv : {0.8, 1.2, 2.0, 3.0, 4.5}) {
        Complex za = a.zeta_b2(Complex(sv)), zb = b.zeta_b2(Complex(sv));
        Complex zu = u.zeta_b2(Complex(sv));
        CHECK(std::fabs(zu.imag()) < 1e-13);
        CHECK(std::abs(zu - za - zb) < 1e-13 * std::abs(zu));
    }
    auto integer = TangentialSpectrum::preset("integer");
    CHECK(std::fabs(integer.zeta_b2(Complex(3.0)).imag()) < 1e-13);
}

TEST_CASE("zeta_B2 derivative at 0 against a numeric derivative") {
    auto s = TangentialSpectrum::preset("integer");
    // 2 zeta_R(2s): derivative 4 zeta_R'(0) = -2 log(2 pi)
    CHECK(s.zeta_b2_deriv_at_0() ==
          doctest::Approx(-2.0 * std::log(2.0 * 3.14159265358979323846)).epsilon(1e-11));
    auto h = TangentialSpectrum::preset("half-integer");
    double fd = (h.zeta_b2(Complex(1e-5)).real() - h.zeta_b2(Complex(-1e-5)).real()) / 2e-5;
    CHECK(h.zeta_b2_deriv_at_0() == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("erfc spectrum sums: accelerated branch vs direct") {
    auto s = TangentialSpectrum::preset("half-integer");
    for (double y : {0.05, 0.2}) {
        double direct = 0.0;
        for (int n = 4000; n >= 1; --n) {
            double lam = double(n) - 0.5;
            direct += std::erfc(lam * y);
        }
        CHECK(std::fabs(s.erfc_sum(y) - direct) < 1e-11 * (direct + 1.0));
    }
}
