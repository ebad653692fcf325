#include <doctest.h>

#include <cmath>
#include <sstream>

#include "mcmullen/features.hpp"

using namespace mcm;

TEST_CASE("baby centres") {
    for (int n : {3, 5, 11}) CHECK(baby_center(n, 1.0, CenterSide::Plus) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(std::abs(baby_center(11, std::pow(0.25, 1.1), CenterSide::Plus)) < 1e-12);
    CHECK(std::abs(baby_center(11, 0.2176, CenterSide::Plus)) < 2e-4);
    CHECK_THROWS_AS(baby_center(5, 0.0, CenterSide::Plus), std::invalid_argument);
    CHECK_THROWS_AS(baby_center(5, -1.0, CenterSide::Plus), std::invalid_argument);

    for (int n : {5, 11})
        for (double a : {0.1, overlap_parameter(11), 0.5, 1.0, 4.0}) {
            const CenterPair cp = baby_centers(n, a);
            CHECK(cp.c_minus == -cp.c_plus);
            const double p = std::pow(a, 1.0 / (2 * n));
            CHECK(std::abs(eval_map(MapParams(n, a, cp.c_plus), p) - p) <= 1e-12);
            // Odd n: -p is fixed at c-.
            CHECK(std::abs(eval_map(MapParams(n, a, cp.c_minus), -p) + p) <= 1e-12);
            CHECK(baby_center(n, a, CenterSide::Minus) == cp.c_minus);
        }
}

TEST_CASE("overlap parameter") {
    CHECK(overlap_parameter(11) == doctest::Approx(0.217638).epsilon(1e-6));
    CHECK(overlap_parameter(3) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(overlap_parameter(100000) == doctest::Approx(0.25).epsilon(1e-4));
    for (int n : {2, 3, 7, 11, 40}) CHECK(std::abs(baby_center(n, overlap_parameter(n), CenterSide::Plus)) < 1e-12);
    CHECK_THROWS_AS(overlap_parameter(1), std::invalid_argument);
}

TEST_CASE("interval positions") {
    const IntervalPair low = interval_positions(11, 0.1);
    CHECK(low.omega1 == doctest::Approx(0.0164491).epsilon(1e-5));
    CHECK(low.ordering == IntervalOrdering::I2LeftOfI1);

    const IntervalPair one = interval_positions(11, 1.0);
    CHECK(one.omega2 == doctest::Approx(-0.75));
    CHECK(one.ordering == IntervalOrdering::I1LeftOfI2);

    const IntervalPair mid = interval_positions(11, overlap_parameter(11));
    CHECK(mid.ordering == IntervalOrdering::Overlapping);
    CHECK(mid.i1.contains(0.0));
    CHECK(mid.i2.contains(0.0));

    for (double a : {0.1, 0.3, 0.9}) {
        const IntervalPair ip = interval_positions(11, a);
        CHECK(ip.i2.lo == -ip.i1.hi);
        CHECK(ip.i2.hi == -ip.i1.lo);
    }

    // Monotone sweep: one overlap onset and one offset.
    double prev1 = INFINITY, prev2 = INFINITY;
    int transitions = 0;
    IntervalOrdering last = IntervalOrdering::I2LeftOfI1;
    for (int i = 0; i <= 900; ++i) {
        const double a = 0.1 + 0.001 * i;
        const IntervalPair ip = interval_positions(11, a);
        CHECK(ip.omega1 < prev1);
        CHECK(ip.omega2 < prev2);
        prev1 = ip.omega1;
        prev2 = ip.omega2;
        if (ip.ordering != last) ++transitions;
        CHECK(static_cast<int>(ip.ordering) >= static_cast<int>(last));
        last = ip.ordering;
    }
    CHECK(transitions == 2);
    CHECK(last == IntervalOrdering::I1LeftOfI2);

    CHECK_THROWS_AS(interval_positions(3, std::pow(25.0 / 16.0, 3)), std::invalid_argument);
    CHECK_THROWS_AS(interval_positions(3, 0.0), std::invalid_argument);
}

TEST_CASE("boundedness scans") {
    const IterationSettings s{kCertifyMaxIter, std::nullopt};
    SUBCASE("c-plane window contains its centre") {
        const ScanResult r = scan_boundedness_locus(make_cplane_window(5, 1.0, 0), 64, s, 2);
        CHECK(r.nonempty);
        REQUIRE(r.center.has_value());
        CHECK(std::abs(*r.center - Complex(-1.0, 0.0)) < 1e-15);
        CHECK(r.contains_center);
        CHECK(r.components >= 1);
        const ScanResult again = scan_boundedness_locus(make_cplane_window(5, 1.0, 0), 64, s, 1);
        CHECK(again.to_csv() == r.to_csv());
    }
    SUBCASE("a-plane window") {
        const ScanResult r = scan_boundedness_locus(make_aplane_window(4, -0.5), 64, s);
        CHECK(r.nonempty);
        CHECK_FALSE(r.center.has_value());
    }
    SUBCASE("pure escape window") {
        const SectorAnnulus far{10.0, 12.0, -0.3, 0.3};
        const ScanResult r =
            scan_boundedness_locus(make_custom_cplane_window(5, 1.0, far, 0, Regime::Standard), 32, s);
        CHECK_FALSE(r.nonempty);
        CHECK(r.components == 0);
    }
    SUBCASE("csv layout") {
        const ScanResult r = scan_boundedness_locus(make_cplane_window(5, 1.0, 0), 16, s);
        std::istringstream in(r.to_csv());
        std::string line;
        std::getline(in, line);
        CHECK(line == "re,im,member_window,bounded_global,bounded_in_uprime");
        int rows = 0, members = 0;
        while (std::getline(in, line)) {
            ++rows;
            members += line.find(",1,", line.find(',', line.find(',') + 1)) != std::string::npos;
        }
        CHECK(rows == 16 * 16);
        CHECK(members > 0);
        // Stays-in-U' implies global boundedness on the sampled locus.
        for (const ScanSample& smp : r.samples)
            if (smp.bounded_in_uprime) CHECK(smp.bounded_global);
    }
    CHECK_THROWS_AS(scan_boundedness_locus(make_cplane_window(5, 1.0, 0), 8, s), std::invalid_argument);
}

TEST_CASE("odd-n critical-orbit mirror at the classification level") {
    const EscapeSettings es{2.0, 512};
    for (double re = -1.5; re <= 1.5; re += 0.25)
        for (double im = -1.0; im <= 1.0; im += 0.25) {
            const Complex c(re, im);
            const MapParams p(5, 0.8, c);
            const MapParams q(5, 0.8, -c);
            const OrbitOutcome minus_here = iterate_orbit(p, critical_values(p).minus, es);
            const OrbitOutcome plus_there = iterate_orbit(q, critical_values(q).plus, es);
            CHECK(minus_here.status == plus_there.status);
        }
}
