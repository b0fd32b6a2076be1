#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "moebius/lift.hpp"
#include "moebius/structure.hpp"

using namespace moebius;

namespace {

MoebiusMap random_real_map(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (;;) {
        double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        if (a * d - b * c > 0.1) return {a, b, c, d};
    }
}

// Direct preimage count over half-open windows, no rise analysis: for a
// grid of window positions and angle classes, count lattice hits.
int brute_window_count(const StructureLift& L, double w) {
    int best = 0;
    for (int i = 0; i <= 200; ++i) {
        double x = -1.0 + 2.0 * i / 200.0;
        double a = L.theta_ext(x), b = L.theta_ext(x + w);
        for (int j = 0; j < 97; ++j) {
            double tau = kPi * j / 97.0;
            int cnt = static_cast<int>(std::floor((b - tau) / kPi)) -
                      static_cast<int>(std::floor((a - tau) / kPi));
            best = std::max(best, cnt);
        }
    }
    return best;
}

}  // namespace

TEST_CASE("rotations lift to exact shifts") {
    for (double t : {0.3, 2.0, 4.0, -1.2}) {
        auto l = RealLift::from(MoebiusMap::rotation(t));
        for (int i = 0; i < 40; ++i) {
            double th = -3.0 + 6.0 * i / 40.0;
            REQUIRE(std::abs(principal_mod_pi(l(th) - th - t)) < 1e-12);
        }
    }
}

TEST_CASE("lifts project to the circle action") {
    std::mt19937 rng(2024);
    for (int k = 0; k < 40; ++k) {
        auto m = random_real_map(rng);
        auto l = RealLift::from(m);
        for (int i = 0; i < 25; ++i) {
            double th = -2.9 + 5.8 * i / 25.0;
            ExtC expect = m(point_of_angle(th));
            ExtC got = point_of_angle(l(th));
            REQUIRE(chordal(expect, got) < 1e-7);
        }
    }
}

TEST_CASE("lifts are equivariant and monotone") {
    std::mt19937 rng(99);
    for (int k = 0; k < 20; ++k) {
        auto l = RealLift::from(random_real_map(rng));
        double prev = l(-3.0);
        for (int i = 1; i <= 300; ++i) {
            double th = -3.0 + 6.0 * i / 300.0;
            double val = l(th);
            REQUIRE(val > prev);
            prev = val;
            REQUIRE(std::abs(l(th + kPi) - val - kPi) < 1e-9);
        }
    }
}

TEST_CASE("extreme dilations stay accurate") {
    auto l = RealLift::from(MoebiusMap::scaling(std::exp(10.5)));
    REQUIRE(std::abs(l(0.0)) < 1e-12);
    double prev = l(-1.5707);
    for (int i = 1; i <= 1000; ++i) {
        double th = -1.5707 + 3.1414 * i / 1000.0;
        double val = l(th);
        REQUIRE(val >= prev);
        prev = val;
    }
    // The image of pi/4 sits within e^{-21} of pi/2.
    REQUIRE(l(kPi / 4) < kPi / 2);
    REQUIRE(l(kPi / 4) > kPi / 2 - 1e-8);
}

TEST_CASE("linear full-turn structure") {
    DevelopedStructure s{[](double t) { return kPi * t; }, MoebiusMap::identity()};
    StructureLift L(s);
    REQUIRE(std::abs(L.theta_ext(2.5) - 2.5 * kPi) < 1e-9);
    REQUIRE(std::abs(L.theta_ext(-1.75) + 1.75 * kPi) < 1e-9);
    REQUIRE(std::abs(L.rise(-1.3, 1.0) - kPi) < 1e-9);
    REQUIRE(L.window_count(1.0) == 1);
    REQUIRE(L.window_count(2.0) == 2);
    REQUIRE(brute_window_count(L, 1.0) == 1);
    REQUIRE(L.displacement_floor() == 1);
}

TEST_CASE("hyperbolic exponential structure") {
    double alpha = 2.0;
    DevelopedStructure s{[alpha](double t) { return std::atan(std::exp(alpha * t)); },
                         MoebiusMap::scaling(std::exp(alpha / 2))};
    StructureLift L(s);
    // theta(1) must be the lifted image of theta(0).
    REQUIRE(std::abs(L.theta_ext(1.0) - std::atan(std::exp(alpha))) < 1e-12);
    REQUIRE(L.window_count(1.0) == 1);
    REQUIRE(L.window_count(2.0) == 1);
    REQUIRE(brute_window_count(L, 1.0) == 1);
    REQUIRE(brute_window_count(L, 2.0) == 1);
    // Rise over a unit window is the displacement, below pi/2 for any
    // hyperbolic extension.
    REQUIRE(L.max_rise(1.0) < kPi / 2);
    REQUIRE(L.max_rise(1.0) > 0);
}

TEST_CASE("inconsistent developing data is rejected") {
    DevelopedStructure s{[](double t) { return t; }, MoebiusMap::identity()};
    REQUIRE_THROWS_AS(StructureLift(s), InternalInconsistency);
}

TEST_CASE("angle helpers invert each other") {
    for (int i = 0; i < 50; ++i) {
        double th = -1.5 + 3.0 * i / 50.0;
        REQUIRE(std::abs(principal_mod_pi(angle_of(point_of_angle(th)) - th)) < 1e-9);
    }
    REQUIRE(is_inf(point_of_angle(kPi / 2)));
    REQUIRE(std::abs(angle_of(ExtC::infinity()) - kPi / 2) < 1e-15);
}
