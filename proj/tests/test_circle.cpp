#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "moebius/circle.hpp"

using namespace moebius;

TEST_CASE("three points determine a circle") {
    auto g = GeneralizedCircle::through(ExtC{1.0}, ExtC{cplx{0, 1}}, ExtC{-1.0});
    REQUIRE(!g.is_line);
    REQUIRE(std::abs(g.center) < 1e-12);
    REQUIRE(std::abs(g.radius - 1.0) < 1e-12);
}

TEST_CASE("a point at infinity or collinearity gives a line") {
    auto g = GeneralizedCircle::through(ExtC{0.0}, ExtC{1.0}, ExtC::infinity());
    REQUIRE(g.is_line);
    REQUIRE(std::abs(g.point) < 1e-12);
    REQUIRE(std::abs(g.dir - cplx{1.0}) < 1e-12);

    auto h = GeneralizedCircle::through(ExtC{0.0}, ExtC{1.0}, ExtC{2.0});
    REQUIRE(h.is_line);
    REQUIRE(h.approx_equal(GeneralizedCircle::real_line()));
}

TEST_CASE("line storage is canonical") {
    auto g = GeneralizedCircle::line(cplx{5, 3}, -2.0);
    REQUIRE(std::abs(g.dir - cplx{1.0}) < 1e-12);
    REQUIRE(std::abs(g.point - cplx{0, 3}) < 1e-12);

    auto v = GeneralizedCircle::line(cplx{1, 1}, cplx{0, -3});
    REQUIRE(std::abs(v.dir - cplx{0, 1}) < 1e-12);
    REQUIRE(std::abs(v.point - cplx{1, 0}) < 1e-12);
}

TEST_CASE("membership and sides") {
    auto unit = GeneralizedCircle::circle(0.0, 1.0);
    REQUIRE(unit.contains(ExtC{cplx{std::cos(0.9), std::sin(0.9)}}));
    REQUIRE(!unit.contains(ExtC{cplx{0.5, 0}}));
    REQUIRE(!unit.contains(ExtC::infinity()));
    REQUIRE(unit.side_contains(ExtC{0.0}));
    REQUIRE(!unit.side_contains(ExtC{2.0}));

    auto rl = GeneralizedCircle::real_line();
    REQUIRE(rl.contains(ExtC{7.0}));
    REQUIRE(rl.contains(ExtC::infinity()));
    REQUIRE(!rl.contains(ExtC{cplx{0, 1}}));
    REQUIRE(rl.side_contains(ExtC{cplx{0, 1}}));
    REQUIRE(!rl.side_contains(ExtC{cplx{0, -1}}));
}

TEST_CASE("the standard parabolic swaps the two unit circles tangent at 0") {
    auto b = MoebiusMap::standard_parabolic();
    auto c1 = GeneralizedCircle::circle(1.0, 1.0);
    auto c2 = GeneralizedCircle::circle(-1.0, 1.0);
    REQUIRE(map_circle(b, c1).approx_equal(c2, 1e-9));
    REQUIRE(map_circle(b.inverse(), c2).approx_equal(c1, 1e-9));
    REQUIRE(map_circle(b, GeneralizedCircle::real_line())
                .approx_equal(GeneralizedCircle::real_line(), 1e-9));
}

TEST_CASE("mapped sample points land on the mapped circle") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    auto src = GeneralizedCircle::circle(cplx{0.3, -0.2}, 1.4);
    for (int trial = 0; trial < 20; ++trial) {
        cplx a{u(rng), u(rng)}, bb{u(rng), u(rng)}, c{u(rng), u(rng)}, d{u(rng), u(rng)};
        if (std::abs(a * d - bb * c) < 0.1) continue;
        MoebiusMap m{a, bb, c, d};
        auto img = map_circle(m, src);
        for (int i = 0; i < 40; ++i) {
            auto w = m(src.point_at_angle(0.157 * i));
            REQUIRE(img.contains(w, 1e-6));
        }
    }
}

TEST_CASE("orthogonality residuals") {
    auto unit = GeneralizedCircle::circle(0.0, 1.0);
    auto other = GeneralizedCircle::circle(2.0, std::sqrt(3.0));
    REQUIRE(orthogonality_residual(unit, other) < 1e-12);
    REQUIRE(circles_orthogonal(unit, other));
    REQUIRE(!circles_orthogonal(unit, GeneralizedCircle::circle(2.0, 1.0)));

    auto rl = GeneralizedCircle::real_line();
    REQUIRE(circles_orthogonal(rl, GeneralizedCircle::circle(3.0, 0.5)));
    REQUIRE(!circles_orthogonal(rl, GeneralizedCircle::circle(cplx{3, 0.2}, 0.5)));
    REQUIRE(circles_orthogonal(rl, GeneralizedCircle::line(2.0, cplx{0, 1})));
}

TEST_CASE("rotation angle about the disk center") {
    for (double alpha : {0.3, 2.0, 4.0, 5.9}) {
        cplx h{std::cos(alpha / 2), std::sin(alpha / 2)};
        MoebiusMap m{h, 0, 0, std::conj(h)};  // z -> e^{i alpha} z
        double got = rotation_angle(m, GeneralizedCircle::circle(0.0, 1.0));
        REQUIRE(std::abs(got - alpha) < 1e-9);
    }
}

TEST_CASE("rotation angle in the half-plane model doubles the matrix angle") {
    for (double t : {0.2, 0.4, 1.0, 1.5}) {
        double got = rotation_angle(MoebiusMap::rotation(t), GeneralizedCircle::real_line());
        REQUIRE(std::abs(got - 2 * t) < 1e-9);
    }
}

TEST_CASE("parabolic sign on the real line") {
    auto rl = GeneralizedCircle::real_line();
    REQUIRE(parabolic_sign(MoebiusMap::translation(1.0), rl) == 1);
    REQUIRE(parabolic_sign(MoebiusMap::translation(-2.0), rl) == -1);
    REQUIRE(parabolic_sign(MoebiusMap::standard_parabolic(), rl) == 1);
    REQUIRE(parabolic_sign(MoebiusMap::standard_parabolic().inverse(), rl) == -1);
}

TEST_CASE("parabolic sign on a circle follows the push direction") {
    // Holonomy of the x = 4 pants boundary, fixed point 2 on this circle.
    auto m = MoebiusMap::translation(4.0).compose(MoebiusMap::standard_parabolic());
    auto g = GeneralizedCircle::circle(cplx{2, 1}, 1.0);
    REQUIRE(g.contains(ExtC{2.0}));
    REQUIRE(parabolic_sign(m, g) == 1);
    REQUIRE(parabolic_sign(m.inverse(), g) == -1);

    // Independent check: the map pushes the top of the circle clockwise.
    cplx top{2, 2};
    ExtC img = m(ExtC{top});
    REQUIRE(!is_inf(img));
    double before = std::arg(top - g.center);
    double after = std::arg(img.z - g.center);
    double delta = after - before;
    while (delta > kPi) delta -= 2 * kPi;
    while (delta < -kPi) delta += 2 * kPi;
    REQUIRE(delta < 0);  // decreasing angle = clockwise
}
