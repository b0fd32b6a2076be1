#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "moebius/classify.hpp"
#include "moebius/representatives.hpp"
#include "support.hpp"

using namespace moebius;
using testsupport::grid_classes;

TEST_CASE("classification inverts the representative construction") {
    for (const auto& c : grid_classes()) {
        INFO(c.str());
        StructureClass got = classify(representative(c));
        INFO("got " << got.str());
        REQUIRE(got.approx_equal(c, 1e-6));
    }
}

TEST_CASE("the weaker invariant pair still separates the grid") {
    auto grid = grid_classes();
    std::vector<ProjectiveInvariant> inv;
    for (const auto& c : grid) inv.push_back(classify_projective(representative(c)));
    for (size_t i = 0; i < grid.size(); ++i)
        for (size_t j = i + 1; j < grid.size(); ++j) {
            INFO(grid[i].str() << " vs " << grid[j].str() << ": " << inv[i].str() << " / "
                               << inv[j].str());
            REQUIRE(!inv[i].approx_equal(inv[j]));
        }
}

TEST_CASE("parabolic sign twins differ exactly in the two-period window count") {
    for (int n : {1, 2, 3}) {
        auto plus = classify_projective(representative(StructureClass::P(n, 1)));
        auto minus = classify_projective(representative(StructureClass::P(n, -1)));
        REQUIRE(plus.kind == ProjectiveInvariant::Kind::Parabolic);
        REQUIRE(minus.kind == ProjectiveInvariant::Kind::Parabolic);
        REQUIRE(plus.window2 == 2 * n + 1);
        REQUIRE(minus.window2 == 2 * n);
    }
}

TEST_CASE("pullbacks classify as the multiplied class") {
    std::vector<StructureClass> picks = {
        StructureClass::E(1.0),       StructureClass::E(2 * kPi), StructureClass::H(0, 0.3),
        StructureClass::H(1, 1.0),    StructureClass::P(0, 1),    StructureClass::P(1, -1),
        StructureClass::P(1, 1),
    };
    for (int k : {2, 3}) {
        for (const auto& c : picks) {
            INFO("k=" << k << " " << c.str());
            auto pulled = pullback(representative(c), k);
            StructureClass got = classify(pulled);
            REQUIRE(got.approx_equal(multiply_class(k, c), 1e-6));
        }
    }
}

TEST_CASE("sampled structures classify like their sources") {
    std::vector<StructureClass> picks = {
        StructureClass::E(1.0),    StructureClass::E(2 * kPi), StructureClass::H(0, 4.0),
        StructureClass::H(1, 1.0), StructureClass::P(1, -1),   StructureClass::P(2, 1),
    };
    for (const auto& c : picks) {
        INFO(c.str());
        StructureLift L(representative(c));
        const int S = 4096;
        std::vector<double> th(S + 1);
        for (int i = 0; i <= S; ++i) th[i] = L.theta_ext(2.0 * i / S);
        auto rebuilt = structure_from_samples(th);
        ClassifyOptions opt;
        opt.snap_tol = 1e-3;
        StructureClass got = classify(rebuilt, opt);
        REQUIRE(got.approx_equal(c, 1e-6));
    }
}

TEST_CASE("degenerate sample sets are rejected") {
    std::vector<double> too_few{0.0, 0.5, 1.0};
    REQUIRE_THROWS_AS(structure_from_samples(too_few), ParseError);

    std::vector<double> not_monotone(65);
    for (int i = 0; i < 65; ++i) not_monotone[i] = (i == 40) ? 0.0 : i * 0.1;
    REQUIRE_THROWS_AS(structure_from_samples(not_monotone), ParseError);

    // Strictly increasing but following no single holonomy.
    std::vector<double> crooked(65);
    for (int i = 0; i < 65; ++i) {
        double t = 2.0 * i / 64;
        crooked[i] = t + 0.2 * std::sin(2.1 * t) + 0.07 * t * t;
    }
    REQUIRE_THROWS_AS(structure_from_samples(crooked), ParseError);
}

TEST_CASE("identity holonomy demands whole turns") {
    DevelopedStructure s{[](double t) { return kPi * 1.5 * t; }, MoebiusMap::identity()};
    REQUIRE_THROWS_AS(StructureLift(s), InternalInconsistency);
}
