#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "moebius/certificate.hpp"

using namespace moebius;

namespace {

Certificate glued_pants(PantsFamily f, double x, const StructureClass& target) {
    Certificate c;
    c.target = target;
    c.steps.push_back(CertStep::pants(f, x));
    c.steps.push_back(CertStep::self_glue(0, 1));
    return c;
}

}  // namespace

TEST_CASE("a bare disk bounds the full turn") {
    Certificate c;
    c.target = StructureClass::E(2 * kPi);
    c.steps.push_back(CertStep::disk());
    VerifyTrace t = verify(c);
    INFO(t.error);
    REQUIRE(t.ok);
    REQUIRE(t.entries.size() == 1);
    REQUIRE(t.entries[0].chi == 1);
}

TEST_CASE("the parabolic base certificate replays as stated") {
    Certificate c = generate(StructureClass::P(0, 1));
    REQUIRE(c.steps.size() == 2);
    REQUIRE(c.steps[0].op == CertStep::Op::Pants);
    REQUIRE(c.steps[0].family == PantsFamily::Fig4);
    REQUIRE(c.steps[0].x == 4.0);
    REQUIRE(c.steps[1].op == CertStep::Op::SelfGlue);

    VerifyTrace t = verify(c);
    INFO(t.error);
    REQUIRE(t.ok);
    REQUIRE(t.entries[0].boundary.size() == 3);
    for (const auto& b : t.entries[0].boundary)
        REQUIRE(b.approx_equal(StructureClass::P(0, 1)));
    REQUIRE(t.entries[0].chi == -1);
    REQUIRE(t.entries[1].boundary.size() == 1);
    REQUIRE(t.entries[1].chi == -1);
}

TEST_CASE("scaling the glued base keeps its class and multiplies the characteristic") {
    Certificate c = glued_pants(PantsFamily::Fig4, 4.0, StructureClass::P(0, 1));
    c.steps.push_back(CertStep::scale(3));
    VerifyTrace t = verify(c);
    INFO(t.error);
    REQUIRE(t.ok);
    REQUIRE(t.entries.back().chi == -3);
    REQUIRE(t.entries.back().boundary[0].approx_equal(StructureClass::P(0, 1)));
}

TEST_CASE("generator certificates verify for the whole target list") {
    std::vector<StructureClass> targets = {
        StructureClass::E(1.0),    StructureClass::E(2 * kPi), StructureClass::E(7.5),
        StructureClass::H(0, 0.3), StructureClass::H(0, 4.0),  StructureClass::H(1, 1.0),
        StructureClass::H(2, 5.0), StructureClass::P(0, 1),    StructureClass::P(1, 1),
        StructureClass::P(1, -1),  StructureClass::P(3, -1),   StructureClass::P(2, 1)};
    for (const auto& target : targets) {
        INFO(target.str());
        Certificate c = generate(target);
        VerifyTrace t = verify(c);
        INFO(t.error);
        REQUIRE(t.ok);
        REQUIRE(t.entries.back().boundary.size() == 1);
        REQUIRE(t.entries.back().boundary[0].approx_equal(target));
    }
}

TEST_CASE("the scaled elliptic target uses the stated cover degree") {
    Certificate c = generate(StructureClass::E(7.5));
    REQUIRE(c.steps.back().op == CertStep::Op::Scale);
    REQUIRE(c.steps.back().k == 15);
    REQUIRE(c.steps[0].op == CertStep::Op::Pants);
    // base angle 0.5 puts the pants parameter at 2 + 2 cos(1/4)
    REQUIRE(std::abs(c.steps[0].x - (2 + 2 * std::cos(0.25))) < 1e-7);
}

TEST_CASE("the wound hyperbolic target lands on the closed-form parameter") {
    Certificate c = generate(StructureClass::H(1, 2 * std::acosh(2.0)));
    REQUIRE(c.steps[0].op == CertStep::Op::Pants);
    REQUIRE(c.steps[0].family == PantsFamily::Fig6);
    REQUIRE(std::abs(c.steps[0].x - 6.0) < 1e-12);
}

TEST_CASE("self-glue refuses unequal classes") {
    Certificate c = glued_pants(PantsFamily::Fig6, 6.0, StructureClass::H(1, 1.0));
    VerifyTrace t = verify(c);
    REQUIRE(!t.ok);
    REQUIRE(t.error.find("unequal") != std::string::npos);
    REQUIRE(t.entries.size() == 1);
}

TEST_CASE("scale preconditions are enforced") {
    Certificate many = glued_pants(PantsFamily::Fig4, 4.0, StructureClass::P(0, 1));
    many.steps.pop_back();
    many.steps.push_back(CertStep::scale(2));
    REQUIRE(!verify(many).ok);

    Certificate disk;
    disk.target = StructureClass::E(4 * kPi);
    disk.steps.push_back(CertStep::disk());
    disk.steps.push_back(CertStep::scale(2));
    VerifyTrace t = verify(disk);
    REQUIRE(!t.ok);
    REQUIRE(t.error.find("euler") != std::string::npos);

    Certificate zero = glued_pants(PantsFamily::Fig4, 4.0, StructureClass::P(0, 1));
    zero.steps.push_back(CertStep::scale(0));
    REQUIRE(!verify(zero).ok);
}

TEST_CASE("large even cover degrees are admitted") {
    Certificate c = glued_pants(PantsFamily::Fig4, 4.0, StructureClass::P(0, 1));
    c.steps.push_back(CertStep::scale(4));
    VerifyTrace t = verify(c);
    INFO(t.error);
    REQUIRE(t.ok);
    REQUIRE(t.entries.back().chi == -4);
}

TEST_CASE("attach rejects wrong or broken sub-certificates") {
    Certificate sub;
    sub.target = StructureClass::E(2 * kPi);
    sub.steps.push_back(CertStep::disk());

    Certificate c;
    c.target = StructureClass::P(0, 1);
    c.steps.push_back(CertStep::pants(PantsFamily::Fig4, 4.0));
    c.steps.push_back(CertStep::attach(0, sub));
    VerifyTrace t = verify(c);
    REQUIRE(!t.ok);
    REQUIRE(t.error.find("bounds") != std::string::npos);

    Certificate broken;
    broken.target = StructureClass::P(0, 1);
    Certificate c2;
    c2.target = StructureClass::P(0, 1);
    c2.steps.push_back(CertStep::pants(PantsFamily::Fig4, 4.0));
    c2.steps.push_back(CertStep::attach(0, broken));
    REQUIRE(!verify(c2).ok);
}

TEST_CASE("pants steps recompute their boundaries and refuse bad parameters") {
    Certificate wall = glued_pants(PantsFamily::Fig4, 4.0 + 1e-11, StructureClass::P(0, 1));
    VerifyTrace t = verify(wall);
    REQUIRE(!t.ok);
    REQUIRE(t.error.find("wall") != std::string::npos);

    Certificate degen = glued_pants(PantsFamily::Fig6, 2.0, StructureClass::P(1, 1));
    REQUIRE(!verify(degen).ok);

    Certificate empty;
    empty.target = StructureClass::P(0, 1);
    REQUIRE(!verify(empty).ok);

    Certificate wrong = glued_pants(PantsFamily::Fig4, 4.0, StructureClass::P(1, 1));
    VerifyTrace t2 = verify(wrong);
    REQUIRE(!t2.ok);
    REQUIRE(t2.error.find("target") != std::string::npos);
}

TEST_CASE("index bookkeeping survives removals in either order") {
    StructureClass third = s_class(PantsFamily::Fig4, 5.0);
    Certificate c;
    c.target = third;
    c.steps.push_back(CertStep::pants(PantsFamily::Fig4, 5.0));
    c.steps.push_back(CertStep::self_glue(1, 0));
    VerifyTrace t = verify(c);
    INFO(t.error);
    REQUIRE(t.ok);
    REQUIRE(t.entries.back().boundary[0].approx_equal(third));
}
