#pragma once

#include <cmath>
#include <memory>
#include <sstream>
#include <vector>

#include "classify.hpp"
#include "octagon.hpp"
#include "structure.hpp"

namespace moebius {

// The three boundary structures of a pants construction, each already
// transported to the real model, with their classes.
struct BoundaryTriple {
    DevelopedStructure arcX2X3, arcX6X7, third;
    StructureClass arcX2X3_class, arcX6X7_class, third_class;
};

namespace detail {

// Classify options for structures coming out of sampled developing paths:
// looser alignment snapping than the closed-form representatives need.
inline ClassifyOptions pants_classify_options() {
    ClassifyOptions opt;
    opt.snap_tol = 1e-3;
    return opt;
}

}  // namespace detail

// Develop the third boundary. The path runs on the identified circle pair:
// first the arc side from X5 back to X4, then the a-image of the last side
// continued from X4 = a(X1) to a(X8); both pieces go clockwise and the
// holonomy is a o b. Translating the last side to the first circle keeps
// angles about the center, so the whole path lives on one circle.
inline DevelopedStructure third_boundary(const PantsStructure& p) {
    const OctagonSide& s4 = p.octagon.side[3];
    const OctagonSide& s8 = p.octagon.side[7];
    if (s4.parent.is_line || s8.parent.is_line)
        throw InternalInconsistency("identified sides must be proper circles");
    if (!(s4.sweep > 0) || !(s8.sweep > 0))
        throw InternalInconsistency("identified sides lost their orientation");
    const cplx center = s4.parent.center;
    const double radius = s4.parent.radius;

    const double start = s4.phi_start + s4.sweep;  // X5's angle
    const double knee = s4.phi_start;              // X4's angle
    // The reversed image piece starts at the angle X1 holds about the other
    // center; align it with the knee modulo full turns.
    double chi0 = s8.phi_start + s8.sweep;
    chi0 += 2 * kPi * std::round((knee - chi0) / (2 * kPi));
    if (std::abs(chi0 - knee) > 1e-9)
        throw InternalInconsistency("developing pieces do not meet at a(X1) = X4");

    auto at = [&](double t) -> cplx {
        double phi = t <= 0.5 ? start - 2 * t * s4.sweep
                              : chi0 - (2 * t - 1) * s8.sweep;
        return center + radius * cplx{std::cos(phi), std::sin(phi)};
    };

    MoebiusMap g = p.a.compose(p.b);
    MoebiusMap T = triple_to_standard(ExtC{at(0)}, ExtC{at(1.0 / 7)}, ExtC{at(2.0 / 7)});

    const int N = 4097;
    auto samples = std::make_shared<std::vector<double>>();
    samples->reserve(N);
    double prev = 0;
    for (int j = 0; j < N; ++j) {
        ExtC w = T(ExtC{at(double(j) / (N - 1))});
        double raw;
        if (is_inf(w)) {
            raw = kPi / 2;
        } else {
            if (std::abs(w.z.imag()) > 1e-6 * std::max(1.0, std::abs(w.z.real())))
                throw InternalInconsistency("transported path strayed off the real model");
            raw = std::atan(w.z.real());
        }
        if (j == 0) {
            prev = raw;
        } else {
            double step = principal_mod_pi(raw - prev);
            if (!(step > 0) || step > 0.7) {
                std::ostringstream os;
                os << "developing angle step " << step << " at sample " << j
                   << " is not a small forward move";
                throw InternalInconsistency(os.str());
            }
            prev += step;
        }
        samples->push_back(prev);
    }

    MoebiusMap h = T.compose(g).compose(T.inverse()).real_normalized(1e-6);
    if (p.x == 4.0) {
        // Exactly on the parabolic wall the trace is +-2 symbolically; pin
        // the conjugated matrix there so the branch cannot wobble.
        double tr = h.a.real() + h.d.real();
        double target = tr > 0 ? 2.0 : -2.0;
        if (std::abs(tr - target) < 1e-10 && tr != target)
            h = MoebiusMap{h.a, h.b, h.c, cplx{target} - h.a};
    }

    DevelopedStructure s;
    s.holonomy = h;
    s.theta = [samples](double t) {
        double u = t * double(samples->size() - 1);
        if (u <= 0) return samples->front();
        if (u >= double(samples->size() - 1)) return samples->back();
        size_t k = size_t(u);
        double f = u - double(k);
        return (*samples)[k] * (1 - f) + (*samples)[k + 1] * f;
    };
    return s;
}

// All three boundaries. The strip boundary develops as atan along the
// translated line; the closing boundary reduces to a unit translation
// (small-circle case) or to the opposite parabolic (real-axis case).
inline BoundaryTriple boundary_structures(const PantsStructure& p) {
    ConditionReport rep = check_conditions(p, 1e-8);
    if (!rep.all()) {
        std::ostringstream os;
        os << "side identifications fail (residuals " << rep.r1 << ", " << rep.r2
           << ", " << rep.r3 << ")";
        throw InternalInconsistency(os.str());
    }

    BoundaryTriple bt;
    const double x = p.x;
    bt.arcX2X3.holonomy = MoebiusMap::translation(x);
    bt.arcX2X3.theta = [x](double t) { return std::atan(x * (t - 0.5)); };

    if (p.family == PantsFamily::Fig4) {
        // Send the closing circle to the real line: w = -1/z - i/(2r).
        double r = p.octagon.side[5].parent.radius;
        MoebiusMap T2{cplx{0, -1 / (2 * r)}, -1, 1, 0};
        MoebiusMap h2 = T2.compose(p.b).compose(T2.inverse()).real_normalized(1e-6);
        if (!h2.approx_equal(MoebiusMap::translation(1), 1e-9))
            throw InternalInconsistency(
                "closing-circle holonomy did not reduce to a unit translation");
        bt.arcX6X7.holonomy = h2;
        // The traversal start lands at exactly -1/2.
        bt.arcX6X7.theta = [](double t) { return std::atan(t - 0.5); };
    } else {
        // The closing side runs along the real axis from 2 to -2; flip it so
        // the developing increases.
        MoebiusMap T2{-1, 0, 0, 1};
        MoebiusMap h2 = T2.compose(p.b).compose(T2.inverse()).real_normalized(1e-6);
        if (!h2.approx_equal(MoebiusMap{1, 0, 1, 1}, 1e-9))
            throw InternalInconsistency(
                "real-axis holonomy did not reduce to the opposite parabolic");
        bt.arcX6X7.holonomy = h2;
        bt.arcX6X7.theta = [](double t) { return std::atan(4 * t - 2); };
    }

    bt.third = third_boundary(p);

    ClassifyOptions opt = detail::pants_classify_options();
    bt.arcX2X3_class = classify(bt.arcX2X3, opt);
    bt.arcX6X7_class = classify(bt.arcX6X7, opt);
    bt.third_class = classify(bt.third, opt);
    return bt;
}

// Class of the third boundary as a function of the family parameter.
inline StructureClass s_class(PantsFamily family, double x, double tol = kDefaultTol) {
    if (std::abs(x - 4) <= tol && x != 4.0)
        throw AmbiguousTrace(
            "third boundary sits numerically on the parabolic wall; pass x = 4 "
            "exactly to mean the wall itself");
    PantsStructure p = build_pants(family, x);
    return classify(third_boundary(p), detail::pants_classify_options());
}

// Find x whose third-boundary class matches the target, by bisection on the
// continuous class parameter. The parameter must be monotone across the
// bracket; that is sampled first, never assumed.
inline double solve_x(PantsFamily family, const StructureClass& target,
                      double lo, double hi) {
    if (target.family == Family::P)
        throw BracketFailure(
            "parabolic classes are isolated; there is no continuous parameter "
            "to bisect for");
    const double pad = 1e-7;
    double a = lo + pad, b = hi - pad;
    if (!(a < b)) throw BracketFailure("bracket is empty after endpoint padding");

    auto value = [&](double x) -> double {
        StructureClass c = s_class(family, x);
        if (c.family != target.family) {
            std::ostringstream os;
            os << "class family changes inside the bracket (got " << c.str()
               << " at x=" << x << ")";
            throw BracketFailure(os.str());
        }
        if (c.family == Family::H && c.n != target.n) {
            std::ostringstream os;
            os << "winding mismatch inside the bracket (got " << c.str()
               << " at x=" << x << ")";
            throw BracketFailure(os.str());
        }
        return c.alpha;
    };

    double va = value(a), vb = value(b);
    int dir = va < vb ? 1 : -1;
    double last = va;
    for (int i = 1; i <= 4; ++i) {
        double v = i == 4 ? vb : value(a + (b - a) * i / 4.0);
        if (dir * (v - last) <= 0)
            throw BracketFailure("class parameter is not monotone across the bracket");
        last = v;
    }
    double t = target.alpha;
    if (t < std::min(va, vb) || t > std::max(va, vb)) {
        std::ostringstream os;
        os << "bracket does not straddle the target (parameter runs " << va
           << " to " << vb << ", target " << t << ")";
        throw BracketFailure(os.str());
    }

    while (b - a > 1e-10) {
        double mid = (a + b) / 2;
        if (mid <= a || mid >= b) break;
        double vm = value(mid);
        if (dir * (vm - t) < 0)
            a = mid;
        else
            b = mid;
    }
    double xm = (a + b) / 2;
    StructureClass got = s_class(family, xm);
    if (!got.approx_equal(target)) {
        std::ostringstream os;
        os << "bisection landed on " << got.str() << " instead of " << target.str();
        throw BracketFailure(os.str());
    }
    return xm;
}

}  // namespace moebius
