#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "circle.hpp"
#include "errors.hpp"
#include "moebius_map.hpp"

namespace moebius {

// Two one-parameter families of arc octagons. Fig4 keeps the identified
// vertical strip above the unit circles with a small closing circle tangent
// to the real axis at 0; Fig6 closes through the real axis itself, which
// costs one extra wrap of the third boundary.
enum class PantsFamily { Fig4, Fig6 };

inline std::string to_string(PantsFamily f) {
    return f == PantsFamily::Fig4 ? "fig4" : "fig6";
}

// z -> z + x. The generator identifying the two vertical sides and the two
// primed circles.
inline MoebiusMap make_a(double x) {
    if (!(x > 0))
        throw InternalInconsistency("translation step must be positive");
    return MoebiusMap::translation(x);
}

// z -> z / (1 - z). Parabolic fixing 0; swaps the primed circles the other
// way round and preserves the closing circle.
inline MoebiusMap make_b() { return MoebiusMap::standard_parabolic(); }

// One oriented side: the piece of the parent circle (or line) joining `from`
// to `to`. Proper circles carry the start angle and a signed sweep, positive
// counterclockwise; lines interpolate the endpoints.
struct OctagonSide {
    GeneralizedCircle parent = GeneralizedCircle::real_line();
    cplx from{}, to{};
    double phi_start = 0;
    double sweep = 0;

    cplx at(double t) const {
        if (parent.is_line) return from + t * (to - from);
        double phi = phi_start + t * sweep;
        return parent.center + parent.radius * cplx{std::cos(phi), std::sin(phi)};
    }
};

// Closed chain of eight sides; side[i] joins vertex[i] to vertex[(i+1)%8].
struct Octagon {
    std::array<cplx, 8> vertex{};
    std::array<OctagonSide, 8> side{};
};

struct PantsStructure {
    Octagon octagon;
    MoebiusMap a, b;
    PantsFamily family = PantsFamily::Fig4;
    double x = 0;
};

// Distance from a point to the circle or line, zero on it.
inline double distance_to(const GeneralizedCircle& g, const ExtC& p) {
    if (is_inf(p)) return g.is_line ? 0.0 : 1e300;
    if (g.is_line) return std::abs(((p.z - g.point) * std::conj(g.dir)).imag());
    return std::abs(std::abs(p.z - g.center) - g.radius);
}

namespace detail {

inline OctagonSide segment_side(const cplx& from, const cplx& to) {
    OctagonSide s;
    s.parent = GeneralizedCircle::line(from, to - from);
    s.from = from;
    s.to = to;
    return s;
}

inline OctagonSide arc_side(const GeneralizedCircle& parent, const cplx& from,
                            const cplx& to, bool ccw) {
    OctagonSide s;
    s.parent = parent;
    s.from = from;
    s.to = to;
    s.phi_start = std::arg(from - parent.center);
    double raw = std::arg(to - parent.center) - s.phi_start;
    raw -= 2 * kPi * std::floor(raw / (2 * kPi));  // into [0, 2pi)
    s.sweep = ccw ? raw : raw - 2 * kPi;
    return s;
}

// Strict proper-crossing test between segments p1p2 and q1q2. Touching at a
// shared endpoint does not count; that is how consecutive sides and the
// intrinsic vertex coincidences of the x = 4 layout meet.
inline bool segments_cross(const cplx& p1, const cplx& p2, const cplx& q1, const cplx& q2) {
    auto cross = [](const cplx& u, const cplx& v) {
        return u.real() * v.imag() - u.imag() * v.real();
    };
    double scale = std::abs(p2 - p1) * std::abs(q2 - q1);
    double eps = 1e-12 * std::max(1.0, scale);
    auto sgn = [&](double v) { return v > eps ? 1 : (v < -eps ? -1 : 0); };
    int d1 = sgn(cross(q2 - q1, p1 - q1));
    int d2 = sgn(cross(q2 - q1, p2 - q1));
    int d3 = sgn(cross(p2 - p1, q1 - p1));
    int d4 = sgn(cross(p2 - p1, q2 - p1));
    return d1 * d2 == -1 && d3 * d4 == -1;
}

}  // namespace detail

// True when the boundary chain is simple: sides meet only at shared
// vertices. Each side is flattened to a short polyline and segment pairs
// from different sides are tested for proper crossings.
inline bool octagon_is_simple(const Octagon& oct, int per_side = 96) {
    double dia = 1.0;
    for (const auto& v : oct.vertex) dia = std::max(dia, std::abs(v));
    double share = 1e-9 * dia;
    std::array<std::vector<cplx>, 8> poly;
    for (int i = 0; i < 8; ++i) {
        poly[i].reserve(per_side + 1);
        for (int j = 0; j <= per_side; ++j)
            poly[i].push_back(oct.side[i].at(double(j) / per_side));
    }
    for (int i = 0; i < 8; ++i) {
        for (int j = i + 1; j < 8; ++j) {
            for (size_t u = 0; u + 1 < poly[i].size(); ++u) {
                for (size_t v = 0; v + 1 < poly[j].size(); ++v) {
                    const cplx &p1 = poly[i][u], &p2 = poly[i][u + 1];
                    const cplx &q1 = poly[j][v], &q2 = poly[j][v + 1];
                    double near = std::min(
                        std::min(std::abs(p1 - q1), std::abs(p1 - q2)),
                        std::min(std::abs(p2 - q1), std::abs(p2 - q2)));
                    if (near < share) continue;
                    if (detail::segments_cross(p1, p2, q1, q2)) return false;
                }
            }
        }
    }
    return true;
}

namespace detail {

inline void finish_build(PantsStructure& p) {
    for (int i = 0; i < 8; ++i) {
        const OctagonSide& s = p.octagon.side[i];
        double res = std::max(distance_to(s.parent, ExtC{s.from}),
                              distance_to(s.parent, ExtC{s.to}));
        if (res > 1e-9) {
            std::ostringstream os;
            os << "side " << i + 1 << " endpoints miss the parent circle by " << res;
            throw InternalInconsistency(os.str());
        }
        if (std::abs(s.from - p.octagon.vertex[i]) > 1e-9 ||
            std::abs(s.to - p.octagon.vertex[(i + 1) % 8]) > 1e-9)
            throw InternalInconsistency("side endpoints disagree with the vertex list");
    }
    if (!octagon_is_simple(p.octagon))
        throw InternalInconsistency("boundary chain crosses itself");
}

}  // namespace detail

// The symmetric family: the closing strip sits above the unit circles, the
// identified circle pair is an invariant-circle pencil section of a o b, and
// the chain closes through a small circle tangent to the real axis at 0.
inline PantsStructure build_fig4(double x) {
    if (!(x > 0))
        throw SolverFailure("no invariant circle exists for a step <= 0");
    PantsStructure p;
    p.family = PantsFamily::Fig4;
    p.x = x;
    p.a = make_a(x);
    p.b = make_b();

    GeneralizedCircle C1 = GeneralizedCircle::circle(1, 1);
    GeneralizedCircle C2 = GeneralizedCircle::circle(-1, 1);

    // Invariant-circle pencil of a o b: center (x/2, s), radius^2 =
    // s^2 + x^2/4 - x. The section below keeps the radius positive through
    // x = 4 and every member is orthogonal to C1 identically.
    double s2 = (std::max(0.0, x - x * x / 4) + x) / 2;
    double s = std::sqrt(s2);
    double rho2 = s2 + x * x / 4 - x;
    if (!(rho2 > 0))
        throw SolverFailure("invariant circle degenerated (radius^2 <= 0)");
    double rho = std::sqrt(rho2);
    cplx c1p{x / 2, s};
    GeneralizedCircle C1p = GeneralizedCircle::circle(c1p, rho);
    GeneralizedCircle C2p = GeneralizedCircle::circle(c1p - x, rho);
    double ortho = orthogonality_residual(C1p, C1);
    if (ortho > 1e-9 * std::max(1.0, rho2)) {
        std::ostringstream os;
        os << "invariant circle is not orthogonal to the unit circle (residual "
           << ortho << ")";
        throw SolverFailure(os.str());
    }

    // Upper intersection of C1 and C1p. Orthogonality collapses the
    // intersection angle formula to cos(gamma) = 1/d.
    double d = std::abs(c1p - 1.0);
    double gamma = std::acos(1.0 / d);
    double base = std::atan2(s, x / 2 - 1);
    cplx X5 = 1.0 + std::polar(1.0, base + gamma);
    cplx X8 = p.b(ExtC{X5}).z;
    if (std::abs(X8 - (-std::conj(X5))) > 1e-12)
        throw InternalInconsistency("b stopped acting on the unit circle as -conj");
    cplx X4 = c1p + cplx{0, rho};
    cplx X1 = X4 - x;
    double htop = s + rho + 1;
    cplx X2{-x / 2, htop};
    cplx X3{x / 2, htop};

    // Closing circle tangent to the real axis at 0: radius set off the
    // distance from 0 to the sides that do not depend on it.
    double sep = 1e300;
    auto feed = [&](const cplx& z) { sep = std::min(sep, std::abs(z)); };
    for (int j = 0; j <= 256; ++j) {
        double t = double(j) / 256;
        feed(X1 + (X2 - X1) * t);
        feed(X2 + (X3 - X2) * t);
        feed(X3 + (X4 - X3) * t);
    }
    double phi5p = std::arg(X5 - c1p);
    double sweep4 = phi5p - kPi / 2;
    sweep4 -= 2 * kPi * std::floor(sweep4 / (2 * kPi));
    for (int j = 0; j <= 256; ++j) {
        double t = double(j) / 256;
        cplx q = c1p + rho * std::polar(1.0, kPi / 2 + sweep4 * t);
        feed(q);
        feed(-std::conj(q));
    }
    double r = std::min(0.1, sep / 4);
    GeneralizedCircle K = GeneralizedCircle::circle(cplx{0, r}, r);
    cplx X6 = cplx{2 * r * r, 2 * r} / (1 + r * r);
    cplx X7 = p.b(ExtC{X6}).z;
    if (std::abs(X7 - (-std::conj(X6))) > 1e-12)
        throw InternalInconsistency("b stopped acting on the unit circle as -conj");

    p.octagon.vertex = {X1, X2, X3, X4, X5, X6, X7, X8};
    p.octagon.side[0] = detail::segment_side(X1, X2);
    p.octagon.side[1] = detail::segment_side(X2, X3);
    p.octagon.side[2] = detail::segment_side(X3, X4);
    p.octagon.side[3] = detail::arc_side(C1p, X4, X5, true);
    p.octagon.side[4] = detail::arc_side(C1, X5, X6, true);
    p.octagon.side[5] = detail::arc_side(K, X6, X7, true);
    p.octagon.side[6] = detail::arc_side(C2, X7, X8, true);
    p.octagon.side[7] = detail::arc_side(C2p, X8, X1, true);
    detail::finish_build(p);
    return p;
}

// The crossing family: identified circles of radius x/2 - 1 centered at
// +-x/2 + i, closing chain through the real axis between 2 and -2. Above
// x = 4 the strip hangs below the real axis and the third boundary picks up
// an extra wrap.
inline PantsStructure build_fig6(double x) {
    if (!(x > 2))
        throw DegenerateRadius("identified circles need radius x/2 - 1 > 0");
    PantsStructure p;
    p.family = PantsFamily::Fig6;
    p.x = x;
    p.a = make_a(x);
    p.b = make_b();

    GeneralizedCircle C1 = GeneralizedCircle::circle(1, 1);
    GeneralizedCircle C2 = GeneralizedCircle::circle(-1, 1);
    double rho = x / 2 - 1;
    cplx c1p{x / 2, 1};
    GeneralizedCircle C1p = GeneralizedCircle::circle(c1p, rho);
    GeneralizedCircle C2p = GeneralizedCircle::circle(c1p - x, rho);

    cplx X5{1, 1};
    cplx X8 = p.b(ExtC{X5}).z;
    if (std::abs(X8 - cplx{-1, 1}) > 1e-12)
        throw InternalInconsistency("b(1+i) drifted off -1+i");
    cplx X6{2, 0};
    cplx X7 = p.b(ExtC{X6}).z;
    if (std::abs(X7 - cplx{-2, 0}) > 1e-12)
        throw InternalInconsistency("b(2) drifted off -2");

    cplx X4, X1;
    double lim;
    if (x >= 4) {
        X4 = c1p - cplx{0, rho};  // bottom of C1p; on or below the real axis
        lim = -x / 2;
    } else {
        // The low closing strip would cross the real segment; close above.
        X4 = c1p + cplx{0, rho};
        lim = 3;
    }
    X1 = X4 - x;
    cplx X2{-x / 2, lim};
    cplx X3{x / 2, lim};

    p.octagon.vertex = {X1, X2, X3, X4, X5, X6, X7, X8};
    p.octagon.side[0] = detail::segment_side(X1, X2);
    p.octagon.side[1] = detail::segment_side(X2, X3);
    p.octagon.side[2] = detail::segment_side(X3, X4);
    p.octagon.side[3] = detail::arc_side(C1p, X4, X5, true);
    p.octagon.side[4] = detail::arc_side(C1, X5, X6, false);
    p.octagon.side[5] = detail::segment_side(X6, X7);  // through the fixed point 0
    p.octagon.side[6] = detail::arc_side(C2, X7, X8, false);
    p.octagon.side[7] = detail::arc_side(C2p, X8, X1, true);
    detail::finish_build(p);
    return p;
}

inline PantsStructure build_pants(PantsFamily family, double x) {
    return family == PantsFamily::Fig4 ? build_fig4(x) : build_fig6(x);
}

// Numerical audit of the three side-identification conditions, read off the
// stored octagon (not recomputed from x): residuals survive injected faults.
struct ConditionReport {
    bool c1 = false, c2 = false, c3 = false;
    double r1 = 0, r2 = 0, r3 = 0;
    bool all() const { return c1 && c2 && c3; }
};

inline ConditionReport check_conditions(const PantsStructure& p, double tol = 1e-8) {
    if (!(tol > 0))
        throw InternalInconsistency("tolerance must be positive");
    const Octagon& o = p.octagon;
    ConditionReport rep;

    // Every side an arc of its parent circle: endpoint incidences.
    for (int i = 0; i < 8; ++i) {
        rep.r1 = std::max(rep.r1, distance_to(o.side[i].parent, ExtC{o.vertex[i]}));
        rep.r1 = std::max(rep.r1,
                          distance_to(o.side[i].parent, ExtC{o.vertex[(i + 1) % 8]}));
    }

    // Vertex pairings a(X1) = X4, a(X2) = X3, b(X5) = X8, b(X6) = X7.
    auto img = [](const MoebiusMap& m, const cplx& z) { return m(ExtC{z}).z; };
    rep.r2 = std::max({std::abs(img(p.a, o.vertex[0]) - o.vertex[3]),
                       std::abs(img(p.a, o.vertex[1]) - o.vertex[2]),
                       std::abs(img(p.b, o.vertex[4]) - o.vertex[7]),
                       std::abs(img(p.b, o.vertex[5]) - o.vertex[6])});

    // Circle-level identifications, measured by pushing three traversal
    // points through the map and reading their distance to the target.
    auto circ_res = [](const MoebiusMap& m, const GeneralizedCircle& src,
                       const GeneralizedCircle& dst) {
        double worst = 0;
        for (const ExtC& q : src.traversal_triple())
            worst = std::max(worst, distance_to(dst, m(q)));
        return worst;
    };
    rep.r3 = std::max({circ_res(p.a, o.side[1].parent, o.side[1].parent),
                       circ_res(p.a, o.side[7].parent, o.side[3].parent),
                       circ_res(p.b, o.side[5].parent, o.side[5].parent),
                       circ_res(p.b, o.side[3].parent, o.side[7].parent)});

    rep.c1 = rep.r1 < tol;
    rep.c2 = rep.r2 < tol;
    rep.c3 = rep.r3 < tol;
    return rep;
}

}  // namespace moebius
