#pragma once

#include <array>
#include <cmath>
#include <ostream>

#include "errors.hpp"
#include "ext_complex.hpp"
#include "moebius_map.hpp"

namespace moebius {

// Circle or line in the extended plane. Lines are stored by the foot of the
// perpendicular from the origin plus a unit direction whose sign is fixed
// (positive real part, else positive imaginary part), so equal lines have
// equal fields.
struct GeneralizedCircle {
    bool is_line = false;
    cplx center{};
    double radius = 0;
    cplx point{};
    cplx dir{1};

    static GeneralizedCircle circle(cplx center, double radius) {
        if (!(radius > 0))
            throw DegenerateRadius("circle radius must be positive");
        GeneralizedCircle g;
        g.is_line = false;
        g.center = center;
        g.radius = radius;
        return g;
    }

    static GeneralizedCircle line(cplx through, cplx direction) {
        double n = std::abs(direction);
        if (n < 1e-14)
            throw DegenerateRadius("line direction must be nonzero");
        cplx u = direction / n;
        if (std::abs(u.real()) > 1e-12) {
            if (u.real() < 0) u = -u;
        } else if (u.imag() < 0) {
            u = -u;
        }
        GeneralizedCircle g;
        g.is_line = true;
        g.dir = u;
        g.point = through - (through.real() * u.real() + through.imag() * u.imag()) * u;
        return g;
    }

    static GeneralizedCircle real_line() { return line(0, 1); }

    // Circle or line through three distinct points; a point at infinity or a
    // collinear triple yields a line.
    static GeneralizedCircle through(const ExtC& p, const ExtC& q, const ExtC& r,
                                     double tol = kDefaultTol) {
        if (approx(p, q, tol) || approx(q, r, tol) || approx(p, r, tol))
            throw DegenerateRadius("need three distinct points");
        if (is_inf(p)) return line(q.z, r.z - q.z);
        if (is_inf(q)) return line(p.z, r.z - p.z);
        if (is_inf(r)) return line(p.z, q.z - p.z);
        cplx a = p.z, b = q.z, c = r.z;
        double L = std::max({std::abs(a - b), std::abs(b - c), std::abs(a - c)});
        double D = 2.0 * (a.real() * (b.imag() - c.imag()) +
                          b.real() * (c.imag() - a.imag()) +
                          c.real() * (a.imag() - b.imag()));
        if (std::abs(D) <= tol * L * L) return line(a, b - a);
        double na = std::norm(a), nb = std::norm(b), nc = std::norm(c);
        double ux = (na * (b.imag() - c.imag()) + nb * (c.imag() - a.imag()) +
                     nc * (a.imag() - b.imag())) / D;
        double uy = (na * (c.real() - b.real()) + nb * (a.real() - c.real()) +
                     nc * (b.real() - a.real())) / D;
        cplx cen{ux, uy};
        return circle(cen, std::abs(a - cen));
    }

    bool contains(const ExtC& p, double tol = kDefaultTol) const {
        if (is_inf(p)) return is_line;
        if (is_line)
            return std::abs(((p.z - point) * std::conj(dir)).imag()) < tol;
        return std::abs(std::abs(p.z - center) - radius) < tol * std::max(1.0, radius);
    }

    // Strictly inside the bounded disk, or strictly left of the line's
    // canonical direction.
    bool side_contains(const ExtC& p, double tol = kDefaultTol) const {
        if (is_inf(p)) return false;
        if (is_line)
            return ((p.z - point) * std::conj(dir)).imag() > tol;
        return std::abs(p.z - center) < radius - tol * std::max(1.0, radius);
    }

    bool approx_equal(const GeneralizedCircle& o, double tol = kDefaultTol) const {
        if (is_line != o.is_line) return false;
        if (is_line)
            return std::abs(point - o.point) < tol && std::abs(dir - o.dir) < tol;
        return std::abs(center - o.center) < tol * std::max(1.0, radius) &&
               std::abs(radius - o.radius) < tol * std::max(1.0, radius);
    }

    // Three points in the canonical traversal order: clockwise for circles,
    // the +direction (passing through infinity first) for lines.
    std::array<ExtC, 3> traversal_triple() const {
        if (is_line)
            return {ExtC::infinity(), ExtC{point}, ExtC{point + dir}};
        return {ExtC{center + radius}, ExtC{center - cplx{0, 1} * radius},
                ExtC{center - radius}};
    }

    ExtC point_at_angle(double t) const {
        if (is_line)
            throw InternalInconsistency("point_at_angle on a line");
        return ExtC{center + radius * cplx{std::cos(t), std::sin(t)}};
    }

    friend std::ostream& operator<<(std::ostream& os, const GeneralizedCircle& g) {
        if (g.is_line)
            return os << "line(" << g.point << " + t*" << g.dir << ")";
        return os << "circle(" << g.center << ", r=" << g.radius << ")";
    }
};

inline GeneralizedCircle map_circle(const MoebiusMap& m, const GeneralizedCircle& g,
                                    double tol = kDefaultTol) {
    auto t = g.traversal_triple();
    return GeneralizedCircle::through(m(t[0]), m(t[1]), m(t[2]), tol);
}

// Defect from orthogonality: zero iff the pair meets at right angles.
inline double orthogonality_residual(const GeneralizedCircle& g1, const GeneralizedCircle& g2) {
    if (!g1.is_line && !g2.is_line) {
        double d2 = std::norm(g1.center - g2.center);
        return std::abs(d2 - g1.radius * g1.radius - g2.radius * g2.radius);
    }
    if (g1.is_line && g2.is_line)
        return std::abs(g1.dir.real() * g2.dir.real() + g1.dir.imag() * g2.dir.imag());
    const GeneralizedCircle& ln = g1.is_line ? g1 : g2;
    const GeneralizedCircle& ci = g1.is_line ? g2 : g1;
    return std::abs(((ci.center - ln.point) * std::conj(ln.dir)).imag());
}

inline bool circles_orthogonal(const GeneralizedCircle& g1, const GeneralizedCircle& g2,
                               double tol = kDefaultTol) {
    return orthogonality_residual(g1, g2) < tol;
}

// Rotation angle in (0, 2*pi) of an elliptic map preserving the circle,
// read at the fixed point inside the bounded disk (left half-plane for a
// line model): the argument of the derivative there.
inline double rotation_angle(const MoebiusMap& m, const GeneralizedCircle& g,
                             double tol = kDefaultTol) {
    if (map_kind(m, tol) != MapKind::Elliptic)
        throw InternalInconsistency("rotation_angle wants an elliptic map");
    if (!map_circle(m, g, tol).approx_equal(g, 1e-6))
        throw InternalInconsistency("rotation_angle: map does not preserve the circle");
    auto fp = m.fixed_points(tol);
    ExtC z0 = fp[0];
    if (!g.side_contains(z0, 0.0)) {
        z0 = fp[1];
        if (!g.side_contains(z0, 0.0))
            throw InternalInconsistency("rotation_angle: no fixed point inside the disk");
    }
    double beta;
    if (is_inf(z0)) {
        beta = std::arg(1.0 / (m.a * m.a));
    } else {
        cplx der = 1.0 / std::pow(m.c * z0.z + m.d, 2);
        beta = std::arg(der);
    }
    if (beta <= 0) beta += 2 * kPi;
    return beta;
}

// Sign of a parabolic map relative to the canonical traversal of the circle
// its fixed point lies on: +1 when it pushes points along the traversal
// (clockwise for circles, the +direction for lines), -1 otherwise.
inline int parabolic_sign(const MoebiusMap& m, const GeneralizedCircle& g,
                          double tol = kDefaultTol) {
    if (map_kind(m, tol) != MapKind::Parabolic)
        throw InternalInconsistency("parabolic_sign wants a parabolic map");
    auto t = g.traversal_triple();
    // Traversal triple to (infinity, 0, 1): clockwise around a circle turns
    // into the increasing direction on the real line.
    MoebiusMap T = triple_to_standard(t[1], t[2], t[0]);
    MoebiusMap v = T.compose(m).compose(T.inverse()).real_normalized(1e-6);
    auto fp = v.fixed_points(tol);
    ExtC x0 = fp[0];
    double tr;
    if (is_inf(x0)) {
        tr = (v.b / v.a).real();
    } else {
        // Push the fixed point to infinity with an orientation-preserving
        // real map, then read the translation part.
        MoebiusMap s{0, -1, 1, -x0.z};
        MoebiusMap w = s.compose(v).compose(s.inverse()).real_normalized(1e-6);
        tr = (w.b / w.a).real();
    }
    if (std::abs(tr) < tol)
        throw InternalInconsistency("parabolic_sign: translation part vanished");
    return tr > 0 ? 1 : -1;
}

}  // namespace moebius
