#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <ostream>
#include <sstream>

#include "errors.hpp"
#include "ext_complex.hpp"

namespace moebius {

// Fractional linear map z -> (a z + b) / (c z + d), stored det-normalized
// (det = 1) with the overall sign fixed by the first entry of (a, b, c, d)
// whose modulus exceeds 1e-9: that entry gets a positive real part, and a
// purely imaginary one gets positive imaginary part. Two matrices that
// differ by -I describe the same map, and the canonical sign makes the
// representation unique, so entry-wise comparison means map equality.
class MoebiusMap {
public:
    cplx a{1}, b{0}, c{0}, d{1};

    MoebiusMap() = default;

    MoebiusMap(cplx a_, cplx b_, cplx c_, cplx d_) : a(a_), b(b_), c(c_), d(d_) {
        normalize();
    }

    static MoebiusMap identity() { return {}; }

    // Horizontal translation z -> z + x.
    static MoebiusMap translation(cplx x) { return {1, x, 0, 1}; }

    // z -> z / (1 - z): parabolic fixing 0, preserves the real line.
    static MoebiusMap standard_parabolic() { return {1, 0, -1, 1}; }

    // Acts on tangent angles as a shift by t (rotation of the projective line).
    static MoebiusMap rotation(double t) {
        return {std::cos(t), std::sin(t), -std::sin(t), std::cos(t)};
    }

    static MoebiusMap scaling(double sigma) {
        return {sigma, 0, 0, 1.0 / sigma};
    }

    cplx trace() const { return a + d; }
    cplx det() const { return a * d - b * c; }

    ExtC apply(const ExtC& p) const {
        if (is_inf(p)) {
            if (std::abs(c) == 0.0) return ExtC::infinity();
            return ExtC{a / c};
        }
        cplx num = a * p.z + b;
        cplx den = c * p.z + d;
        if (std::abs(den) == 0.0) return ExtC::infinity();
        return ExtC{num / den};
    }

    ExtC operator()(const ExtC& p) const { return apply(p); }

    MoebiusMap compose(const MoebiusMap& rhs) const {
        return {a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
                c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d};
    }

    MoebiusMap inverse() const { return {d, -b, -c, a}; }

    MoebiusMap pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        MoebiusMap acc = identity();
        MoebiusMap base = *this;
        while (n > 0) {
            if (n & 1) acc = acc.compose(base);
            base = base.compose(base);
            n >>= 1;
        }
        return acc;
    }

    bool is_identity(double tol = kDefaultTol) const {
        return std::abs(a - cplx{1}) < tol && std::abs(b) < tol &&
               std::abs(c) < tol && std::abs(d - cplx{1}) < tol;
    }

    bool approx_equal(const MoebiusMap& o, double tol = kDefaultTol) const {
        return std::abs(a - o.a) < tol && std::abs(b - o.b) < tol &&
               std::abs(c - o.c) < tol && std::abs(d - o.d) < tol;
    }

    // Strip a global phase so the matrix becomes real. Throws NonRealTrace
    // when more than `tol` of imaginary part survives: the map does not
    // actually preserve the real line.
    MoebiusMap real_normalized(double tol = 1e-6) const {
        const std::array<cplx, 4> e{a, b, c, d};
        double best = 0;
        cplx lead{1};
        for (const auto& v : e) {
            if (std::abs(v) > best) {
                best = std::abs(v);
                lead = v;
            }
        }
        cplx phase = lead / std::abs(lead);
        double dust = 0;
        std::array<double, 4> re{};
        for (int i = 0; i < 4; ++i) {
            cplx v = e[i] / phase;
            dust = std::max(dust, std::abs(v.imag()));
            re[i] = v.real();
        }
        if (dust > tol) {
            std::ostringstream os;
            os << "map does not preserve a real model (imaginary residue " << dust << ")";
            throw NonRealTrace(os.str());
        }
        if (re[0] * re[3] - re[1] * re[2] < 0)
            throw NonRealTrace("map preserves the real model but reverses its orientation");
        return {re[0], re[1], re[2], re[3]};
    }

    // Both fixed points; a single fixed point is reported twice. Identity
    // throws (every point is fixed).
    std::array<ExtC, 2> fixed_points(double tol = kDefaultTol) const {
        if (is_identity(tol))
            throw InternalInconsistency("fixed_points of the identity map");
        if (std::abs(c) < tol * std::max(1.0, std::abs(a) + std::abs(d))) {
            // Affine z -> (a z + b) / d, one fixed point at infinity.
            cplx da = d - a;
            if (std::abs(da) < tol)
                return {ExtC::infinity(), ExtC::infinity()};
            return {ExtC{b / da}, ExtC::infinity()};
        }
        cplx tr = trace();
        cplx disc = tr * tr - cplx{4};
        cplx root = std::sqrt(disc);
        return {ExtC{(a - d + root) / (2.0 * c)}, ExtC{(a - d - root) / (2.0 * c)}};
    }

    friend std::ostream& operator<<(std::ostream& os, const MoebiusMap& m) {
        return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
    }

private:
    void normalize() {
        cplx dt = det();
        if (std::abs(dt) < 1e-14)
            throw DegenerateRadius("singular matrix is not a Moebius map");
        cplx s = std::sqrt(dt);
        a /= s; b /= s; c /= s; d /= s;
        canonical_sign();
    }

    void canonical_sign() {
        const std::array<cplx, 4> e{a, b, c, d};
        for (const auto& v : e) {
            if (std::abs(v) > 1e-9) {
                bool flip;
                if (std::abs(v.real()) > 1e-12)
                    flip = v.real() < 0;
                else
                    flip = v.imag() < 0;
                if (flip) { a = -a; b = -b; c = -c; d = -d; }
                return;
            }
        }
    }
};

// Map sending the ordered triple (p, q, r) to (0, 1, infinity).
inline MoebiusMap triple_to_standard(const ExtC& p, const ExtC& q, const ExtC& r) {
    if (approx(p, q) || approx(q, r) || approx(p, r))
        throw DegenerateRadius("triple_to_standard needs three distinct points");
    if (is_inf(p)) return {0, q.z - r.z, 1, -r.z};
    if (is_inf(q)) return {1, -p.z, 1, -r.z};
    if (is_inf(r)) return {1, -p.z, 0, q.z - p.z};
    return {q.z - r.z, -p.z * (q.z - r.z), q.z - p.z, -r.z * (q.z - p.z)};
}

// Unique map sending (p1, q1, r1) to (p2, q2, r2).
inline MoebiusMap triple_to_triple(const ExtC& p1, const ExtC& q1, const ExtC& r1,
                                   const ExtC& p2, const ExtC& q2, const ExtC& r2) {
    return triple_to_standard(p2, q2, r2).inverse().compose(triple_to_standard(p1, q1, r1));
}

enum class MapKind { Identity, Parabolic, Elliptic, Hyperbolic, Loxodromic };

inline const char* to_string(MapKind k) {
    switch (k) {
        case MapKind::Identity: return "identity";
        case MapKind::Parabolic: return "parabolic";
        case MapKind::Elliptic: return "elliptic";
        case MapKind::Hyperbolic: return "hyperbolic";
        case MapKind::Loxodromic: return "loxodromic";
    }
    return "?";
}

// Trace trichotomy. The parabolic/non-parabolic boundary is decided by a
// tight threshold (1e-12 relative); traces that fall between the tight and
// the caller's tolerance are refused rather than guessed.
inline MapKind map_kind(const MoebiusMap& m, double tol = kDefaultTol) {
    if (m.is_identity(tol)) return MapKind::Identity;
    cplx tr = m.trace();
    if (std::abs(tr.imag()) > tol) {
        // A complex trace with |tr| away from real is loxodromic; elliptic
        // and hyperbolic both demand real trace after sign canonicalization.
        return MapKind::Loxodromic;
    }
    double t = std::abs(tr.real());
    double gap = std::abs(t - 2.0);
    if (gap <= 1e-12) return MapKind::Parabolic;
    if (gap < tol) {
        std::ostringstream os;
        os << "|trace| = " << t << " within tolerance of 2 but not exactly parabolic";
        throw AmbiguousTrace(os.str());
    }
    return t < 2.0 ? MapKind::Elliptic : MapKind::Hyperbolic;
}

// For |tr| > 2: the displacement along the invariant axis.
inline double translation_length(const MoebiusMap& m, double tol = kDefaultTol) {
    MapKind k = map_kind(m, tol);
    if (k != MapKind::Hyperbolic)
        throw InternalInconsistency("translation_length wants a hyperbolic map");
    return 2.0 * std::acosh(std::abs(m.trace().real()) / 2.0);
}

}  // namespace moebius
