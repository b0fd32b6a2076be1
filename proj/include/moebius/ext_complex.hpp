#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace moebius {

using cplx = std::complex<double>;

// The extended plane is modelled as cplx plus one distinguished infinity.
struct ExtC {
    cplx z{};
    bool inf = false;

    ExtC() = default;
    ExtC(cplx v) : z(v) {}           // NOLINT: implicit by design
    ExtC(double v) : z(v, 0.0) {}    // NOLINT
    static ExtC infinity() { return ExtC{cplx{}, true}; }

private:
    ExtC(cplx v, bool i) : z(v), inf(i) {}
};

inline bool is_inf(const ExtC& p) { return p.inf; }

// Chordal distance on the sphere; finite for every pair including infinity.
inline double chordal(const ExtC& a, const ExtC& b) {
    auto lift = [](const ExtC& p, double& x, double& y, double& t) {
        if (p.inf) { x = 0; y = 0; t = 1; return; }
        double n = std::norm(p.z);
        x = 2 * p.z.real() / (1 + n);
        y = 2 * p.z.imag() / (1 + n);
        t = (n - 1) / (1 + n);
    };
    double ax, ay, at, bx, by, bt;
    lift(a, ax, ay, at);
    lift(b, bx, by, bt);
    return std::sqrt((ax - bx) * (ax - bx) + (ay - by) * (ay - by) + (at - bt) * (at - bt));
}

inline bool approx(const ExtC& a, const ExtC& b, double tol = 1e-9) {
    return chordal(a, b) < tol;
}

// Cross ratio (z1,z2;z3,z4) = (z1-z3)(z2-z4) / ((z1-z4)(z2-z3)),
// extended to infinity by dropping the two factors that blow up.
inline ExtC cross_ratio(const ExtC& z1, const ExtC& z2, const ExtC& z3, const ExtC& z4) {
    auto num = [&]() -> cplx {
        cplx n = 1;
        if (!z1.inf && !z3.inf) n *= z1.z - z3.z;
        if (!z2.inf && !z4.inf) n *= z2.z - z4.z;
        return n;
    };
    auto den = [&]() -> cplx {
        cplx d = 1;
        if (!z1.inf && !z4.inf) d *= z1.z - z4.z;
        if (!z2.inf && !z3.inf) d *= z2.z - z3.z;
        return d;
    };
    cplx n = num(), d = den();
    if (std::abs(d) == 0.0) return ExtC::infinity();
    return ExtC{n / d};
}

constexpr double kDefaultTol = 1e-9;
constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace moebius
