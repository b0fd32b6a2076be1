#pragma once

#include <cmath>

#include "errors.hpp"
#include "moebius_map.hpp"

namespace moebius {

// Signed remainder in [-pi/2, pi/2], distance to the nearest multiple of pi.
inline double principal_mod_pi(double d) {
    return d - std::round(d / kPi) * kPi;
}

// The projective line is parameterized by the angle theta, the point being
// tan(theta) with period pi. rotation(t) shifts theta by exactly t.
inline double angle_of(const ExtC& p) {
    if (is_inf(p)) return kPi / 2;
    return std::atan(p.z.real());
}

inline ExtC point_of_angle(double theta) {
    double r = principal_mod_pi(theta);
    if (std::abs(std::abs(r) - kPi / 2) < 1e-15) return ExtC::infinity();
    return ExtC{std::tan(r)};
}

// Monotone lift of the circle action of a real map with positive
// determinant. Decomposing M = rotation(u) * diag(s, 1/s) * rotation(v)
// turns the angle action into theta -> u + D(theta + v) with
// D(m pi + r) = m pi + atan(s^2 tan r), which stays accurate for any s.
struct RealLift {
    double u = 0;
    double v = 0;
    double sigma2 = 1;

    static RealLift from(const MoebiusMap& mm) {
        double a = mm.a.real(), b = mm.b.real(), c = mm.c.real(), d = mm.d.real();
        double dust = std::max(std::max(std::abs(mm.a.imag()), std::abs(mm.b.imag())),
                               std::max(std::abs(mm.c.imag()), std::abs(mm.d.imag())));
        if (dust > 1e-9)
            throw NonRealTrace("lift of a map with complex entries");
        double P = std::hypot(a + d, b - c);
        double M = std::hypot(a - d, b + c);
        RealLift l;
        double s = std::atan2(b - c, a + d);
        double t = (M > 1e-300) ? std::atan2(-(b + c), a - d) : 0.0;
        l.u = (s + t) / 2;
        l.v = (s - t) / 2;
        double sigma = (P + std::sqrt(std::max(0.0, P * P - 4.0))) / 2.0;
        l.sigma2 = sigma * sigma;
        return l;
    }

    double operator()(double theta) const {
        double x = theta + v;
        double m = std::round(x / kPi);
        double r = x - m * kPi;  // in [-pi/2, pi/2]
        return u + m * kPi + std::atan(sigma2 * std::tan(r));
    }
};

}  // namespace moebius
