#pragma once

#include <cmath>
#include <functional>

#include "errors.hpp"
#include "structure.hpp"
#include "structure_class.hpp"

namespace moebius {

namespace detail {

struct Germ {
    std::function<double(double)> value;
    std::function<double(double)> slope;
};

inline double hermite(double a, double b, double v0, double v1, double m0, double m1,
                      double t) {
    double h = b - a;
    double s = (t - a) / h;
    double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * v0 + (s3 - 2 * s2 + s) * h * m0 +
           (-2 * s3 + 3 * s2) * v1 + (s3 - s2) * h * m1;
}

// Monotone increasing path on [0,1] that equals g0 near 0 and g1 near 1,
// bridged by a cubic matching value and slope. Both germ formulas are
// monotone on all of [0,1], so the bridge is placed at interior points
// where their slopes have tamed; candidates widen the germ region first
// and shrink it only if the cubic refuses to stay increasing.
inline std::pair<std::function<double(double)>, double> join_germs(const Germ& g0,
                                                                   const Germ& g1) {
    const double widths[] = {0.4,  0.35, 0.3,   0.45,  0.25,  0.2,
                             0.15, 0.1,  0.05,  0.025, 0.012, 0.006};
    for (double delta : widths) {
        double a = delta, b = 1.0 - delta;
        double v0 = g0.value(a), v1 = g1.value(b);
        double m0 = g0.slope(a), m1 = g1.slope(b);
        if (!(v1 > v0)) continue;
        auto path = [=](double t) {
            if (t <= a) return g0.value(t);
            if (t >= b) return g1.value(t);
            return hermite(a, b, v0, v1, m0, m1, t);
        };
        bool mono = true;
        double prev = path(0.0);
        for (int i = 1; i <= 4000 && mono; ++i) {
            double cur = path(i / 4000.0);
            if (!(cur > prev)) mono = false;
            prev = cur;
        }
        if (mono) return {path, delta};
    }
    throw InternalInconsistency("no monotone germ join found");
}

}  // namespace detail

struct Representative {
    DevelopedStructure structure;
    double germ_width = 0;  // 0 when the path is a single closed formula
};

// Model developing data for a class, built from endpoint germs that pin the
// holonomy exactly.
inline Representative build_representative(const StructureClass& c) {
    c.validate();
    Representative r;
    switch (c.family) {
        case Family::E: {
            double al = c.alpha;
            r.structure.theta = [al](double t) { return al * t / 2; };
            r.structure.holonomy = MoebiusMap::rotation(al / 2);
            return r;
        }
        case Family::H: {
            double al = c.alpha;
            r.structure.holonomy = MoebiusMap::scaling(std::exp(al / 2));
            if (c.n == 0) {
                r.structure.theta = [al](double t) { return std::atan(std::exp(al * t)); };
                return r;
            }
            int n = c.n;
            detail::Germ g0{
                [al](double t) { return std::atan(std::exp(al * t) - 1); },
                [al](double t) {
                    double e = std::exp(al * t);
                    return al * e / (1 + (e - 1) * (e - 1));
                }};
            detail::Germ g1{
                [al, n](double t) {
                    double e = std::exp(al) * (std::exp(al * (t - 1)) - 1);
                    return n * kPi + std::atan(e);
                },
                [al](double t) {
                    double e = std::exp(al) * (std::exp(al * (t - 1)) - 1);
                    double de = al * std::exp(al) * std::exp(al * (t - 1));
                    return de / (1 + e * e);
                }};
            auto [path, delta] = detail::join_germs(g0, g1);
            r.structure.theta = path;
            r.germ_width = delta;
            return r;
        }
        case Family::P: {
            int eps = c.eps;
            r.structure.holonomy = MoebiusMap::translation(eps);
            if (c.n == 0) {
                // eps = +1 here; the path dodges the fixed direction.
                r.structure.theta = [](double t) { return std::atan(t); };
                return r;
            }
            int n = c.n;
            detail::Germ g0{
                [](double t) { return kPi / 2 + std::atan(t); },
                [](double t) { return 1.0 / (1 + t * t); }};
            detail::Germ g1{
                [eps, n](double t) {
                    double u = 1 - t;
                    return n * kPi + kPi / 2 - std::atan(u / (1 + eps * u));
                },
                [eps](double t) {
                    double u = 1 - t;
                    double q = 1 + eps * u;
                    return 1.0 / (q * q + u * u);
                }};
            auto [path, delta] = detail::join_germs(g0, g1);
            r.structure.theta = path;
            r.germ_width = delta;
            return r;
        }
    }
    throw InternalInconsistency("unreachable");
}

inline DevelopedStructure representative(const StructureClass& c) {
    return build_representative(c).structure;
}

}  // namespace moebius
