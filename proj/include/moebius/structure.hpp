#pragma once

#include <functional>
#include <memory>
#include <sstream>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lift.hpp"
#include "moebius_map.hpp"

namespace moebius {

// A structure on the circle, described by its developing data in the angle
// model: a continuous lifted angle path on [0, 1] together with the
// holonomy, a real-entried map whose lifted action sends theta(0) to
// theta(1). The path needs no smoothness, only continuity.
struct DevelopedStructure {
    std::function<double(double)> theta;
    MoebiusMap holonomy;
};

// Extends the angle path to all of the real line via the holonomy and
// answers rise/preimage-count queries. The extension G (the lift of the
// holonomy pinned down by theta(1)) is applied iteratively rather than
// through cached matrix powers: lifts commute with pi-shifts, so the m-th
// iterate of G is the lift of the m-th power, and iterating sidesteps the
// determinant cancellation that large-trace matrix powers suffer.
class StructureLift {
public:
    static constexpr int kRange = 6;

    explicit StructureLift(DevelopedStructure s, double branch_tol = 1e-6)
        : s_(std::move(s)) {
        double th0 = s_.theta(0.0);
        double th1 = s_.theta(1.0);
        fwd_ = RealLift::from(s_.holonomy);
        double k1 = std::round((th1 - fwd_(th0)) / kPi);
        check_branch(th1 - fwd_(th0) - k1 * kPi, branch_tol);
        fshift_ = k1 * kPi;

        bwd_ = RealLift::from(s_.holonomy.inverse());
        double cinv = th0 - bwd_(fwd_(th0) + fshift_);
        double kinv = std::round(cinv / kPi);
        check_branch(cinv - kinv * kPi, branch_tol);
        bshift_ = kinv * kPi;
    }

    const DevelopedStructure& structure() const { return s_; }

    double theta_ext(double x) const {
        double fm = std::floor(x);
        int m = static_cast<int>(fm);
        double t = x - fm;
        if (t >= 1.0) { m += 1; t = 0.0; }
        if (m < -kRange || m > kRange)
            throw InternalInconsistency("lift extension out of cached range");
        double y = s_.theta(t);
        for (int i = 0; i < m; ++i) y = fwd_(y) + fshift_;
        for (int i = 0; i > m; --i) y = bwd_(y) + bshift_;
        return y;
    }

    double rise(double x, double w) const { return theta_ext(x + w) - theta_ext(x); }

    // Largest rise over any window of width w (grid scan plus a local
    // golden-section polish around the best cell).
    double max_rise(double w, int grid = 4000) const {
        const double lo = -2.5, hi = 2.5;
        double best = -1e300, bx = lo;
        for (int i = 0; i <= grid; ++i) {
            double x = lo + (hi - lo) * i / grid;
            double r = rise(x, w);
            if (r > best) { best = r; bx = x; }
        }
        double h = (hi - lo) / grid;
        double a = bx - h, b = bx + h;
        const double gr = 0.6180339887498949;
        double c = b - gr * (b - a), d = a + gr * (b - a);
        double fc = rise(c, w), fd = rise(d, w);
        for (int it = 0; it < 120; ++it) {
            if (fc > fd) {
                b = d; d = c; fd = fc;
                c = b - gr * (b - a); fc = rise(c, w);
            } else {
                a = c; c = d; fc = fd;
                d = a + gr * (b - a); fd = rise(d, w);
            }
        }
        return std::max(best, std::max(fc, fd));
    }

    // Largest number of preimages of a single angle class over any
    // half-open window of width w. An exact multiple of pi in the maximal
    // rise means the supremum window is aligned and the endpoint does not
    // count; snap_tol decides what "exact" means.
    int window_count(double w, double snap_tol = 1e-6) const {
        double q = max_rise(w) / kPi;
        long m = std::lround(q);
        if (std::abs(q - m) < snap_tol) return static_cast<int>(m);
        return static_cast<int>(std::floor(q)) + 1;
    }

    // floor(displacement / pi) of the extension, sampled away from special
    // alignments. For an elliptic holonomy the displacement stays strictly
    // between consecutive multiples of pi, so the floor is well defined.
    int displacement_floor() const {
        double best = -1e300;
        for (double x : {0.0, 0.137, 0.29, 0.41, 0.563, 0.71, 0.88})
            best = std::max(best, rise(x, 1.0));
        return static_cast<int>(std::floor(best / kPi + 1e-9));
    }

private:
    static void check_branch(double resid, double tol) {
        if (std::abs(resid) > tol) {
            std::ostringstream os;
            os << "developing data disagrees with the holonomy (residual " << resid << ")";
            throw InternalInconsistency(os.str());
        }
    }

    DevelopedStructure s_;
    RealLift fwd_, bwd_;
    double fshift_ = 0, bshift_ = 0;
};

// Pullback along the degree-k self-cover of the circle: the new path walks
// k periods of the old extension, the new holonomy is the k-th power.
inline DevelopedStructure pullback(const DevelopedStructure& s, int k) {
    if (k < 1 || k > StructureLift::kRange)
        throw InternalInconsistency("pullback degree out of range");
    auto lift = std::make_shared<StructureLift>(s);
    DevelopedStructure p;
    p.theta = [lift, k](double t) { return lift->theta_ext(k * t); };
    p.holonomy = s.holonomy.pow(k);
    return p;
}

// Rebuild developing data from uniform angle samples over two periods
// (t = 0 .. 2 inclusive). The holonomy is fitted from three node pairs one
// period apart and then checked against every node.
inline DevelopedStructure structure_from_samples(std::vector<double> th, double tol = 1e-6) {
    const size_t n = th.size();
    if (n < 33 || (n - 1) % 2 != 0)
        throw ParseError("need an odd number of samples (at least 33) covering two periods");
    for (size_t i = 1; i < n; ++i)
        if (!(th[i] > th[i - 1]))
            throw ParseError("angle samples must increase strictly");
    const size_t half = (n - 1) / 2;

    double rise = th[half] - th[0];
    double thr = std::min(0.3, rise / 4);
    size_t i1 = 0, i2 = 0, i3 = 0;
    for (size_t i = i1 + 1; i <= half; ++i)
        if (std::abs(principal_mod_pi(th[i] - th[i1])) > thr) { i2 = i; break; }
    for (size_t i = i2 + 1; i2 && i <= half; ++i)
        if (std::abs(principal_mod_pi(th[i] - th[i1])) > thr &&
            std::abs(principal_mod_pi(th[i] - th[i2])) > thr) { i3 = i; break; }
    if (!i2 || !i3)
        throw ParseError("samples too degenerate to fit a holonomy");

    MoebiusMap h = triple_to_triple(point_of_angle(th[i1]), point_of_angle(th[i2]),
                                    point_of_angle(th[i3]),
                                    point_of_angle(th[i1 + half]),
                                    point_of_angle(th[i2 + half]),
                                    point_of_angle(th[i3 + half]))
                       .real_normalized(1e-4);
    for (size_t i = 0; i <= half; ++i) {
        double err = chordal(h(point_of_angle(th[i])), point_of_angle(th[i + half]));
        if (err > tol * 10)
            throw ParseError("samples are not equivariant under any holonomy");
    }

    auto data = std::make_shared<std::vector<double>>(std::move(th));
    DevelopedStructure s;
    s.theta = [data, half](double t) {
        double x = t * static_cast<double>(half);
        double fi = std::floor(x);
        size_t i = static_cast<size_t>(fi);
        if (i >= half) return (*data)[half] + (x - static_cast<double>(half));
        double frac = x - fi;
        return (*data)[i] * (1 - frac) + (*data)[i + 1] * frac;
    };
    s.holonomy = h;
    return s;
}

}  // namespace moebius
