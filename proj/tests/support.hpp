#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "moebius/structure.hpp"
#include "moebius/structure_class.hpp"

namespace testsupport {

using moebius::StructureClass;

// The evaluation grid: four elliptic angles, the hyperbolic grid over
// n = 0..3 with the same angles, and the parabolic labels n = 0..3 without
// the nonexistent P(0,-1). 27 classes in total.
inline std::vector<StructureClass> grid_classes() {
    std::vector<StructureClass> v;
    const double angles[] = {0.3, 1.0, 2 * moebius::kPi, 7.0};
    for (double a : angles) v.push_back(StructureClass::E(a));
    for (int n = 0; n <= 3; ++n)
        for (double a : angles) v.push_back(StructureClass::H(n, a));
    for (int n = 0; n <= 3; ++n)
        for (int e : {1, -1}) {
            if (n == 0 && e == -1) continue;
            v.push_back(StructureClass::P(n, e));
        }
    return v;
}

// Count formula applied to a rise known in closed form.
inline int count_of_rise(double r) {
    double q = r / moebius::kPi;
    long m = std::lround(q);
    if (std::abs(q - m) < 1e-9) return static_cast<int>(m);
    return static_cast<int>(std::floor(q)) + 1;
}

// Expected preimage counts over windows of width 1 and 2, stated
// independently of the scanning code.
inline std::pair<int, int> expected_window_counts(const StructureClass& c) {
    switch (c.family) {
        case moebius::Family::E:
            return {count_of_rise(c.alpha / 2), count_of_rise(c.alpha)};
        case moebius::Family::P:
            if (c.eps > 0) return {c.n + 1, 2 * c.n + 1};
            return {c.n, 2 * c.n};
        case moebius::Family::H:
            return {c.n + 1, 2 * c.n + 1};
    }
    return {-1, -1};
}

// Direct preimage count over half-open windows from dense grids, with no
// rise maximization: the oracle for window_count.
inline int brute_window_count(const moebius::StructureLift& L, double w) {
    int best = 0;
    for (int i = 0; i <= 200; ++i) {
        double x = -1.0 + 2.0 * i / 200.0;
        double a = L.theta_ext(x), b = L.theta_ext(x + w);
        for (int j = 0; j < 97; ++j) {
            double tau = moebius::kPi * j / 97.0;
            int cnt = static_cast<int>(std::floor((b - tau) / moebius::kPi)) -
                      static_cast<int>(std::floor((a - tau) / moebius::kPi));
            best = std::max(best, cnt);
        }
    }
    return best;
}

}  // namespace testsupport
