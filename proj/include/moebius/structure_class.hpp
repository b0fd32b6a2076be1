#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include "errors.hpp"

namespace moebius {

enum class Family { E, P, H };

// Isomorphism class of a structure on the circle: elliptic E(alpha) with
// alpha > 0, parabolic P(n, eps) with eps = +-1 and (0, -1) excluded,
// hyperbolic H(n, alpha) with n >= 0 and alpha > 0.
struct StructureClass {
    Family family = Family::E;
    int n = 0;
    int eps = 1;
    double alpha = 0;

    static StructureClass E(double alpha) {
        StructureClass c;
        c.family = Family::E;
        c.alpha = alpha;
        c.validate();
        return c;
    }
    static StructureClass P(int n, int eps) {
        StructureClass c;
        c.family = Family::P;
        c.n = n;
        c.eps = eps;
        c.validate();
        return c;
    }
    static StructureClass H(int n, double alpha) {
        StructureClass c;
        c.family = Family::H;
        c.n = n;
        c.alpha = alpha;
        c.validate();
        return c;
    }

    void validate() const {
        switch (family) {
            case Family::E:
                if (!(alpha > 0)) throw InternalInconsistency("E needs alpha > 0");
                break;
            case Family::P:
                if (n < 0 || (eps != 1 && eps != -1))
                    throw InternalInconsistency("bad parabolic label");
                if (n == 0 && eps == -1)
                    throw InternalInconsistency("the class P(0,-1) does not exist");
                break;
            case Family::H:
                if (n < 0 || !(alpha > 0))
                    throw InternalInconsistency("bad hyperbolic label");
                break;
        }
    }

    bool approx_equal(const StructureClass& o, double tol = 1e-6) const {
        if (family != o.family) return false;
        switch (family) {
            case Family::E:
                return std::abs(alpha - o.alpha) <= tol * std::max(1.0, std::abs(alpha));
            case Family::P:
                return n == o.n && eps == o.eps;
            case Family::H:
                return n == o.n &&
                       std::abs(alpha - o.alpha) <= tol * std::max(1.0, std::abs(alpha));
        }
        return false;
    }

    std::string str() const {
        std::ostringstream os;
        os.precision(12);
        switch (family) {
            case Family::E: os << "E(" << alpha << ")"; break;
            case Family::P: os << "P(" << n << "," << (eps > 0 ? "+1" : "-1") << ")"; break;
            case Family::H: os << "H(" << n << "," << alpha << ")"; break;
        }
        return os.str();
    }
};

// Class of the k-fold pullback along the degree-k self-cover of the circle.
inline StructureClass multiply_class(int k, const StructureClass& c) {
    if (k < 1) throw InternalInconsistency("pullback degree must be positive");
    switch (c.family) {
        case Family::E: return StructureClass::E(k * c.alpha);
        case Family::P: return StructureClass::P(k * c.n, c.eps);
        case Family::H: return StructureClass::H(k * c.n, k * c.alpha);
    }
    throw InternalInconsistency("unreachable");
}

}  // namespace moebius
