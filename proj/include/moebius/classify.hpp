#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>

#include "circle.hpp"
#include "structure.hpp"
#include "structure_class.hpp"

namespace moebius {

struct ClassifyOptions {
    double tol = kDefaultTol;
    // How close to an exact multiple of pi a maximal rise must be to count
    // as aligned. Interpolated sample data needs a looser value than
    // closed-form paths.
    double snap_tol = 1e-6;
};

// Full isomorphism class of the structure. The holonomy type picks the
// family; window preimage counts and frame-adapted invariants pin the
// discrete parameters.
inline StructureClass classify(const StructureLift& L, const ClassifyOptions& opt = {}) {
    const MoebiusMap& h = L.structure().holonomy;
    if (h.is_identity(opt.tol)) {
        double alpha = 2 * (L.theta_ext(1.0) - L.theta_ext(0.0));
        double m = std::round(alpha / (2 * kPi));
        if (m < 1 || std::abs(alpha - 2 * kPi * m) > 1e-6 * std::max(1.0, alpha))
            throw InternalInconsistency("identity holonomy with a non-integral turn count");
        return StructureClass::E(alpha);
    }
    switch (map_kind(h, opt.tol)) {
        case MapKind::Elliptic: {
            int k = L.displacement_floor();
            double beta = rotation_angle(h, GeneralizedCircle::real_line(), opt.tol);
            return StructureClass::E(2 * kPi * k + beta);
        }
        case MapKind::Parabolic: {
            int eps = parabolic_sign(h, GeneralizedCircle::real_line(), opt.tol);
            int w1 = L.window_count(1.0, opt.snap_tol);
            int n = eps > 0 ? w1 - 1 : w1;
            if (n == 0 && eps == -1)
                throw InternalInconsistency("window data names the impossible class P(0,-1)");
            return StructureClass::P(n, eps);
        }
        case MapKind::Hyperbolic: {
            double alpha = translation_length(h, opt.tol);
            int n = L.window_count(1.0, opt.snap_tol) - 1;
            return StructureClass::H(n, alpha);
        }
        default:
            throw InternalInconsistency("holonomy of a real structure must be real");
    }
}

inline StructureClass classify(const DevelopedStructure& s, const ClassifyOptions& opt = {}) {
    return classify(StructureLift(s), opt);
}

// What survives of the class when structures are compared only up to the
// weaker equivalence that forgets orientation of the conjugating frame:
// the absolute holonomy data plus the two-period window count.
struct ProjectiveInvariant {
    enum class Kind { Identity, Elliptic, Parabolic, Hyperbolic };
    Kind kind = Kind::Identity;
    double value = 0;  // Elliptic: min(beta, 2pi - beta); Hyperbolic: alpha
    int window2 = 0;

    bool approx_equal(const ProjectiveInvariant& o, double tol = 1e-6) const {
        return kind == o.kind && window2 == o.window2 &&
               std::abs(value - o.value) <= tol * std::max(1.0, std::abs(value));
    }

    std::string str() const {
        std::ostringstream os;
        os.precision(12);
        switch (kind) {
            case Kind::Identity: os << "[identity"; break;
            case Kind::Elliptic: os << "[elliptic " << value; break;
            case Kind::Parabolic: os << "[parabolic"; break;
            case Kind::Hyperbolic: os << "[hyperbolic " << value; break;
        }
        os << ", w2=" << window2 << "]";
        return os.str();
    }
};

inline ProjectiveInvariant classify_projective(const StructureLift& L,
                                               const ClassifyOptions& opt = {}) {
    StructureClass c = classify(L, opt);
    ProjectiveInvariant p;
    p.window2 = L.window_count(2.0, opt.snap_tol);
    switch (c.family) {
        case Family::E: {
            double r = c.alpha - 2 * kPi * std::round(c.alpha / (2 * kPi));
            if (std::abs(r) < 1e-9) {
                p.kind = ProjectiveInvariant::Kind::Identity;
            } else {
                double beta = c.alpha - 2 * kPi * std::floor(c.alpha / (2 * kPi));
                p.kind = ProjectiveInvariant::Kind::Elliptic;
                p.value = std::min(beta, 2 * kPi - beta);
            }
            break;
        }
        case Family::P:
            p.kind = ProjectiveInvariant::Kind::Parabolic;
            break;
        case Family::H:
            p.kind = ProjectiveInvariant::Kind::Hyperbolic;
            p.value = c.alpha;
            break;
    }
    return p;
}

inline ProjectiveInvariant classify_projective(const DevelopedStructure& s,
                                               const ClassifyOptions& opt = {}) {
    return classify_projective(StructureLift(s), opt);
}

}  // namespace moebius
