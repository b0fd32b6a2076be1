#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "errors.hpp"
#include "pants.hpp"
#include "permutation.hpp"
#include "representatives.hpp"
#include "structure.hpp"
#include "structure_class.hpp"

namespace moebius {

struct Certificate;

// One surface-building move. Attach carries its sub-certificate by value in
// a one-element vector so the step type stays copyable despite the recursion.
struct CertStep {
    enum class Op { Pants, SelfGlue, Attach, Scale, Disk };

    Op op = Op::Disk;
    PantsFamily family = PantsFamily::Fig4;
    double x = 0;
    int i = 0;
    int j = 0;
    int k = 1;
    std::vector<Certificate> sub;

    static CertStep pants(PantsFamily f, double x) {
        CertStep s;
        s.op = Op::Pants;
        s.family = f;
        s.x = x;
        return s;
    }
    static CertStep self_glue(int i, int j) {
        CertStep s;
        s.op = Op::SelfGlue;
        s.i = i;
        s.j = j;
        return s;
    }
    static CertStep attach(int i, Certificate c);
    static CertStep scale(int k) {
        CertStep s;
        s.op = Op::Scale;
        s.k = k;
        return s;
    }
    static CertStep disk() { return CertStep{}; }

    std::string str() const;
};

// A replayable witness that the target class bounds: starting from nothing,
// the steps build a compact surface whose single remaining boundary carries
// the target. Capping that last boundary is deliberately not a step.
struct Certificate {
    StructureClass target;
    std::vector<CertStep> steps;
};

inline CertStep CertStep::attach(int i, Certificate c) {
    CertStep s;
    s.op = Op::Attach;
    s.i = i;
    s.sub.push_back(std::move(c));
    return s;
}

inline std::string CertStep::str() const {
    std::ostringstream os;
    os.precision(12);
    switch (op) {
        case Op::Pants: os << "pants " << to_string(family) << " x=" << x; break;
        case Op::SelfGlue: os << "self_glue " << i << " " << j; break;
        case Op::Attach: os << "attach " << i; break;
        case Op::Scale: os << "scale " << k; break;
        case Op::Disk: os << "disk"; break;
    }
    return os.str();
}

// Disjoint union of the surfaces built so far: the ordered list of open
// boundary classes and the total euler characteristic. Step indices refer
// to positions in the current list.
struct SurfaceState {
    std::vector<StructureClass> boundary;
    int chi = 0;

    int count() const { return static_cast<int>(boundary.size()); }
};

struct VerifyTrace {
    struct Entry {
        std::string op;
        std::vector<StructureClass> boundary;
        int chi = 0;
    };
    std::vector<Entry> entries;
    bool ok = false;
    std::string error;
};

VerifyTrace verify(const Certificate& cert);

namespace detail {

// Spot checks that replacing a one-boundary surface by its degree-k cover
// multiplies the class the way the bookkeeping claims. Small k is checked
// geometrically against a classified pullback; larger odd k gets the exact
// cover data validated; larger even k rides on the doubled-boundary
// construction and has nothing cheap to recompute here.
inline void check_scale_soundness(const StructureClass& c, int k, int chi) {
    if (k <= 3) {
        StructureClass expect = multiply_class(k, c);
        StructureClass got = classify(pullback(representative(c), k));
        if (!got.approx_equal(expect, 1e-6))
            throw InvalidStep("scaled class " + expect.str() +
                              " disagrees with the classified cover " + got.str());
    } else if (k % 2 == 1 && chi % 2 != 0 && (1 - chi) / 2 >= 1) {
        surface_cover_hom((1 - chi) / 2, k);
    }
}

}  // namespace detail

inline SurfaceState apply_step(SurfaceState st, const CertStep& s) {
    switch (s.op) {
        case CertStep::Op::Pants: {
            if (std::abs(s.x - 4.0) <= kDefaultTol && s.x != 4.0)
                throw InvalidStep(
                    "pants parameter sits in the ambiguous band at the wall; "
                    "pass x = 4 exactly to mean the wall");
            BoundaryTriple bt;
            try {
                bt = boundary_structures(build_pants(s.family, s.x));
            } catch (const Error& e) {
                throw InvalidStep(std::string("pants construction failed: ") + e.what());
            }
            st.boundary.push_back(bt.arcX2X3_class);
            st.boundary.push_back(bt.arcX6X7_class);
            st.boundary.push_back(bt.third_class);
            st.chi -= 1;
            return st;
        }
        case CertStep::Op::SelfGlue: {
            if (s.i == s.j || s.i < 0 || s.j < 0 || s.i >= st.count() || s.j >= st.count())
                throw InvalidStep("self-glue needs two distinct existing boundaries");
            if (!st.boundary[s.i].approx_equal(st.boundary[s.j]))
                throw InvalidStep("self-glue joins unequal classes " +
                                  st.boundary[s.i].str() + " and " + st.boundary[s.j].str());
            int hi = std::max(s.i, s.j), lo = std::min(s.i, s.j);
            st.boundary.erase(st.boundary.begin() + hi);
            st.boundary.erase(st.boundary.begin() + lo);
            return st;
        }
        case CertStep::Op::Attach: {
            if (s.sub.size() != 1)
                throw InvalidStep("attach carries no sub-certificate");
            if (s.i < 0 || s.i >= st.count())
                throw InvalidStep("attach index is out of range");
            VerifyTrace vt = verify(s.sub[0]);
            if (!vt.ok)
                throw InvalidStep("attached certificate fails: " + vt.error);
            if (!s.sub[0].target.approx_equal(st.boundary[s.i]))
                throw InvalidStep("attached certificate bounds " + s.sub[0].target.str() +
                                  " but the boundary is " + st.boundary[s.i].str());
            st.chi += vt.entries.back().chi;
            st.boundary.erase(st.boundary.begin() + s.i);
            return st;
        }
        case CertStep::Op::Scale: {
            if (s.k < 1) throw InvalidStep("scale degree must be positive");
            if (st.count() != 1)
                throw InvalidStep("scale needs exactly one boundary component");
            if (st.chi > 0)
                throw InvalidStep("scale needs nonpositive euler characteristic");
            detail::check_scale_soundness(st.boundary[0], s.k, st.chi);
            st.boundary[0] = multiply_class(s.k, st.boundary[0]);
            st.chi *= s.k;
            return st;
        }
        case CertStep::Op::Disk: {
            st.boundary.push_back(StructureClass::E(2 * kPi));
            st.chi += 1;
            return st;
        }
    }
    throw InvalidStep("unknown step");
}

// Replay from the empty state. Every pants boundary class is recomputed
// geometrically, never read from the certificate; false plus the partial
// trace on any refused step.
inline VerifyTrace verify(const Certificate& cert) {
    VerifyTrace t;
    SurfaceState st;
    for (size_t n = 0; n < cert.steps.size(); ++n) {
        const CertStep& s = cert.steps[n];
        try {
            st = apply_step(std::move(st), s);
        } catch (const std::exception& e) {
            std::ostringstream os;
            os << "step " << n << " (" << s.str() << "): " << e.what();
            t.error = os.str();
            return t;
        }
        t.entries.push_back({s.str(), st.boundary, st.chi});
    }
    if (st.count() != 1) {
        std::ostringstream os;
        os << "final state has " << st.count() << " boundary components";
        t.error = os.str();
        return t;
    }
    if (!st.boundary[0].approx_equal(cert.target)) {
        t.error = "final boundary " + st.boundary[0].str() + " is not the target " +
                  cert.target.str();
        return t;
    }
    t.ok = true;
    return t;
}

Certificate generate(const StructureClass& target);

namespace detail {

// Symmetric pants with its two parabolic boundaries glued to each other:
// a one-boundary surface whose class is the third-boundary class at x.
inline Certificate glued_base(double x, const StructureClass& cls) {
    Certificate c;
    c.target = cls;
    c.steps.push_back(CertStep::pants(PantsFamily::Fig4, x));
    c.steps.push_back(CertStep::self_glue(0, 1));
    return c;
}

// Bracket hunt on the chosen side of the wall, shrinking toward it when a
// bracket is refused. Failures carry the sweep record.
inline double solved_x_near_wall(const StructureClass& base, bool below) {
    double delta = 0.5;
    std::ostringstream attempts;
    for (int it = 0; it < 10; ++it) {
        double lo = below ? 4.0 - delta : 4.0;
        double hi = below ? 4.0 : 4.0 + delta;
        try {
            return solve_x(PantsFamily::Fig4, base, lo, hi);
        } catch (const BracketFailure& e) {
            attempts << "\n  [" << lo << ", " << hi << "]: " << e.what();
            delta /= 2;
        }
    }
    throw GeneratorFailure("no bracket near the wall isolates " + base.str() +
                           "; swept:" + attempts.str());
}

// One-boundary surface for a small class on the given side of the wall,
// with the replayed class recomputed at the solved parameter so that the
// certificate target matches the verifier bit for bit.
inline Certificate small_base(const StructureClass& base, bool below) {
    double x = solved_x_near_wall(base, below);
    return glued_base(x, s_class(PantsFamily::Fig4, x));
}

// Crossing pants at x with bounding surfaces attached to its first two
// boundaries; what remains is the third one.
inline Certificate crossing_with_caps(double x, const StructureClass& target) {
    BoundaryTriple bt = boundary_structures(build_pants(PantsFamily::Fig6, x));
    Certificate c;
    c.target = target;
    c.steps.push_back(CertStep::pants(PantsFamily::Fig6, x));
    c.steps.push_back(CertStep::attach(0, generate(bt.arcX2X3_class)));
    c.steps.push_back(CertStep::attach(0, generate(bt.arcX6X7_class)));
    return c;
}

}  // namespace detail

// Produce a certificate the verifier accepts. Elliptic and winding-free
// hyperbolic targets come from the symmetric family near the wall, scaled
// up when the angle exceeds the small-angle window; parabolic and wound
// hyperbolic targets come from the crossing family with its other
// boundaries capped recursively; higher windings scale a winding-one base.
inline Certificate generate(const StructureClass& target) {
    target.validate();
    const double small = 0.5;
    switch (target.family) {
        case Family::E: {
            int k = static_cast<int>(std::ceil(target.alpha / small));
            if (k < 1) k = 1;
            Certificate c = detail::small_base(StructureClass::E(target.alpha / k), true);
            if (k > 1) c.steps.push_back(CertStep::scale(k));
            c.target = target;
            return c;
        }
        case Family::H: {
            if (target.n == 0) {
                int k = static_cast<int>(std::ceil(target.alpha / small));
                if (k < 1) k = 1;
                Certificate c =
                    detail::small_base(StructureClass::H(0, target.alpha / k), false);
                if (k > 1) c.steps.push_back(CertStep::scale(k));
                c.target = target;
                return c;
            }
            if (target.n == 1) {
                double x = 2.0 * (1.0 + std::cosh(target.alpha / 2));
                return detail::crossing_with_caps(x, target);
            }
            Certificate c = generate(StructureClass::H(1, target.alpha / target.n));
            c.steps.push_back(CertStep::scale(target.n));
            c.target = target;
            return c;
        }
        case Family::P: {
            if (target.n == 0) {
                Certificate c = detail::glued_base(4.0, target);
                return c;
            }
            if (target.n == 1) {
                // below the wall the third boundary is elliptic, on it the
                // sign flips to +1; both leave P(1,-1) and P(0,+1) to cap
                double x = target.eps < 0 ? 3.0 : 4.0;
                if (target.eps < 0) {
                    BoundaryTriple bt =
                        boundary_structures(build_pants(PantsFamily::Fig6, x));
                    Certificate c;
                    c.target = target;
                    c.steps.push_back(CertStep::pants(PantsFamily::Fig6, x));
                    c.steps.push_back(CertStep::attach(0, generate(bt.arcX2X3_class)));
                    c.steps.push_back(CertStep::attach(1, generate(bt.third_class)));
                    return c;
                }
                return detail::crossing_with_caps(x, target);
            }
            Certificate c = generate(StructureClass::P(1, target.eps));
            c.steps.push_back(CertStep::scale(target.n));
            c.target = target;
            return c;
        }
    }
    throw GeneratorFailure("unreachable family");
}

}  // namespace moebius
