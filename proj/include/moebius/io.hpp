#pragma once

#include <json.hpp>

#include <cctype>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "classify.hpp"
#include "errors.hpp"
#include "octagon.hpp"
#include "permutation.hpp"
#include "structure.hpp"
#include "structure_class.hpp"

namespace moebius::io {

using json = nlohmann::ordered_json;

inline json class_to_json(const StructureClass& c) {
    json j;
    switch (c.family) {
        case Family::E:
            j["type"] = "E";
            j["alpha"] = c.alpha;
            break;
        case Family::P:
            j["type"] = "P";
            j["n"] = c.n;
            j["eps"] = c.eps;
            break;
        case Family::H:
            j["type"] = "H";
            j["n"] = c.n;
            j["alpha"] = c.alpha;
            break;
    }
    return j;
}

inline StructureClass class_from_json(const json& j) {
    try {
        std::string t = j.at("type").get<std::string>();
        if (t == "E") return StructureClass::E(j.at("alpha").get<double>());
        if (t == "P") return StructureClass::P(j.at("n").get<int>(), j.at("eps").get<int>());
        if (t == "H")
            return StructureClass::H(j.at("n").get<int>(), j.at("alpha").get<double>());
        throw ParseError("unknown class type '" + t + "'");
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed class object: ") + e.what());
    } catch (const InternalInconsistency& e) {
        throw ParseError(e.what());
    }
}

namespace detail {

inline std::string trimmed(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

inline double spec_real(const std::string& tok) {
    std::string t = trimmed(tok);
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(t, &used);
    } catch (...) {
        throw ParseError("bad number '" + tok + "'");
    }
    if (used != t.size()) throw ParseError("bad number '" + tok + "'");
    return v;
}

inline int spec_int(const std::string& tok) {
    std::string t = trimmed(tok);
    size_t used = 0;
    long v = 0;
    try {
        v = std::stol(t, &used);
    } catch (...) {
        throw ParseError("bad integer '" + tok + "'");
    }
    if (used != t.size()) throw ParseError("bad integer '" + tok + "'");
    return static_cast<int>(v);
}

}  // namespace detail

// Class specs as written on the command line: E(a), P(n,+1), P(n,-1),
// H(n,a). The one label that names no class, P(0,-1), is rejected here too.
inline StructureClass parse_class_spec(const std::string& spec) {
    std::string s = detail::trimmed(spec);
    if (s.size() < 4 || s.back() != ')' || s[1] != '(')
        throw ParseError("class spec must look like E(a), P(n,e) or H(n,a)");
    char fam = s[0];
    std::string args = s.substr(2, s.size() - 3);
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t comma = args.find(',', start);
        if (comma == std::string::npos) {
            parts.push_back(args.substr(start));
            break;
        }
        parts.push_back(args.substr(start, comma - start));
        start = comma + 1;
    }
    try {
        if (fam == 'E' && parts.size() == 1)
            return StructureClass::E(detail::spec_real(parts[0]));
        if (fam == 'P' && parts.size() == 2)
            return StructureClass::P(detail::spec_int(parts[0]), detail::spec_int(parts[1]));
        if (fam == 'H' && parts.size() == 2)
            return StructureClass::H(detail::spec_int(parts[0]), detail::spec_real(parts[1]));
    } catch (const InternalInconsistency& e) {
        throw ParseError(e.what());
    }
    throw ParseError("class spec must look like E(a), P(n,e) or H(n,a)");
}

inline json projective_to_json(const ProjectiveInvariant& p) {
    json j;
    switch (p.kind) {
        case ProjectiveInvariant::Kind::Identity: j["kind"] = "identity"; break;
        case ProjectiveInvariant::Kind::Elliptic: j["kind"] = "elliptic"; break;
        case ProjectiveInvariant::Kind::Parabolic: j["kind"] = "parabolic"; break;
        case ProjectiveInvariant::Kind::Hyperbolic: j["kind"] = "hyperbolic"; break;
    }
    j["value"] = p.value;
    j["window2"] = p.window2;
    return j;
}

inline json certificate_to_json(const Certificate& c) {
    json steps = json::array();
    for (const CertStep& s : c.steps) {
        json js;
        switch (s.op) {
            case CertStep::Op::Pants:
                js["op"] = "pants";
                js["family"] = to_string(s.family);
                js["x"] = s.x;
                break;
            case CertStep::Op::SelfGlue:
                js["op"] = "self_glue";
                js["i"] = s.i;
                js["j"] = s.j;
                break;
            case CertStep::Op::Attach:
                if (s.sub.size() != 1)
                    throw InternalInconsistency("attach step without its sub-certificate");
                js["op"] = "attach";
                js["i"] = s.i;
                js["sub"] = certificate_to_json(s.sub[0]);
                break;
            case CertStep::Op::Scale:
                js["op"] = "scale";
                js["k"] = s.k;
                break;
            case CertStep::Op::Disk:
                js["op"] = "disk";
                break;
        }
        steps.push_back(std::move(js));
    }
    json j;
    j["target"] = class_to_json(c.target);
    j["steps"] = std::move(steps);
    return j;
}

inline Certificate certificate_from_json(const json& j) {
    Certificate c;
    try {
        c.target = class_from_json(j.at("target"));
        for (const json& js : j.at("steps")) {
            std::string op = js.at("op").get<std::string>();
            if (op == "pants") {
                std::string fam = js.at("family").get<std::string>();
                if (fam != "fig4" && fam != "fig6")
                    throw ParseError("unknown pants family '" + fam + "'");
                c.steps.push_back(CertStep::pants(
                    fam == "fig4" ? PantsFamily::Fig4 : PantsFamily::Fig6,
                    js.at("x").get<double>()));
            } else if (op == "self_glue") {
                c.steps.push_back(
                    CertStep::self_glue(js.at("i").get<int>(), js.at("j").get<int>()));
            } else if (op == "attach") {
                c.steps.push_back(CertStep::attach(js.at("i").get<int>(),
                                                   certificate_from_json(js.at("sub"))));
            } else if (op == "scale") {
                c.steps.push_back(CertStep::scale(js.at("k").get<int>()));
            } else if (op == "disk") {
                c.steps.push_back(CertStep::disk());
            } else {
                throw ParseError("unknown step op '" + op + "'");
            }
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what());
    }
    return c;
}

inline json trace_to_json(const VerifyTrace& t) {
    json steps = json::array();
    for (const auto& e : t.entries) {
        json boundary = json::array();
        for (const auto& b : e.boundary) boundary.push_back(class_to_json(b));
        json js;
        js["op"] = e.op;
        js["boundary"] = std::move(boundary);
        js["chi"] = e.chi;
        steps.push_back(std::move(js));
    }
    json j;
    j["ok"] = t.ok;
    j["steps"] = std::move(steps);
    if (!t.ok) j["error"] = t.error;
    return j;
}

inline json perm_to_json(const Perm& p) {
    json a = json::array();
    for (int i = 1; i <= p.size(); ++i) a.push_back(p(i));
    return a;
}

inline json witness_to_json(const PermWitness& w) {
    json images = json::array();
    for (const Perm& p : w.images) images.push_back(perm_to_json(p));
    json j;
    j["k"] = w.k;
    j["genus"] = w.genus;
    j["sigma"] = perm_to_json(w.sigma);
    j["tau"] = perm_to_json(w.tau);
    j["images"] = std::move(images);
    j["commutator"] = perm_to_json(w.boundary());
    j["transitive"] = w.transitive();
    return j;
}

inline json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

inline json octagon_to_json(const Octagon& o) {
    json verts = json::array();
    for (const cplx& v : o.vertex) verts.push_back(complex_to_json(v));
    json sides = json::array();
    for (const OctagonSide& s : o.side) {
        json js;
        js["from"] = complex_to_json(s.from);
        js["to"] = complex_to_json(s.to);
        if (s.parent.is_line) {
            js["line"] = true;
            js["point"] = complex_to_json(s.parent.point);
            js["dir"] = complex_to_json(s.parent.dir);
        } else {
            js["line"] = false;
            js["center"] = complex_to_json(s.parent.center);
            js["radius"] = s.parent.radius;
            js["phi_start"] = s.phi_start;
            js["sweep"] = s.sweep;
        }
        sides.push_back(std::move(js));
    }
    json j;
    j["vertices"] = std::move(verts);
    j["sides"] = std::move(sides);
    return j;
}

// Two periods of the extended angle path as rows "t,theta", uniform in t.
// Full write precision round-trips doubles; the pretty printer trims.
inline void write_samples_csv(std::ostream& os, const DevelopedStructure& s, int samples,
                              int precision = 17) {
    StructureLift lift(s);
    os << "t,theta\n";
    os << std::setprecision(precision);
    for (int i = 0; i <= samples; ++i) {
        double t = 2.0 * i / samples;
        os << t << "," << lift.theta_ext(t) << "\n";
    }
}

// Inverse of the dump above: header, then uniform samples of the angle path
// over two periods. Uniformity of the t column is enforced, the rest of the
// validation happens when the samples are turned back into a structure.
inline std::vector<double> read_samples_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty sample file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "t,theta") throw ParseError("expected header 't,theta'");
    std::vector<double> ts, th;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError("sample row without a comma: '" + line + "'");
        ts.push_back(detail::spec_real(line.substr(0, comma)));
        th.push_back(detail::spec_real(line.substr(comma + 1)));
    }
    if (ts.size() < 2) throw ParseError("not enough sample rows");
    for (size_t i = 0; i < ts.size(); ++i) {
        double expect = 2.0 * static_cast<double>(i) / (static_cast<double>(ts.size()) - 1);
        if (std::abs(ts[i] - expect) > 1e-9)
            throw ParseError("t column must be uniform over [0, 2]");
    }
    return th;
}

}  // namespace moebius::io
