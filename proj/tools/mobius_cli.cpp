#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "moebius/certificate.hpp"
#include "moebius/classify.hpp"
#include "moebius/io.hpp"
#include "moebius/octagon.hpp"
#include "moebius/pants.hpp"
#include "moebius/permutation.hpp"
#include "moebius/representatives.hpp"

using namespace moebius;
using io::json;

namespace {

struct Config {
    double tol = 1e-9;
    int samples = 720;
    std::string output = "json";
    unsigned long seed = 0;
};

// Classifier settings for data that went through a file: sample paths are
// interpolated, so alignment snapping needs the loose threshold.
ClassifyOptions sampled_options(const Config& cfg) {
    ClassifyOptions opt;
    opt.tol = cfg.tol;
    opt.snap_tol = 1e-3;
    return opt;
}

std::string pretty_real(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

std::string read_stream(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string class_csv_row(const StructureClass& c) {
    std::ostringstream os;
    os << std::setprecision(17);
    switch (c.family) {
        case Family::E: os << "E,,," << c.alpha; break;
        case Family::P: os << "P," << c.n << "," << c.eps << ","; break;
        case Family::H: os << "H," << c.n << ",," << c.alpha; break;
    }
    return os.str();
}

std::string class_pretty(const StructureClass& c) {
    switch (c.family) {
        case Family::E: return "E(" + pretty_real(c.alpha) + ")";
        case Family::P:
            return "P(" + std::to_string(c.n) + "," + (c.eps > 0 ? "+1" : "-1") + ")";
        case Family::H: return "H(" + std::to_string(c.n) + "," + pretty_real(c.alpha) + ")";
    }
    return "?";
}

int cmd_classify(const Config& cfg, const std::string& input) {
    std::istringstream is(read_stream(input));
    std::vector<double> th = io::read_samples_csv(is);
    DevelopedStructure s = structure_from_samples(th);
    ClassifyOptions opt = sampled_options(cfg);
    StructureClass c = classify(s, opt);
    ProjectiveInvariant p = classify_projective(s, opt);
    if (cfg.output == "csv") {
        std::cout << "type,n,eps,alpha,kind,window2\n"
                  << class_csv_row(c) << "," << io::projective_to_json(p)["kind"].get<std::string>()
                  << "," << p.window2 << "\n";
    } else if (cfg.output == "pretty") {
        std::cout << class_pretty(c) << "  " << p.str() << "\n";
    } else {
        json j;
        j["class"] = io::class_to_json(c);
        j["projective"] = io::projective_to_json(p);
        emit(j);
    }
    return 0;
}

int cmd_rep(const Config& cfg, const std::string& spec) {
    StructureClass c = io::parse_class_spec(spec);
    DevelopedStructure s = representative(c);
    if (cfg.output == "json") {
        StructureLift lift(s);
        json rows = json::array();
        for (int i = 0; i <= cfg.samples; ++i) {
            double t = 2.0 * i / cfg.samples;
            rows.push_back(json::array({t, lift.theta_ext(t)}));
        }
        json j;
        j["class"] = io::class_to_json(c);
        j["samples"] = std::move(rows);
        emit(j);
    } else {
        io::write_samples_csv(std::cout, s, cfg.samples, cfg.output == "pretty" ? 10 : 17);
    }
    return 0;
}

int cmd_pants(const Config& cfg, const std::string& family, double x, bool dump_octagon) {
    PantsFamily fam = family == "fig4" ? PantsFamily::Fig4 : PantsFamily::Fig6;
    PantsStructure p = build_pants(fam, x);
    ConditionReport rep = check_conditions(p, std::max(cfg.tol, 1e-8));
    BoundaryTriple bt = boundary_structures(p);
    if (cfg.output == "csv") {
        std::cout << "boundary,type,n,eps,alpha\n"
                  << "arcX2X3," << class_csv_row(bt.arcX2X3_class) << "\n"
                  << "arcX6X7," << class_csv_row(bt.arcX6X7_class) << "\n"
                  << "third," << class_csv_row(bt.third_class) << "\n";
    } else if (cfg.output == "pretty") {
        std::cout << "family " << family << ", x = " << pretty_real(x) << "\n"
                  << "conditions: incidence " << pretty_real(rep.r1) << ", pairing "
                  << pretty_real(rep.r2) << ", circle match " << pretty_real(rep.r3)
                  << (rep.all() ? " (all hold)" : " (VIOLATED)") << "\n"
                  << "arcX2X3: " << class_pretty(bt.arcX2X3_class) << "\n"
                  << "arcX6X7: " << class_pretty(bt.arcX6X7_class) << "\n"
                  << "third:   " << class_pretty(bt.third_class) << "\n";
    } else {
        json j;
        j["family"] = family;
        j["x"] = x;
        json cond;
        cond["c1"] = rep.c1;
        cond["r1"] = rep.r1;
        cond["c2"] = rep.c2;
        cond["r2"] = rep.r2;
        cond["c3"] = rep.c3;
        cond["r3"] = rep.r3;
        j["conditions"] = std::move(cond);
        json bounds;
        bounds["arcX2X3"] = io::class_to_json(bt.arcX2X3_class);
        bounds["arcX6X7"] = io::class_to_json(bt.arcX6X7_class);
        bounds["third"] = io::class_to_json(bt.third_class);
        j["boundaries"] = std::move(bounds);
        if (dump_octagon) j["octagon"] = io::octagon_to_json(p.octagon);
        emit(j);
    }
    return 0;
}

int cmd_certify(const std::string& spec, const std::string& out) {
    StructureClass c = io::parse_class_spec(spec);
    Certificate cert = generate(c);
    json j = io::certificate_to_json(cert);
    if (out.empty()) {
        emit(j);
    } else {
        std::ofstream f(out);
        if (!f) throw ParseError("cannot open '" + out + "' for writing");
        f << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& input) {
    json j;
    try {
        j = json::parse(read_stream(input));
    } catch (const json::exception& e) {
        throw ParseError(std::string("certificate is not valid json: ") + e.what());
    }
    Certificate cert = io::certificate_from_json(j);
    VerifyTrace t = verify(cert);
    emit(io::trace_to_json(t));
    return t.ok ? 0 : 1;
}

int cmd_perm(const Config& cfg, int k) {
    PermWitness w = k_cycle_as_commutator(k);
    if (cfg.output == "pretty") {
        std::cout << "k = " << w.k << ", genus " << w.genus << "\n"
                  << "sigma:      " << io::perm_to_json(w.sigma).dump() << "\n"
                  << "tau:        " << io::perm_to_json(w.tau).dump() << "\n"
                  << "commutator: " << io::perm_to_json(w.boundary()).dump()
                  << (w.transitive() ? "  (transitive)" : "") << "\n";
    } else {
        emit(io::witness_to_json(w));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structures on the circle: classify, build pants, certify bounding"};
    Config cfg;
    app.add_option("--tol", cfg.tol, "numeric tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--samples", cfg.samples, "sample rows per dump (>= 16)")
        ->check(CLI::Range(16, 1 << 24))
        ->capture_default_str();
    app.add_option("--output", cfg.output, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized probes (reserved)");
    app.require_subcommand(1);

    std::string classify_input = "-";
    CLI::App* c_classify = app.add_subcommand("classify", "classify a sampled structure");
    c_classify->add_option("input", classify_input, "sample csv file, - for stdin");

    std::string rep_spec;
    CLI::App* c_rep = app.add_subcommand("rep", "dump a model structure for a class");
    c_rep->add_option("--class", rep_spec, "class spec, e.g. H(1,1)")->required();

    std::string pants_family;
    double pants_x = 0;
    bool pants_dump = false;
    CLI::App* c_pants = app.add_subcommand("pants", "build a pants surface and classify its boundaries");
    c_pants->add_option("--family", pants_family, "fig4 or fig6")
        ->check(CLI::IsMember({"fig4", "fig6"}))
        ->required();
    c_pants->add_option("--x", pants_x, "family parameter")->required();
    c_pants->add_flag("--dump-octagon", pants_dump, "include the octagon geometry");

    std::string certify_spec, certify_out;
    CLI::App* c_certify = app.add_subcommand("certify", "generate a bounding certificate");
    c_certify->add_option("--class", certify_spec, "class spec")->required();
    c_certify->add_option("--out", certify_out, "write to file instead of stdout");

    std::string verify_input = "-";
    CLI::App* c_verify = app.add_subcommand("verify", "replay and check a certificate");
    c_verify->add_option("input", verify_input, "certificate json file, - for stdin");

    int perm_k = 0;
    CLI::App* c_perm = app.add_subcommand("perm", "commutator witness for the full cycle");
    c_perm->add_option("--k", perm_k, "cycle length (odd)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c_classify->parsed()) return cmd_classify(cfg, classify_input);
        if (c_rep->parsed()) return cmd_rep(cfg, rep_spec);
        if (c_pants->parsed()) return cmd_pants(cfg, pants_family, pants_x, pants_dump);
        if (c_certify->parsed()) return cmd_certify(certify_spec, certify_out);
        if (c_verify->parsed()) return cmd_verify(verify_input);
        if (c_perm->parsed()) return cmd_perm(cfg, perm_k);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const AmbiguousTrace& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const EvenK& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 7;
    } catch (const GeneratorFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 6;
    } catch (const SolverFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const DegenerateRadius& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
