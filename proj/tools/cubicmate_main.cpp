#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubicmate/errors.hpp"
#include "cubicmate/golden.hpp"
#include "cubicmate/limb.hpp"
#include "cubicmate/mating_graph.hpp"
#include "cubicmate/render.hpp"
#include "cubicmate/rotation_set.hpp"
#include "cubicmate/serialize.hpp"

using namespace cubicmate;
using nlohmann::json;

namespace {

struct Options {
    std::string output = "human";
    int degree = 3;
    std::string rho;
    int s1 = 0;
    std::vector<std::string> points;
    std::string limb;
    std::vector<std::string> pair;
    bool preperiodic = false;
    std::string svg_path;
    bool labels = false;
    std::string style = "geodesic";
    int size = 640;
};

bool as_json(const Options &opt) {
    return opt.output == "json";
}

void print_rotation_set(std::ostream &out, const RotationSet &X) {
    out << "degree: " << X.degree() << "\n";
    out << "points: {" << join(X.points()) << "}\n";
    out << "rho: " << (X.rho() ? X.rho()->str() : "none") << "\n";
    Signature s = signature(X);
    out << "signature: (" << s.s1 << ", " << s.s2 << ")\n";
    for (const auto &gap : X.gaps()) {
        out << "gap: (" << gap.arc.start.str() << ", " << gap.arc.end.str() << ") x" << gap.multiplicity << "\n";
    }
}

int cmd_rotset(const Options &opt) {
    RotationSet X = [&] {
        if (!opt.points.empty()) {
            std::vector<Angle> pts;
            for (const auto &p : opt.points) {
                pts.push_back(Angle::parse(p));
            }
            return RotationSet::from_points(pts, opt.degree);
        }
        if (opt.rho.empty()) {
            throw std::invalid_argument("rotset needs --rho or --points");
        }
        Angle rho = Angle::parse(opt.rho);
        if (opt.degree == 2) {
            return m2_rotation_set(rho);
        }
        if (opt.degree == 3) {
            if (opt.s1 == 0) {
                throw std::invalid_argument("rotset --d 3 needs --s1");
            }
            return m3_two_cycle_rotation_set(rho, opt.s1);
        }
        throw std::invalid_argument("--rho is supported for --d 2 and --d 3, got --d " + std::to_string(opt.degree));
    }();
    if (as_json(opt)) {
        std::cout << to_json(X).dump(2) << "\n";
    } else {
        print_rotation_set(std::cout, X);
    }
    return 0;
}

void print_theta(std::ostream &out, const ThetaSet &t) {
    out << "theta: {" << join(t.angles) << "}\n";
    out << "root rays: (" << t.root_theta.str() << ", " << t.root_theta_prime.str() << ")\n";
    out << "critical gap: (" << t.critical_gap.start.str() << ", " << t.critical_gap.end.str() << ")\n";
    for (const auto &p : t.pairs) {
        out << "pair: {" << p.chord.first().str() << ", " << p.chord.second().str() << "} @ " << p.label.str() << "\n";
    }
}

int cmd_limb(const Options &opt) {
    LimbId l = LimbId::parse(opt.limb);
    auto data = limb_data(l);
    auto conj = conjugate_limb(l);
    auto comp = complementary_limb(l);
    if (std::holds_alternative<StrictlyPreperiodic>(data)) {
        if (as_json(opt)) {
            std::cout << json{{"limb", l.str()}, {"data", to_json(data)}, {"conjugate", conj.str()}}.dump(2) << "\n";
        } else {
            std::cout << "limb: " << l.str() << "\ndata: preperiodic\nconjugate: " << conj.str() << "\n";
        }
        return 0;
    }
    ThetaSet t = theta_of_limb(l);
    if (as_json(opt)) {
        json out = {
            {"limb", l.str()},
            {"data", to_json(data)},
            {"theta", to_json(t)},
            {"conjugate", conj.str()},
            {"complementary", comp ? json(comp->str()) : json(nullptr)},
        };
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "limb: " << l.str() << "\n";
    if (const auto *d = std::get_if<LimbData>(&data)) {
        std::cout << "data: " << d->str() << "\n";
    } else {
        std::cout << "data: no rotation number\n";
    }
    print_theta(std::cout, t);
    std::cout << "conjugate: " << conj.str() << "\n";
    std::cout << "complementary: " << (comp ? comp->str() : "none") << "\n";
    return 0;
}

int cmd_theta(const Options &opt) {
    ThetaSet t = theta_of_limb(LimbId::parse(opt.limb));
    if (as_json(opt)) {
        std::cout << to_json(t).dump(2) << "\n";
    } else {
        print_theta(std::cout, t);
    }
    return 0;
}

int cmd_conjugate(const Options &opt) {
    LimbId l = conjugate_limb(LimbId::parse(opt.limb));
    std::cout << (as_json(opt) ? json(l.str()).dump() : l.str()) << "\n";
    return 0;
}

int cmd_complementary(const Options &opt) {
    auto l = complementary_limb(LimbId::parse(opt.limb));
    if (as_json(opt)) {
        std::cout << (l ? json(l->str()) : json(nullptr)).dump() << "\n";
    } else {
        std::cout << (l ? l->str() : "none") << "\n";
    }
    return 0;
}

std::pair<MatingDescriptor, MatingDescriptor> descriptors(const Options &opt) {
    if (opt.preperiodic) {
        return {Angle::parse(opt.pair[0]), Angle::parse(opt.pair[1])};
    }
    return {parse_descriptor(opt.pair[0]), parse_descriptor(opt.pair[1])};
}

std::string class_str(const Vertex &v) {
    return std::string(side_name(v.side)) + "{" + join(v.angles, ",") + "}";
}

void print_report(std::ostream &out, const MatingReport &r) {
    const Verdict &v = r.verdict;
    out << "mating: " << descriptor_str(r.a) << " x " << descriptor_str(r.b) << "\n";
    out << "verdict: " << verdict_kind_name(v.kind) << " (" << verdict_reason_name(v.reason) << ")";
    if (v.component) {
        out << " component " << *v.component;
    }
    out << "\nnote: " << v.note << "\n";
    out << "component  vertices  edges  loop  classes\n";
    for (size_t c = 0; c < r.graph.components().size(); c++) {
        const Component &comp = r.graph.components()[c];
        std::ostringstream classes;
        for (size_t k = 0; k < comp.vertices.size(); k++) {
            classes << (k ? " " : "") << class_str(r.graph.vertices()[comp.vertices[k]]);
        }
        char line[64];
        std::snprintf(line, sizeof(line), "%9zu  %8zu  %5zu  %4s  ", c, comp.vertices.size(), comp.edges.size(),
                      comp.has_loop() ? "yes" : "no");
        out << line << classes.str() << "\n";
    }
}

int write_svg(const Options &opt, const MatingReport &r) {
    RenderSpec spec;
    spec.graph = &r.graph;
    spec.width = opt.size;
    spec.height = opt.size;
    spec.label_angles = opt.labels;
    spec.highlight = r.loops;
    if (opt.style == "straight") {
        spec.style = ChordStyle::Straight;
    } else if (opt.style != "geodesic") {
        throw std::invalid_argument("--style must be straight or geodesic, got '" + opt.style + "'");
    }
    std::string svg = render_svg(spec);
    if (opt.svg_path.empty() || opt.svg_path == "-") {
        std::cout << svg;
        return 0;
    }
    std::ofstream file(opt.svg_path);
    if (!file) {
        throw Error(ErrorKind::InvalidArgument, "cannot write " + opt.svg_path);
    }
    file << svg;
    return 0;
}

int cmd_mate(const Options &opt) {
    auto [a, b] = descriptors(opt);
    MatingReport r = mate(a, b);
    if (!opt.svg_path.empty()) {
        write_svg(opt, r);
    }
    if (as_json(opt)) {
        std::cout << to_json(r).dump(2) << "\n";
    } else {
        print_report(std::cout, r);
    }
    return 0;
}

int cmd_render(const Options &opt) {
    auto [a, b] = descriptors(opt);
    return write_svg(opt, mate(a, b));
}

int cmd_selftest(const Options &opt) {
    auto results = run_golden_suite();
    size_t failed = 0;
    json out = json::array();
    for (const auto &check : results) {
        failed += check.passed ? 0 : 1;
        if (as_json(opt)) {
            out.push_back({{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
        } else {
            std::cout << (check.passed ? "PASS " : "FAIL ") << check.name;
            if (!check.passed) {
                std::cout << ": " << check.detail;
            }
            std::cout << "\n";
        }
    }
    if (as_json(opt)) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << results.size() - failed << "/" << results.size() << " passed\n";
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact combinatorics of limbs and matings in the cubic slice with a fixed critical point"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--output", opt.output, "Output format")->check(CLI::IsMember({"human", "json"}));

    auto *rotset = app.add_subcommand("rotset", "Rotation set from a rotation number or a point list");
    rotset->add_option("--d", opt.degree, "Degree of m_d")->check(CLI::Range(2, 64));
    rotset->add_option("--rho", opt.rho, "Rotation number p/q");
    rotset->add_option("--s1", opt.s1, "Points in [0,1/2) for --d 3");
    rotset->add_option("--points", opt.points, "Explicit invariant set")->delimiter(',');

    auto *limb = app.add_subcommand("limb", "Combinatorial data, angle set and root rays of a limb");
    limb->add_option("limb", opt.limb, "Limb as t0+ or t0-")->required();
    auto *theta = app.add_subcommand("theta", "Alpha-cycle angle set of a limb");
    theta->add_option("limb", opt.limb, "Limb as t0+ or t0-")->required();
    auto *conjugate = app.add_subcommand("conjugate", "Conjugate limb");
    conjugate->add_option("limb", opt.limb, "Limb as t0+ or t0-")->required();
    auto *complementary = app.add_subcommand("complementary", "Complementary limb");
    complementary->add_option("limb", opt.limb, "Limb as t0+ or t0-")->required();

    auto *mate_cmd = app.add_subcommand("mate", "Ray-class graph and verdict for a mating");
    mate_cmd->add_option("pair", opt.pair, "Two descriptors: t0+/t0- limbs or parameter angles")->expected(2)->required();
    mate_cmd->add_flag("--preperiodic", opt.preperiodic, "Read both descriptors as parameter angles");
    mate_cmd->add_option("--svg", opt.svg_path, "Also write the chord diagram");
    mate_cmd->add_flag("--labels", opt.labels, "Label ray angles in the diagram");
    mate_cmd->add_option("--style", opt.style, "straight or geodesic")->check(CLI::IsMember({"straight", "geodesic"}));

    auto *render = app.add_subcommand("render", "Chord diagram of a mating as SVG");
    render->add_option("pair", opt.pair, "Two descriptors")->expected(2)->required();
    render->add_flag("--preperiodic", opt.preperiodic, "Read both descriptors as parameter angles");
    render->add_option("--svg", opt.svg_path, "Output path, default stdout");
    render->add_flag("--labels", opt.labels, "Label ray angles");
    render->add_option("--style", opt.style, "straight or geodesic")->check(CLI::IsMember({"straight", "geodesic"}));
    render->add_option("--size", opt.size, "Width and height in pixels")->check(CLI::PositiveNumber);

    auto *selftest = app.add_subcommand("selftest", "Check the worked examples");

    for (int k = 1; k < argc; k++) {
        std::string arg = argv[k];
        if (arg.rfind("-", 0) == 0) {
            if (arg == "--output") {
                k++;
            }
            continue;
        }
        if (app.get_subcommand_no_throw(arg) == nullptr) {
            std::cerr << "usage error: unknown subcommand '" << arg << "'\n";
            return 2;
        }
        break;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (rotset->parsed()) {
            return cmd_rotset(opt);
        }
        if (limb->parsed()) {
            return cmd_limb(opt);
        }
        if (theta->parsed()) {
            return cmd_theta(opt);
        }
        if (conjugate->parsed()) {
            return cmd_conjugate(opt);
        }
        if (complementary->parsed()) {
            return cmd_complementary(opt);
        }
        if (mate_cmd->parsed()) {
            return cmd_mate(opt);
        }
        if (render->parsed()) {
            return cmd_render(opt);
        }
        if (selftest->parsed()) {
            return cmd_selftest(opt);
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
