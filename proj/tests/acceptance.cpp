// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cubicmate/errors.hpp"
#include "cubicmate/limb.hpp"
#include "cubicmate/mating_graph.hpp"
#include "cubicmate/render.hpp"
#include "cubicmate/rotation_set.hpp"
#include "oracle.hpp"

using namespace cubicmate;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void expect(bool ok, const std::string &what) {
        if (!ok) {
            passed = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

struct Criterion {
    int id;
    const char *title;
    std::function<Outcome()> run;
};

Angle A(long long n, long long d) {
    return Angle(n, d);
}

LimbId L(const char *text) {
    return LimbId::parse(text);
}

std::vector<Angle> over(std::initializer_list<long long> nums, long long den) {
    std::vector<Angle> out;
    for (long long n : nums) {
        out.emplace_back(n, den);
    }
    return sorted_unique(out);
}

std::vector<LimbId> periodic_limbs(int max_q) {
    std::vector<LimbId> out;
    for (int q = 1; q <= max_q; q++) {
        long long den = std::max<long long>(oracle::ipow(2, q) - 1, 1);
        for (long long n = 0; n < den; n++) {
            Angle t0(n, den);
            if (orbit_md(t0, 2).period == q) {
                out.push_back(LimbId{t0, Sign::Plus});
                out.push_back(LimbId{t0, Sign::Minus});
            }
        }
    }
    return out;
}

using Shapes = std::vector<std::pair<size_t, size_t>>;

Shapes loop_shapes(const MatingReport &r) {
    Shapes out;
    for (size_t id : r.loops) {
        const auto &c = r.graph.components()[id];
        out.push_back({c.vertices.size(), c.edges.size()});
    }
    return out;
}

Shapes all_shapes(const RayClassGraph &g) {
    Shapes out;
    for (const auto &c : g.components()) {
        out.push_back({c.vertices.size(), c.edges.size()});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string shapes_str(const Shapes &s) {
    std::ostringstream out;
    for (size_t i = 0; i < s.size(); i++) {
        out << (i ? " " : "") << s[i].first << "v/" << s[i].second << "e";
    }
    return s.empty() ? "none" : out.str();
}

std::string verdict_str(const Verdict &v) {
    return std::string(verdict_kind_name(v.kind)) + "(" + verdict_reason_name(v.reason) + ")";
}

Outcome rotation_sets() {
    Outcome o;
    o.expect(m2_rotation_set(A(2, 5)).points() == over({5, 9, 10, 18, 20}, 31), "m2 2/5");
    o.expect(m2_rotation_set(A(3, 5)).points() == over({11, 13, 21, 22, 26}, 31), "m2 3/5");
    o.expect(m3_two_cycle_rotation_set(A(1, 2), 3).points() == over({1, 2, 3, 6}, 8), "m3 1/2 s1=3");
    return o;
}

Outcome counting() {
    Outcome o;
    for (int q = 1; q <= 7; q++) {
        auto sets = m3_two_cycle_rotation_sets(q);
        auto brute = oracle::tripling_two_cycle_sets(q);
        for (int p = 0; p < q; p++) {
            if (std::gcd(p, q) != 1) {
                continue;
            }
            Angle rho(p, q);
            std::vector<std::vector<Angle>> mine;
            for (const auto &X : sets) {
                if (X.rho() && *X.rho() == rho) {
                    mine.push_back(X.points());
                }
            }
            std::vector<std::vector<Angle>> theirs;
            for (const auto &t : brute) {
                if (t.rho == std::pair<int64_t, int64_t>{p, q}) {
                    std::vector<Angle> pts;
                    for (const auto &f : t.points) {
                        pts.emplace_back(f.n, f.d);
                    }
                    theirs.push_back(sorted_unique(pts));
                }
            }
            std::sort(mine.begin(), mine.end());
            std::sort(theirs.begin(), theirs.end());
            std::string tag = rho.str() + ": ";
            o.expect(mine.size() == static_cast<size_t>(q), tag + std::to_string(mine.size()) + " sets");
            o.expect(std::adjacent_find(mine.begin(), mine.end()) == mine.end(), tag + "duplicates");
            o.expect(mine == theirs, tag + "differs from brute force");
        }
    }
    return o;
}

Outcome limb_data_values() {
    Outcome o;
    auto d = limb_data(L("18/31+"));
    o.expect(std::holds_alternative<LimbData>(d) && std::get<LimbData>(d) == LimbData{A(2, 5), 4, Sign::Plus},
             "limb_data 18/31+");
    o.expect(data_to_limb(LimbData{A(3, 5), 4, Sign::Minus}) == L("22/31-"), "data_to_limb (3/5,4,-)");
    d = limb_data(L("4/7+"));
    o.expect(std::holds_alternative<LimbData>(d) && std::get<LimbData>(d) == LimbData{A(1, 3), 3, Sign::Plus},
             "limb_data 4/7+");
    o.expect(complementary_limb(L("5/7+")) == L("2/7-"), "complementary 5/7+");
    o.expect(balanced(A(5, 7)), "balanced 5/7");
    return o;
}

Outcome root_rays() {
    Outcome o;
    struct Row {
        const char *limb;
        long long num;
        long long den;
    };
    for (const Row &r : {Row{"4/7+", 1, 78}, Row{"6/7-", 49, 78}, Row{"5/7+", 7, 78}, Row{"2/7-", 31, 78},
                         Row{"18/31+", 19, 726}, Row{"22/31-", 427, 726}}) {
        auto got = root_parameter_rays(L(r.limb));
        o.expect(got == std::make_pair(A(r.num, r.den), A(r.num + 1, r.den)),
                 std::string(r.limb) + " gave (" + got.first.str() + ", " + got.second.str() + ")");
    }
    return o;
}

std::vector<Arc> major_arcs(const LimbId &l) {
    std::vector<Arc> out;
    for (const auto &g : major_gaps(RotationSet::from_points(theta_of_limb(l).angles, 3))) {
        out.push_back(g.arc);
    }
    std::sort(out.begin(), out.end(), [](const Arc &a, const Arc &b) { return a.start < b.start; });
    return out;
}

Outcome theta_structure() {
    Outcome o;
    o.expect(major_arcs(L("18/31+")) == std::vector<Arc>{{A(87, 242), A(168, 242)}, {A(180, 242), A(19, 242)}},
             "major gaps of 18/31+");
    o.expect(major_arcs(L("22/31-")) == std::vector<Arc>{{A(74, 242), A(155, 242)}, {A(223, 242), A(62, 242)}},
             "major gaps of 22/31-");
    for (const auto &l : periodic_limbs(7)) {
        auto t = theta_of_limb(l);
        auto X = RotationSet::from_points(t.angles, 3);
        long long modulus = oracle::ipow(3, t.period) - 1;
        for (int i = 0; i < t.period; i++) {
            Rational want(oracle::ipow(3, i), modulus);
            bool present = std::any_of(X.gaps().begin(), X.gaps().end(), [&](const Gap &g) { return g.length == want; });
            o.expect(present, l.str() + " lacks gap length 3^" + std::to_string(i));
        }
        bool rotation = std::holds_alternative<LimbData>(limb_data(l));
        o.expect((major_gaps(X).size() == 2) == rotation, l.str() + " major gap count");
    }
    return o;
}

Outcome mating_verdicts() {
    Outcome o;
    auto conj = mate(L("4/7+"), L("3/7-"));
    o.expect(conj.verdict.kind == VerdictKind::Obstructed && loop_shapes(conj) == Shapes(3, {2, 2}),
             "(4/7,+)x(3/7,-) gave " + verdict_str(conj.verdict) + " with loops " + shapes_str(loop_shapes(conj)) +
                 "; Theta(3/7,-) is disjoint from -Theta(4/7,+) = Theta(3/7,+), and (4/7,+)x(3/7,+) gives " +
                 verdict_str(mate_verdict(L("4/7+"), L("3/7+"))) + " with loops " +
                 shapes_str(loop_shapes(mate(L("4/7+"), L("3/7+")))));

    auto six = mate(L("4/7+"), L("6/7-"));
    o.expect(six.verdict.kind == VerdictKind::Obstructed && loop_shapes(six) == Shapes{{6, 6}},
             "(4/7,+)x(6/7,-) gave " + verdict_str(six.verdict) + " with loops " + shapes_str(loop_shapes(six)));

    auto ten = mate(L("18/31+"), L("22/31-"));
    o.expect(ten.verdict.kind == VerdictKind::Obstructed && loop_shapes(ten) == Shapes{{10, 10}} &&
                 ten.graph.vertices().size() == 10,
             "(18/31,+)x(22/31,-) gave " + verdict_str(ten.verdict) + " with loops " + shapes_str(loop_shapes(ten)));

    auto self = mate(L("2/3+"), L("2/3+"));
    o.expect(self.verdict.kind == VerdictKind::NoLoopFound && all_shapes(self.graph) == Shapes(2, {4, 3}),
             "(2/3,+) self-mating gave " + verdict_str(self.verdict) + " with components " +
                 shapes_str(all_shapes(self.graph)));

    auto crit = mate(A(1, 8), A(7, 8));
    bool criterion = loop_criterion_preperiodic(preperiodic_limb_rays(A(1, 8)), preperiodic_limb_rays(A(7, 8)));
    o.expect(crit.verdict.kind == VerdictKind::Obstructed && criterion,
             "(1/8)x(7/8) gave " + verdict_str(crit.verdict));

    auto shared = mate(A(1, 36), A(11, 36));
    const auto &g = shared.graph;
    auto critical = g.components()[g.component_of_vertex(*g.vertex_of(Side::A, A(13, 36)))];
    auto value_a = g.component_of_vertex(*g.vertex_of(Side::A, A(1, 12)));
    auto value_b = g.component_of_vertex(*g.vertex_of(Side::B, A(11, 12)));
    o.expect(shared.verdict.kind == VerdictKind::EssentiallyMateable &&
                 shared.verdict.reason == VerdictReason::SharedCriticalValue && shared.loops.empty() &&
                 value_a == value_b && critical.vertices.size() == 4 && critical.edges.size() == 3,
             "(1/36)x(11/36) gave " + verdict_str(shared.verdict) + " with components " + shapes_str(all_shapes(g)));
    return o;
}

Outcome necessity_sweep() {
    Outcome o;
    Angle third(1, 3);
    size_t checked = 0;
    for (long long den = 4; den <= 324; den *= 3) {
        for (long long n = 0; n < den; n++) {
            Angle ta(n, den);
            if (ta.den() != den || orbit_md(ta, 3).preperiod == 0) {
                continue;
            }
            auto ra = PreperiodicLimbRays::from_parameter_angle(ta);
            for (const Angle &tb : {-ta, -(ta - third), -(ta + third)}) {
                bool criterion = loop_criterion_preperiodic(ra, PreperiodicLimbRays::from_parameter_angle(tb));
                o.expect(criterion == (tb == -ta), ta.str() + " x " + tb.str());
                checked++;
            }
        }
    }
    o.expect(checked > 0, "no angles swept");
    return o;
}

Outcome involutions() {
    Outcome o;
    for (const auto &l : periodic_limbs(7)) {
        if (!std::holds_alternative<LimbData>(limb_data(l))) {
            continue;
        }
        std::string tag = l.str() + ": ";
        o.expect(conjugate_limb(conjugate_limb(l)) == l, tag + "conjugate not an involution");
        auto comp = complementary_limb(l);
        o.expect(comp && complementary_limb(*comp) == l, tag + "complementary not an involution");

        auto candidates = root_search(l);
        o.expect(candidates.size() == 1, tag + std::to_string(candidates.size()) + " root candidates");
        if (candidates.size() != 1) {
            continue;
        }
        auto [eta, eta_prime] = critical_limb_root_rays(candidates[0].theta, candidates[0].theta_prime);
        auto route_b = orbit_md(eta, 3).cycle();
        auto more = orbit_md(eta_prime, 3).cycle();
        route_b.insert(route_b.end(), more.begin(), more.end());
        auto route_a = theta_from_rotation_set(l);
        o.expect(route_a && *route_a == sorted_unique(route_b), tag + "routes disagree");
        o.expect(theta_of_limb(conjugate_limb(l)).angles == negated(theta_of_limb(l).angles),
                 tag + "conjugate theta is not the negation");
    }
    return o;
}

Outcome render_determinism() {
    Outcome o;
    auto report = mate(L("4/7+"), L("6/7-"));
    RenderSpec spec;
    spec.graph = &report.graph;
    spec.highlight = report.loops;
    std::string first = render_svg(spec);
    std::string second = render_svg(spec);
    o.expect(first == second, "output differs between runs");
    size_t highlighted = 0;
    for (size_t pos = first.find(" hl\""); pos != std::string::npos; pos = first.find(" hl\"", pos + 1)) {
        highlighted++;
    }
    o.expect(highlighted == 6, std::to_string(highlighted) + " highlighted segments");
    o.expect(report.loops.size() == 1 && report.graph.components()[report.loops[0]].edges.size() == 6,
             "highlighted component is not the six-edge loop");
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "rotation sets", rotation_sets},
        {2, "two-cycle tripling rotation set counts for q <= 7", counting},
        {3, "limb data", limb_data_values},
        {4, "root parameter rays", root_rays},
        {5, "angle set structure", theta_structure},
        {6, "mating verdicts", mating_verdicts},
        {7, "preperiodic necessity sweep", necessity_sweep},
        {8, "involutions and cross-route agreement for q <= 7", involutions},
        {9, "renderer determinism", render_determinism},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.passed = false;
            o.detail = std::string("threw ") + e.what();
        }
        std::printf("%s criterion %d: %s", o.passed ? "PASS" : "FAIL", c.id, c.title);
        if (!o.passed) {
            std::printf(" (%s)", o.detail.c_str());
            failed++;
        }
        std::printf("\n");
    }
    return failed == 0 ? 0 : 1;
}
