#include "cubicmate/golden.hpp"

#include <algorithm>
#include <functional>

#include "cubicmate/errors.hpp"
#include "cubicmate/limb.hpp"
#include "cubicmate/mating_graph.hpp"
#include "cubicmate/rotation_set.hpp"

namespace cubicmate {

namespace {

std::vector<Angle> over(std::initializer_list<long long> nums, long long den) {
    std::vector<Angle> out;
    for (long long n : nums) {
        out.emplace_back(n, den);
    }
    return sorted_unique(std::move(out));
}

LimbId limb(const char *text) {
    return LimbId::parse(text);
}

std::string expect(bool ok, const std::string &got) {
    return ok ? std::string() : "got " + got;
}

std::string check_rays(const char *l, long long num, long long den) {
    auto [t, tp] = root_parameter_rays(limb(l));
    return expect(t == Angle(num, den) && tp == Angle(num + 1, den), "(" + t.str() + ", " + tp.str() + ")");
}

std::string check_major_gaps(const char *l, const std::vector<Arc> &want) {
    auto X = RotationSet::from_points(theta_of_limb(limb(l)).angles, 3);
    std::vector<Arc> got;
    std::string listed;
    for (const auto &g : major_gaps(X)) {
        got.push_back(g.arc);
        listed += "(" + g.arc.start.str() + ", " + g.arc.end.str() + ")";
    }
    std::sort(got.begin(), got.end(), [](const Arc &a, const Arc &b) { return a.start < b.start; });
    std::vector<Arc> sorted_want = want;
    std::sort(sorted_want.begin(), sorted_want.end(), [](const Arc &a, const Arc &b) { return a.start < b.start; });
    return expect(got == sorted_want, listed);
}

std::string check_loops(const MatingReport &r, VerdictKind kind, size_t loops, size_t loop_size) {
    bool ok = r.verdict.kind == kind && r.loops.size() == loops;
    for (size_t c : r.loops) {
        ok = ok && r.graph.components()[c].vertices.size() == loop_size;
    }
    return expect(ok, std::string(verdict_kind_name(r.verdict.kind)) + " with " + std::to_string(r.loops.size()) +
                          " loops");
}

const std::vector<std::pair<const char *, std::function<std::string()>>> &checks() {
    static const std::vector<std::pair<const char *, std::function<std::string()>>> table = {
        {"doubling rotation set 2/5",
         [] {
             auto X = m2_rotation_set(Angle(2, 5));
             return expect(X.points() == over({5, 9, 10, 18, 20}, 31), join(X.points()));
         }},
        {"doubling rotation set 3/5",
         [] {
             auto X = m2_rotation_set(Angle(3, 5));
             return expect(X.points() == over({11, 13, 21, 22, 26}, 31), join(X.points()));
         }},
        {"tripling two-cycle set 1/2 s1=3",
         [] {
             auto X = m3_two_cycle_rotation_set(Angle(1, 2), 3);
             return expect(X.points() == over({1, 2, 3, 6}, 8), join(X.points()));
         }},
        {"tripling two-cycle set 0 s1=1",
         [] {
             auto X = m3_two_cycle_rotation_set(Angle(0, 1), 1);
             return expect(X.points() == over({0, 1}, 2), join(X.points()));
         }},
        {"limb data 18/31+",
         [] {
             auto d = limb_data(limb("18/31+"));
             bool ok = std::get_if<LimbData>(&d) && std::get<LimbData>(d) == LimbData{Angle(2, 5), 4, Sign::Plus};
             return expect(ok, std::get_if<LimbData>(&d) ? std::get<LimbData>(d).str() : "no data");
         }},
        {"limb data 4/7+",
         [] {
             auto d = limb_data(limb("4/7+"));
             bool ok = std::get_if<LimbData>(&d) && std::get<LimbData>(d) == LimbData{Angle(1, 3), 3, Sign::Plus};
             return expect(ok, std::get_if<LimbData>(&d) ? std::get<LimbData>(d).str() : "no data");
         }},
        {"limb from data (3/5, 4, -)",
         [] {
             auto l = data_to_limb(LimbData{Angle(3, 5), 4, Sign::Minus});
             return expect(l == limb("22/31-"), l.str());
         }},
        {"limb from data (2/3, 3, -)",
         [] {
             auto l = data_to_limb(LimbData{Angle(2, 3), 3, Sign::Minus});
             return expect(l == limb("6/7-"), l.str());
         }},
        {"complementary 18/31+",
         [] {
             auto l = complementary_limb(limb("18/31+"));
             return expect(l == limb("22/31-"), l ? l->str() : "none");
         }},
        {"complementary 5/7+",
         [] {
             auto l = complementary_limb(limb("5/7+"));
             return expect(l == limb("2/7-"), l ? l->str() : "none");
         }},
        {"balanced 5/7", [] { return expect(balanced(Angle(5, 7)), "false"); }},
        {"zero limbs", [] {
             bool ok = theta_of_limb(limb("0+")).angles == over({0, 1}, 2) &&
                       theta_of_limb(limb("0-")).angles == over({0, 1}, 2) &&
                       conjugate_limb(limb("0+")) == limb("0-") && complementary_limb(limb("0+")) == limb("0+");
             return expect(ok, "mismatch");
         }},
        {"root rays 4/7+", [] { return check_rays("4/7+", 1, 78); }},
        {"root rays 6/7-", [] { return check_rays("6/7-", 49, 78); }},
        {"root rays 5/7+", [] { return check_rays("5/7+", 7, 78); }},
        {"root rays 2/7-", [] { return check_rays("2/7-", 31, 78); }},
        {"root rays 18/31+", [] { return check_rays("18/31+", 19, 726); }},
        {"root rays 22/31-", [] { return check_rays("22/31-", 427, 726); }},
        {"theta 2/3+",
         [] {
             auto t = theta_of_limb(limb("2/3+"));
             return expect(t.angles == over({1, 2, 3, 6}, 8), join(t.angles));
         }},
        {"major gaps 18/31+",
         [] {
             return check_major_gaps("18/31+", {Arc{Angle(87, 242), Angle(168, 242)}, Arc{Angle(180, 242), Angle(19, 242)}});
         }},
        {"major gaps 22/31-",
         [] {
             return check_major_gaps("22/31-", {Arc{Angle(74, 242), Angle(155, 242)}, Arc{Angle(223, 242), Angle(62, 242)}});
         }},
        {"preperiodic rays 1/36",
         [] {
             auto r = preperiodic_limb_rays(Angle(1, 36));
             bool ok = r.critical_class == over({13, 25}, 36) && r.critical_value_class == over({1}, 12);
             return expect(ok, join(r.critical_class));
         }},
        {"mate 4/7+ 6/7-",
         [] { return check_loops(mate(limb("4/7+"), limb("6/7-")), VerdictKind::Obstructed, 1, 6); }},
        {"mate 4/7+ 3/7+",
         [] { return check_loops(mate(limb("4/7+"), limb("3/7+")), VerdictKind::Obstructed, 3, 2); }},
        {"mate 18/31+ 22/31-",
         [] { return check_loops(mate(limb("18/31+"), limb("22/31-")), VerdictKind::Obstructed, 1, 10); }},
        {"mate 2/3+ 2/3+",
         [] { return check_loops(mate(limb("2/3+"), limb("2/3+")), VerdictKind::NoLoopFound, 0, 0); }},
        {"mate 1/8 7/8",
         [] { return check_loops(mate(Angle(1, 8), Angle(7, 8)), VerdictKind::Obstructed, 1, 2); }},
        {"mate 1/36 11/36",
         [] {
             auto r = mate(Angle(1, 36), Angle(11, 36));
             return check_loops(r, VerdictKind::EssentiallyMateable, 0, 0);
         }},
    };
    return table;
}

}  // namespace

std::vector<GoldenCheck> run_golden_suite() {
    std::vector<GoldenCheck> out;
    for (const auto &[name, fn] : checks()) {
        GoldenCheck check{name, false, ""};
        try {
            check.detail = fn();
            check.passed = check.detail.empty();
        } catch (const std::exception &ex) {
            check.detail = ex.what();
        }
        out.push_back(std::move(check));
    }
    return out;
}

}  // namespace cubicmate
