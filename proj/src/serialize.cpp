#include "cubicmate/serialize.hpp"

namespace cubicmate {

using nlohmann::json;

json to_json(const Angle &a) {
    return a.str();
}

json to_json(const std::vector<Angle> &angles) {
    json out = json::array();
    for (const auto &a : angles) {
        out.push_back(a.str());
    }
    return out;
}

json to_json(const Arc &arc) {
    return json::array({arc.start.str(), arc.end.str()});
}

json to_json(const RotationSet &X) {
    json gaps = json::array();
    for (const auto &gap : X.gaps()) {
        gaps.push_back({{"arc", to_json(gap.arc)}, {"multiplicity", gap.multiplicity}});
    }
    Signature s = signature(X);
    return {
        {"degree", X.degree()},
        {"points", to_json(X.points())},
        {"rho", X.rho() ? json(X.rho()->str()) : json(nullptr)},
        {"signature", json::array({s.s1, s.s2})},
        {"gaps", gaps},
    };
}

json to_json(const LimbId &limb) {
    return limb.str();
}

json to_json(const LimbDataResult &data) {
    if (const auto *d = std::get_if<LimbData>(&data)) {
        return {{"rho", d->rho.str()}, {"k", d->k}, {"sign", std::string(1, sign_char(d->sign))}};
    }
    if (std::holds_alternative<NoRotationNumber>(data)) {
        return "no rotation number";
    }
    return "preperiodic";
}

json to_json(const ThetaSet &theta) {
    json pairs = json::array();
    for (const auto &p : theta.pairs) {
        pairs.push_back({{"chord", json::array({p.chord.first().str(), p.chord.second().str()})},
                         {"label", p.label.str()}});
    }
    return {
        {"limb", theta.limb.str()},
        {"period", theta.period},
        {"angles", to_json(theta.angles)},
        {"critical_gap", to_json(theta.critical_gap)},
        {"pairs", pairs},
        {"root_rays", json::array({theta.root_theta.str(), theta.root_theta_prime.str()})},
    };
}

json to_json(const PreperiodicLimbRays &rays) {
    return {
        {"param_angle", rays.param_angle.str()},
        {"cocritical_class", to_json(rays.cocritical_class)},
        {"critical_class", to_json(rays.critical_class)},
        {"critical_value_class", to_json(rays.critical_value_class)},
    };
}

json to_json(const RayClassGraph &g) {
    json vertices = json::array();
    for (const auto &v : g.vertices()) {
        vertices.push_back({
            {"side", side_name(v.side)},
            {"angles", to_json(v.angles)},
            {"marker", v.marker ? json(marker_name(*v.marker)) : json(nullptr)},
            {"synthetic", v.synthetic},
        });
    }
    json edges = json::array();
    for (const auto &e : g.edges()) {
        edges.push_back({{"angle", e.angle.str()}, {"a", e.a}, {"b", e.b}});
    }
    json components = json::array();
    for (const auto &c : g.components()) {
        json entry = {{"vertices", c.vertices}, {"edges", c.edges}, {"loop", c.has_loop()}};
        if (c.has_loop()) {
            entry["witness"] = {{"vertices", c.cycle_vertices}, {"edges", c.cycle_edges}};
        }
        components.push_back(entry);
    }
    return {{"vertices", vertices}, {"edges", edges}, {"components", components}};
}

json to_json(const Verdict &v) {
    return {
        {"kind", verdict_kind_name(v.kind)},
        {"reason", verdict_reason_name(v.reason)},
        {"component", v.component ? json(*v.component) : json(nullptr)},
        {"note", v.note},
    };
}

json to_json(const MatingReport &report) {
    return {
        {"a", descriptor_str(report.a)},
        {"b", descriptor_str(report.b)},
        {"verdict", to_json(report.verdict)},
        {"loops", report.loops},
        {"graph", to_json(report.graph)},
    };
}

}  // namespace cubicmate
