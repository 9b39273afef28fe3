#include "cubicmate/mating_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "cubicmate/errors.hpp"

namespace cubicmate {

const char *side_name(Side side) {
    return side == Side::A ? "A" : "B";
}

const char *marker_name(Marker marker) {
    switch (marker) {
        case Marker::CriticalPoint:
            return "critical_point";
        case Marker::CriticalValue:
            return "critical_value";
        case Marker::CocriticalPoint:
            return "cocritical_point";
        case Marker::AlphaCycle:
            return "alpha_cycle";
    }
    return "unknown";
}

const char *verdict_kind_name(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Obstructed:
            return "OBSTRUCTED";
        case VerdictKind::Mateable:
            return "MATEABLE";
        case VerdictKind::EssentiallyMateable:
            return "ESSENTIALLY_MATEABLE";
        case VerdictKind::NoLoopFound:
            return "NO_LOOP_FOUND";
    }
    return "UNKNOWN";
}

const char *verdict_reason_name(VerdictReason reason) {
    switch (reason) {
        case VerdictReason::ConjugateLimbs:
            return "ConjugateLimbs";
        case VerdictReason::ComplementaryLimbs:
            return "ComplementaryLimbs";
        case VerdictReason::LoopFound:
            return "LoopFound";
        case VerdictReason::PreperiodicTheorem:
            return "PreperiodicTheorem";
        case VerdictReason::SharedCriticalValue:
            return "SharedCriticalValue";
        case VerdictReason::Conjectural:
            return "Conjectural";
    }
    return "Unknown";
}

namespace {

/// Polygon edges of a class in cyclic order.
std::vector<Chord> class_chords(const std::vector<Angle> &cls) {
    std::vector<Chord> out;
    if (cls.size() < 2) {
        return out;
    }
    for (size_t k = 0; k < cls.size(); k++) {
        size_t next = (k + 1) % cls.size();
        if (cls.size() == 2 && k == 1) {
            break;
        }
        out.emplace_back(cls[k], cls[next]);
    }
    return out;
}

struct UnionFind {
    std::vector<size_t> parent;

    explicit UnionFind(size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    size_t find(size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        if (b < a) {
            std::swap(a, b);
        }
        parent[b] = a;
        return true;
    }
};

}  // namespace

void ChordSystem::validate() const {
    std::map<Angle, size_t> owner;
    for (size_t c = 0; c < classes.size(); c++) {
        if (classes[c].empty()) {
            throw Error(ErrorKind::InconsistentLamination, std::string("empty class on side ") + side_name(side));
        }
        for (const auto &t : classes[c]) {
            auto [it, inserted] = owner.emplace(t, c);
            if (!inserted && it->second != c) {
                throw Error(ErrorKind::InconsistentLamination,
                            t.str() + " lies in two classes on side " + side_name(side));
            }
        }
    }
    for (const auto &[index, marker] : markers) {
        if (index >= classes.size()) {
            throw Error(ErrorKind::InconsistentLamination, std::string("marker ") + marker_name(marker) +
                                                               " refers to missing class " + std::to_string(index));
        }
    }

    std::vector<std::vector<Chord>> chords;
    for (const auto &cls : classes) {
        chords.push_back(class_chords(sorted_unique(cls)));
    }
    for (size_t i = 0; i < chords.size(); i++) {
        for (size_t j = i + 1; j < chords.size(); j++) {
            for (const auto &c1 : chords[i]) {
                for (const auto &c2 : chords[j]) {
                    if (chords_linked(c1, c2)) {
                        throw Error(ErrorKind::InconsistentLamination,
                                    std::string("crossing chords {") + c1.first().str() + ", " + c1.second().str() +
                                        "} and {" + c2.first().str() + ", " + c2.second().str() + "} on side " +
                                        side_name(side));
                    }
                }
            }
        }
    }
}

ChordSystem ChordSystem::from_alpha_chords(Side side, const std::vector<LabeledChord> &pairs) {
    ChordSystem sys;
    sys.side = side;
    for (const auto &p : pairs) {
        sys.markers[sys.classes.size()] = Marker::AlphaCycle;
        sys.classes.push_back({p.chord.first(), p.chord.second()});
    }
    return sys;
}

ChordSystem ChordSystem::from_preperiodic(Side side, const PreperiodicLimbRays &rays) {
    ChordSystem sys;
    sys.side = side;
    sys.classes = {rays.cocritical_class, rays.critical_class, rays.critical_value_class};
    sys.markers = {{0, Marker::CocriticalPoint}, {1, Marker::CriticalPoint}, {2, Marker::CriticalValue}};
    return sys;
}

RayClassGraph RayClassGraph::build(const ChordSystem &A, const ChordSystem &B) {
    A.validate();
    B.validate();

    RayClassGraph g;
    std::map<Angle, size_t> a_owner;
    std::map<Angle, size_t> b_owner;
    std::vector<Angle> ray_angles;
    for (const auto &cls : A.classes) {
        ray_angles.insert(ray_angles.end(), cls.begin(), cls.end());
    }
    for (const auto &cls : B.classes) {
        for (const auto &t : cls) {
            ray_angles.push_back(-t);
        }
    }
    ray_angles = sorted_unique(std::move(ray_angles));

    auto add_classes = [&](const ChordSystem &sys, Side side, std::map<Angle, size_t> &owner) {
        for (size_t c = 0; c < sys.classes.size(); c++) {
            Vertex v;
            v.side = side;
            v.angles = sorted_unique(sys.classes[c]);
            if (auto it = sys.markers.find(c); it != sys.markers.end()) {
                v.marker = it->second;
            }
            for (const auto &t : v.angles) {
                owner[t] = g.vertices_.size();
            }
            g.vertices_.push_back(std::move(v));
        }
    };
    auto add_singletons = [&](Side side, std::map<Angle, size_t> &owner) {
        for (const auto &t : ray_angles) {
            Angle own = side == Side::A ? t : -t;
            if (owner.count(own) == 0) {
                owner[own] = g.vertices_.size();
                g.vertices_.push_back(Vertex{side, {own}, std::nullopt, true});
            }
        }
    };

    add_classes(A, Side::A, a_owner);
    add_singletons(Side::A, a_owner);
    add_classes(B, Side::B, b_owner);
    add_singletons(Side::B, b_owner);

    for (const auto &t : ray_angles) {
        g.edge_index_[t] = g.edges_.size();
        g.edges_.push_back(Edge{t, a_owner.at(t), b_owner.at(-t)});
    }

    size_t nv = g.vertices_.size();
    UnionFind uf(nv);
    for (const auto &e : g.edges_) {
        uf.unite(e.a, e.b);
    }
    std::map<size_t, size_t> root_to_component;
    g.vertex_component_.assign(nv, 0);
    for (size_t v = 0; v < nv; v++) {
        size_t root = uf.find(v);
        auto [it, inserted] = root_to_component.emplace(root, g.components_.size());
        if (inserted) {
            g.components_.emplace_back();
        }
        g.vertex_component_[v] = it->second;
        g.components_[it->second].vertices.push_back(v);
    }
    for (size_t e = 0; e < g.edges_.size(); e++) {
        g.components_[g.vertex_component_[g.edges_[e].a]].edges.push_back(e);
    }

    // Witness: the first edge closing a cycle, plus the tree path between its
    // endpoints.
    UnionFind forest(nv);
    std::vector<std::vector<std::pair<size_t, size_t>>> tree(nv);
    for (auto &comp : g.components_) {
        if (!comp.has_loop()) {
            continue;
        }
        for (size_t e : comp.edges) {
            const Edge &edge = g.edges_[e];
            if (forest.unite(edge.a, edge.b)) {
                tree[edge.a].push_back({edge.b, e});
                tree[edge.b].push_back({edge.a, e});
                continue;
            }
            std::map<size_t, std::pair<size_t, size_t>> came_from;
            std::deque<size_t> queue{edge.a};
            came_from[edge.a] = {edge.a, 0};
            while (!queue.empty()) {
                size_t x = queue.front();
                queue.pop_front();
                if (x == edge.b) {
                    break;
                }
                for (auto [y, via] : tree[x]) {
                    if (came_from.emplace(y, std::make_pair(x, via)).second) {
                        queue.push_back(y);
                    }
                }
            }
            std::vector<size_t> path_vertices{edge.b};
            std::vector<size_t> path_edges;
            for (size_t x = edge.b; x != edge.a;) {
                auto [prev, via] = came_from.at(x);
                path_edges.push_back(via);
                path_vertices.push_back(prev);
                x = prev;
            }
            std::reverse(path_vertices.begin(), path_vertices.end());
            std::reverse(path_edges.begin(), path_edges.end());
            path_edges.push_back(e);
            comp.cycle_vertices = std::move(path_vertices);
            comp.cycle_edges = std::move(path_edges);
            break;
        }
    }
    return g;
}

std::optional<size_t> RayClassGraph::edge_of_angle(const Angle &t) const {
    auto it = edge_index_.find(t);
    if (it == edge_index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<size_t> RayClassGraph::vertex_of(Side side, const Angle &t) const {
    auto e = edge_of_angle(side == Side::A ? t : -t);
    if (!e) {
        return std::nullopt;
    }
    return side == Side::A ? edges_[*e].a : edges_[*e].b;
}

RayClassGraph build_graph(const ChordSystem &A, const ChordSystem &B) {
    return RayClassGraph::build(A, B);
}

std::vector<size_t> find_loops(const RayClassGraph &g) {
    std::vector<size_t> out;
    for (size_t c = 0; c < g.components().size(); c++) {
        if (g.components()[c].has_loop()) {
            out.push_back(c);
        }
    }
    return out;
}

SharedValue shared_critical_value_class(const RayClassGraph &g) {
    std::optional<size_t> va;
    std::optional<size_t> vb;
    for (size_t v = 0; v < g.vertices().size(); v++) {
        const Vertex &vertex = g.vertices()[v];
        if (vertex.marker != Marker::CriticalValue) {
            continue;
        }
        auto &slot = vertex.side == Side::A ? va : vb;
        if (!slot) {
            slot = v;
        }
    }
    if (!va || !vb) {
        throw Error(ErrorKind::MissingMarkers, std::string("no critical value class on side ") + (va ? "B" : "A"));
    }
    SharedValue out;
    out.component_a = g.component_of_vertex(*va);
    out.component_b = g.component_of_vertex(*vb);
    out.shared = out.component_a == out.component_b;
    return out;
}

bool loop_criterion_preperiodic(const PreperiodicLimbRays &a, const PreperiodicLimbRays &b) {
    auto crit_a = sorted_unique(a.critical_class);
    auto crit_b = negated(b.critical_class);
    std::vector<Angle> common;
    std::set_intersection(crit_a.begin(), crit_a.end(), crit_b.begin(), crit_b.end(), std::back_inserter(common));
    return common.size() >= 2;
}

std::optional<size_t> map_component_forward(const RayClassGraph &g, size_t component) {
    std::optional<size_t> target;
    for (size_t e : g.components().at(component).edges) {
        auto image = g.edge_of_angle(map_md(g.edges()[e].angle, 3));
        if (!image) {
            return std::nullopt;
        }
        size_t c = g.component_of_vertex(g.edges()[*image].a);
        if (target && *target != c) {
            return std::nullopt;
        }
        target = c;
    }
    return target;
}

MatingDescriptor parse_descriptor(std::string_view text) {
    if (!text.empty() && (text.back() == '+' || text.back() == '-')) {
        return LimbId::parse(text);
    }
    return Angle::parse(text);
}

std::string descriptor_str(const MatingDescriptor &d) {
    if (const auto *limb = std::get_if<LimbId>(&d)) {
        return limb->str();
    }
    return std::get<Angle>(d).str();
}

namespace {

ChordSystem system_for(const MatingDescriptor &d, Side side) {
    if (const auto *limb = std::get_if<LimbId>(&d)) {
        return ChordSystem::from_alpha_chords(side, alpha_chords(*limb));
    }
    return ChordSystem::from_preperiodic(side, preperiodic_limb_rays(std::get<Angle>(d)));
}

std::optional<size_t> first(const std::vector<size_t> &v) {
    if (v.empty()) {
        return std::nullopt;
    }
    return v.front();
}

Verdict periodic_verdict(const LimbId &la, const LimbId &lb, const std::vector<size_t> &loops) {
    Verdict v;
    if (limb_condition(la, lb)) {
        v.kind = VerdictKind::Obstructed;
        v.component = first(loops);
        if (conjugate_limb(la) == lb) {
            v.reason = VerdictReason::ConjugateLimbs;
            v.note = lb.str() + " is the conjugate limb of " + la.str();
        } else if (complementary_limb(la) == lb) {
            v.reason = VerdictReason::ComplementaryLimbs;
            v.note = lb.str() + " is the complementary limb of " + la.str();
        } else {
            v.reason = VerdictReason::LoopFound;
            v.note = "angle sets are opposite";
        }
        return v;
    }
    if (!loops.empty()) {
        v.kind = VerdictKind::Obstructed;
        v.reason = VerdictReason::LoopFound;
        v.component = loops.front();
        v.note = "closed loop of ray classes";
        return v;
    }
    v.kind = VerdictKind::NoLoopFound;
    v.reason = VerdictReason::Conjectural;
    v.note = "no loop among the alpha-cycle classes; mateability is conjectural";
    return v;
}

Verdict preperiodic_verdict(const Angle &ta, const Angle &tb, const RayClassGraph &g,
                            const std::vector<size_t> &loops) {
    Verdict v;
    bool criterion = loop_criterion_preperiodic(preperiodic_limb_rays(ta), preperiodic_limb_rays(tb));
    if (tb == -ta) {
        v.kind = VerdictKind::Obstructed;
        v.reason = VerdictReason::ConjugateLimbs;
        v.component = first(loops);
        v.note = criterion ? "critical classes close a loop" : "conjugate parameter angles";
        return v;
    }
    if (!loops.empty()) {
        v.kind = VerdictKind::Obstructed;
        v.reason = VerdictReason::LoopFound;
        v.component = loops.front();
        v.note = "closed loop of ray classes";
        return v;
    }
    SharedValue shared = shared_critical_value_class(g);
    if (shared.shared) {
        v.kind = VerdictKind::EssentiallyMateable;
        v.reason = VerdictReason::SharedCriticalValue;
        v.component = shared.component_a;
        v.note = "critical values share a loop-free ray class";
        return v;
    }
    v.kind = VerdictKind::Mateable;
    v.reason = VerdictReason::PreperiodicTheorem;
    v.note = "parameter angles are not conjugate";
    return v;
}

}  // namespace

MatingReport mate(const MatingDescriptor &a, const MatingDescriptor &b) {
    MatingReport report{a, b, build_graph(system_for(a, Side::A), system_for(b, Side::B)), {}, {}};
    report.loops = find_loops(report.graph);

    const auto *la = std::get_if<LimbId>(&a);
    const auto *lb = std::get_if<LimbId>(&b);
    if (la && lb) {
        report.verdict = periodic_verdict(*la, *lb, report.loops);
    } else if (!la && !lb) {
        report.verdict = preperiodic_verdict(std::get<Angle>(a), std::get<Angle>(b), report.graph, report.loops);
    } else {
        report.verdict.kind = VerdictKind::Mateable;
        report.verdict.reason = VerdictReason::PreperiodicTheorem;
        report.verdict.note = "a preperiodic-limb map is mateable with any map outside its conjugate limb";
    }
    return report;
}

Verdict mate_verdict(const MatingDescriptor &a, const MatingDescriptor &b) {
    return mate(a, b).verdict;
}

}  // namespace cubicmate
