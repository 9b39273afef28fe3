#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cubicmate/angle.hpp"
#include "cubicmate/limb.hpp"

namespace cubicmate {

enum class Side { A, B };
enum class Marker { CriticalPoint, CriticalValue, CocriticalPoint, AlphaCycle };

const char *side_name(Side side);
const char *marker_name(Marker marker);

/// Finitely many landing classes of one polynomial. Angles are the polynomial's
/// own external arguments; the B side is negated when glued.
struct ChordSystem {
    Side side = Side::A;
    std::vector<std::vector<Angle>> classes;
    std::map<size_t, Marker> markers;

    /// Throws InconsistentLamination for empty or overlapping classes and for
    /// classes whose chords cross.
    void validate() const;

    static ChordSystem from_alpha_chords(Side side, const std::vector<LabeledChord> &pairs);
    /// Classes in order cocritical, critical, critical value.
    static ChordSystem from_preperiodic(Side side, const PreperiodicLimbRays &rays);
};

struct Vertex {
    Side side = Side::A;
    std::vector<Angle> angles;
    std::optional<Marker> marker;
    /// Singleton class created for an angle only the other side lists.
    bool synthetic = false;
};

/// One external ray of the mating: angle t on side A, -t on side B.
struct Edge {
    Angle angle;
    size_t a = 0;
    size_t b = 0;
};

struct Component {
    std::vector<size_t> vertices;
    std::vector<size_t> edges;
    /// For loop components: cycle_vertices[i] and cycle_vertices[i + 1]
    /// (cyclically) are joined by cycle_edges[i].
    std::vector<size_t> cycle_vertices;
    std::vector<size_t> cycle_edges;

    bool has_loop() const {
        return edges.size() >= vertices.size();
    }
};

class RayClassGraph {
   public:
    /// Validates both systems. Vertices are the A classes, A singletons, B
    /// classes, B singletons, in that order; edges are sorted by angle.
    static RayClassGraph build(const ChordSystem &A, const ChordSystem &B);

    const std::vector<Vertex> &vertices() const {
        return vertices_;
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }
    const std::vector<Component> &components() const {
        return components_;
    }
    size_t component_of_vertex(size_t v) const {
        return vertex_component_[v];
    }
    std::optional<size_t> edge_of_angle(const Angle &t) const;
    /// Vertex on the given side whose class contains t (a B-side own angle).
    std::optional<size_t> vertex_of(Side side, const Angle &t) const;

   private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<Component> components_;
    std::vector<size_t> vertex_component_;
    std::map<Angle, size_t> edge_index_;
};

RayClassGraph build_graph(const ChordSystem &A, const ChordSystem &B);

/// Indices of components with at least as many edges as vertices.
std::vector<size_t> find_loops(const RayClassGraph &g);

struct SharedValue {
    bool shared = false;
    size_t component_a = 0;
    size_t component_b = 0;
};

/// Throws MissingMarkers unless each side has a critical value class.
SharedValue shared_critical_value_class(const RayClassGraph &g);

/// |critical_A intersect -critical_B| >= 2.
bool loop_criterion_preperiodic(const PreperiodicLimbRays &a, const PreperiodicLimbRays &b);

/// Component holding the tripling images of every angle of the component, or
/// nullopt when the images leave the graph or split.
std::optional<size_t> map_component_forward(const RayClassGraph &g, size_t component);

/// A periodic limb or the parameter angle of a map in a preperiodic limb.
using MatingDescriptor = std::variant<LimbId, Angle>;

/// "t0+" / "t0-" is a limb, a bare angle is a parameter angle.
MatingDescriptor parse_descriptor(std::string_view text);
std::string descriptor_str(const MatingDescriptor &d);

enum class VerdictKind { Obstructed, Mateable, EssentiallyMateable, NoLoopFound };
enum class VerdictReason { ConjugateLimbs, ComplementaryLimbs, LoopFound, PreperiodicTheorem, SharedCriticalValue, Conjectural };

const char *verdict_kind_name(VerdictKind kind);
const char *verdict_reason_name(VerdictReason reason);

struct Verdict {
    VerdictKind kind = VerdictKind::NoLoopFound;
    VerdictReason reason = VerdictReason::Conjectural;
    /// Witness: a loop component, or the component holding the shared
    /// critical value.
    std::optional<size_t> component;
    std::string note;
};

struct MatingReport {
    MatingDescriptor a;
    MatingDescriptor b;
    RayClassGraph graph;
    std::vector<size_t> loops;
    Verdict verdict;
};

MatingReport mate(const MatingDescriptor &a, const MatingDescriptor &b);
Verdict mate_verdict(const MatingDescriptor &a, const MatingDescriptor &b);

}  // namespace cubicmate
