#pragma once

#include <string>
#include <vector>

#include "cubicmate/mating_graph.hpp"

namespace cubicmate {

enum class ChordStyle { Straight, Geodesic };

struct RenderSpec {
    const RayClassGraph *graph = nullptr;
    int width = 640;
    int height = 640;
    bool label_angles = false;
    std::vector<size_t> highlight;
    ChordStyle style = ChordStyle::Geodesic;
};

/// SVG chord diagram. A classes are drawn inside the unit circle, B classes
/// outside it at the negated angles, so a ray of the mating is one point of
/// the circle. Each class of size m contributes max(m - 1, 1) elements with
/// class "a" or "b"; elements of highlighted components also carry "hl".
/// Throws InvalidArgument for non-positive sizes or unknown component ids.
std::string render_svg(const RenderSpec &spec);

}  // namespace cubicmate
