#include "cubicmate/render.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "cubicmate/errors.hpp"

namespace cubicmate {

namespace {

constexpr double kTau = 6.283185307179586;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", x);
    std::string s(buf);
    if (s == "-0.000") {
        s = "0.000";
    }
    return s;
}

double to_double(const Angle &t) {
    return t.num().convert_to<double>() / t.den().convert_to<double>();
}

struct Canvas {
    double cx;
    double cy;
    double r;

    std::string point(double turns, double radius) const {
        return fmt(cx + radius * std::cos(kTau * turns)) + "," + fmt(cy - radius * std::sin(kTau * turns));
    }
    std::string x(double turns, double radius) const {
        return fmt(cx + radius * std::cos(kTau * turns));
    }
    std::string y(double turns, double radius) const {
        return fmt(cy - radius * std::sin(kTau * turns));
    }
};

/// Orders the endpoints so that b lies at most half a turn counterclockwise
/// of a; returns that separation.
double short_arc(double &a, double &b) {
    double d = b - a;
    d -= std::floor(d);
    if (d > 0.5) {
        std::swap(a, b);
        d = 1.0 - d;
    }
    return d;
}

std::string class_attr(char side, bool hl) {
    return std::string("class=\"") + side + (hl ? " hl" : "") + "\"";
}

void interior_chord(std::ostream &out, const Canvas &c, double a, double b, ChordStyle style, bool hl) {
    double d = short_arc(a, b);
    if (style == ChordStyle::Straight || std::abs(d - 0.5) < 1e-9) {
        out << "<line " << class_attr('a', hl) << " x1=\"" << c.x(a, c.r) << "\" y1=\"" << c.y(a, c.r) << "\" x2=\""
            << c.x(b, c.r) << "\" y2=\"" << c.y(b, c.r) << "\"/>\n";
        return;
    }
    double radius = c.r * std::tan(kTau * d / 2);
    out << "<path " << class_attr('a', hl) << " d=\"M" << c.point(a, c.r) << " A" << fmt(radius) << ","
        << fmt(radius) << " 0 0 0 " << c.point(b, c.r) << "\"/>\n";
}

void exterior_chord(std::ostream &out, const Canvas &c, double a, double b, bool hl) {
    double d = short_arc(a, b);
    double mid = a + d / 2;
    out << "<path " << class_attr('b', hl) << " d=\"M" << c.point(a, c.r) << " Q" << c.point(mid, c.r * (1 + 2.4 * d))
        << " " << c.point(b, c.r) << "\"/>\n";
}

void stub(std::ostream &out, const Canvas &c, char side, double t, bool hl) {
    double outer = side == 'a' ? 0.92 * c.r : 1.08 * c.r;
    out << "<line " << class_attr(side, hl) << " x1=\"" << c.x(t, c.r) << "\" y1=\"" << c.y(t, c.r) << "\" x2=\""
        << c.x(t, outer) << "\" y2=\"" << c.y(t, outer) << "\"/>\n";
}

}  // namespace

std::string render_svg(const RenderSpec &spec) {
    if (spec.width <= 0 || spec.height <= 0) {
        throw Error(ErrorKind::InvalidArgument, "render size must be positive");
    }
    Canvas c{spec.width / 2.0, spec.height / 2.0, 0.36 * std::min(spec.width, spec.height)};

    std::set<size_t> highlighted;
    if (spec.graph != nullptr) {
        for (size_t id : spec.highlight) {
            if (id >= spec.graph->components().size()) {
                throw Error(ErrorKind::InvalidArgument, "no component " + std::to_string(id));
            }
            highlighted.insert(id);
        }
    } else if (!spec.highlight.empty()) {
        throw Error(ErrorKind::InvalidArgument, "highlight given without a graph");
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\"" << spec.height
        << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n";
    out << "<style>.unit{fill:none;stroke:#000;stroke-width:1.5}"
           ".a{fill:none;stroke:#2a5599;stroke-width:1.2}"
           ".b{fill:none;stroke:#b04a2f;stroke-width:1.2;stroke-dasharray:4 2}"
           ".hl{stroke:#d4a000;stroke-width:3}"
           "text{font:11px sans-serif;text-anchor:middle;dominant-baseline:middle}</style>\n";
    out << "<circle class=\"unit\" cx=\"" << fmt(c.cx) << "\" cy=\"" << fmt(c.cy) << "\" r=\"" << fmt(c.r)
        << "\"/>\n";

    if (spec.graph != nullptr) {
        const RayClassGraph &g = *spec.graph;
        for (size_t v = 0; v < g.vertices().size(); v++) {
            const Vertex &vertex = g.vertices()[v];
            bool hl = highlighted.count(g.component_of_vertex(v)) > 0;
            std::vector<double> drawn;
            for (const auto &t : vertex.angles) {
                drawn.push_back(to_double(vertex.side == Side::A ? t : -t));
            }
            char side = vertex.side == Side::A ? 'a' : 'b';
            if (drawn.size() == 1) {
                stub(out, c, side, drawn.front(), hl);
                continue;
            }
            for (size_t k = 1; k < drawn.size(); k++) {
                if (side == 'a') {
                    interior_chord(out, c, drawn.front(), drawn[k], spec.style, hl);
                } else {
                    exterior_chord(out, c, drawn.front(), drawn[k], hl);
                }
            }
        }
        if (spec.label_angles) {
            for (const auto &e : g.edges()) {
                double t = to_double(e.angle);
                out << "<text x=\"" << c.x(t, 1.3 * c.r) << "\" y=\"" << c.y(t, 1.3 * c.r) << "\">" << e.angle.str()
                    << "</text>\n";
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace cubicmate
