#include "okp/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

namespace okp {

namespace {

constexpr double kSize = 600.0;
constexpr double kRadius = 270.0;
constexpr double kPi = 3.14159265358979323846;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

struct Point {
    double x, y;
};

// Counterclockwise on screen: SVG y grows downward, so the angle is negated.
Point place(int n, int i) {
    const double angle = 2.0 * kPi * i / n;
    return {kSize / 2 + kRadius * std::cos(angle),
            kSize / 2 - kRadius * std::sin(angle)};
}

void line(std::ostringstream& out, Point a, Point b, const char* style) {
    out << "  <line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\""
        << fmt(b.x) << "\" y2=\"" << fmt(b.y) << "\" " << style << "/>\n";
}

}  // namespace

std::string render_drawing_svg(const ConvexDrawing& d, const Triangulation* t) {
    const int n = d.n();
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
           "viewBox=\"0 0 600 600\">\n";
    out << "  <rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
    for (const Edge& e : d.edges()) {
        line(out, place(n, e.first), place(n, e.second),
             "stroke=\"#1f4e79\" stroke-width=\"1.5\"");
    }
    if (t != nullptr && t->n == n) {
        for (const InnerLink& l : t->links) {
            line(out, place(n, l.oriented.first), place(n, l.oriented.second),
                 "stroke=\"#c0392b\" stroke-width=\"1.2\" stroke-dasharray=\"6 4\"");
        }
    }
    for (int i = 0; i < n; ++i) {
        const Point p = place(n, i);
        out << "  <circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
            << "\" r=\"4\" fill=\"#111111\"/>\n";
        const double lr = kRadius + 16.0;
        const double angle = 2.0 * kPi * i / n;
        out << "  <text x=\"" << fmt(kSize / 2 + lr * std::cos(angle)) << "\" y=\""
            << fmt(kSize / 2 - lr * std::sin(angle))
            << "\" font-size=\"12\" text-anchor=\"middle\" "
               "dominant-baseline=\"middle\">"
            << i << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_td_dot(const TreeDecomposition& td) {
    std::ostringstream out;
    out << "graph tree_decomposition {\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for (size_t i = 0; i < td.bags.size(); ++i) {
        out << "  b" << i << " [label=\"" << i << ": {";
        for (size_t j = 0; j < td.bags[i].size(); ++j) {
            if (j) out << ",";
            out << td.bags[i][j];
        }
        out << "}\"];\n";
    }
    for (const auto& [a, b] : td.tree_edges) {
        out << "  b" << a << " -- b" << b << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace okp
