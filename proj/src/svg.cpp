#include "coverdecomp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace covdec {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Mapper {
    double x0, y1, scale;
    double mx(double x) const { return (x - x0) * scale + 20.0; }
    // SVG y grows downward.
    double my(double y) const { return (y1 - y) * scale + 20.0; }
};

}  // namespace

std::string render_svg(const RenderSpec& spec) {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    const auto extend = [&](double x, double y) {
        if (first) { xmin = xmax = x; ymin = ymax = y; first = false; return; }
        xmin = std::min(xmin, x); xmax = std::max(xmax, x);
        ymin = std::min(ymin, y); ymax = std::max(ymax, y);
    };
    for (const Point& p : spec.points) extend(p.x.to_double(), p.y.to_double());
    double pw = 0, ph = 0;
    {
        Rat a, b, c, d;
        spec.polygon.bounding_box(a, b, c, d);
        pw = (b - a).to_double();
        ph = (d - c).to_double();
    }
    for (const Point& p : spec.translate_centers) {
        extend(p.x.to_double() - pw / 2, p.y.to_double() - ph / 2);
        extend(p.x.to_double() + pw / 2, p.y.to_double() + ph / 2);
    }
    if (spec.region) {
        extend(spec.region->x_min.to_double(), spec.region->y_min.to_double());
        extend(spec.region->x_max.to_double(), spec.region->y_max.to_double());
    }
    if (first) extend(0, 0);
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    const double scale = 560.0 / span;
    const Mapper m{xmin, ymax, scale};
    const double width = (xmax - xmin) * scale + 40.0;
    const double height = (ymax - ymin) * scale + 40.0;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (spec.region) {
        svg << "<rect x=\"" << fmt(m.mx(spec.region->x_min.to_double())) << "\" y=\""
            << fmt(m.my(spec.region->y_max.to_double())) << "\" width=\""
            << fmt(spec.region->width().to_double() * scale) << "\" height=\""
            << fmt(spec.region->height().to_double() * scale)
            << "\" fill=\"none\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
    }

    const auto polygon_path = [&](const Point& center) {
        std::ostringstream path;
        const Point off{center.x - spec.polygon.centroid().x,
                        center.y - spec.polygon.centroid().y};
        bool head = true;
        for (const Point& v : spec.polygon.vertices()) {
            path << (head ? "M" : "L") << fmt(m.mx((v.x + off.x).to_double())) << " "
                 << fmt(m.my((v.y + off.y).to_double())) << " ";
            head = false;
        }
        path << "Z";
        return path.str();
    };

    for (const Point& c : spec.translate_centers)
        svg << "<path d=\"" << polygon_path(c)
            << "\" fill=\"#7799cc\" fill-opacity=\"0.4\" stroke=\"#446\" stroke-width=\"0.5\"/>\n";

    for (const WedgePlacement& w : spec.wedges) {
        const double ax = w.apex.x.to_double(), ay = w.apex.y.to_double();
        const auto ray = [&](const Dir& d) {
            const double len = std::hypot(d.dx.to_double(), d.dy.to_double());
            const double ux = d.dx.to_double() / len, uy = d.dy.to_double() / len;
            const double reach = span * 0.8;
            svg << "<line x1=\"" << fmt(m.mx(ax)) << "\" y1=\"" << fmt(m.my(ay)) << "\" x2=\""
                << fmt(m.mx(ax + ux * reach)) << "\" y2=\"" << fmt(m.my(ay + uy * reach))
                << "\" stroke=\"#b60\" stroke-width=\"1\"/>\n";
        };
        ray(w.tmpl.dir_prev);
        ray(w.tmpl.dir_next);
    }

    if (spec.boundary && !spec.boundary->cyclic.empty()) {
        svg << "<polyline fill=\"none\" stroke=\"#2a2\" stroke-width=\"1\" points=\"";
        const auto& b = *spec.boundary;
        for (std::size_t k = 0; k <= b.cyclic.size(); ++k) {
            const CyclicEntry& e = b.cyclic[k % b.cyclic.size()];
            const Point& p = b.points[static_cast<std::size_t>(e.point_id)];
            svg << fmt(m.mx(p.x.to_double())) << "," << fmt(m.my(p.y.to_double())) << " ";
        }
        svg << "\"/>\n";
    }

    for (const Point& p : spec.points) {
        const char* fill = "#999";
        const auto it = spec.colors.find(p);
        if (it != spec.colors.end()) fill = it->second == RBColor::Red ? "#c22" : "#22c";
        svg << "<circle cx=\"" << fmt(m.mx(p.x.to_double())) << "\" cy=\""
            << fmt(m.my(p.y.to_double())) << "\" r=\"3\" fill=\"" << fill << "\"/>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace covdec
