#ifndef TORICMIRROR_SVG_HPP
#define TORICMIRROR_SVG_HPP

#include "smoothing.hpp"

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

namespace toricmirror {

namespace detail {

inline std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

struct Viewport {
    double x0, y0, x1, y1;
    double scale = 40;

    double sx(double x) const { return (x - x0) * scale; }
    double sy(double y) const { return (y1 - y) * scale; }  // y up
    std::string header() const
    {
        double w = (x1 - x0) * scale, h = (y1 - y0) * scale;
        return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
               "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(w) + "\" height=\"" + num(h) +
               "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n"
               "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" + num(w) + "\" height=\"" + num(h) +
               "\" fill=\"white\"/>\n";
    }
};

inline double to_d(const Rational& q) { return static_cast<double>(q); }

}  // namespace detail

// Γ: one circle per vertex, one line per bounded edge, rays clipped to a padded box.
inline std::string render_curve_svg(const TropicalCurve& c)
{
    double xl = 0, xh = 0, yl = 0, yh = 0;
    bool first = true;
    for (const auto& v : c.vertices) {
        double x = detail::to_d(v.x), y = detail::to_d(v.y);
        if (first) { xl = xh = x; yl = yh = y; first = false; }
        xl = std::min(xl, x); xh = std::max(xh, x);
        yl = std::min(yl, y); yh = std::max(yh, y);
    }
    const double pad = 2 + 0.25 * std::max(xh - xl, yh - yl);
    detail::Viewport vp{xl - pad, yl - pad, xh + pad, yh + pad};
    std::ostringstream out;
    out << vp.header();
    for (const auto& e : c.bounded_edges) {
        const auto& a = c.vertices[e.plus_vertex];
        const auto& b = c.vertices[e.minus_vertex];
        out << "<line class=\"edge\" x1=\"" << detail::num(vp.sx(detail::to_d(a.x))) << "\" y1=\""
            << detail::num(vp.sy(detail::to_d(a.y))) << "\" x2=\"" << detail::num(vp.sx(detail::to_d(b.x)))
            << "\" y2=\"" << detail::num(vp.sy(detail::to_d(b.y))) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    for (const auto& r : c.rays) {
        const auto& a = c.vertices[r.origin];
        double ax = detail::to_d(a.x), ay = detail::to_d(a.y);
        double dx = static_cast<double>(r.direction.x), dy = static_cast<double>(r.direction.y);
        // walk to the viewport edge
        double t = std::numeric_limits<double>::infinity();
        if (dx > 0) t = std::min(t, (vp.x1 - ax) / dx);
        if (dx < 0) t = std::min(t, (vp.x0 - ax) / dx);
        if (dy > 0) t = std::min(t, (vp.y1 - ay) / dy);
        if (dy < 0) t = std::min(t, (vp.y0 - ay) / dy);
        out << "<line class=\"ray\" x1=\"" << detail::num(vp.sx(ax)) << "\" y1=\"" << detail::num(vp.sy(ay))
            << "\" x2=\"" << detail::num(vp.sx(ax + t * dx)) << "\" y2=\"" << detail::num(vp.sy(ay + t * dy))
            << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    for (const auto& v : c.vertices)
        out << "<circle class=\"vertex\" cx=\"" << detail::num(vp.sx(detail::to_d(v.x))) << "\" cy=\""
            << detail::num(vp.sy(detail::to_d(v.y))) << "\" r=\"4\" fill=\"black\"/>\n";
    out << "</svg>\n";
    return out.str();
}

// γ_ℓ with the nonzero entries of a winding table; positive points blue, negative red.
inline std::string render_gamma_svg(const GammaCurve& g, const std::optional<WindingTable>& table = std::nullopt)
{
    double xl = 0, xh = 0, yl = 0, yh = 0;
    bool first = true;
    for (const auto& v : g.vertices) {
        double x = detail::to_d(v.x()), y = detail::to_d(v.y());
        if (first) { xl = xh = x; yl = yh = y; first = false; }
        xl = std::min(xl, x); xh = std::max(xh, x);
        yl = std::min(yl, y); yh = std::max(yh, y);
    }
    detail::Viewport vp{xl - 1, yl - 1, xh + 1, yh + 1};
    std::ostringstream out;
    out << vp.header();
    out << "<polygon class=\"gamma\" points=\"";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (i) out << ' ';
        out << detail::num(vp.sx(detail::to_d(g.vertices[i].x()))) << ','
            << detail::num(vp.sy(detail::to_d(g.vertices[i].y())));
    }
    out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    if (table) {
        for (const auto& e : table->nonzero()) {
            double x = static_cast<double>(e.m.x), y = static_cast<double>(e.m.y);
            const char* colour = e.w > 0 ? "#1f4fd1" : "#d12a1f";
            out << "<circle class=\"lattice-point\" data-w=\"" << e.w << "\" cx=\"" << detail::num(vp.sx(x))
                << "\" cy=\"" << detail::num(vp.sy(y)) << "\" r=\"5\" fill=\"" << colour << "\"/>\n";
            out << "<text class=\"label\" x=\"" << detail::num(vp.sx(x) + 6) << "\" y=\"" << detail::num(vp.sy(y) - 6)
                << "\" font-size=\"12\">" << (e.w > 0 ? "+" : "") << e.w << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace toricmirror

#endif
