#include "fairsect/svg.hpp"

#include <cstdio>
#include <sstream>

namespace fairsect {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.8g", v);
    return buf;
}

}  // namespace

std::string render_svg(const ConvexPolygon& poly, const RenderOptions& opts) {
    const Vec2 lo = poly.bbox_min();
    const Vec2 hi = poly.bbox_max();
    const double w = hi.x - lo.x;
    const double h = hi.y - lo.y;
    const double margin = 0.05 * std::max(w, h);
    const double sw = 0.006 * std::max(w, h);

    // SVG y grows downward; reflect within the fitted box.
    auto fy = [&](double y) { return (hi.y + lo.y) - y; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
       << num(lo.x - margin) << " " << num(fy(hi.y) - margin) << " "
       << num(w + 2 * margin) << " " << num(h + 2 * margin) << "\">\n";

    if (opts.draw_pieces && opts.chord) {
        const Bisection b = clip_by_chord(poly, *opts.chord);
        const char* fills[2] = {"#c7d7ef", "#efd7c7"};
        const ClipPiece* pieces[2] = {&b.piece1, &b.piece2};
        for (int i = 0; i < 2; ++i) {
            if (pieces[i]->degenerate) continue;
            os << "  <polygon class=\"piece\" fill=\"" << fills[i]
               << "\" stroke=\"none\" points=\"";
            for (const Vec2& v : pieces[i]->poly.vertices())
                os << num(v.x) << "," << num(fy(v.y)) << " ";
            os << "\"/>\n";
        }
    }

    os << "  <polygon class=\"body\" fill=\""
       << (opts.draw_pieces && opts.chord ? "none" : "#dde6f2")
       << "\" stroke=\"#33466b\" stroke-width=\"" << num(sw) << "\" points=\"";
    for (const Vec2& v : poly.vertices()) os << num(v.x) << "," << num(fy(v.y)) << " ";
    os << "\"/>\n";

    if (opts.draw_diametral) {
        const double d = diameter(poly).value;
        const double thresh2 = (1.0 - opts.attain_tol) * d * (1.0 - opts.attain_tol) * d;
        const auto& v = poly.vertices();
        for (std::size_t i = 0; i < v.size(); ++i) {
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                if (dist2(v[i], v[j]) < thresh2) continue;
                os << "  <line class=\"diametral\" stroke=\"#707a8c\" stroke-width=\""
                   << num(0.6 * sw) << "\" stroke-dasharray=\"" << num(4 * sw) << " "
                   << num(3 * sw) << "\" x1=\"" << num(v[i].x) << "\" y1=\""
                   << num(fy(v[i].y)) << "\" x2=\"" << num(v[j].x) << "\" y2=\""
                   << num(fy(v[j].y)) << "\"/>\n";
            }
        }
    }

    if (opts.draw_width_strip) {
        const PolygonWidth pw = width(poly);
        const auto& v = poly.vertices();
        const std::size_t n = v.size();
        const Vec2 a = v[pw.edge];
        const Vec2 b = v[(pw.edge + 1) % n];
        const Vec2 e = (b - a).normalized();
        const Vec2 far = v[pw.far_vertex];
        const double ext = 0.2 * std::max(w, h);
        const Vec2 p1 = a - e * ext, p2 = b + e * ext;
        const Vec2 off = far - (a + e * (far - a).dot(e));
        for (int side = 0; side < 2; ++side) {
            const Vec2 s1 = side ? p1 + off : p1;
            const Vec2 s2 = side ? p2 + off : p2;
            os << "  <line class=\"width-strip\" stroke=\"#3f8f5f\" stroke-width=\""
               << num(0.6 * sw) << "\" stroke-dasharray=\"" << num(2 * sw) << " "
               << num(2 * sw) << "\" x1=\"" << num(s1.x) << "\" y1=\"" << num(fy(s1.y))
               << "\" x2=\"" << num(s2.x) << "\" y2=\"" << num(fy(s2.y)) << "\"/>\n";
        }
    }

    if (opts.chord) {
        os << "  <line class=\"chord\" stroke=\"#c03a2b\" stroke-width=\""
           << num(1.4 * sw) << "\" x1=\"" << num(opts.chord->p.x) << "\" y1=\""
           << num(fy(opts.chord->p.y)) << "\" x2=\"" << num(opts.chord->q.x)
           << "\" y2=\"" << num(fy(opts.chord->q.y)) << "\"/>\n";
    }

    os << "</svg>\n";
    return os.str();
}

}  // namespace fairsect
