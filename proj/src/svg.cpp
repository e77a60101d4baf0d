#include "trop/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace trop {

namespace {

struct Box {
    double minx = 0, miny = 0, maxx = 1, maxy = 1;
    void include(double x, double y) {
        minx = std::min(minx, x);
        miny = std::min(miny, y);
        maxx = std::max(maxx, x);
        maxy = std::max(maxy, y);
    }
};

constexpr double kView = 480.0;

class Canvas {
public:
    // Bounding box of the bounded features, padded by 20%.
    Canvas(double minx, double miny, double maxx, double maxy) {
        double w = maxx - minx, h = maxy - miny;
        if (w < 1e-9 && h < 1e-9) {
            minx -= 0.5;
            maxx += 0.5;
            miny -= 0.5;
            maxy += 0.5;
            w = h = 1.0;
        }
        double pad = 0.2 * std::max(w, h);
        minx_ = minx - pad;
        miny_ = miny - pad;
        maxx_ = maxx + pad;
        maxy_ = maxy + pad;
        scale_ = kView / std::max(maxx_ - minx_, maxy_ - miny_);
    }

    double width() const { return (maxx_ - minx_) * scale_; }
    double height() const { return (maxy_ - miny_) * scale_; }
    double tx(double x) const { return (x - minx_) * scale_; }
    double ty(double y) const { return (maxy_ - y) * scale_; }

    // Largest t in [0, tmax] with p + t*d inside the box.
    double clip_ray(double px, double py, double dx, double dy) const {
        double t = 1e18;
        if (dx > 0) t = std::min(t, (maxx_ - px) / dx);
        if (dx < 0) t = std::min(t, (minx_ - px) / dx);
        if (dy > 0) t = std::min(t, (maxy_ - py) / dy);
        if (dy < 0) t = std::min(t, (miny_ - py) / dy);
        return std::max(t, 0.0);
    }

    double minx_, miny_, maxx_, maxy_, scale_;
};

std::string num(double v) {
    char buf[40];
    if (std::abs(v) < 5e-3) v = 0.0;  // avoid "-0.00"
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

void emit_line(std::string& out, const Canvas& cv, double x1, double y1, double x2, double y2,
               const char* style) {
    out += "<line x1=\"" + num(cv.tx(x1)) + "\" y1=\"" + num(cv.ty(y1)) + "\" x2=\"" +
           num(cv.tx(x2)) + "\" y2=\"" + num(cv.ty(y2)) + "\" " + style + "/>\n";
}

void emit_circle(std::string& out, const Canvas& cv, double x, double y, double r,
                 const char* fill) {
    out += "<circle cx=\"" + num(cv.tx(x)) + "\" cy=\"" + num(cv.ty(y)) + "\" r=\"" + num(r) +
           "\" fill=\"" + fill + "\"/>\n";
}

void emit_label(std::string& out, const Canvas& cv, double x, double y, const std::string& text) {
    out += "<text x=\"" + num(cv.tx(x) + 4) + "\" y=\"" + num(cv.ty(y) - 4) +
           "\" font-size=\"13\" font-family=\"sans-serif\">" + text + "</text>\n";
}

std::string svg_open(const Canvas& cv) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(cv.width()) +
           "\" height=\"" + num(cv.height()) + "\" viewBox=\"0 0 " + num(cv.width()) + " " +
           num(cv.height()) + "\">\n";
}

void emit_lattice(std::string& out, const Canvas& cv) {
    const char* style = "stroke=\"#cccccc\" stroke-width=\"0.5\"";
    for (long x = static_cast<long>(std::ceil(cv.minx_)); x <= std::floor(cv.maxx_); ++x)
        emit_line(out, cv, x, cv.miny_, x, cv.maxy_, style);
    for (long y = static_cast<long>(std::ceil(cv.miny_)); y <= std::floor(cv.maxy_); ++y)
        emit_line(out, cv, cv.minx_, y, cv.maxx_, y, style);
}

double to_double(const Rational& q) {
    return numerator(q).convert_to<double>() / denominator(q).convert_to<double>();
}

}  // namespace

std::string render_curve_svg(const Curve& c) {
    Box box;
    bool any = false;
    for (const auto& v : c.vertices) {
        if (!any) {
            box = Box{to_double(v[0]), to_double(v[1]), to_double(v[0]), to_double(v[1])};
            any = true;
        } else {
            box.include(to_double(v[0]), to_double(v[1]));
        }
    }
    for (const CurveEdge& e : c.edges) {
        double wx = to_double(e.witness[0]), wy = to_double(e.witness[1]);
        if (!any) {
            box = Box{wx, wy, wx, wy};
            any = true;
        } else {
            box.include(wx, wy);
        }
    }
    Canvas cv(box.minx, box.miny, box.maxx, box.maxy);

    std::string out = svg_open(cv);
    const char* edge_style = "stroke=\"#1f3b73\" stroke-width=\"2\"";
    for (const CurveEdge& e : c.edges) {
        double dx = e.direction[0].convert_to<double>();
        double dy = e.direction[1].convert_to<double>();
        double lx = 0, ly = 0, hx = 0, hy = 0;
        if (e.kind == CurveEdgeKind::Segment) {
            lx = to_double(c.vertices[e.v0][0]);
            ly = to_double(c.vertices[e.v0][1]);
            hx = to_double(c.vertices[e.v1][0]);
            hy = to_double(c.vertices[e.v1][1]);
        } else if (e.kind == CurveEdgeKind::Ray) {
            lx = to_double(c.vertices[e.v0][0]);
            ly = to_double(c.vertices[e.v0][1]);
            double t = cv.clip_ray(lx, ly, dx, dy);
            hx = lx + t * dx;
            hy = ly + t * dy;
        } else {
            double wx = to_double(e.witness[0]), wy = to_double(e.witness[1]);
            double tf = cv.clip_ray(wx, wy, dx, dy);
            double tb = cv.clip_ray(wx, wy, -dx, -dy);
            lx = wx - tb * dx;
            ly = wy - tb * dy;
            hx = wx + tf * dx;
            hy = wy + tf * dy;
        }
        emit_line(out, cv, lx, ly, hx, hy, edge_style);
        if (e.weight > 1)
            emit_label(out, cv, (lx + hx) / 2, (ly + hy) / 2, std::to_string(e.weight));
    }
    for (const auto& v : c.vertices)
        emit_circle(out, cv, to_double(v[0]), to_double(v[1]), 3.5, "#1f3b73");
    out += "</svg>\n";
    return out;
}

std::string render_subdivision_svg(const DualSubdivision& sd) {
    Box box;
    bool any = false;
    auto include = [&](double x, double y) {
        if (!any) {
            box = Box{x, y, x, y};
            any = true;
        } else {
            box.include(x, y);
        }
    };
    for (const Exponent& p : sd.newton_polytope) include(p[0], p[1]);
    for (const Exponent& p : sd.points) include(p[0], p[1]);
    Canvas cv(box.minx, box.miny, box.maxx, box.maxy);

    std::string out = svg_open(cv);
    emit_lattice(out, cv);
    const char* edge_style = "stroke=\"#333333\" stroke-width=\"2\"";
    for (const SdEdge& e : sd.edges)
        emit_line(out, cv, e.a[0], e.a[1], e.b[0], e.b[1], edge_style);
    for (const Exponent& p : sd.points) emit_circle(out, cv, p[0], p[1], 3.5, "#333333");
    out += "</svg>\n";
    return out;
}

std::string render_framework_svg(const Framework& fw, bool lattice_overlay) {
    if (fw.dim != 2) throw TropError("bad-dimension", "can only render plane frameworks");
    Box box;
    bool any = false;
    for (const RatVec& p : fw.positions) {
        double x = to_double(p[0]), y = to_double(p[1]);
        if (!any) {
            box = Box{x, y, x, y};
            any = true;
        } else {
            box.include(x, y);
        }
    }
    Canvas cv(box.minx, box.miny, box.maxx, box.maxy);

    std::string out = svg_open(cv);
    if (lattice_overlay) emit_lattice(out, cv);
    const char* edge_style = "stroke=\"#8c1d1d\" stroke-width=\"2\"";
    for (auto [u, v] : fw.edges)
        emit_line(out, cv, to_double(fw.positions[u][0]), to_double(fw.positions[u][1]),
                  to_double(fw.positions[v][0]), to_double(fw.positions[v][1]), edge_style);
    for (const RatVec& p : fw.positions)
        emit_circle(out, cv, to_double(p[0]), to_double(p[1]), 3.5, "#8c1d1d");
    out += "</svg>\n";
    return out;
}

}  // namespace trop
