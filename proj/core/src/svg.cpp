#include "lemni/svg.hpp"

#include "lemni/numerics.hpp"

#include <cstdio>
#include <sstream>

namespace lemni {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

double to_d(const Real& x) { return static_cast<double>(x); }

/// Quarter-petal samples mirrored into the full curve: the figure only needs
/// drawing accuracy, so sampling runs at a fixed modest precision.
std::vector<std::pair<double, double>> sample_curve(int n, unsigned digits) {
    PrecisionContext ctx(digits);
    PrecisionScope scope(ctx);
    int quarter = std::max(n / 4, 8);
    Real om = omega(ctx);
    std::vector<std::pair<double, double>> first;  // s in [0, omega/2]
    for (int k = 0; k <= quarter; ++k) {
        LemniscatePoint p = point_at(ArcParam(om / 2 * k / quarter), ctx);
        first.emplace_back(to_d(p.r.r * cos(p.theta)), to_d(p.r.r * sin(p.theta)));
    }
    std::vector<std::pair<double, double>> path = first;
    for (int k = quarter - 1; k >= 0; --k)  // descending half: x-mirror
        path.emplace_back(first[k].first, -first[k].second);
    std::size_t half = path.size();
    for (std::size_t k = 1; k < half; ++k)  // left petal: y-mirror
        path.emplace_back(-path[k].first, path[k].second);
    return path;
}

}  // namespace

std::string render_svg(const PrecisionContext& ctx, const Scene* scene, const NGon* gon,
                       const SvgOptions& opts) {
    PrecisionScope scope(ctx);
    const double v = opts.viewport;
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "width=\"800\" height=\"800\" viewBox=\"" << fmt(-v) << " " << fmt(-v) << " "
        << fmt(2 * v) << " " << fmt(2 * v) << "\">\n"
        << "<rect x=\"" << fmt(-v) << "\" y=\"" << fmt(-v) << "\" width=\"" << fmt(2 * v)
        << "\" height=\"" << fmt(2 * v) << "\" fill=\"white\"/>\n";

    // construction objects: thin gray
    if (scene && opts.draw_construction) {
        svg << "<g stroke=\"#b0b0b0\" stroke-width=\"0.004\" fill=\"none\">\n";
        for (std::uint32_t i = 0; i < scene->line_count(); ++i) {
            const SceneLine& l = scene->ln(LineId{i});
            // clip the infinite line to the viewport box
            double nx = to_d(l.nx), ny = to_d(l.ny), c = to_d(l.c);
            double px = nx * c, py = ny * c;  // closest point to the origin
            double tx = -ny, ty = nx;
            double lo = -4 * v, hi = 4 * v;
            auto slab = [&](double p0, double t) {
                if (std::abs(t) < 1e-15) {
                    if (std::abs(p0) > v)
                        lo = 1, hi = 0;  // outside: empty range
                    return;
                }
                double a = (-v - p0) / t, b = (v - p0) / t;
                if (a > b)
                    std::swap(a, b);
                lo = std::max(lo, a);
                hi = std::min(hi, b);
            };
            slab(px, tx);
            slab(py, ty);
            if (lo < hi)
                svg << "<line x1=\"" << fmt(px + lo * tx) << "\" y1=\"" << fmt(-(py + lo * ty))
                    << "\" x2=\"" << fmt(px + hi * tx) << "\" y2=\"" << fmt(-(py + hi * ty))
                    << "\"/>\n";
        }
        for (std::uint32_t i = 0; i < scene->circle_count(); ++i) {
            const SceneCircle& c = scene->ci(CircleId{i});
            const ScenePoint& o = scene->pt(c.center);
            svg << "<circle cx=\"" << fmt(to_d(o.x)) << "\" cy=\"" << fmt(-to_d(o.y))
                << "\" r=\"" << fmt(to_d(c.radius)) << "\"/>\n";
        }
        svg << "</g>\n";
    }

    // the curve itself: black
    auto path = sample_curve(opts.curve_samples, opts.sample_digits);
    svg << "<path fill=\"none\" stroke=\"black\" stroke-width=\"0.012\" d=\"";
    for (std::size_t k = 0; k < path.size(); ++k)
        svg << (k == 0 ? "M" : "L") << fmt(path[k].first) << " " << fmt(-path[k].second);
    svg << "Z\"/>\n";

    // labeled scene points
    if (scene) {
        for (std::uint32_t i = 0; i < scene->point_count(); ++i) {
            const ScenePoint& p = scene->pt(PointId{i});
            if (p.label.empty())
                continue;
            double x = to_d(p.x), y = to_d(p.y);
            if (std::abs(x) > v || std::abs(y) > v)
                continue;
            svg << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(-y)
                << "\" r=\"0.018\" fill=\"black\"/>\n"
                << "<text x=\"" << fmt(x + 0.03) << "\" y=\"" << fmt(-y - 0.03)
                << "\" font-size=\"0.09\" font-family=\"serif\">" << p.label << "</text>\n";
        }
    }

    // n-gon vertices
    if (gon) {
        for (std::size_t k = 0; k < gon->vertices.size(); ++k) {
            const LemniscatePoint& p = gon->vertices[k];
            double x = to_d(p.r.r * cos(p.theta)), y = to_d(p.r.r * sin(p.theta));
            svg << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(-y)
                << "\" r=\"0.022\" fill=\"#c0392b\"/>\n";
            if (gon->vertices.size() <= 40)
                svg << "<text x=\"" << fmt(x + 0.03) << "\" y=\"" << fmt(-y - 0.03)
                    << "\" font-size=\"0.09\" font-family=\"serif\" fill=\"#c0392b\">V" << k
                    << "</text>\n";
        }
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace lemni
