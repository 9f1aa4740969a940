#include "lemni/kernel.hpp"

#include <algorithm>

namespace lemni {

namespace {

const char* kind_name(ObjKind k) {
    switch (k) {
        case ObjKind::point: return "P";
        case ObjKind::line: return "L";
        default: return "C";
    }
}

}  // namespace

Real Scene::dist(PointId a, PointId b) const {
    return hypot(pt(a).x - pt(b).x, pt(a).y - pt(b).y);
}

PointId Scene::add_given(const Real& x, const Real& y, std::string label) {
    PrecisionScope scope(ctx_);
    PointId id{static_cast<std::uint32_t>(points_.size())};
    points_.push_back({at_working(x, ctx_), at_working(y, ctx_),
                       static_cast<std::uint32_t>(steps_.size()), std::move(label)});
    steps_.push_back({"given", current_gadget(), {}, {ref(id)}});
    return id;
}

PointId Scene::inject_unlogged(const Real& x, const Real& y) {
    PointId id{static_cast<std::uint32_t>(points_.size())};
    // created_by deliberately points past the log; audit treats this as
    // missing provenance.
    points_.push_back({at_working(x, ctx_), at_working(y, ctx_), 0xffffffffu, ""});
    return id;
}

LineId Scene::line_through(PointId a, PointId b) {
    PrecisionScope scope(ctx_);
    if (dist(a, b) <= eps())
        throw std::domain_error("line_through: defining points coincide");
    Real dx = pt(b).x - pt(a).x;
    Real dy = pt(b).y - pt(a).y;
    Real norm = hypot(dx, dy);
    Real nx = -dy / norm, ny = dx / norm;
    // canonical sign: first nonzero normal component positive
    if (nx < 0 || (nx == 0 && ny < 0)) {
        nx = -nx;
        ny = -ny;
    }
    Real c = nx * pt(a).x + ny * pt(a).y;
    LineId id{static_cast<std::uint32_t>(lines_.size())};
    lines_.push_back({a, b, nx, ny, c, static_cast<std::uint32_t>(steps_.size())});
    steps_.push_back({"line", current_gadget(), {ref(a), ref(b)}, {ref(id)}});
    return id;
}

CircleId Scene::circle_about(PointId center, PointId through) {
    PrecisionScope scope(ctx_);
    Real r = dist(center, through);
    if (r <= eps())
        throw std::domain_error("circle_about: center and through point coincide");
    CircleId id{static_cast<std::uint32_t>(circles_.size())};
    circles_.push_back({center, through, r, static_cast<std::uint32_t>(steps_.size())});
    steps_.push_back({"circle", current_gadget(), {ref(center), ref(through)}, {ref(id)}});
    return id;
}

std::vector<PointId> Scene::record_points(Step step, std::vector<std::pair<Real, Real>> coords) {
    std::sort(coords.begin(), coords.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first < b.first;
        return a.second < b.second;
    });
    std::vector<PointId> out;
    std::uint32_t step_index = static_cast<std::uint32_t>(steps_.size());
    for (auto& c : coords) {
        PointId id{static_cast<std::uint32_t>(points_.size())};
        points_.push_back({std::move(c.first), std::move(c.second), step_index, ""});
        step.outputs.push_back(ref(id));
        out.push_back(id);
    }
    steps_.push_back(std::move(step));
    return out;
}

std::vector<PointId> Scene::intersect(ObjRef a, ObjRef b) {
    PrecisionScope scope(ctx_);
    if (a.kind == ObjKind::point || b.kind == ObjKind::point)
        throw std::domain_error("intersect: arguments must be lines or circles");
    if (a == b)
        throw std::domain_error("intersect: identical object");

    std::vector<std::pair<Real, Real>> coords;

    auto line_line = [&](const SceneLine& l1, const SceneLine& l2) {
        Real det = l1.nx * l2.ny - l1.ny * l2.nx;
        if (abs(det) <= eps())
            return;  // parallel (or coincident): no proper intersection point
        coords.emplace_back((l1.c * l2.ny - l2.c * l1.ny) / det,
                            (l1.nx * l2.c - l2.nx * l1.c) / det);
    };

    auto line_circle = [&](const SceneLine& l, const SceneCircle& c) {
        const ScenePoint& o = pt(c.center);
        Real d = l.c - (l.nx * o.x + l.ny * o.y);  // signed distance to center
        Real disc = c.radius * c.radius - d * d;
        Real fx = o.x + l.nx * d, fy = o.y + l.ny * d;  // foot of perpendicular
        Real tol = eps() * c.radius * c.radius;
        if (abs(disc) <= tol) {
            coords.emplace_back(fx, fy);  // tangency
        } else if (disc > 0) {
            Real h = sqrt(disc);
            Real tx = -l.ny, ty = l.nx;
            coords.emplace_back(fx + h * tx, fy + h * ty);
            coords.emplace_back(fx - h * tx, fy - h * ty);
        }
    };

    auto circle_circle = [&](const SceneCircle& c1, const SceneCircle& c2) {
        const ScenePoint& o1 = pt(c1.center);
        const ScenePoint& o2 = pt(c2.center);
        Real dx = o2.x - o1.x, dy = o2.y - o1.y;
        Real d = hypot(dx, dy);
        if (d <= eps())
            return;  // concentric
        // distance from c1's center to the radical line
        Real a = (c1.radius * c1.radius - c2.radius * c2.radius + d * d) / (2 * d);
        Real disc = c1.radius * c1.radius - a * a;
        Real scale = std::max(c1.radius, c2.radius);
        Real fx = o1.x + a * dx / d, fy = o1.y + a * dy / d;
        Real tol = eps() * scale * scale;
        if (abs(disc) <= tol) {
            coords.emplace_back(fx, fy);
        } else if (disc > 0) {
            Real h = sqrt(disc);
            coords.emplace_back(fx + h * dy / d, fy - h * dx / d);
            coords.emplace_back(fx - h * dy / d, fy + h * dx / d);
        }
    };

    if (a.kind == ObjKind::line && b.kind == ObjKind::line)
        line_line(lines_[a.index], lines_[b.index]);
    else if (a.kind == ObjKind::line && b.kind == ObjKind::circle)
        line_circle(lines_[a.index], circles_[b.index]);
    else if (a.kind == ObjKind::circle && b.kind == ObjKind::line)
        line_circle(lines_[b.index], circles_[a.index]);
    else
        circle_circle(circles_[a.index], circles_[b.index]);

    return record_points({"intersect", current_gadget(), {a, b}, {}}, std::move(coords));
}

Scene Scene::replay() const {
    Scene out(ctx_);
    out.gadget_stack_ = {};
    for (const Step& step : steps_) {
        out.push_gadget(step.gadget);
        if (step.op == "given") {
            const ScenePoint& p = points_.at(step.outputs.at(0).index);
            out.add_given(p.x, p.y, p.label);
        } else if (step.op == "line") {
            out.line_through(PointId{step.inputs.at(0).index}, PointId{step.inputs.at(1).index});
        } else if (step.op == "circle") {
            out.circle_about(PointId{step.inputs.at(0).index}, PointId{step.inputs.at(1).index});
        } else if (step.op == "intersect") {
            out.intersect(step.inputs.at(0), step.inputs.at(1));
        } else {
            throw std::runtime_error("replay: unknown step op '" + step.op + "'");
        }
        out.pop_gadget();
    }
    return out;
}

AuditReport audit(const Scene& scene) {
    PrecisionScope scope(scene.ctx_);
    AuditReport report;
    report.total_steps = scene.steps_.size();
    auto fail = [&](std::string msg) {
        report.pass = false;
        report.violations.push_back(std::move(msg));
    };

    // Provenance coverage: every object is the output of exactly one step,
    // and its inputs were created by earlier steps.
    std::vector<int> point_seen(scene.points_.size(), 0);
    std::vector<int> line_seen(scene.lines_.size(), 0);
    std::vector<int> circle_seen(scene.circles_.size(), 0);

    static const char* allowed[] = {"given", "line", "circle", "intersect"};
    for (std::size_t i = 0; i < scene.steps_.size(); ++i) {
        const Step& step = scene.steps_[i];
        report.steps_per_gadget[step.gadget.empty() ? "(primitive)" : step.gadget]++;
        if (std::find_if(std::begin(allowed), std::end(allowed),
                         [&](const char* s) { return step.op == s; }) == std::end(allowed))
            fail("step " + std::to_string(i) + ": op '" + step.op + "' outside the primitive set");
        for (const ObjRef& in : step.inputs) {
            std::uint32_t created =
                in.kind == ObjKind::point    ? scene.points_.at(in.index).created_by
                : in.kind == ObjKind::line   ? scene.lines_.at(in.index).created_by
                                             : scene.circles_.at(in.index).created_by;
            if (created >= i)
                fail("step " + std::to_string(i) + ": input " + kind_name(in.kind) +
                     std::to_string(in.index) + " does not precede it");
        }
        for (const ObjRef& out : step.outputs) {
            if (out.kind == ObjKind::point)
                point_seen.at(out.index)++;
            else if (out.kind == ObjKind::line)
                line_seen.at(out.index)++;
            else
                circle_seen.at(out.index)++;
        }
    }
    for (std::size_t i = 0; i < point_seen.size(); ++i)
        if (point_seen[i] != 1)
            fail("point P" + std::to_string(i) + ": no single provenance step");
    for (std::size_t i = 0; i < line_seen.size(); ++i)
        if (line_seen[i] != 1)
            fail("line L" + std::to_string(i) + ": no single provenance step");
    for (std::size_t i = 0; i < circle_seen.size(); ++i)
        if (circle_seen[i] != 1)
            fail("circle C" + std::to_string(i) + ": no single provenance step");

    // Geometric invariants at current precision.
    const Real eps = scene.eps();
    for (std::size_t i = 0; i < scene.lines_.size(); ++i) {
        const SceneLine& l = scene.lines_[i];
        if (scene.dist(l.p, l.q) <= eps)
            fail("line L" + std::to_string(i) + ": defining points coincide");
        for (PointId p : {l.p, l.q})
            if (abs(l.nx * scene.pt(p).x + l.ny * scene.pt(p).y - l.c) > eps)
                fail("line L" + std::to_string(i) + ": defining point off the line");
        if (abs(l.nx * l.nx + l.ny * l.ny - 1) > eps)
            fail("line L" + std::to_string(i) + ": normal not unit");
    }
    for (std::size_t i = 0; i < scene.circles_.size(); ++i) {
        const SceneCircle& c = scene.circles_[i];
        if (c.radius <= eps)
            fail("circle C" + std::to_string(i) + ": degenerate radius");
        if (abs(scene.dist(c.center, c.through) - c.radius) > eps)
            fail("circle C" + std::to_string(i) + ": witness distance mismatch");
    }
    // Intersection outputs lie on both parents.
    for (std::size_t i = 0; i < scene.steps_.size(); ++i) {
        const Step& step = scene.steps_[i];
        if (step.op != "intersect")
            continue;
        for (const ObjRef& out : step.outputs) {
            const ScenePoint& p = scene.points_.at(out.index);
            for (const ObjRef& in : step.inputs) {
                Real err;
                if (in.kind == ObjKind::line) {
                    const SceneLine& l = scene.lines_.at(in.index);
                    err = abs(l.nx * p.x + l.ny * p.y - l.c);
                } else {
                    const SceneCircle& c = scene.circles_.at(in.index);
                    err = abs(hypot(p.x - scene.pt(c.center).x, p.y - scene.pt(c.center).y) -
                              c.radius);
                }
                if (err > eps)
                    fail("step " + std::to_string(i) + ": intersection point P" +
                         std::to_string(out.index) + " off its parent by " + err.str(5));
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// gadgets
// ---------------------------------------------------------------------------

namespace {

/// Deterministic pick: the candidate maximizing a score.
template <typename Score>
PointId pick_by(const Scene& s, const std::vector<PointId>& pts, Score&& score,
                const char* who) {
    if (pts.empty())
        throw std::domain_error(std::string(who) + ": expected an intersection point");
    PointId best = pts[0];
    Real best_score = score(s.pt(pts[0]));
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Real sc = score(s.pt(pts[i]));
        if (sc > best_score) {
            best = pts[i];
            best_score = sc;
        }
    }
    return best;
}

PointId pick_away_from(Scene& s, const std::vector<PointId>& pts, PointId avoid,
                       const char* who) {
    return pick_by(
        s, pts,
        [&](const ScenePoint& p) { return hypot(p.x - s.pt(avoid).x, p.y - s.pt(avoid).y); },
        who);
}

}  // namespace

PointId gadget_midpoint(Scene& s, PointId a, PointId b) {
    GadgetScope g(s, "midpoint");
    LineId bisector = gadget_perp_bisector(s, a, b);
    LineId base = s.line_through(a, b);
    auto pts = s.intersect(ref(bisector), ref(base));
    if (pts.size() != 1)
        throw std::runtime_error("midpoint: expected a single crossing");
    return pts[0];
}

LineId gadget_perp_bisector(Scene& s, PointId a, PointId b) {
    GadgetScope g(s, "perp_bisector");
    CircleId ca = s.circle_about(a, b);
    CircleId cb = s.circle_about(b, a);
    auto pts = s.intersect(ref(ca), ref(cb));
    if (pts.size() != 2)
        throw std::runtime_error("perp_bisector: circles must cross twice");
    return s.line_through(pts[0], pts[1]);
}

LineId gadget_perpendicular(Scene& s, LineId l, PointId through) {
    GadgetScope g(s, "perpendicular");
    // A circle about `through` crossing l twice, then the perpendicular
    // bisector of the chord.
    PointId q = s.ln(l).p;
    if (hypot(s.pt(q).x - s.pt(through).x, s.pt(q).y - s.pt(through).y) <= s.eps())
        q = s.ln(l).q;
    CircleId c = s.circle_about(through, q);
    auto chord = s.intersect(ref(l), ref(c));
    if (chord.size() < 2) {
        // q was the foot of the perpendicular; the other defining point works
        q = (q == s.ln(l).p) ? s.ln(l).q : s.ln(l).p;
        c = s.circle_about(through, q);
        chord = s.intersect(ref(l), ref(c));
        if (chord.size() < 2)
            throw std::runtime_error("perpendicular: no chord found");
    }
    return gadget_perp_bisector(s, chord[0], chord[1]);
}

LineId gadget_parallel(Scene& s, LineId l, PointId through) {
    GadgetScope g(s, "parallel");
    LineId perp = gadget_perpendicular(s, l, through);
    return gadget_perpendicular(s, perp, through);
}

PointId gadget_reflect(Scene& s, PointId p, LineId axis) {
    GadgetScope g(s, "reflect");
    PointId a = s.ln(axis).p, b = s.ln(axis).q;
    const SceneLine& l = s.ln(axis);
    Real d = abs(l.nx * s.pt(p).x + l.ny * s.pt(p).y - l.c);
    if (d <= s.eps())
        return p;  // on the axis
    CircleId ca = s.circle_about(a, p);
    CircleId cb = s.circle_about(b, p);
    auto pts = s.intersect(ref(ca), ref(cb));
    return pick_away_from(s, pts, p, "reflect");
}

PointId gadget_point_reflect(Scene& s, PointId p, PointId center) {
    GadgetScope g(s, "point_reflect");
    Real d = hypot(s.pt(p).x - s.pt(center).x, s.pt(p).y - s.pt(center).y);
    if (d <= s.eps())
        return p;
    CircleId c = s.circle_about(center, p);
    LineId l = s.line_through(p, center);
    auto pts = s.intersect(ref(l), ref(c));
    return pick_away_from(s, pts, p, "point_reflect");
}

PointId gadget_translate(Scene& s, PointId from, PointId to, PointId p) {
    GadgetScope g(s, "translate");
    Real d = hypot(s.pt(from).x - s.pt(to).x, s.pt(from).y - s.pt(to).y);
    if (d <= s.eps())
        return p;  // zero vector
    // p + (to - from) is the reflection of `from` through the midpoint of
    // (to, p); this stays valid in collinear configurations.
    Real d2 = hypot(s.pt(to).x - s.pt(p).x, s.pt(to).y - s.pt(p).y);
    PointId mid = d2 <= s.eps() ? to : gadget_midpoint(s, to, p);
    return gadget_point_reflect(s, from, mid);
}

AngleBisector gadget_bisect_angle(Scene& s, PointId a, PointId vertex, PointId b) {
    GadgetScope g(s, "bisect_angle");
    CircleId c = s.circle_about(vertex, a);
    LineId rb = s.line_through(vertex, b);
    auto hits = s.intersect(ref(rb), ref(c));
    // same-side intersection along the ray vertex->b
    Real bx = s.pt(b).x - s.pt(vertex).x, by = s.pt(b).y - s.pt(vertex).y;
    PointId x = pick_by(
        s, hits,
        [&](const ScenePoint& p) {
            return (p.x - s.pt(vertex).x) * bx + (p.y - s.pt(vertex).y) * by;
        },
        "bisect_angle");
    Real sep = hypot(s.pt(x).x - s.pt(a).x, s.pt(x).y - s.pt(a).y);
    LineId bisector;
    if (sep <= s.eps()) {
        bisector = s.line_through(vertex, a);  // zero angle: the ray itself
        return {bisector, a};
    }
    bisector = gadget_perp_bisector(s, a, x);
    auto on_circle = s.intersect(ref(bisector), ref(c));
    Real ix = (s.pt(a).x + s.pt(x).x) / 2 - s.pt(vertex).x;
    Real iy = (s.pt(a).y + s.pt(x).y) / 2 - s.pt(vertex).y;
    PointId dir = pick_by(
        s, on_circle,
        [&](const ScenePoint& p) {
            return (p.x - s.pt(vertex).x) * ix + (p.y - s.pt(vertex).y) * iy;
        },
        "bisect_angle");
    return {bisector, dir};
}

Frame Frame::create(Scene& s) {
    Frame f;
    f.O = s.add_given(Real(0), Real(0), "O");
    f.I = s.add_given(Real(1), Real(0), "I");
    f.x_axis = s.line_through(f.O, f.I);
    f.unit = s.circle_about(f.O, f.I);
    {
        auto pts = s.intersect(ref(f.x_axis), ref(f.unit));
        f.I_star = pick_by(s, pts, [](const ScenePoint& p) { return -p.x; }, "frame");
        s.set_label(f.I_star, "I*");
    }
    f.y_axis = gadget_perpendicular(s, f.x_axis, f.O);
    {
        auto pts = s.intersect(ref(f.y_axis), ref(f.unit));
        f.J = pick_by(s, pts, [](const ScenePoint& p) { return p.y; }, "frame");
        f.J_star = pick_by(s, pts, [](const ScenePoint& p) { return -p.y; }, "frame");
        s.set_label(f.J, "J");
        s.set_label(f.J_star, "J*");
    }
    f.diag = gadget_bisect_angle(s, f.I, f.O, f.J).line;
    return f;
}

PointId transfer_length_to_axis(Scene& s, const Frame& f, PointId p) {
    GadgetScope g(s, "transfer_length");
    Real d = hypot(s.pt(p).x, s.pt(p).y);
    if (d <= s.eps())
        return f.O;
    CircleId c = s.circle_about(f.O, p);
    auto pts = s.intersect(ref(f.x_axis), ref(c));
    return pick_by(s, pts, [](const ScenePoint& q) { return q.x; }, "transfer_length");
}

PointId swap_axes(Scene& s, const Frame& f, PointId p) {
    return gadget_reflect(s, p, f.diag);
}

PointId gadget_sqrt(Scene& s, const Frame& f, PointId x_axis_pt) {
    GadgetScope g(s, "sqrt");
    return gadget_geometric_mean(s, f, f.I, x_axis_pt);
}

PointId gadget_geometric_mean(Scene& s, const Frame& f, PointId p_axis, PointId q_axis) {
    GadgetScope g(s, "geometric_mean");
    Real p = s.pt(p_axis).x, q = s.pt(q_axis).x;
    if (p <= s.eps() || q <= s.eps())
        throw std::domain_error("geometric_mean: lengths must be positive");
    // Altitude theorem: the circle over the diameter (-p, 0) -- (q, 0) meets
    // the y-axis at height sqrt(p q).
    PointId neg_p = gadget_point_reflect(s, p_axis, f.O);
    PointId center = gadget_midpoint(s, neg_p, q_axis);
    CircleId c = s.circle_about(center, q_axis);
    auto pts = s.intersect(ref(f.y_axis), ref(c));
    PointId high = pick_by(s, pts, [](const ScenePoint& r) { return r.y; }, "geometric_mean");
    return swap_axes(s, f, high);
}

PointId gadget_thales_product(Scene& s, const Frame& f, PointId p_axis, PointId q_axis) {
    GadgetScope g(s, "thales_product");
    Real p = s.pt(p_axis).x, q = s.pt(q_axis).x;
    if (abs(p) <= s.eps() || abs(q) <= s.eps())
        return f.O;  // product vanishes
    PointId q_vert = swap_axes(s, f, q_axis);  // (0, q)
    LineId jp = s.line_through(f.J, p_axis);
    LineId par = gadget_parallel(s, jp, q_vert);
    auto pts = s.intersect(ref(par), ref(f.x_axis));
    if (pts.size() != 1)
        throw std::runtime_error("thales_product: parallel failed to cross the axis");
    return pts[0];
}

PointId gadget_thales_scale(Scene& s, const Frame& f, PointId p_axis, PointId q_axis) {
    GadgetScope g(s, "thales_scale");
    Real q = s.pt(q_axis).x;
    if (abs(q) <= s.eps())
        throw std::domain_error("thales_scale: zero divisor");
    Real p = s.pt(p_axis).x;
    if (abs(p) <= s.eps())
        return f.O;
    PointId q_vert = swap_axes(s, f, q_axis);  // (0, q)
    LineId qp = s.line_through(q_vert, p_axis);
    LineId par = gadget_parallel(s, qp, f.J);
    auto pts = s.intersect(ref(par), ref(f.x_axis));
    if (pts.size() != 1)
        throw std::runtime_error("thales_scale: parallel failed to cross the axis");
    return pts[0];
}

namespace kernel_detail {

std::pair<PointId, PointId> rat_diameter_crossings(Scene& s, const Frame& f, bool downward,
                                                   PointId b_axis, PointId c_axis) {
    GadgetScope g(s, "rat_roots");
    PointId top1 = downward ? f.J_star : f.J;
    // far vertical endpoint: (B, +/-C)
    PointId c_vert = swap_axes(s, f, c_axis);  // (0, C)
    if (downward)
        c_vert = gadget_point_reflect(s, c_vert, f.O);  // (0, -C)
    Real cb = s.pt(b_axis).x;
    PointId top2;
    if (abs(cb) <= s.eps())
        top2 = c_vert;
    else
        top2 = gadget_translate(s, f.O, b_axis, c_vert);
    // circle with diameter top1 -- top2
    Real sep = hypot(s.pt(top1).x - s.pt(top2).x, s.pt(top1).y - s.pt(top2).y);
    if (sep <= s.eps())
        throw std::domain_error("rat_roots: degenerate trapezium");
    PointId center = gadget_midpoint(s, top1, top2);
    CircleId c = s.circle_about(center, top1);
    auto pts = s.intersect(ref(f.x_axis), ref(c));
    if (pts.empty())
        throw std::domain_error("rat_roots: no real roots (circle misses the base)");
    if (pts.size() == 1)
        return {pts[0], pts[0]};  // double root
    return {pts[0], pts[1]};  // sorted by abscissa
}

}  // namespace kernel_detail

std::pair<PointId, PointId> gadget_rat_roots(Scene& s, const Frame& f, PointId a_axis,
                                             PointId b_axis, PointId c_axis) {
    GadgetScope g(s, "rat_roots");
    if (s.pt(a_axis).x <= s.eps())
        throw std::domain_error("rat_roots: leading coefficient must be positive");
    PointId b_monic = gadget_thales_scale(s, f, b_axis, a_axis);
    PointId c_monic = gadget_thales_scale(s, f, c_axis, a_axis);
    return kernel_detail::rat_diameter_crossings(s, f, /*downward=*/false, b_monic, c_monic);
}

}  // namespace lemni
