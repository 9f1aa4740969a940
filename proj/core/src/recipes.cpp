#include "lemni/recipes.hpp"

#include "lemni/division_radicals.hpp"

#include <algorithm>
#include <optional>

namespace lemni {

bool RecipeResult::all_pass() const {
    return std::all_of(certificate.begin(), certificate.end(),
                       [](const CertificateEntry& c) { return c.pass; });
}

bool NGonResult::all_pass() const {
    return std::all_of(certificate.begin(), certificate.end(),
                       [](const CertificateEntry& c) { return c.pass; });
}

namespace recipe_detail {

namespace {

/// The intersection candidate farthest along the direction (dx, dy).
PointId pick_toward(const Scene& s, const std::vector<PointId>& hits, const Real& dx,
                    const Real& dy) {
    if (hits.empty())
        throw std::runtime_error("pick_toward: no intersection to choose from");
    PointId best = hits[0];
    Real best_dot = s.pt(best).x * dx + s.pt(best).y * dy;
    for (PointId h : hits) {
        Real dot = s.pt(h).x * dx + s.pt(h).y * dy;
        if (dot > best_dot) {
            best = h;
            best_dot = dot;
        }
    }
    return best;
}

}  // namespace

LemniscatePoint point_data(const Scene& s, PointId id) {
    PrecisionScope scope(s.ctx());
    const ScenePoint& p = s.pt(id);
    Real r = hypot(p.x, p.y);
    if (r <= s.eps())
        return {Radius(Real(0)), Real(0), Petal::right};
    Petal petal = p.x > 0 ? Petal::right : Petal::left;
    return {Radius(r), atan2(p.y, p.x), petal};
}

Real arc_distance(const Real& a, const Real& b, const Real& period) {
    Real d = fmod(a - b, period);
    if (d < 0)
        d += period;
    return d > period / 2 ? period - d : d;
}

PointId lift_to_curve_upper(Scene& s, const Frame& f, PointId r_axis) {
    GadgetScope g(s, "curve_lift");
    Real r = s.pt(r_axis).x;
    if (r <= s.eps())
        return f.O;
    if (abs(r - 1) <= s.eps())
        return f.I;  // petal tip
    // cos(2 theta) = r^2 as a length, perpendicular lift into the unit
    // circle, then the half angle carries the radius onto the curve.
    PointId t_pt = gadget_thales_product(s, f, r_axis, r_axis);
    LineId perp = gadget_perpendicular(s, f.x_axis, t_pt);
    auto on_unit = s.intersect(ref(perp), ref(f.unit));
    if (on_unit.empty())
        throw std::runtime_error("curve_lift: perpendicular misses the unit circle");
    PointId c2 = on_unit.back();  // sorted by (x, y): last has the larger y
    AngleBisector bis = gadget_bisect_angle(s, f.I, f.O, c2);
    CircleId rad = s.circle_about(f.O, r_axis);
    LineId ray = s.line_through(f.O, bis.direction);
    auto hits = s.intersect(ref(ray), ref(rad));
    return pick_toward(s, hits, s.pt(bis.direction).x, s.pt(bis.direction).y);
}

}  // namespace recipe_detail

namespace {

using recipe_detail::arc_distance;
using recipe_detail::lift_to_curve_upper;
using recipe_detail::pick_toward;
using recipe_detail::point_data;

CertificateEntry make_cert(std::string name, const Real& achieved, const Real& target) {
    return {std::move(name), target, achieved, achieved <= target};
}

CertificateEntry on_curve_cert(const Scene& s, PointId p, std::string name) {
    PrecisionScope scope(s.ctx());
    LemniscatePoint d = point_data(s, p);
    Real err(0);
    if (d.r.r > s.eps())
        err = abs(d.r.r * d.r.r - cos(2 * d.theta));
    return make_cert(std::move(name), err, s.eps());
}

Real arc_of(const Scene& s, PointId p) {
    return arc_of_point(point_data(s, p), s.ctx()).s;
}

/// 1_theta: unit-circle point on the ray from O through p.
PointId unit_point_on_ray(Scene& s, const Frame& f, PointId p) {
    LineId ray = s.line_through(f.O, p);
    auto hits = s.intersect(ref(ray), ref(f.unit));
    return pick_toward(s, hits, s.pt(p).x, s.pt(p).y);
}

/// 1_{2 theta}: reflect I across the ray through p (angle doubling).
PointId double_angle_unit(Scene& s, const Frame& f, PointId p) {
    if (abs(s.pt(p).y) <= s.eps())
        return f.I;  // theta = 0 or pi: 2 theta = 0 either way
    LineId ray = s.line_through(f.O, p);
    return gadget_reflect(s, f.I, ray);
}

/// Foot of the perpendicular from p onto the x-axis.
PointId foot_on_x(Scene& s, const Frame& f, PointId p) {
    if (abs(s.pt(p).y) <= s.eps())
        return p;
    LineId perp = gadget_perpendicular(s, f.x_axis, p);
    auto hits = s.intersect(ref(perp), ref(f.x_axis));
    if (hits.size() != 1)
        throw std::runtime_error("foot_on_x: expected a single crossing");
    return hits[0];
}

/// Vertical offset from a to b, re-rooted at the origin: (0, b.y - a.y).
PointId vertical_leg(Scene& s, const Frame& f, PointId a, PointId b) {
    return gadget_translate(s, a, b, f.O);
}

int zone_of_arc(const Real& sarc, const Real& om) {
    if (sarc < om / 2)
        return 0;
    if (sarc < om)
        return 1;
    if (sarc < 3 * om / 2)
        return 2;
    return 3;
}

/// Upper-right representative transformed into the quadrant of the target
/// arc: x-mirror for the descending half, y-mirror for the far petal.
PointId place_by_zone(Scene& s, const Frame& f, PointId upper, int zone) {
    switch (zone) {
        case 0: return upper;
        case 1: return gadget_reflect(s, upper, f.x_axis);
        case 2: return gadget_reflect(s, upper, f.y_axis);
        default: return gadget_point_reflect(s, upper, f.O);
    }
}

/// Signed axis length -> on-curve point at the given canonical arc.
PointId place_axis_at_arc(Scene& s, const Frame& f, PointId axis_pt, const Real& target_arc) {
    Real v = s.pt(axis_pt).x;
    if (abs(v) <= s.eps())
        return f.O;
    PointId abs_pt = v < 0 ? gadget_point_reflect(s, axis_pt, f.O) : axis_pt;
    PointId upper = lift_to_curve_upper(s, f, abs_pt);
    PrecisionScope scope(s.ctx());
    Real om = omega(s.ctx());
    return place_by_zone(s, f, upper, zone_of_arc(target_arc, om));
}

bool is_origin(const Scene& s, PointId p) {
    return hypot(s.pt(p).x, s.pt(p).y) <= s.eps();
}

/// (1, tan 2theta) for the point's ray: crossing of the ray with the tangent
/// line x = 1. Valid while |2 theta| < pi/2 (any on-curve point off the origin).
PointId tangent_cross(Scene& s, const Frame& f, LineId tangent, PointId unit2) {
    LineId ray = s.line_through(f.O, unit2);
    auto hits = s.intersect(ref(ray), ref(tangent));
    if (hits.size() != 1)
        throw std::runtime_error("tangent_cross: ray parallel to the tangent");
    return hits[0];
}

/// Mirror of a left-petal point into the right petal (same local arc).
PointId mirror_to_right(Scene& s, const Frame& f, PointId p) {
    return gadget_reflect(s, p, f.y_axis);
}

}  // namespace

// ---------------------------------------------------------------------------
// halving
// ---------------------------------------------------------------------------

RecipeResult recipe_halve(Scene& s, const Frame& f, PointId u_pt) {
    const PrecisionContext& ctx = s.ctx();
    PrecisionScope scope(ctx);
    LemniscatePoint ud = point_data(s, u_pt);
    if (ud.r.r <= s.eps())
        throw std::domain_error("recipe_halve: input at the origin");

    if (ud.petal == Petal::left) {
        PointId mirrored = mirror_to_right(s, f, u_pt);
        RecipeResult inner = recipe_halve(s, f, mirrored);
        RecipeResult out;
        out.outputs["r_direct"] = mirror_to_right(s, f, inner.at("r_direct"));
        out.outputs["r_complementary"] = mirror_to_right(s, f, inner.at("r_complementary"));
        out.certificate = std::move(inner.certificate);
        return out;
    }

    // Step 1: A = (-(sec 2phi + tan 2phi), 0). The fold of the segment A--J
    // onto the axis then solves T^2 + 2kT - 1 = 0 directly.
    LineId tangent = gadget_perpendicular(s, f.x_axis, f.I);
    PointId u2 = double_angle_unit(s, f, u_pt);
    PointId ttan = tangent_cross(s, f, tangent, u2);  // (1, tan 2phi)
    CircleId sec_circle = s.circle_about(f.O, ttan);
    auto sec_hits = s.intersect(ref(f.x_axis), ref(sec_circle));
    PointId s1 = sec_hits.front();  // (-sec 2phi, 0): smallest abscissa
    PointId vtan = vertical_leg(s, f, f.I, ttan);     // (0, tan 2phi)
    PointId tan_x = swap_axes(s, f, vtan);            // (tan 2phi, 0)
    PointId neg_tan = is_origin(s, tan_x) ? tan_x : gadget_point_reflect(s, tan_x, f.O);

    auto half_from = [&](PointId offset) {
        PointId a = gadget_translate(s, f.O, offset, s1);  // (-(sec +- tan), 0)
        CircleId fold = s.circle_about(a, f.J);
        auto hits = s.intersect(ref(f.x_axis), ref(fold));
        PointId b = hits.back();  // (T, 0), the positive crossing
        return gadget_sqrt(s, f, b);
    };
    PointId r1_axis = half_from(neg_tan);  // first factor: k = sec + tan
    PointId r2_axis = half_from(tan_x);    // second factor: k = sec - tan

    // The direct midpoint lies in the ascending half, the complementary one
    // in the descending half.
    PointId direct = lift_to_curve_upper(s, f, r1_axis);
    PointId compl_up = lift_to_curve_upper(s, f, r2_axis);
    PointId complementary = gadget_reflect(s, compl_up, f.x_axis);

    RecipeResult out;
    out.outputs["r_direct"] = direct;
    out.outputs["r_complementary"] = complementary;

    Real eps = s.eps();
    Real u_r = ud.r.r;
    LemniscatePoint dd = point_data(s, direct);
    LemniscatePoint cd = point_data(s, complementary);
    out.certificate.push_back(make_cert(
        "double(r_direct) = u", abs(double_arc(dd.r, ctx).r.r - u_r), eps));
    out.certificate.push_back(make_cert(
        "double(r_complementary) = u", abs(double_arc(cd.r, ctx).r.r - u_r), eps));
    Real om = omega(ctx);
    out.certificate.push_back(make_cert(
        "2 s(r_direct) = s(u) mod 2w",
        arc_distance(2 * arc_of(s, direct), arc_of(s, u_pt), 2 * om), eps));
    out.certificate.push_back(on_curve_cert(s, direct, "r_direct on curve"));
    out.certificate.push_back(on_curve_cert(s, complementary, "r_complementary on curve"));
    return out;
}

// ---------------------------------------------------------------------------
// doubling
// ---------------------------------------------------------------------------

RecipeResult recipe_double(Scene& s, const Frame& f, PointId r_pt) {
    const PrecisionContext& ctx = s.ctx();
    PrecisionScope scope(ctx);
    LemniscatePoint rd = point_data(s, r_pt);

    auto finish = [&](PointId out_pt) {
        RecipeResult out;
        out.outputs["u"] = out_pt;
        LemniscatePoint od = point_data(s, out_pt);
        out.certificate.push_back(make_cert(
            "u = double formula", abs(od.r.r - double_arc(rd.r, ctx).r.r), s.eps()));
        Real om = omega(ctx);
        Real target = 2 * arc_of(s, r_pt);
        Real arc_err = arc_distance(arc_of(s, out_pt), target, 2 * om);
        if (od.r.r <= s.eps())  // the origin's arc is ambiguous: 0 or omega
            arc_err = std::min(arc_err, arc_distance(om, target, 2 * om));
        out.certificate.push_back(make_cert("s(u) = 2 s(r) mod 2w", arc_err, s.eps()));
        out.certificate.push_back(on_curve_cert(s, out_pt, "u on curve"));
        return out;
    };

    if (rd.r.r <= s.eps())
        return finish(r_pt);  // the origin doubles to itself
    if (abs(rd.r.r - 1) <= s.eps())
        return finish(f.O);  // petal tip: phi(omega) = 0

    if (rd.petal == Petal::left) {
        // 2(s + w) = 2s mod 2w: double the mirrored point, keep placement.
        PointId mirrored = mirror_to_right(s, f, r_pt);
        RecipeResult inner = recipe_double(s, f, mirrored);
        return finish(inner.at("u"));
    }
    if (rd.theta < 0) {
        // descending half: the true double is the point reflection of the
        // double of the x-mirror.
        PointId up = gadget_reflect(s, r_pt, f.x_axis);
        RecipeResult inner = recipe_double(s, f, up);
        PointId ref_out = inner.at("u");
        PointId out_pt = is_origin(s, ref_out) ? f.O : gadget_point_reflect(s, ref_out, f.O);
        return finish(out_pt);
    }

    // Steps 1-2: C = (cos 2theta, 0); E on the axis centers a circle through
    // C and D = (0, 1), so |OE| = tan(phi + pi/4).
    PointId b_unit = double_angle_unit(s, f, r_pt);
    PointId c_foot = foot_on_x(s, f, b_unit);
    LineId pb = gadget_perp_bisector(s, c_foot, f.J);
    auto e_hits = s.intersect(ref(pb), ref(f.x_axis));
    if (e_hits.size() != 1)
        throw std::runtime_error("recipe_double: perpendicular bisector parallel to axis");
    PointId e_pt = e_hits[0];
    if (is_origin(s, e_pt))
        return finish(f.O);  // |OE| = 0 only at the tip

    // Step 3: F on the perpendicular at G = (-1, 0) with GF = OE, below the axis.
    PointId e_at_g = gadget_translate(s, f.O, e_pt, f.I_star);
    LineId perp_g = gadget_perpendicular(s, f.x_axis, f.I_star);
    CircleId cf = s.circle_about(f.I_star, e_at_g);
    auto f_hits = s.intersect(ref(perp_g), ref(cf));
    PointId f_pt = f_hits.front();  // smallest y: (-1, -tan(phi + pi/4))

    // Step 4: subtract pi/4 from the ray angle.
    PointId f2 = gadget_point_reflect(s, f_pt, f.O);  // (1, tan(phi + pi/4))
    LineId of2 = s.line_through(f.O, f2);
    LineId perp_o = gadget_perpendicular(s, of2, f.O);
    auto unit_hits = s.intersect(ref(perp_o), ref(f.unit));
    // quarter turn clockwise from the F ray
    PointId clockwise = pick_toward(s, unit_hits, s.pt(f2).y, -s.pt(f2).x);
    AngleBisector bis = gadget_bisect_angle(s, f2, f.O, clockwise);

    // Lift the curve point in the resulting direction.
    PointId u2b = double_angle_unit(s, f, bis.direction);
    PointId foot = foot_on_x(s, f, u2b);
    if (s.pt(foot).x <= s.eps())
        return finish(f.O);
    PointId sq = gadget_sqrt(s, f, foot);
    CircleId rad = s.circle_about(f.O, sq);
    LineId ray = s.line_through(f.O, bis.direction);
    auto hits = s.intersect(ref(ray), ref(rad));
    PointId out_pt = pick_toward(s, hits, s.pt(bis.direction).x, s.pt(bis.direction).y);
    return finish(out_pt);
}

// ---------------------------------------------------------------------------
// addition / subtraction
// ---------------------------------------------------------------------------

RecipeResult recipe_add_sub(Scene& s, const Frame& f, PointId r_pt, PointId u_pt) {
    const PrecisionContext& ctx = s.ctx();
    PrecisionScope scope(ctx);
    LemniscatePoint rd = point_data(s, r_pt);
    LemniscatePoint ud = point_data(s, u_pt);
    const Real om = omega(ctx);
    const Real period = 2 * om;

    Real s_r = arc_of(s, r_pt);
    Real s_u = arc_of(s, u_pt);
    Real sum_arc = fmod(s_r + s_u, period);
    Real dif_arc = fmod(s_r - s_u + period, period);
    auto ascending = [&](const Real& arc) {
        Real t = fmod(arc, om);
        return t <= om / 2;
    };
    const bool same_half = ascending(s_r) == ascending(s_u);

    auto arc_err = [&](PointId pt, const Real& target) {
        Real err = arc_distance(arc_of(s, pt), target, period);
        if (point_data(s, pt).r.r <= s.eps())  // origin: arc ambiguous, 0 or omega
            err = std::min(err, arc_distance(om, target, period));
        return err;
    };
    auto finish = [&](PointId t_out, PointId v_out) {
        RecipeResult out;
        out.outputs["t"] = t_out;
        out.outputs["v"] = v_out;
        out.certificate.push_back(make_cert("s(t) = s(r) + s(u) mod 2w",
                                            arc_err(t_out, sum_arc), s.eps()));
        out.certificate.push_back(make_cert("s(v) = s(r) - s(u) mod 2w",
                                            arc_err(v_out, dif_arc), s.eps()));
        // in folded-arc terms the sum radius is the Fagnano sum for inputs in
        // matching petal halves and the difference otherwise
        Radius big = rd.r.r >= ud.r.r ? rd.r : ud.r;
        Radius small = rd.r.r >= ud.r.r ? ud.r : rd.r;
        Real expected = same_half ? add_arcs(rd.r, ud.r, ctx).r.r
                                  : sub_arcs(big, small, ctx).r;
        out.certificate.push_back(make_cert(
            "sum radius vs closed form",
            abs(point_data(s, t_out).r.r - expected), s.eps()));
        out.certificate.push_back(on_curve_cert(s, t_out, "t on curve"));
        out.certificate.push_back(on_curve_cert(s, v_out, "v on curve"));
        return out;
    };

    if (ud.r.r <= s.eps())
        return finish(r_pt, r_pt);  // adding or subtracting a null arc
    if (rd.r.r <= s.eps()) {
        PointId v_out = gadget_point_reflect(s, u_pt, f.O);  // arc -s(u) mod 2w
        return finish(u_pt, v_out);
    }

    LineId tangent = gadget_perpendicular(s, f.x_axis, f.I);

    // (1, cos 2theta) and (1, cos 2phi) on the tangent line x = 1.
    auto tangent_mark = [&](PointId p) {
        PointId u2 = double_angle_unit(s, f, p);
        PointId foot = foot_on_x(s, f, u2);
        PointId vert = swap_axes(s, f, foot);
        return gadget_translate(s, f.O, f.I, vert);  // (1, cos 2theta)
    };
    PointId a1 = tangent_mark(r_pt);
    PointId b1 = tangent_mark(u_pt);

    // C = tan(alpha - beta): reflect the alpha ray across the beta/2 bisector
    // and the axis, then cut the tangent line.
    PointId pc;  // (1, tan(alpha - beta))
    {
        PointId one_a = unit_point_on_ray(s, f, a1);
        PointId refl2;
        if (abs(s.pt(b1).y) <= s.eps()) {
            refl2 = one_a;  // beta = 0 (the other point at the tip)
        } else {
            AngleBisector half_beta = gadget_bisect_angle(s, f.I, f.O, b1);
            PointId refl1 = gadget_reflect(s, one_a, half_beta.line);
            refl2 = gadget_reflect(s, refl1, f.x_axis);
        }
        if (abs(s.pt(refl2).y) <= s.eps())
            pc = f.I;  // alpha = beta
        else
            pc = tangent_cross(s, f, tangent, refl2);
    }
    PointId c_leg = vertical_leg(s, f, f.I, pc);  // (0, C)
    PointId c_axis = swap_axes(s, f, c_leg);      // (C, 0)

    // d = sqrt(2 sin 2alpha cos 2beta) by the geometric-mean theorem, then
    // B = d * sec(alpha - beta) by Thales.
    PointId b_len;
    {
        PointId one_a = unit_point_on_ray(s, f, a1);
        PointId u2alpha = double_angle_unit(s, f, one_a);
        PointId foot2a = foot_on_x(s, f, u2alpha);
        PointId sin_leg = vertical_leg(s, f, foot2a, u2alpha);  // (0, sin 2alpha)
        PointId sin_x = swap_axes(s, f, sin_leg);
        PointId sin2_x = gadget_translate(s, f.O, sin_x, sin_x);  // (2 sin 2alpha, 0)
        PointId one_b = unit_point_on_ray(s, f, b1);
        PointId u2beta = double_angle_unit(s, f, one_b);
        PointId foot2b = foot_on_x(s, f, u2beta);  // (cos 2beta, 0)
        if (s.pt(foot2b).x <= s.eps()) {
            b_len = f.O;  // u at the tip: B = 0
        } else {
            PointId d_axis = gadget_geometric_mean(s, f, sin2_x, foot2b);
            PointId e_axis = transfer_length_to_axis(s, f, pc);  // (sec(alpha-beta), 0)
            b_len = gadget_thales_product(s, f, d_axis, e_axis);
        }
    }

    // Trapezium with verticals -1 and -C over the base -B: flipping all
    // three signs makes the base crossings the roots {t, v} themselves.
    auto crossings = kernel_detail::rat_diameter_crossings(s, f, /*downward=*/true,
                                                           b_len, c_axis);
    PointId v_quad = crossings.first;   // phi(a_r - a_u), signed
    PointId t_quad = crossings.second;  // phi(a_r + a_u)

    // Which root is which depends only on whether the inputs sit in the same
    // half of their petals (folded-arc arithmetic).
    PointId sum_root = same_half ? t_quad : v_quad;
    PointId dif_root = same_half ? v_quad : t_quad;

    PointId t_out = place_axis_at_arc(s, f, sum_root, sum_arc);
    PointId v_out = place_axis_at_arc(s, f, dif_root, dif_arc);
    return finish(t_out, v_out);
}

// ---------------------------------------------------------------------------
// transfer and bisection
// ---------------------------------------------------------------------------

RecipeResult recipe_transfer(Scene& s, const Frame& f, PointId r_pt, PointId u_pt,
                             PointId t_pt) {
    const PrecisionContext& ctx = s.ctx();
    PrecisionScope scope(ctx);
    RecipeResult diff = recipe_add_sub(s, f, u_pt, r_pt);   // v: s(u) - s(r)
    RecipeResult sum = recipe_add_sub(s, f, diff.at("v"), t_pt);
    PointId w = sum.at("t");

    RecipeResult out;
    out.outputs["w"] = w;
    Real period = 2 * omega(ctx);
    Real target = fmod(arc_of(s, u_pt) - arc_of(s, r_pt) + arc_of(s, t_pt) + 2 * period,
                       period);
    out.certificate.push_back(make_cert(
        "s(w) = s(u) - s(r) + s(t) mod 2w",
        arc_distance(arc_of(s, w), target, period), s.eps()));
    out.certificate.push_back(on_curve_cert(s, w, "w on curve"));
    return out;
}

RecipeResult recipe_bisect_between(Scene& s, const Frame& f, PointId r_pt, PointId t_pt) {
    const PrecisionContext& ctx = s.ctx();
    PrecisionScope scope(ctx);
    PointId half_r = is_origin(s, r_pt) ? f.O : recipe_halve(s, f, r_pt).at("r_direct");
    PointId half_t = is_origin(s, t_pt) ? f.O : recipe_halve(s, f, t_pt).at("r_direct");
    RecipeResult sum = recipe_add_sub(s, f, half_r, half_t);
    PointId u = sum.at("t");

    RecipeResult out;
    out.outputs["u"] = u;
    Real period = 2 * omega(ctx);
    Real target = fmod((arc_of(s, r_pt) + arc_of(s, t_pt)) / 2, period);
    out.certificate.push_back(make_cert(
        "s(u) = s(r)/2 + s(t)/2 mod 2w",
        arc_distance(arc_of(s, u), target, period), s.eps()));
    out.certificate.push_back(on_curve_cert(s, u, "u on curve"));
    return out;
}

// ---------------------------------------------------------------------------
// n-gons
// ---------------------------------------------------------------------------

NGon numeric_ngon(int n, const PrecisionContext& ctx) {
    if (n < 1)
        throw std::domain_error("numeric_ngon: n must be positive");
    PrecisionScope scope(ctx);
    NGon gon;
    gon.n = n;
    gon.mode = NGon::Mode::numeric;
    Real om = omega(ctx);
    for (int k = 0; k < n; ++k)
        gon.vertices.push_back(point_at(ArcParam(2 * om * k / n), ctx));
    return gon;
}

NGon place_ngon(Scene& s, const NGon& gon, const std::string& label_prefix) {
    PrecisionScope scope(s.ctx());
    NGon out = gon;
    out.ids.clear();
    for (std::size_t k = 0; k < gon.vertices.size(); ++k) {
        const LemniscatePoint& v = gon.vertices[k];
        Real rr = at_working(v.r.r, s.ctx());
        Real th = at_working(v.theta, s.ctx());
        Real x = rr * cos(th);
        Real y = rr * sin(th);
        out.ids.push_back(s.add_given(x, y, label_prefix + std::to_string(k)));
    }
    return out;
}

std::vector<CertificateEntry> certify_ngon(const NGon& gon, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    std::vector<CertificateEntry> certs;
    Real om = omega(ctx);
    Real period = 2 * om;
    Real target = period / gon.n;
    Real gap_min(0), gap_max(0);
    for (int k = 0; k < gon.n; ++k) {
        Real a = arc_of_point(gon.vertices[k], ctx).s;
        Real b = arc_of_point(gon.vertices[(k + 1) % gon.n], ctx).s;
        Real gap = fmod(b - a + period, period);
        if (gon.n == 1)
            gap = period;
        certs.push_back(make_cert("gap " + std::to_string(k),
                                  abs(gap - target), ctx.eps()));
        if (k == 0) {
            gap_min = gap;
            gap_max = gap;
        } else {
            gap_min = std::min(gap_min, gap);
            gap_max = std::max(gap_max, gap);
        }
    }
    certs.push_back(make_cert("max gap - min gap", gap_max - gap_min, ctx.eps()));
    return certs;
}

namespace {

/// Vertex data with the origin disambiguated by its target arc.
LemniscatePoint vertex_data(const Scene& s, PointId id, int k, int n,
                            const PrecisionContext& ctx) {
    LemniscatePoint d = point_data(s, id);
    if (d.r.r <= ctx.eps()) {
        bool left = 2 * k >= n;  // arc 2wk/n >= w
        return {Radius(Real(0)), left ? pi_value() : Real(0),
                left ? Petal::left : Petal::right};
    }
    return d;
}

NGon assemble_ngon(const Scene& s, int n, NGon::Mode mode, const std::vector<PointId>& ids,
                   const PrecisionContext& ctx) {
    NGon gon;
    gon.n = n;
    gon.mode = mode;
    gon.ids = ids;
    for (int k = 0; k < n; ++k)
        gon.vertices.push_back(vertex_data(s, ids[k], k, n, ctx));
    return gon;
}

}  // namespace

NGonResult recipe_2n_gon(Scene& s, const Frame& f, const NGon& gon_in) {
    const PrecisionContext& ctx = s.ctx();
    PrecisionScope scope(ctx);
    NGon gon = gon_in.ids.empty() ? place_ngon(s, gon_in) : gon_in;
    const int n = gon.n;
    std::vector<std::optional<PointId>> out_ids(2 * n);
    for (int k = 0; k < n; ++k)
        out_ids[2 * k] = gon.ids[k];

    if (n == 2) {
        // Both input vertices are origin passes; the new vertices are the
        // petal tips, already cut out by the axis and the unit circle.
        out_ids[1] = f.I;
        out_ids[3] = f.I_star;
    } else if (n % 2 == 1) {
        // Circles about the origin through the vertices; the new vertices are
        // their second crossings with the curve, i.e. the y-axis mirrors.
        for (int k = 0; k < n; ++k) {
            PointId v = gon.ids[k];
            PointId mirrored;
            if (is_origin(s, v)) {
                mirrored = v;
            } else {
                s.circle_about(f.O, v);
                mirrored = gadget_reflect(s, v, f.y_axis);
            }
            out_ids[(2 * k + n) % (2 * n)] = mirrored;
        }
    } else {
        // Midpoints of the first-quadrant arcs, then reflections.
        for (int j = 0; 2 * j + 1 <= n / 2; ++j) {
            PointId mid = recipe_bisect_between(s, f, gon.ids[j], gon.ids[j + 1]).at("u");
            out_ids[2 * j + 1] = mid;
            out_ids[n - (2 * j + 1)] = gadget_reflect(s, mid, f.x_axis);
            out_ids[n + (2 * j + 1)] = gadget_reflect(s, mid, f.y_axis);
            out_ids[2 * n - (2 * j + 1)] = gadget_point_reflect(s, mid, f.O);
        }
    }

    std::vector<PointId> ids;
    for (int k = 0; k < 2 * n; ++k) {
        if (!out_ids[k])
            throw std::logic_error("recipe_2n_gon: vertex " + std::to_string(k) +
                                   " not produced");
        ids.push_back(*out_ids[k]);
    }
    NGonResult res;
    res.gon = assemble_ngon(s, 2 * n, gon.mode, ids, ctx);
    res.certificate = certify_ngon(res.gon, ctx);
    return res;
}

NGonResult recipe_nm_gon(Scene& s, const Frame& f, const NGon& n_gon_in,
                         const NGon& m_gon_in) {
    const PrecisionContext& ctx = s.ctx();
    PrecisionScope scope(ctx);
    BezoutPlan plan = bezout_plan(n_gon_in.n, m_gon_in.n);
    NGon n_gon = n_gon_in.ids.empty() ? place_ngon(s, n_gon_in, "N") : n_gon_in;
    NGon m_gon = m_gon_in.ids.empty() ? place_ngon(s, m_gon_in, "M") : m_gon_in;
    const std::int64_t n = plan.N, m = plan.M;
    const std::int64_t total = n * m;

    // Adjacent vertices at distance 2w/(NM): a*M + b*N = 1 puts the N-gon
    // vertex a mod N one step past the M-gon vertex (-b) mod M.
    std::int64_t k0 = ((plan.a % n) + n) % n;
    std::int64_t j0 = ((-plan.b % m) + m) % m;
    PointId w;
    if (2 * k0 == n) {
        // The N-gon vertex is the far origin (arc w): the difference
        // w - s(u) is the x-axis mirror of u.
        w = gadget_reflect(s, m_gon.ids[j0], f.x_axis);
    } else if (2 * j0 == m) {
        // The M-gon vertex is the far origin: s(r) - w is the y-axis mirror.
        w = gadget_reflect(s, n_gon.ids[k0], f.y_axis);
    } else {
        w = recipe_add_sub(s, f, n_gon.ids[k0], m_gon.ids[j0]).at("v");
    }

    // Chain the edge forward; for even NM the second half-curve is the
    // y-axis mirror of the first (arc shift by w), which sidesteps the
    // coordinate-degenerate far-origin vertex.
    std::vector<PointId> ids(total);
    ids[0] = f.O;
    ids[1] = w;
    std::int64_t chain_end = total % 2 == 0 ? total / 2 : total;
    for (std::int64_t k = 2; k < chain_end; ++k)
        ids[k] = recipe_add_sub(s, f, ids[k - 1], w).at("t");
    if (total % 2 == 0)
        for (std::int64_t j = 0; j < total / 2; ++j)
            ids[total / 2 + j] =
                j == 0 ? f.O : gadget_reflect(s, ids[j], f.y_axis);

    NGon::Mode mode = (n_gon.mode == NGon::Mode::constructed &&
                       m_gon.mode == NGon::Mode::constructed)
                          ? NGon::Mode::constructed
                          : NGon::Mode::numeric;
    NGonResult res;
    res.gon = assemble_ngon(s, static_cast<int>(total), mode, ids, ctx);
    res.certificate = certify_ngon(res.gon, ctx);
    return res;
}

// ---------------------------------------------------------------------------
// the 17-gon
// ---------------------------------------------------------------------------

RecipeResult recipe_seventeen_u(Scene& s, const Frame& f) {
    const PrecisionContext& ctx = s.ctx();
    PrecisionScope scope(ctx);
    RecipeResult out;
    auto remember = [&](const char* name, PointId id) {
        s.set_label(id, name);
        out.outputs[name] = id;
        return id;
    };

    remember("O", f.O);
    remember("I", f.I);
    remember("J", f.J);

    // Step 1: P = (-1/2, 1/4), Q = (1/4, 1), Q* = reflection of Q.
    PointId half_neg = gadget_midpoint(s, f.O, f.I_star);        // (-1/2, 0)
    PointId half_j = gadget_midpoint(s, f.O, f.J);               // (0, 1/2)
    PointId quarter_j = gadget_midpoint(s, f.O, half_j);         // (0, 1/4)
    PointId p_pt = remember("P", gadget_translate(s, f.O, quarter_j, half_neg));
    PointId half_i = gadget_midpoint(s, f.O, f.I);               // (1/2, 0)
    PointId quarter_i = gadget_midpoint(s, f.O, half_i);         // (1/4, 0)
    PointId q_pt = remember("Q", gadget_translate(s, f.O, f.J, quarter_i));
    PointId q_star = remember("Q*", gadget_reflect(s, q_pt, f.y_axis));

    // Step 2: s = |Q|^(1/2) / 2 and r = sqrt(s).
    PointId abs_q = transfer_length_to_axis(s, f, q_pt);
    PointId sqrt_q = gadget_sqrt(s, f, abs_q);
    PointId s_axis = gadget_midpoint(s, f.O, sqrt_q);
    PointId r_axis = gadget_sqrt(s, f, s_axis);

    // Step 3: S = (0, s), R = (0, r).
    PointId s_pt = remember("S", swap_axes(s, f, s_axis));
    PointId r_pt = remember("R", swap_axes(s, f, r_axis));

    // Step 4: circles C1 (through P) and C2 (through S); A lands on C1,
    // B and C on C2.
    CircleId c1 = s.circle_about(f.O, p_pt);
    s.circle_about(f.O, s_pt);

    // Step 5: bisect angle IOQ to phi/2, then TOQ to 3phi/4; also phi/4 and
    // 3phi/8 rays for the rotations below.
    AngleBisector half_phi = gadget_bisect_angle(s, f.I, f.O, q_pt);
    PointId t_pt = pick_toward(s, s.intersect(ref(half_phi.line), ref(c1)),
                               s.pt(half_phi.direction).x, s.pt(half_phi.direction).y);
    remember("T", t_pt);
    AngleBisector three_q = gadget_bisect_angle(s, t_pt, f.O, q_pt);  // 3phi/4
    AngleBisector quarter_phi = gadget_bisect_angle(s, f.I, f.O, half_phi.direction);
    AngleBisector three_eighth = gadget_bisect_angle(s, f.I, f.O, three_q.direction);

    // Step 6: A = |P| at theta + 3phi/4 on C1; B = |S| at 3pi/2 - 3phi/4 and
    // C = |S| at phi/2 - pi/2 on C2 (rotations as double reflections).
    PointId s_low = gadget_point_reflect(s, s_pt, f.O);  // (0, -s)
    PointId a_pt = remember(
        "A", gadget_reflect(s, gadget_reflect(s, p_pt, f.x_axis), three_eighth.line));
    PointId b_pt = remember(
        "B", gadget_reflect(s, gadget_reflect(s, s_low, three_eighth.line), f.x_axis));
    PointId c_pt = remember("C", gadget_reflect(s, s_pt, quarter_phi.line));

    // Step 7: D = A - B, E = 8D.
    PointId d_pt = remember("D", gadget_translate(s, b_pt, a_pt, f.O));
    PointId e2 = gadget_point_reflect(s, f.O, d_pt);
    PointId e4 = gadget_point_reflect(s, f.O, e2);
    PointId e_pt = remember("E", gadget_point_reflect(s, f.O, e4));

    // Step 8: Er and Er^3 by parallels through R and S.
    LineId oe = s.line_through(f.O, e_pt);
    LineId je = s.line_through(f.J, e_pt);
    LineId par1 = gadget_parallel(s, je, r_pt);
    auto er_hits = s.intersect(ref(par1), ref(oe));
    if (er_hits.size() != 1)
        throw std::runtime_error("recipe_seventeen_u: Er parallel failed");
    PointId er = remember("Er", er_hits[0]);
    LineId jer = s.line_through(f.J, er);
    LineId par2 = gadget_parallel(s, jer, s_pt);
    auto er3_hits = s.intersect(ref(par2), ref(oe));
    if (er3_hits.size() != 1)
        throw std::runtime_error("recipe_seventeen_u: Er^3 parallel failed");
    PointId er3 = remember("Er3", er3_hits[0]);

    // Step 9 as a subtraction, (Er^3 + C) + (P + C) - (-(Q* + C)): the three
    // summands are nearly collinear through O, so the parallelogram of the
    // difference form is the one with a readable fourth vertex. Then two
    // doublings.
    PointId g1 = gadget_translate(s, f.O, c_pt, er3);
    PointId g2 = gadget_translate(s, f.O, c_pt, p_pt);
    PointId g3 = gadget_translate(s, f.O, c_pt, q_star);
    PointId h1 = gadget_translate(s, f.O, g2, g1);
    PointId neg_g3 = gadget_point_reflect(s, g3, f.O);
    PointId quarter_u = gadget_translate(s, neg_g3, f.O, h1);
    PointId u2 = gadget_point_reflect(s, f.O, quarter_u);
    PointId u_pt = remember("U", gadget_point_reflect(s, f.O, u2));

    RadicalValue radical = abel_radical_root(ctx);
    Real err = hypot(s.pt(u_pt).x - radical.value.re, s.pt(u_pt).y - radical.value.im);
    out.certificate.push_back(make_cert("U = radical expression", err, s.eps()));
    Quartic p_quartic = abel_quartic();
    out.certificate.push_back(make_cert(
        "P(U) = 0", abs(p_quartic.eval(Complex(s.pt(u_pt).x, s.pt(u_pt).y))), s.eps()));
    return out;
}

RecipeResult recipe_seventeen_v1(Scene& s, const Frame& f, PointId u_pt) {
    const PrecisionContext& ctx = s.ctx();
    PrecisionScope scope(ctx);
    RecipeResult out;
    auto remember = [&](const char* name, PointId id) {
        s.set_label(id, name);
        out.outputs[name] = id;
        return id;
    };

    // W = -sqrt(m) at delta/2: bisect delta, take sqrt of |OU|, pick the
    // antipodal crossing.
    PointId m_axis = transfer_length_to_axis(s, f, u_pt);  // (m, 0)
    remember("m", m_axis);
    AngleBisector half_delta = gadget_bisect_angle(s, f.I, f.O, u_pt);
    PointId sqrt_m = gadget_sqrt(s, f, m_axis);
    CircleId cm = s.circle_about(f.O, sqrt_m);
    LineId ray = s.line_through(f.O, half_delta.direction);
    auto w_hits = s.intersect(ref(ray), ref(cm));
    // the minus branch: antipodal to the delta/2 direction
    PointId w_pt = pick_toward(s, w_hits, -s.pt(half_delta.direction).x,
                               -s.pt(half_delta.direction).y);
    remember("W", w_pt);

    // Steps 1-3: conjugate, scale by m via Thales, X = W - m conj(W).
    PointId w_bar = remember("Wbar", gadget_reflect(s, w_pt, f.x_axis));
    LineId wbar_i = s.line_through(w_bar, f.I);
    LineId par = gadget_parallel(s, wbar_i, m_axis);
    LineId o_wbar = s.line_through(f.O, w_bar);
    auto mw_hits = s.intersect(ref(par), ref(o_wbar));
    if (mw_hits.size() != 1)
        throw std::runtime_error("recipe_seventeen_v1: Thales parallel failed");
    PointId m_wbar = remember("mWbar", mw_hits[0]);
    PointId x_pt = remember("X", gadget_translate(s, m_wbar, w_pt, f.O));

    // Step 4: Y = sqrt(X): half the angle XOI, sqrt the modulus.
    PointId abs_x = transfer_length_to_axis(s, f, x_pt);
    PointId sqrt_x = gadget_sqrt(s, f, abs_x);
    AngleBisector half_xi = gadget_bisect_angle(s, x_pt, f.O, f.I);
    CircleId cx = s.circle_about(f.O, sqrt_x);
    LineId ray_y = s.line_through(f.O, half_xi.direction);
    auto y_hits = s.intersect(ref(ray_y), ref(cx));
    PointId y_pt = pick_toward(s, y_hits, s.pt(half_xi.direction).x,
                               s.pt(half_xi.direction).y);
    remember("Y", y_pt);

    // Step 5: the circle about Y through O cuts the positive axis at
    // Z = (2 Re Y, 0).
    CircleId cy = s.circle_about(y_pt, f.O);
    auto z_hits = s.intersect(ref(f.x_axis), ref(cy));
    PointId z_pt = z_hits.back();  // larger abscissa
    remember("Z", z_pt);

    // Step 6: scale by 1/(1+m) via the parallel through Z.
    PointId one_plus_m = gadget_translate(s, f.O, m_axis, f.I);  // (1+m, 0)
    LineId j_1m = s.line_through(f.J, one_plus_m);
    LineId par_z = gadget_parallel(s, j_1m, z_pt);
    auto r1_hits = s.intersect(ref(par_z), ref(f.y_axis));
    if (r1_hits.size() != 1)
        throw std::runtime_error("recipe_seventeen_v1: scaling parallel failed");
    PointId r1_y = r1_hits[0];
    remember("r1", r1_y);

    // Step 7: fold over the curve: radius r1 lifted to the first quadrant.
    PointId r1_axis = swap_axes(s, f, r1_y);
    PointId v1 = remember("V1", lift_to_curve_upper(s, f, r1_axis));

    Real eps = s.eps();
    SeventeenData data = phi_two_omega_17(ctx);
    out.certificate.push_back(make_cert(
        "r1 = phi(2w/17)", abs(point_data(s, v1).r.r - data.r1), eps));
    out.certificate.push_back(make_cert(
        "Z = 2 Re sqrt(W - m conj W)",
        abs(s.pt(z_pt).x - 2 * sqrt(data.W - data.m * conj(data.W)).re), eps));
    out.certificate.push_back(make_cert(
        "X + m conj W = W",
        hypot(s.pt(x_pt).x + data.m * conj(data.W).re - data.W.re,
              s.pt(x_pt).y + data.m * conj(data.W).im - data.W.im),
        eps));
    out.certificate.push_back(make_cert(
        "arc(V1) = 2w/17",
        abs(arc_length(point_data(s, v1).r, ctx).s - 2 * omega(ctx) / 17), eps));
    out.certificate.push_back(on_curve_cert(s, v1, "V1 on curve"));
    return out;
}

NGonResult recipe_seventeen_all(Scene& s, const Frame& f) {
    const PrecisionContext& ctx = s.ctx();
    PrecisionScope scope(ctx);
    NGonResult res;
    auto absorb = [&](const RecipeResult& r, const std::string& prefix) {
        for (const CertificateEntry& c : r.certificate)
            res.certificate.push_back({prefix + ": " + c.name, c.target, c.achieved, c.pass});
    };

    RecipeResult u_res = recipe_seventeen_u(s, f);
    absorb(u_res, "U");
    RecipeResult v1_res = recipe_seventeen_v1(s, f, u_res.at("U"));
    absorb(v1_res, "V1");

    std::vector<PointId> v(17);
    v[0] = f.O;
    v[1] = v1_res.at("V1");

    RecipeResult r2 = recipe_double(s, f, v[1]);
    absorb(r2, "V2");
    v[2] = r2.at("u");
    RecipeResult r3 = recipe_add_sub(s, f, v[1], v[2]);
    absorb(r3, "V3");
    v[3] = r3.at("t");
    RecipeResult r4 = recipe_double(s, f, v[2]);
    absorb(r4, "V4");
    v[4] = r4.at("u");
    RecipeResult r6 = recipe_double(s, f, v[3]);
    absorb(r6, "V6");
    v[6] = r6.at("u");

    RecipeResult h1 = recipe_halve(s, f, v[1]);
    absorb(h1, "V8");
    v[8] = gadget_reflect(s, h1.at("r_direct"), f.x_axis);
    RecipeResult h3 = recipe_halve(s, f, v[3]);
    absorb(h3, "V7");
    v[7] = gadget_reflect(s, h3.at("r_direct"), f.x_axis);

    PointId v6_mirror = gadget_reflect(s, v[6], f.x_axis);
    RecipeResult r5 = recipe_double(s, f, v6_mirror);
    absorb(r5, "V5");
    v[5] = r5.at("u");

    for (int k = 1; k <= 8; ++k)
        v[17 - k] = gadget_point_reflect(s, v[k], f.O);
    for (int k = 1; k <= 16; ++k)
        s.set_label(v[k], "V" + std::to_string(k));

    res.gon = assemble_ngon(s, 17, NGon::Mode::constructed, v, ctx);
    auto gap_certs = certify_ngon(res.gon, ctx);
    res.certificate.insert(res.certificate.end(), gap_certs.begin(), gap_certs.end());
    return res;
}

}  // namespace lemni
