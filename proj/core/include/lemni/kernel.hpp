#pragma once

#include "lemni/precision.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lemni {

struct PointId {
    std::uint32_t v;
    bool operator==(const PointId&) const = default;
};
struct LineId {
    std::uint32_t v;
    bool operator==(const LineId&) const = default;
};
struct CircleId {
    std::uint32_t v;
    bool operator==(const CircleId&) const = default;
};

enum class ObjKind : std::uint8_t { point, line, circle };

struct ObjRef {
    ObjKind kind;
    std::uint32_t index;
    bool operator==(const ObjRef&) const = default;
};

inline ObjRef ref(PointId p) { return {ObjKind::point, p.v}; }
inline ObjRef ref(LineId l) { return {ObjKind::line, l.v}; }
inline ObjRef ref(CircleId c) { return {ObjKind::circle, c.v}; }

struct ScenePoint {
    Real x, y;
    std::uint32_t created_by;  // step index
    std::string label;
};

/// Line through two scene points, also held in normalized implicit form
/// nx*x + ny*y = c with unit normal and a canonical sign.
struct SceneLine {
    PointId p, q;
    Real nx, ny, c;
    std::uint32_t created_by;
};

struct SceneCircle {
    PointId center, through;
    Real radius;
    std::uint32_t created_by;
};

struct Step {
    std::string op;      // "given" | "line" | "circle" | "intersect"
    std::string gadget;  // innermost enclosing gadget, "" for a bare primitive
    std::vector<ObjRef> inputs;
    std::vector<ObjRef> outputs;
};

struct AuditReport {
    bool pass = true;
    std::vector<std::string> violations;
    std::map<std::string, std::size_t> steps_per_gadget;
    std::size_t total_steps = 0;
};

/// Append-only record of a straightedge-and-compass construction.
/// Mutable while being built, immutable once handed off; one owner at a time.
class Scene {
  public:
    explicit Scene(PrecisionContext ctx) : ctx_(ctx) {}

    const PrecisionContext& ctx() const { return ctx_; }
    Real eps() const { return ctx_.eps(); }

    PointId add_given(const Real& x, const Real& y, std::string label = "");
    LineId line_through(PointId a, PointId b);
    CircleId circle_about(PointId center, PointId through);

    /// All intersection points of two distinct objects, sorted by (x, y).
    /// Tangency collapses to a single point; an empty result is valid.
    std::vector<PointId> intersect(ObjRef a, ObjRef b);

    const ScenePoint& pt(PointId id) const { return points_.at(id.v); }
    const SceneLine& ln(LineId id) const { return lines_.at(id.v); }
    const SceneCircle& ci(CircleId id) const { return circles_.at(id.v); }

    std::size_t point_count() const { return points_.size(); }
    std::size_t line_count() const { return lines_.size(); }
    std::size_t circle_count() const { return circles_.size(); }
    const std::vector<Step>& steps() const { return steps_; }

    void set_label(PointId id, std::string label) { points_[id.v].label = std::move(label); }

    void push_gadget(std::string name) { gadget_stack_.push_back(std::move(name)); }
    void pop_gadget() { gadget_stack_.pop_back(); }

    /// Test hook: adds a point with no provenance step. The audit flags it.
    PointId inject_unlogged(const Real& x, const Real& y);

    /// Re-executes the step log from scratch into a fresh scene.
    Scene replay() const;

  private:
    friend AuditReport audit(const Scene&);

    Real dist(PointId a, PointId b) const;
    std::string current_gadget() const {
        return gadget_stack_.empty() ? std::string() : gadget_stack_.back();
    }
    std::vector<PointId> record_points(Step step, std::vector<std::pair<Real, Real>> coords);

    PrecisionContext ctx_;
    std::vector<ScenePoint> points_;
    std::vector<SceneLine> lines_;
    std::vector<SceneCircle> circles_;
    std::vector<Step> steps_;
    std::vector<std::string> gadget_stack_;
};

class GadgetScope {
  public:
    GadgetScope(Scene& s, std::string name) : scene_(s) { scene_.push_gadget(std::move(name)); }
    ~GadgetScope() { scene_.pop_gadget(); }
    GadgetScope(const GadgetScope&) = delete;
    GadgetScope& operator=(const GadgetScope&) = delete;

  private:
    Scene& scene_;
};

/// Verifies the log closes under the primitives, provenance is complete and
/// ordered, and all object invariants hold at the scene's precision.
AuditReport audit(const Scene& scene);

/// Canonical coordinate frame: axes, unit circle, diagonal, unit points.
struct Frame {
    PointId O, I, J, I_star, J_star;
    LineId x_axis, y_axis, diag;  // diag: the line y = x
    CircleId unit;

    static Frame create(Scene& scene);
};

// ---- compound gadgets (all expand into logged primitive steps) ----

PointId gadget_midpoint(Scene&, PointId a, PointId b);
LineId gadget_perp_bisector(Scene&, PointId a, PointId b);
LineId gadget_perpendicular(Scene&, LineId l, PointId through);
LineId gadget_parallel(Scene&, LineId l, PointId through);
PointId gadget_reflect(Scene&, PointId p, LineId axis);
PointId gadget_point_reflect(Scene&, PointId p, PointId center);
/// p + (to - from), valid in every configuration including collinear.
PointId gadget_translate(Scene&, PointId from, PointId to, PointId p);

/// Bisector of the angle a-vertex-b plus a point marking its direction.
struct AngleBisector {
    LineId line;
    PointId direction;  // on the bisector ray, interior side
};
AngleBisector gadget_bisect_angle(Scene&, PointId a, PointId vertex, PointId b);

/// |O->through| transferred to the positive x-axis of the frame.
PointId transfer_length_to_axis(Scene&, const Frame&, PointId p);
/// (0, v) <-> (v, 0), sign preserving, via reflection across the diagonal.
PointId swap_axes(Scene&, const Frame&, PointId p);

/// Axis point at sqrt(x) from an axis point at x > 0 (altitude construction).
PointId gadget_sqrt(Scene&, const Frame&, PointId x_axis_pt);
/// Axis point at sqrt(p*q) for axis points at p, q > 0.
PointId gadget_geometric_mean(Scene&, const Frame&, PointId p_axis, PointId q_axis);
/// Axis point at p*q (signed), by parallel-line proportionality.
PointId gadget_thales_product(Scene&, const Frame&, PointId p_axis, PointId q_axis);
/// Axis point at p/q (signed, q != 0).
PointId gadget_thales_scale(Scene&, const Frame&, PointId p_axis, PointId q_axis);

/// Right-angled-trapezium roots of a x^2 + b x + c (a > 0), coefficients
/// realized as signed axis points. The returned base crossings sit at the
/// negatives of the roots, sorted by abscissa.
/// Throws std::domain_error when the diameter circle misses the base line.
std::pair<PointId, PointId> gadget_rat_roots(Scene&, const Frame&, PointId a_axis,
                                             PointId b_axis, PointId c_axis);

namespace kernel_detail {
/// Trapezium circle crossings with explicit vertical orientation: verticals
/// at +1 (top = J) or -1 (top = J*), far vertical at +/-C over the abscissa B.
std::pair<PointId, PointId> rat_diameter_crossings(Scene&, const Frame&, bool downward,
                                                   PointId b_axis, PointId c_axis);
}  // namespace kernel_detail

}  // namespace lemni
