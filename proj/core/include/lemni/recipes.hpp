#pragma once

#include "lemni/arc_algebra.hpp"
#include "lemni/kernel.hpp"
#include "lemni/numerics.hpp"

#include <map>
#include <string>
#include <vector>

namespace lemni {

struct CertificateEntry {
    std::string name;
    Real target;    // tolerance the check ran at
    Real achieved;  // error actually observed
    bool pass = false;
};

/// Named construction outputs plus the numeric certificates backing them.
/// The scene itself is owned by the caller.
struct RecipeResult {
    std::map<std::string, PointId> outputs;
    std::vector<CertificateEntry> certificate;

    bool all_pass() const;
    PointId at(const std::string& name) const { return outputs.at(name); }
};

/// Vertices of a regular division of the full curve, ordered by arc
/// parameter (vertex k sits at arc 2*omega*k/n).
struct NGon {
    enum class Mode { constructed, numeric };

    int n = 0;
    Mode mode = Mode::numeric;
    std::vector<LemniscatePoint> vertices;
    std::vector<PointId> ids;  // parallel scene ids; empty if detached
};

struct NGonResult {
    NGon gon;
    std::vector<CertificateEntry> certificate;
    bool all_pass() const;
};

/// Oracle generator: vertices at point_at(2*omega*k/n), no construction.
NGon numeric_ngon(int n, const PrecisionContext& ctx);

/// Adds a detached n-gon's vertices to a scene as given points.
NGon place_ngon(Scene&, const NGon& gon, const std::string& label_prefix = "V");

/// Equal-arc certificate: every consecutive gap equals 2*omega/n.
std::vector<CertificateEntry> certify_ngon(const NGon&, const PrecisionContext& ctx);

// ---- arc constructions ----------------------------------------------------

/// Halving: outputs "r_direct" (midpoint of the arc from the origin to the
/// input point) and "r_complementary" (midpoint of the rest of its petal).
RecipeResult recipe_halve(Scene&, const Frame&, PointId u_point);

/// Doubling: output "u".
RecipeResult recipe_double(Scene&, const Frame&, PointId r_point);

/// Addition and subtraction: outputs "t" (arc sum) and "v" (arc difference),
/// placed on the curve mod the full length.
RecipeResult recipe_add_sub(Scene&, const Frame&, PointId r_point, PointId u_point);

/// Transfer: output "w" with s(w) = s(u) - s(r) + s(t).
RecipeResult recipe_transfer(Scene&, const Frame&, PointId r_point, PointId u_point,
                             PointId t_point);

/// Arc bisection: output "u" with s(u) = s(r)/2 + s(t)/2.
RecipeResult recipe_bisect_between(Scene&, const Frame&, PointId r_point, PointId t_point);

/// 2N-gon from an N-gon: mirrored vertices for odd N, first-quadrant arc
/// bisection for even N.
NGonResult recipe_2n_gon(Scene&, const Frame&, const NGon& gon);

/// NM-gon from coprime N- and M-gons via the Bezout transfer.
NGonResult recipe_nm_gon(Scene&, const Frame&, const NGon& n_gon, const NGon& m_gon);

/// The nine-step construction of U = phi^4(w/(1+4i)).
RecipeResult recipe_seventeen_u(Scene&, const Frame&);

/// First vertex of the 17-gon from a scene containing U.
RecipeResult recipe_seventeen_v1(Scene&, const Frame&, PointId u_point);

/// The full 17-gon: U, V1, then doubling/addition/halving propagation and
/// reflections about the origin.
NGonResult recipe_seventeen_all(Scene&, const Frame&);

namespace recipe_detail {
/// On-curve point of radius r (axis point) in the upper right quadrant.
PointId lift_to_curve_upper(Scene&, const Frame&, PointId r_axis);
/// Reads (r, theta, petal) off a scene point.
LemniscatePoint point_data(const Scene&, PointId);
/// Circular distance of two arc parameters mod the full curve length.
Real arc_distance(const Real& a, const Real& b, const Real& period);
}  // namespace recipe_detail

}  // namespace lemni
