#pragma once

#include "lemni/precision.hpp"

#include <vector>

namespace lemni {

/// Canonical arc-length parameter along the curve, in [0, 2*omega).
struct ArcParam {
    Real s;
    explicit ArcParam(Real v = Real(0)) : s(std::move(v)) {}
};

/// Chord length from the origin, in [0, 1].
struct Radius {
    Real r;
    explicit Radius(Real v = Real(0)) : r(std::move(v)) {}
};

enum class Petal { right, left };

/// Polar point on r^2 = cos(2*theta), with the petal it belongs to.
/// The origin is represented with theta = 0 (right) or pi (left); the polar
/// on-curve identity is vacuous there.
struct LemniscatePoint {
    Radius r;
    Real theta;
    Petal petal = Petal::right;
};

/// Petal arc length omega = 2*int_0^1 dx/sqrt(1-x^4), via pi / agm(1, sqrt 2).
Real omega(const PrecisionContext& ctx);

/// The defining integral evaluated by quadrature; the cross-check for omega().
Real omega_by_quadrature(const PrecisionContext& ctx);

/// s(r) = int_0^r dx/sqrt(1-x^4), increasing from 0 to omega/2.
/// Throws std::domain_error for r outside [0, 1].
ArcParam arc_length(const Radius& r, const PrecisionContext& ctx);

/// Reduce an arbitrary arc parameter into [0, 2*omega).
ArcParam canonical_arc(const Real& s, const PrecisionContext& ctx);

/// The lemniscatic sine: inverse of arc_length on [0, omega/2], extended to
/// [0, 2*omega) by phi(omega - s) = phi(s) and phi(s + omega) = -phi(s).
Real lemniscate_sine(const ArcParam& s, const PrecisionContext& ctx);

/// Point at curvilinear distance s from the origin; right petal first.
LemniscatePoint point_at(const ArcParam& s, const PrecisionContext& ctx);

/// Arc parameter of an on-curve point (inverse of point_at).
ArcParam arc_of_point(const LemniscatePoint& p, const PrecisionContext& ctx);

/// Checks |r^2 - cos 2theta| <= eps (vacuous at the origin).
bool on_curve(const LemniscatePoint& p, const PrecisionContext& ctx);

namespace detail {

/// Gauss-Legendre nodes/weights on [-1, 1] at current default precision.
/// Cached per (order, precision) thread-locally.
struct GaussRule {
    std::vector<Real> nodes, weights;
};
const GaussRule& gauss_legendre(unsigned order);

/// Composite Gauss-Legendre integration of f over [a, b], doubling panels
/// until two successive refinements agree to `tol` (absolute).
template <typename F>
Real integrate(F&& f, const Real& a, const Real& b, const Real& tol,
               unsigned order = 48) {
    const GaussRule& rule = gauss_legendre(order);
    Real prev(0);
    for (unsigned panels = 1; panels <= 1u << 14; panels *= 2) {
        Real total(0);
        Real h = (b - a) / panels;
        for (unsigned p = 0; p < panels; ++p) {
            Real lo = a + h * p;
            Real mid = lo + h / 2;
            Real half = h / 2;
            Real acc(0);
            for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
            total += acc * half;
        }
        if (panels > 1 && abs(total - prev) <= tol)
            return total;
        prev = total;
    }
    throw std::runtime_error("integrate: refinement did not converge");
}

}  // namespace detail

}  // namespace lemni
