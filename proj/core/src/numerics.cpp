#include "lemni/numerics.hpp"

#include <map>
#include <utility>

namespace lemni {

namespace detail {

const GaussRule& gauss_legendre(unsigned order) {
    thread_local std::map<std::pair<unsigned, unsigned>, GaussRule> cache;
    unsigned prec = Real::default_precision();
    auto key = std::make_pair(order, prec);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;

    // Newton on P_n with double-precision Chebyshev-like seeds; the iteration
    // is self-correcting, so the seeds only need to land in the right basin.
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const Real one(1);
    const Real pi = pi_value();
    const long bits = mpfr_get_prec(one.backend().data());
    const Real tol = ldexp(one, -bits + 6);
    for (unsigned k = 0; k < order; ++k) {
        Real x = cos(pi * (Real(k) + Real(3) / 4) / (Real(order) + Real(1) / 2));
        Real dp(0);
        for (int iter = 0; iter < 200; ++iter) {
            // Legendre recurrence for P_n(x) and P_{n-1}(x).
            Real p0(1), p1 = x;
            for (unsigned j = 2; j <= order; ++j) {
                Real p2 = ((2 * Real(j) - 1) * x * p1 - (Real(j) - 1) * p0) / Real(j);
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1);
            Real step = p1 / dp;
            x -= step;
            if (abs(step) <= tol)
                break;
        }
        rule.nodes[k] = x;
        rule.weights[k] = 2 / ((1 - x * x) * dp * dp);
    }
    return cache.emplace(key, std::move(rule)).first->second;
}

namespace {

Real quad_tol() {
    // Absolute quadrature target: a few digits above roundoff at the
    // current working precision.
    return pow(Real(10), -static_cast<int>(Real::default_precision()) + 4);
}

// Integrand of the arc-length integral.
Real integrand(const Real& x) { return 1 / sqrt(1 - x * x * x * x); }

// Tail integrand after x = 1 - t^2, which removes the endpoint singularity:
// dx/sqrt(1-x^4) = 2 dt / sqrt((1+x)(1+x^2)).
Real tail_integrand(const Real& t) {
    Real x = 1 - t * t;
    return 2 / sqrt((1 + x) * (1 + x * x));
}

// Split point for the singular tail; built under the active scope so the
// head and tail pieces see bit-identical bounds.
Real split_point() { return Real(9) / 10; }

// arc length at current (already scoped) precision, r in [0,1]
Real arc_length_raw(const Real& r) {
    if (r == 0)
        return Real(0);
    Real tol = quad_tol();
    Real split = split_point();
    if (r <= split)
        return integrate(integrand, Real(0), r, tol);
    Real head = integrate(integrand, Real(0), split, tol);
    // x: split -> r corresponds to t = sqrt(1-x): sqrt(1-split) -> sqrt(1-r)
    Real ta = sqrt(1 - split);
    Real tb = sqrt(1 - r);
    Real tail = integrate(tail_integrand, tb, ta, tol);
    return head + tail;
}

Real omega_raw() { return pi_value() / agm(Real(1), sqrt(Real(2))); }

// Inverse of arc_length_raw on [0, omega/2]: safeguarded Newton.
// ds/dr = 1/sqrt(1-r^4), so the Newton step is (s(r)-target)*sqrt(1-r^4).
Real invert_arc_raw(const Real& target, const Real& om) {
    if (target <= 0)
        return Real(0);
    if (target >= om / 2)
        return Real(1);
    Real lo(0), hi(1);
    // Series seed phi(s) ~ s - s^5/10 near 0, complementary identity
    // phi(om/2 - s) = sqrt((1-v^2)/(1+v^2)) with v = phi(s) near the tip.
    Real x;
    if (target < Real(1) / 2) {
        x = target - pow(target, 5) / 10;
    } else {
        Real b = om / 2 - target;
        Real v = b - pow(b, 5) / 10;
        x = sqrt((1 - v * v) / (1 + v * v));
    }
    if (x <= 0 || x >= 1)
        x = Real(1) / 2;
    const Real one(1);
    const Real tol = ldexp(one, -mpfr_get_prec(one.backend().data()) + 8);
    for (int iter = 0; iter < 500; ++iter) {
        Real fx = arc_length_raw(x) - target;
        if (fx > 0)
            hi = x;
        else
            lo = x;
        Real step = fx * sqrt(1 - x * x * x * x);
        Real next = x - step;
        if (!(next > lo && next < hi))
            next = (lo + hi) / 2;  // bisection safeguard
        Real moved = abs(next - x);
        x = next;
        if (moved <= tol * (1 + abs(x)))
            return x;
    }
    throw std::runtime_error("lemniscate_sine: inversion did not converge");
}

}  // namespace
}  // namespace detail

Real omega(const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    return detail::omega_raw();
}

Real omega_by_quadrature(const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    Real tol = detail::quad_tol();
    Real split = detail::split_point();
    Real head = detail::integrate(detail::integrand, Real(0), split, tol);
    Real tail = detail::integrate(detail::tail_integrand, Real(0), sqrt(1 - split), tol);
    return 2 * (head + tail);
}

ArcParam arc_length(const Radius& r, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    Real x = at_working(r.r, ctx);
    const Real slack = pow(Real(10), -static_cast<int>(ctx.working_digits()) + 2);
    if (x < 0) {
        if (x < -slack)
            throw std::domain_error("arc_length: radius below 0: " + x.str(10));
        x = 0;
    }
    if (x > 1) {
        if (x > 1 + slack)
            throw std::domain_error("arc_length: radius above 1: " + x.str(10));
        x = 1;
    }
    return ArcParam(detail::arc_length_raw(x));
}

ArcParam canonical_arc(const Real& s, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    Real period = 2 * detail::omega_raw();
    Real t = fmod(at_working(s, ctx), period);
    if (t < 0)
        t += period;
    return ArcParam(t);
}

Real lemniscate_sine(const ArcParam& s, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    Real om = detail::omega_raw();
    Real t = canonical_arc(s.s, ctx).s;
    int sign = 1;
    if (t >= om) {
        t -= om;
        sign = -1;
    }
    Real a = t <= om / 2 ? t : om - t;  // phi(om - s) = phi(s)
    return sign * detail::invert_arc_raw(a, om);
}

LemniscatePoint point_at(const ArcParam& s, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    Real om = detail::omega_raw();
    Real t = canonical_arc(s.s, ctx).s;
    Petal petal = Petal::right;
    if (t >= om) {
        t -= om;
        petal = Petal::left;
    }
    Real a = t <= om / 2 ? t : om - t;
    Real r = detail::invert_arc_raw(a, om);
    Real theta;
    if (r == 0) {
        theta = 0;
    } else {
        theta = acos(r * r) / 2;
        if (t > om / 2)
            theta = -theta;
    }
    if (petal == Petal::left) {
        // Smooth continuation through the origin: the left petal is the
        // y-axis mirror of the right one.
        theta = pi_value() - theta;
        if (theta > pi_value())
            theta -= 2 * pi_value();
    }
    return {Radius(r), theta, petal};
}

ArcParam arc_of_point(const LemniscatePoint& p, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    Real om = detail::omega_raw();
    Real theta = at_working(p.theta, ctx);
    if (p.petal == Petal::left)
        theta = pi_value() - theta;  // mirror back to the right petal
    // normalize to (-pi, pi]
    Real twopi = 2 * pi_value();
    theta = fmod(theta, twopi);
    if (theta > pi_value())
        theta -= twopi;
    if (theta <= -pi_value())
        theta += twopi;
    Real a = arc_length(p.r, ctx).s;
    Real t = theta >= 0 ? a : om - a;
    if (p.r.r <= ctx.eps())
        t = 0;  // origin: the half is determined by the petal alone
    if (p.petal == Petal::left)
        t += om;
    return ArcParam(t);
}

bool on_curve(const LemniscatePoint& p, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    Real r = at_working(p.r.r, ctx);
    if (r <= ctx.eps())
        return true;  // origin: polar angle unconstrained
    Real c = cos(2 * at_working(p.theta, ctx));
    if (c < -ctx.eps())
        return false;
    return abs(r * r - c) <= ctx.eps();
}

}  // namespace lemni
