#include "lemni/arc_algebra.hpp"

#include <numeric>

namespace lemni {

namespace {

void check_unit_range(const Real& x, const char* who, const PrecisionContext& ctx) {
    if (x < -ctx.eps() || x > 1 + ctx.eps())
        throw std::domain_error(std::string(who) + ": radius outside [0,1]: " + x.str(10));
}

Real clamp_unit(Real x, const PrecisionContext& ctx) {
    x = at_working(std::move(x), ctx);
    if (x < 0)
        return Real(0);
    if (x > 1)
        return Real(1);
    return x;
}

// s(r) + s(u) > omega/2  <=>  r^2 + u^2 + r^2 u^2 > 1, by the complementary
// identity phi(omega/2 - s) = sqrt((1-r^2)/(1+r^2)).
bool sum_exceeds_half_petal(const Real& r, const Real& u) {
    return r * r + u * u + r * r * u * u > 1;
}

}  // namespace

FoldedRadius add_arcs(const Radius& r, const Radius& u, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    check_unit_range(r.r, "add_arcs", ctx);
    check_unit_range(u.r, "add_arcs", ctx);
    Real a = clamp_unit(r.r, ctx), b = clamp_unit(u.r, ctx);
    Real t = (a * sqrt(1 - b * b * b * b) + b * sqrt(1 - a * a * a * a)) /
             (1 + a * a * b * b);
    if (t < -ctx.eps() || t > 1 + ctx.eps())
        throw std::range_error("add_arcs: formula output outside [0,1]: " + t.str(10));
    return {Radius(clamp_unit(t, ctx)), sum_exceeds_half_petal(a, b)};
}

Radius sub_arcs(const Radius& r, const Radius& u, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    check_unit_range(r.r, "sub_arcs", ctx);
    check_unit_range(u.r, "sub_arcs", ctx);
    if (u.r > r.r + ctx.eps())
        throw std::domain_error("sub_arcs: subtrahend arc exceeds minuend");
    Real a = clamp_unit(r.r, ctx), b = clamp_unit(u.r, ctx);
    Real v = (a * sqrt(1 - b * b * b * b) - b * sqrt(1 - a * a * a * a)) /
             (1 + a * a * b * b);
    return Radius(clamp_unit(v, ctx));
}

FoldedRadius double_arc(const Radius& r, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    check_unit_range(r.r, "double_arc", ctx);
    Real a = clamp_unit(r.r, ctx);
    Real a4 = a * a * a * a;
    Real u = 2 * a * sqrt(1 - a4) / (1 + a4);
    return {Radius(clamp_unit(u, ctx)), sum_exceeds_half_petal(a, a)};
}

HalvePair halve_arc(const Radius& u, const Real& theta_u, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    check_unit_range(u.r, "halve_arc", ctx);
    Real theta = at_working(theta_u, ctx);
    Real u_wide = at_working(u.r, ctx);
    Real c = cos(2 * theta);
    if (c <= ctx.eps())
        throw std::domain_error("halve_arc: point at the origin along the diagonal asymptote");
    if (abs(u_wide * u_wide - c) > ctx.eps())
        throw std::domain_error("halve_arc: (u, theta) not on the curve");
    Real sec = 1 / c;
    Real tan_ = tan(2 * theta);
    // Each factor T^2 + 2kT - 1 has exactly one positive root (root product
    // is -1); written in the cancellation-free form.
    auto positive_root = [](const Real& k) { return 1 / (k + sqrt(k * k + 1)); };
    Real t_direct = positive_root(sec + tan_);
    Real t_compl = positive_root(sec - tan_);
    return {Radius(sqrt(t_direct)), Radius(sqrt(t_compl))};
}

QuadraticCoeffs sum_quadratic(const Radius& r, const Radius& u, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    check_unit_range(r.r, "sum_quadratic", ctx);
    check_unit_range(u.r, "sum_quadratic", ctx);
    Real a = clamp_unit(r.r, ctx), b = clamp_unit(u.r, ctx);
    Real denom = 1 + a * a * b * b;
    return {-2 * a * sqrt(1 - b * b * b * b) / denom, (a * a - b * b) / denom};
}

bool constructible(std::uint64_t n) {
    if (n == 0)
        return false;
    while (n % 2 == 0)
        n /= 2;
    for (std::uint64_t p : {3ull, 5ull, 17ull, 257ull, 65537ull})
        if (n % p == 0)
            n /= p;  // at most once: a repeated factor survives below
    return n == 1;
}

BezoutPlan bezout_plan(std::int64_t N, std::int64_t M) {
    if (N < 2 || M < 2)
        throw std::domain_error("bezout_plan: N, M must be >= 2");
    if (std::gcd(N, M) != 1)
        throw std::domain_error("bezout_plan: gcd(N, M) != 1");
    // Extended Euclid for a*M + b*N = 1.
    std::int64_t r0 = M, r1 = N, s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    std::int64_t a = s0 % N;  // minimize |a| over a + tN
    if (a > N / 2)
        a -= N;
    if (a < -(N / 2))
        a += N;
    if (2 * (a < 0 ? -a : a) == N && a < 0)
        a += N;  // tie: prefer a > 0
    std::int64_t b = (1 - a * M) / N;
    return {N, M, a, b};
}

}  // namespace lemni
