// Test-only oracles, kept independent of the library's evaluation paths:
// the library integrates with Gauss-Legendre panels and a split singular
// tail, the oracle here uses tanh-sinh quadrature; the library inverts with
// safeguarded Newton, the oracle inverts by pure bisection.
#pragma once

#include "lemni/precision.hpp"

#include <random>

namespace lemni::test {

/// Integrand of the arc-length integral written against the distance to the
/// upper endpoint so the x -> 1 singularity loses no digits:
/// 1/sqrt(1-x^4) = 1/sqrt(d (1+x) (1+x^2)) with d = 1 - x.
inline Real arc_integrand_by_distance(const Real& x, const Real& d) {
    return 1 / sqrt(d * (1 + x) * (1 + x * x));
}

/// tanh-sinh quadrature of f(x, distance_to_b) over [a, b]. Level-refined
/// until two successive levels agree to tol.
template <typename F>
Real tanh_sinh(F&& f, const Real& a, const Real& b, const Real& tol) {
    const Real half = (b - a) / 2;
    const Real center = (a + b) / 2;
    const Real pi_half = 2 * atan(Real(1));
    Real prev(0);
    for (int level = 2; level <= 14; ++level) {
        Real h = ldexp(Real(1), -level);
        Real sum(0);
        // t = j*h, symmetric; stop once the weights vanish at working precision
        for (long j = -(600L << level) / 100; j <= (600L << level) / 100; ++j) {
            Real t = h * j;
            Real u = pi_half * sinh(t);
            Real ch = cosh(u);
            Real x = center + half * tanh(u);
            // distance to b: (b-a)/2 * (1 - tanh u) = (b-a)/(1 + e^{2u}) without
            // cancellation
            Real dist = 2 * half / (1 + exp(2 * u));
            Real w = pi_half * cosh(t) / (ch * ch);
            sum += w * f(x, dist);
        }
        sum *= half * h;
        if (level > 2 && abs(sum - prev) <= tol)
            return sum;
        prev = sum;
    }
    throw std::runtime_error("tanh_sinh: did not converge");
}

/// Brute-force arc length s(r) = int_0^r dx/sqrt(1-x^4) by tanh-sinh.
inline Real oracle_arc_length(const Real& r, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    if (r == 0)
        return Real(0);
    Real rr = at_working(r, ctx);
    Real tol = pow(Real(10), -static_cast<int>(ctx.working_digits()) + 5);
    return tanh_sinh(
        [&](const Real& x, const Real& dist) {
            // distance to the true singularity at 1 is (1 - r) + dist
            Real d = (1 - rr) + dist;
            return arc_integrand_by_distance(x, d);
        },
        Real(0), rr, tol);
}

inline Real oracle_omega(const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    return 2 * oracle_arc_length(Real(1), ctx);
}

/// Bisection-only inverse of the oracle arc length on [0, omega/2].
inline Real oracle_inverse_arc(const Real& s, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    Real target = at_working(s, ctx);
    Real lo(0), hi(1);
    long steps = static_cast<long>(ctx.working_digits() * 3.4) + 8;
    for (long i = 0; i < steps; ++i) {
        Real mid = (lo + hi) / 2;
        if (oracle_arc_length(mid, ctx) < target)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

/// Deterministic uniform reals in (lo, hi) for property tests.
class TestRng {
  public:
    explicit TestRng(std::uint64_t seed) : rng_(seed) {}

    Real uniform(double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return Real(d(rng_));
    }

  private:
    std::mt19937_64 rng_;
};

}  // namespace lemni::test
