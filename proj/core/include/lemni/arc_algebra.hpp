#pragma once

#include "lemni/numerics.hpp"
#include "lemni/precision.hpp"

#include <cstdint>

namespace lemni {

/// Monic quadratic X^2 + B X + C whose roots are the sum and difference arcs.
struct QuadraticCoeffs {
    Real B, C;
};

/// Coefficients of a*M + b*N = 1 for coprime N, M; a arcs of 2w/N plus
/// b arcs of 2w/M compose to 2w/(N*M).
struct BezoutPlan {
    std::int64_t N, M, a, b;
};

/// Radius plus a flag marking that the underlying arc sum passed the petal
/// tip, so the radius is the folded representative phi(omega - sum).
struct FoldedRadius {
    Radius r;
    bool folded = false;
};

/// Both half-arc radii of a point: `direct` halves the arc from the origin
/// to the point, `complementary` halves the rest of the petal.
struct HalvePair {
    Radius direct, complementary;
};

/// Fagnano sum: t with s(t) = s(r) + s(u), folded past the half petal.
FoldedRadius add_arcs(const Radius& r, const Radius& u, const PrecisionContext& ctx);

/// Difference: v with s(v) = s(r) - s(u). Requires s(r) >= s(u).
Radius sub_arcs(const Radius& r, const Radius& u, const PrecisionContext& ctx);

/// u with s-doubling semantics; folds past the half petal like add_arcs.
FoldedRadius double_arc(const Radius& r, const PrecisionContext& ctx);

/// The two positive roots T of the degree-8 factorization, as radii sqrt(T).
/// theta_u is the signed polar angle of the input point (|theta| < pi/4).
HalvePair halve_arc(const Radius& u, const Real& theta_u, const PrecisionContext& ctx);

/// B, C with roots of X^2 + BX + C equal to {add_arcs, sub_arcs} of (r, u).
QuadraticCoeffs sum_quadratic(const Radius& r, const Radius& u, const PrecisionContext& ctx);

/// Abel's criterion: n = 2^a * product of distinct Fermat primes.
bool constructible(std::uint64_t n);

/// Extended-Euclid plan with |a| minimal, ties broken by a > 0.
BezoutPlan bezout_plan(std::int64_t N, std::int64_t M);

}  // namespace lemni
