#include "lemni/numerics.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace lemni;
using lemni::test::oracle_arc_length;
using lemni::test::oracle_inverse_arc;
using lemni::test::oracle_omega;

// 60-digit reference values, frozen from the independent tanh-sinh /
// bisection oracles (and re-verified against them in the suites below).
static const char* kOmega60 =
    "2.62205755429211981046483958989111941368275495143162316281682";
static const char* kPhiQuarter60 =
    "0.643594252905582624735443437418209808924202742444007651156152";

static Real tol_digits(int d) { return pow(Real(10), -d); }

TEST_SUITE("numerics") {

TEST_CASE("omega matches the printed value and the defining integral") {
    PrecisionContext ctx(30);
    Real om = omega(ctx);
    CHECK(abs(om - Real("2.622057")) < tol_digits(6));

    PrecisionScope scope(ctx);
    CHECK(abs(om - Real(kOmega60)) < tol_digits(29));
    CHECK(abs(om - omega_by_quadrature(ctx)) < tol_digits(25));
    CHECK(abs(om - oracle_omega(ctx)) < ctx.eps());
}

TEST_CASE("omega is consistent across precisions") {
    Real lo = omega(PrecisionContext(15));
    Real hi = omega(PrecisionContext(40));
    CHECK(abs(lo - hi) < tol_digits(15));

    // precision scaling: doubling the digits moves the value below the
    // coarser eps
    PrecisionContext c30(30);
    CHECK(abs(omega(c30) - omega(PrecisionContext(60))) < c30.eps());
}

TEST_CASE("arc_length endpoints and oracle value") {
    PrecisionContext ctx(30);
    CHECK(arc_length(Radius(Real(0)), ctx).s == 0);
    CHECK(abs(arc_length(Radius(Real(1)), ctx).s - omega(ctx) / 2) < ctx.eps());

    PrecisionScope scope(ctx);
    Real half = Real(1) / 2;
    CHECK(abs(arc_length(Radius(half), ctx).s - oracle_arc_length(half, ctx)) < ctx.eps());

    CHECK_THROWS_AS(arc_length(Radius(Real("1.01")), ctx), std::domain_error);
    CHECK_THROWS_AS(arc_length(Radius(Real("-0.01")), ctx), std::domain_error);
}

TEST_CASE("oracle refinement sanity: quadruple subdivision agrees") {
    // the brute-force oracle itself must be stable under extra refinement
    PrecisionContext lo(20), hi(40);
    Real a = oracle_arc_length(Real(1) / 2, lo);
    Real b = oracle_arc_length(Real(1) / 2, hi);
    CHECK(abs(a - b) < lo.eps());
}

TEST_CASE("lemniscate_sine special values") {
    PrecisionContext ctx(30);
    Real om = omega(ctx);
    CHECK(lemniscate_sine(ArcParam(Real(0)), ctx) == 0);
    CHECK(abs(lemniscate_sine(ArcParam(om / 2), ctx) - 1) < ctx.eps());
    CHECK(abs(lemniscate_sine(ArcParam(om), ctx)) < ctx.eps());
    PrecisionScope scope(ctx);
    CHECK(abs(lemniscate_sine(ArcParam(om / 4), ctx) - Real(kPhiQuarter60)) < ctx.eps());
    // bisection oracle cross-check at an interior point
    Real s = om / 5;
    CHECK(abs(lemniscate_sine(ArcParam(s), ctx) - oracle_inverse_arc(s, ctx)) < ctx.eps());
    // sign rule on the far petal
    CHECK(lemniscate_sine(ArcParam(om + om / 5), ctx) < 0);
}

TEST_CASE("point_at examples") {
    PrecisionContext ctx(30);
    Real om = omega(ctx);
    PrecisionScope scope(ctx);

    LemniscatePoint origin = point_at(ArcParam(Real(0)), ctx);
    CHECK(origin.r.r == 0);
    CHECK(origin.theta == 0);
    CHECK(origin.petal == Petal::right);

    LemniscatePoint tip = point_at(ArcParam(om / 2), ctx);
    CHECK(abs(tip.r.r - 1) < ctx.eps());
    CHECK(abs(tip.theta) < ctx.eps());
    CHECK(tip.petal == Petal::right);

    LemniscatePoint left_tip = point_at(ArcParam(3 * om / 2), ctx);
    CHECK(abs(left_tip.r.r - 1) < ctx.eps());
    CHECK(abs(left_tip.theta - pi_value()) < ctx.eps());
    CHECK(left_tip.petal == Petal::left);

    for (int k = 1; k < 8; ++k) {
        LemniscatePoint p = point_at(ArcParam(2 * om * k / 8), ctx);
        CHECK(on_curve(p, ctx));
        CHECK(abs(arc_of_point(p, ctx).s - 2 * om * k / 8) < ctx.eps());
    }
}

TEST_CASE("round trip: arc_length after lemniscate_sine is the identity") {
    PrecisionContext ctx(30);
    Real om = omega(ctx);
    PrecisionScope scope(ctx);
    Real worst(0);
    for (int i = 0; i <= 200; ++i) {
        Real s = om / 2 * i / 200;
        Real r = lemniscate_sine(ArcParam(s), ctx);
        worst = std::max(worst, Real(abs(arc_length(Radius(r), ctx).s - s)));
    }
    CHECK(worst < ctx.eps());
}

TEST_CASE("arc_length is strictly increasing on a thousand-point grid") {
    PrecisionContext ctx(15);
    PrecisionScope scope(ctx);
    Real prev(-1);
    for (int i = 0; i <= 1000; ++i) {
        Real s = arc_length(Radius(Real(i) / 1000), ctx).s;
        CHECK(s > prev);
        prev = s;
    }
}

TEST_CASE("symmetry phi(omega - s) = phi(s)") {
    PrecisionContext ctx(30);
    Real om = omega(ctx);
    PrecisionScope scope(ctx);
    for (int i = 1; i < 20; ++i) {
        Real s = om / 2 * i / 20;
        CHECK(abs(lemniscate_sine(ArcParam(om - s), ctx) -
                  lemniscate_sine(ArcParam(s), ctx)) < ctx.eps());
    }
}

TEST_CASE("canonical_arc folds into [0, 2 omega)") {
    PrecisionContext ctx(30);
    Real om = omega(ctx);
    PrecisionScope scope(ctx);
    CHECK(abs(canonical_arc(2 * om + om / 3, ctx).s - om / 3) < ctx.eps());
    CHECK(abs(canonical_arc(-om / 3, ctx).s - (2 * om - om / 3)) < ctx.eps());
}

}  // TEST_SUITE
